#include "rational.hpp"

namespace mouldcalc {

Rational rational_from_string(const std::string &s)
{
    if (s.empty())
        throw ParseError("empty rational literal");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || ((c == '-' || c == '+') && i == 0);
        if (!ok)
            throw ParseError("malformed rational literal '" + s + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("malformed rational literal '" + s + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator in rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace mouldcalc
