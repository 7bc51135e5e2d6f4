#include "bch.hpp"

namespace mouldcalc {

FreeSeries FreeSeries::generator(int letter, int max_degree)
{
    FreeSeries s(max_degree);
    s.add_term(BWord{}.appended(letter), Rational(1));
    return s;
}

Rational FreeSeries::coeff(const BWord &w) const
{
    auto it = t_.find(w);
    return it == t_.end() ? Rational(0) : it->second;
}

void FreeSeries::add_term(const BWord &w, const Rational &c)
{
    if (w.len > maxdeg_ || is_zero(c))
        return;
    auto [it, inserted] = t_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second))
            t_.erase(it);
    }
}

FreeSeries operator+(const FreeSeries &a, const FreeSeries &b)
{
    FreeSeries r(std::min(a.maxdeg_, b.maxdeg_));
    for (const auto &[w, c] : a.t_)
        r.add_term(w, c);
    for (const auto &[w, c] : b.t_)
        r.add_term(w, c);
    return r;
}

FreeSeries operator*(const FreeSeries &a, const FreeSeries &b)
{
    FreeSeries r(std::min(a.maxdeg_, b.maxdeg_));
    for (const auto &[wa, ca] : a.t_) {
        for (const auto &[wb, cb] : b.t_) {
            if (wa.len + wb.len > r.maxdeg_)
                continue;
            BWord w{wa.len + wb.len, wa.bits | (wb.bits << wa.len)};
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

FreeSeries FreeSeries::scaled(const Rational &c) const
{
    FreeSeries r(maxdeg_);
    if (mouldcalc::is_zero(c))
        return r;
    for (const auto &[w, v] : t_)
        r.t_.emplace(w, v * c);
    return r;
}

FreeSeries FreeSeries::exp() const
{
    if (!mouldcalc::is_zero(coeff(BWord{})))
        throw DomainError("exp needs a vanishing constant term");
    FreeSeries r(maxdeg_);
    r.add_term(BWord{}, Rational(1));
    FreeSeries power(maxdeg_);
    power.add_term(BWord{}, Rational(1));
    Rational fact(1);
    for (int n = 1; n <= maxdeg_; ++n) {
        power = power * *this;
        fact /= n;
        r = r + power.scaled(fact);
    }
    return r;
}

FreeSeries FreeSeries::log() const
{
    if (coeff(BWord{}) != 1)
        throw DomainError("log needs constant term 1");
    FreeSeries n = *this;
    n.add_term(BWord{}, Rational(-1)); // N = S - 1
    FreeSeries r(maxdeg_);
    FreeSeries power(maxdeg_);
    power.add_term(BWord{}, Rational(1));
    for (int k = 1; k <= maxdeg_; ++k) {
        power = power * n;
        Rational c(k % 2 == 1 ? 1 : -1, static_cast<unsigned long>(k));
        r = r + power.scaled(c);
    }
    return r;
}

std::map<BWord, Rational> bch_word_coefficients(int max_degree)
{
    FreeSeries x = FreeSeries::generator(0, max_degree);
    FreeSeries y = FreeSeries::generator(1, max_degree);
    FreeSeries z = (x.exp() * y.exp()).log();
    return z.terms();
}

} // namespace mouldcalc
