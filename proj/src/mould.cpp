#include "mould.hpp"

#include <algorithm>

namespace mouldcalc {

Mould::Mould(Alphabet alpha, int max_depth) : alpha_(alpha)
{
    if (max_depth < 0)
        throw DomainError("mould truncation depth must be >= 0");
    c_.assign(static_cast<size_t>(max_depth) + 1, LFDRatio::zero(alpha));
}

Mould Mould::unit(Alphabet alpha, int max_depth)
{
    Mould m(alpha, max_depth);
    m.set(0, LFDRatio::constant(alpha, Rational(1)));
    return m;
}

Mould Mould::constant_mould(Alphabet alpha, const std::vector<Rational> &c, int max_depth)
{
    Mould m(alpha, max_depth);
    for (size_t r = 1; r <= static_cast<size_t>(max_depth) && r <= c.size(); ++r)
        m.set(static_cast<int>(r), LFDRatio::constant(alpha, c[r - 1]));
    return m;
}

const LFDRatio &Mould::at(int r) const
{
    if (r < 0 || r > max_depth())
        throw DomainError("mould component beyond truncation depth " + std::to_string(max_depth()));
    return c_[static_cast<size_t>(r)];
}

void Mould::set(int r, LFDRatio value)
{
    if (r < 0 || r > max_depth())
        throw DomainError("mould component beyond truncation depth " + std::to_string(max_depth()));
    if (value.alphabet() != alpha_)
        throw DomainError("alphabet mismatch in mould component");
    if (static_cast<size_t>(value.num().max_var()) > static_cast<size_t>(r))
        throw DomainError("depth-" + std::to_string(r) + " component uses variables beyond index " +
                          std::to_string(r));
    for (const auto &[form, mult] : value.den())
        if (form.max_var() > static_cast<size_t>(r))
            throw DomainError("depth-" + std::to_string(r) + " denominator uses variables beyond index " +
                              std::to_string(r));
    c_[static_cast<size_t>(r)] = std::move(value);
}

bool Mould::in_gari() const
{
    const LFDRatio &c0 = at(0);
    return c0.is_constant() && is_one(c0.constant_value());
}

Mould Mould::operator-() const
{
    Mould m(alpha_, max_depth());
    for (int r = 0; r <= max_depth(); ++r)
        m.set(r, -at(r));
    return m;
}

Mould operator+(const Mould &a, const Mould &b)
{
    if (a.alphabet() != b.alphabet())
        throw DomainError("alphabet mismatch in mould addition");
    Mould m(a.alphabet(), common_depth(a, b));
    for (int r = 0; r <= m.max_depth(); ++r)
        m.set(r, a.at(r) + b.at(r));
    return m;
}

Mould operator-(const Mould &a, const Mould &b)
{
    if (a.alphabet() != b.alphabet())
        throw DomainError("alphabet mismatch in mould subtraction");
    Mould m(a.alphabet(), common_depth(a, b));
    for (int r = 0; r <= m.max_depth(); ++r)
        m.set(r, a.at(r) - b.at(r));
    return m;
}

Mould Mould::scaled(const Rational &c) const
{
    Mould m(alpha_, max_depth());
    for (int r = 0; r <= max_depth(); ++r)
        m.set(r, at(r).scaled(c));
    return m;
}

Mould Mould::truncated(int max_depth) const
{
    if (max_depth > this->max_depth())
        throw DomainError("cannot extend a mould truncation");
    Mould m(alpha_, max_depth);
    for (int r = 0; r <= max_depth; ++r)
        m.set(r, at(r));
    return m;
}

LFDRatio evaluate(const Mould &m, const std::vector<LinearForm> &args)
{
    int r = static_cast<int>(args.size());
    if (r > m.max_depth())
        throw DomainError("evaluation depth " + std::to_string(r) + " beyond truncation bound " +
                          std::to_string(m.max_depth()));
    if (r == 0)
        return m.at(0);
    return m.at(r).substitute(args);
}

int common_depth(const Mould &a, const Mould &b)
{
    return std::min(a.max_depth(), b.max_depth());
}

bool mould_equal(const Mould &a, const Mould &b, int depth)
{
    if (a.alphabet() != b.alphabet())
        return false;
    if (depth < 0)
        depth = common_depth(a, b);
    if (depth > a.max_depth() || depth > b.max_depth())
        throw DomainError("equality check beyond truncation bound");
    for (int r = 0; r <= depth; ++r)
        if (!lfd_equal(a.at(r), b.at(r)))
            return false;
    return true;
}

} // namespace mouldcalc
