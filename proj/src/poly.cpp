#include "poly.hpp"

#include <algorithm>
#include <sstream>

namespace mouldcalc {

unsigned monomial_degree(const Monomial &m)
{
    unsigned d = 0;
    for (unsigned e : m)
        d += e;
    return d;
}

bool MonomialLess::operator()(const Monomial &a, const Monomial &b) const
{
    unsigned da = monomial_degree(a), db = monomial_degree(b);
    if (da != db)
        return da < db;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        unsigned ea = i < a.size() ? a[i] : 0;
        unsigned eb = i < b.size() ? b[i] : 0;
        if (ea != eb)
            return ea > eb; // higher power of the earlier variable first
    }
    return false;
}

static void trim(Monomial &m)
{
    while (!m.empty() && m.back() == 0)
        m.pop_back();
}

Poly Poly::constant(Alphabet alpha, const Rational &c)
{
    Poly p(alpha);
    p.add_term({}, c);
    return p;
}

Poly Poly::variable(Alphabet alpha, int index)
{
    if (index < 1)
        throw DomainError("variable index must be >= 1");
    Poly p(alpha);
    Monomial m(static_cast<size_t>(index), 0);
    m.back() = 1;
    p.add_term(m, Rational(1));
    return p;
}

Poly Poly::from_linear(const LinearForm &form)
{
    Poly p(form.alphabet());
    const auto &c = form.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0)
            continue;
        Monomial m(i + 1, 0);
        m.back() = 1;
        p.add_term(m, Rational(static_cast<long>(c[i])));
    }
    return p;
}

bool Poly::is_constant() const
{
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
}

Rational Poly::constant_value() const
{
    if (t_.empty())
        return Rational(0);
    if (!is_constant())
        throw DomainError("polynomial is not constant: " + to_string());
    return t_.begin()->second;
}

Rational Poly::coeff(const Monomial &m) const
{
    Monomial key = m;
    trim(key);
    auto it = t_.find(key);
    return it == t_.end() ? Rational(0) : it->second;
}

unsigned Poly::total_degree() const
{
    unsigned d = 0;
    for (const auto &[m, c] : t_)
        d = std::max(d, monomial_degree(m));
    return d;
}

size_t Poly::max_var() const
{
    size_t r = 0;
    for (const auto &[m, c] : t_)
        r = std::max(r, m.size());
    return r;
}

void Poly::add_term(const Monomial &m, const Rational &c)
{
    if (mouldcalc::is_zero(c))
        return;
    Monomial key = m;
    trim(key);
    auto [it, inserted] = t_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (mouldcalc::is_zero(it->second))
            t_.erase(it);
    }
}

Poly Poly::operator-() const
{
    Poly r(alpha_);
    for (const auto &[m, c] : t_)
        r.t_.emplace(m, -c);
    return r;
}

Poly operator+(const Poly &a, const Poly &b)
{
    if (a.alpha_ != b.alpha_)
        throw DomainError("alphabet mismatch in polynomial addition");
    Poly r = a;
    for (const auto &[m, c] : b.t_)
        r.add_term(m, c);
    return r;
}

Poly operator-(const Poly &a, const Poly &b)
{
    if (a.alpha_ != b.alpha_)
        throw DomainError("alphabet mismatch in polynomial subtraction");
    Poly r = a;
    for (const auto &[m, c] : b.t_)
        r.add_term(m, -c);
    return r;
}

Poly operator*(const Poly &a, const Poly &b)
{
    if (a.alpha_ != b.alpha_)
        throw DomainError("alphabet mismatch in polynomial multiplication");
    Poly r(a.alpha_);
    for (const auto &[ma, ca] : a.t_) {
        for (const auto &[mb, cb] : b.t_) {
            Monomial m(std::max(ma.size(), mb.size()), 0);
            for (size_t i = 0; i < ma.size(); ++i)
                m[i] += ma[i];
            for (size_t i = 0; i < mb.size(); ++i)
                m[i] += mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

bool operator==(const Poly &a, const Poly &b)
{
    return a.alpha_ == b.alpha_ && a.t_ == b.t_;
}

Poly Poly::scaled(const Rational &c) const
{
    Poly r(alpha_);
    if (mouldcalc::is_zero(c))
        return r;
    for (const auto &[m, v] : t_)
        r.t_.emplace(m, v * c);
    return r;
}

Poly Poly::pow(unsigned e) const
{
    Poly r = Poly::constant(alpha_, Rational(1));
    for (unsigned i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

Poly Poly::substitute(const std::vector<LinearForm> &images) const
{
    Alphabet target = images.empty() ? alpha_ : images.front().alphabet();
    for (const auto &img : images)
        if (img.alphabet() != target)
            throw DomainError("mixed alphabets among substitution images");
    Poly r(target);
    // Per-variable power cache; exponents stay small.
    std::vector<std::vector<Poly>> powers(images.size());
    for (const auto &[m, c] : t_) {
        Poly term = Poly::constant(target, c);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (i >= images.size())
                throw DomainError("missing image for variable " + std::string(alphabet_name(alpha_)) +
                                  std::to_string(i + 1) + " in substitution");
            auto &cache = powers[i];
            if (cache.empty())
                cache.push_back(Poly::from_linear(images[i]));
            while (cache.size() < m[i])
                cache.push_back(cache.back() * cache.front());
            term = term * cache[m[i] - 1];
        }
        r = r + term;
    }
    return r;
}

std::optional<Poly> Poly::div_exact_linear(const LinearForm &form) const
{
    if (form.alphabet() != alpha_)
        throw DomainError("alphabet mismatch in exact division");
    if (is_zero())
        return Poly::zero(alpha_);
    // Pivot is the first variable of the form; reduce the pivot degree of
    // the remainder step by step. Division is exact iff nothing is left.
    size_t pivot = 0;
    while (form.coeffs()[pivot] == 0)
        ++pivot;
    Rational pivot_coeff(static_cast<long>(form.coeffs()[pivot]));
    Poly formpoly = Poly::from_linear(form);

    Poly q(alpha_), r = *this;
    while (!r.is_zero()) {
        unsigned d = 0;
        for (const auto &[m, c] : r.t_)
            if (m.size() > pivot)
                d = std::max(d, m[pivot]);
        if (d == 0)
            return std::nullopt;
        Poly t(alpha_); // (pivot-degree-d part of r) / (pivot_coeff * x_pivot)
        for (const auto &[m, c] : r.t_) {
            if (m.size() > pivot && m[pivot] == d) {
                Monomial mm = m;
                mm[pivot] -= 1;
                t.add_term(mm, c / pivot_coeff);
            }
        }
        q = q + t;
        r = r - t * formpoly;
    }
    return q;
}

std::string Poly::to_string() const
{
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : t_) {
        Rational a = c;
        if (!first)
            os << (sgn(a) >= 0 ? " + " : " - ");
        else if (sgn(a) < 0)
            os << "-";
        if (sgn(a) < 0)
            a = -a;
        bool unit = is_one(a);
        if (!unit || m.empty())
            os << mouldcalc::to_string(a);
        bool needstar = !unit;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (needstar)
                os << "*";
            os << alphabet_name(alpha_) << (i + 1);
            if (m[i] > 1)
                os << "^" << m[i];
            needstar = true;
        }
        first = false;
    }
    return os.str();
}

} // namespace mouldcalc
