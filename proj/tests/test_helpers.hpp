#pragma once

#include "lfd_ratio.hpp"
#include "poly.hpp"

#include <random>

namespace mouldcalc::testing {

inline LinearForm lf(Alphabet alpha, std::vector<int64_t> c) { return LinearForm(alpha, std::move(c)); }

inline Poly var(Alphabet alpha, int i) { return Poly::variable(alpha, i); }

inline Poly qc(Alphabet alpha, long num, long den = 1) { return Poly::constant(alpha, rat(num, den)); }

// Deterministic draws; std::uniform_int_distribution is implementation
// defined, so tests roll their own.
struct TestRng {
    std::mt19937_64 gen;
    explicit TestRng(uint64_t seed) : gen(seed) {}
    int64_t range(int64_t lo, int64_t hi) // inclusive
    {
        return lo + static_cast<int64_t>(gen() % static_cast<uint64_t>(hi - lo + 1));
    }
    Rational small_rational()
    {
        long num = static_cast<long>(range(-6, 6));
        long den = static_cast<long>(range(1, 4));
        return rat(num, den);
    }
};

inline Poly random_poly(TestRng &rng, Alphabet alpha, int nvars, int maxdeg, int nterms)
{
    Poly p(alpha);
    for (int t = 0; t < nterms; ++t) {
        Monomial m(static_cast<size_t>(nvars), 0);
        for (int i = 0; i < nvars; ++i)
            m[static_cast<size_t>(i)] = static_cast<unsigned>(rng.range(0, maxdeg));
        p.add_term(m, rng.small_rational());
    }
    return p;
}

// General integer form, for substitution-morphism tests.
inline LinearForm random_form(TestRng &rng, Alphabet alpha, int nvars)
{
    while (true) {
        std::vector<int64_t> c(static_cast<size_t>(nvars), 0);
        for (int i = 0; i < nvars; ++i)
            c[static_cast<size_t>(i)] = rng.range(-2, 2);
        bool zero = true;
        for (int64_t x : c)
            if (x != 0)
                zero = false;
        if (!zero)
            return LinearForm(alpha, std::move(c));
    }
}

// Denominator atoms of the kind the flexion operators actually produce:
// u-side single variables and consecutive sums, v-side variables and
// differences. Keeping test denominators inside this family keeps common
// denominators small, like the real special moulds.
inline LinearForm random_flexion_form(TestRng &rng, Alphabet alpha, int nvars)
{
    if (alpha == Alphabet::u) {
        int lo = static_cast<int>(rng.range(1, nvars));
        int hi = static_cast<int>(rng.range(lo, nvars));
        return LinearForm::sum_range(alpha, lo, hi);
    }
    int i = static_cast<int>(rng.range(1, nvars));
    if (nvars == 1 || rng.range(0, 1) == 0)
        return LinearForm::variable(alpha, i);
    int j = static_cast<int>(rng.range(1, nvars - 1));
    if (j >= i)
        ++j;
    return LinearForm::difference(alpha, i, j);
}

inline LFDRatio random_lfd(TestRng &rng, Alphabet alpha, int nvars)
{
    Poly num = random_poly(rng, alpha, nvars, 1, 2);
    if (num.is_zero())
        num = qc(alpha, 1);
    std::vector<LFDRatio::Factor> den;
    int nf = static_cast<int>(rng.range(0, 2));
    for (int i = 0; i < nf; ++i)
        den.emplace_back(random_flexion_form(rng, alpha, nvars), 1u);
    return LFDRatio::make(std::move(num), std::move(den));
}

} // namespace mouldcalc::testing
