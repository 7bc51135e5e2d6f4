#include "random_gen.hpp"

#include "dictionary.hpp"
#include "flexion.hpp"
#include "lyndon.hpp"

namespace mouldcalc {

int64_t Rng::range(int64_t lo, int64_t hi)
{
    if (hi < lo)
        throw DomainError("empty range");
    return lo + static_cast<int64_t>(gen_() % static_cast<uint64_t>(hi - lo + 1));
}

Rational Rng::small_rational()
{
    long num = static_cast<long>(range(-6, 6));
    long den = static_cast<long>(range(1, 4));
    return rat(num, den);
}

NCPoly random_lie(Rng &rng, int weight)
{
    NCPoly f;
    for (const auto &b : lyndon_basis(weight))
        f = f + b.scaled(rng.small_rational());
    return f;
}

NCPoly random_lie_mixed(Rng &rng, int max_weight)
{
    // sparse: a couple of bracketed Lyndon words per weight keeps the
    // dictionary images desk-sized at weight 8
    NCPoly f;
    for (int w = 2; w <= max_weight; ++w) {
        auto basis = lyndon_basis(w);
        int picks = static_cast<int>(rng.range(1, 2));
        for (int k = 0; k < picks; ++k) {
            size_t i = static_cast<size_t>(rng.range(0, static_cast<int64_t>(basis.size()) - 1));
            f = f + basis[i].scaled(rng.small_rational());
        }
    }
    return f;
}

Mould random_alternal_mould(Rng &rng, int depth, int max_weight)
{
    NCPoly f = random_lie_mixed(rng, max_weight);
    return ma(f, std::max(depth, f.max_weight())).truncated(depth);
}

static LinearForm random_flexion_form(Rng &rng, Alphabet alpha, int nvars)
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

Mould random_lfd_mould(Rng &rng, Alphabet alpha, int depth)
{
    Mould m(alpha, depth);
    for (int r = 1; r <= depth; ++r) {
        Poly num(alpha);
        int nterms = static_cast<int>(rng.range(1, 2));
        for (int t = 0; t < nterms; ++t) {
            Monomial mono(static_cast<size_t>(r), 0);
            for (int i = 0; i < r; ++i)
                mono[static_cast<size_t>(i)] = static_cast<unsigned>(rng.range(0, 1));
            num.add_term(mono, rng.small_rational());
        }
        if (num.is_zero())
            num = Poly::constant(alpha, Rational(1));
        std::vector<LFDRatio::Factor> den;
        int nf = static_cast<int>(rng.range(0, 2));
        for (int i = 0; i < nf; ++i)
            den.emplace_back(random_flexion_form(rng, alpha, r), 1u);
        m.set(r, LFDRatio::make(std::move(num), std::move(den)));
    }
    return m;
}

Mould random_push_invariant_mould(Rng &rng, int depth)
{
    return push_symmetrize(random_lfd_mould(rng, Alphabet::u, depth));
}

Mould random_constant_mould(Rng &rng, Alphabet alpha, int depth)
{
    std::vector<Rational> c;
    for (int r = 1; r <= depth; ++r)
        c.push_back(rng.small_rational());
    return Mould::constant_mould(alpha, c, depth);
}

} // namespace mouldcalc
