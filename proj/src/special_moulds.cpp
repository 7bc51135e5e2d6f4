#include "special_moulds.hpp"

#include "dictionary.hpp"

#include <vector>

namespace mouldcalc {

Rational bernoulli(int n)
{
    if (n < 0)
        throw DomainError("Bernoulli numbers need n >= 0");
    thread_local std::vector<Rational> cache = {Rational(1)};
    // standard recurrence with B1 = -1/2, sign-flipped at the end
    while (static_cast<int>(cache.size()) <= n) {
        size_t m = cache.size();
        Rational sum(0);
        for (size_t k = 0; k < m; ++k)
            sum += Rational(binomial(static_cast<unsigned long>(m) + 1, static_cast<unsigned long>(k))) *
                   cache[k];
        cache.push_back(-sum / Rational(Integer(static_cast<long>(m) + 1)));
    }
    Rational value = cache[static_cast<size_t>(n)];
    return n == 1 ? -value : value;
}

Mould dupal(int depth)
{
    Mould out(Alphabet::u, depth);
    for (int r = 1; r <= depth; ++r) {
        Rational br = bernoulli(r);
        if (is_zero(br)) {
            out.set(r, LFDRatio::zero(Alphabet::u));
            continue;
        }
        Poly alt(Alphabet::u);
        for (int i = 0; i < r; ++i) {
            Monomial m(static_cast<size_t>(i) + 1, 0);
            m.back() = 1;
            Rational c(binomial(static_cast<unsigned long>(r) - 1, static_cast<unsigned long>(i)));
            alt.add_term(m, i % 2 == 0 ? c : -c);
        }
        std::vector<LFDRatio::Factor> den;
        for (int i = 1; i <= r; ++i)
            den.emplace_back(LinearForm::variable(Alphabet::u, i), 1);
        LFDRatio comp = LFDRatio::make(alt.scaled(br / Rational(factorial(static_cast<unsigned long>(r)))),
                                       std::move(den));
        out.set(r, std::move(comp));
    }
    return out;
}

PalCache::PalCache(int depth) : mould_(Alphabet::u, 0), dupal_(Alphabet::u, 0)
{
    mould_.set(0, LFDRatio::constant(Alphabet::u, Rational(1)));
    extend(depth);
}

void PalCache::extend(int depth)
{
    if (depth <= mould_.max_depth())
        return;
    dupal_ = dupal(depth);
    Mould grown(Alphabet::u, depth);
    for (int r = 0; r <= mould_.max_depth(); ++r)
        grown.set(r, mould_.at(r));
    for (int r = mould_.max_depth() + 1; r <= depth; ++r) {
        // depth-r part of mu(pal, dupal); the pal factor only contributes
        // components of depth < r because dupal vanishes in depth 0
        LFDRatio acc = LFDRatio::zero(Alphabet::u);
        for (int k = 0; k < r; ++k) {
            const LFDRatio &left = grown.at(k);
            if (left.is_zero())
                continue;
            Word suffix;
            for (int i = k + 1; i <= r; ++i)
                suffix.push_back(LinearForm::variable(Alphabet::u, i));
            LFDRatio right = evaluate(dupal_, suffix);
            if (right.is_zero())
                continue;
            acc = acc + left * right;
        }
        grown.set(r, acc.div_form(LinearForm::sum_range(Alphabet::u, 1, r)));
    }
    mould_ = std::move(grown);
}

Mould PalCache::mould(int depth) const
{
    if (depth > mould_.max_depth())
        throw DomainError("pal cache holds depth " + std::to_string(mould_.max_depth()) + " only");
    return mould_.truncated(depth);
}

Mould pal(int depth)
{
    PalCache cache(depth);
    return cache.mould(depth);
}

Mould pil(int depth) { return swap(pal(depth)); }

VerificationReport check_theorem_6_1(int depth)
{
    VerificationReport report("theorem-6.1");
    report.set_bound("depth", std::to_string(depth));
    SymmetryDefect p = is_symmetral(pal(depth));
    report.check("pal is symmetral", p.pass(), p.pass() ? "" : p.summary());
    SymmetryDefect q = is_symmetral(pil(depth));
    report.check("pil is symmetral", q.pass(), q.pass() ? "" : q.summary());
    return report;
}

VerificationReport check_fundamental_identity(const Mould &a)
{
    VerificationReport report("fundamental-identity");
    if (a.alphabet() != Alphabet::u || !a.in_ari())
        throw DomainError("the fundamental identity applies to u-alphabet ARI moulds");
    int depth = a.max_depth();
    report.set_bound("depth", std::to_string(depth));

    // The transporting bisymmetral is the parity twist of the recursion
    // normalization; see the note in gari.hpp.
    Mould lhs = swap(adari(pari(pal(depth)), a));
    Mould rhs = ganit(pic_mould(depth), adari(pari(pil(depth)), swap(a)));
    const char *label = "swap(adari(pari.pal).A) = ganit(pic).adari(pari.pil).swap(A)";
    bool ok = true;
    for (int r = 0; r <= depth && ok; ++r) {
        if (!lfd_equal(lhs.at(r), rhs.at(r))) {
            ok = false;
            report.check(label, false,
                         "first failing depth " + std::to_string(r) + ": lhs = " + lhs.at(r).to_string() +
                             ", rhs = " + rhs.at(r).to_string());
        }
    }
    if (ok)
        report.check(label, true);
    return report;
}

VerificationReport check_lemma_7_1(int depth)
{
    VerificationReport report("lemma-7.1");
    report.set_bound("depth", std::to_string(depth));
    Mould pil_star = pari(pil(depth));
    Mould picm = pic_mould(depth);
    auto fixed_by = [&](const Mould &c, const std::string &label) {
        Mould image = ganit(picm, adari(pil_star, c));
        bool ok = mould_equal(image, c);
        report.check(label, ok,
                     ok ? "" : "image differs from the constant mould starting at some depth");
    };
    std::vector<Rational> ones(static_cast<size_t>(depth), Rational(1));
    fixed_by(Mould::constant_mould(Alphabet::v, ones, depth), "all-ones constant mould is fixed");
    fixed_by(Mould::zero(Alphabet::v, depth), "zero mould is fixed");
    std::vector<Rational> spike(static_cast<size_t>(depth), Rational(0));
    if (depth >= 3)
        spike[2] = Rational(7, 3);
    fixed_by(Mould::constant_mould(Alphabet::v, spike, depth), "depth-3 concentrated constant is fixed");
    std::vector<Rational> mixed;
    for (int r = 1; r <= depth; ++r)
        mixed.push_back(Rational(2 * r - 3, static_cast<unsigned long>(r)));
    fixed_by(Mould::constant_mould(Alphabet::v, mixed, depth), "mixed constant mould is fixed");
    return report;
}

Mould adari_pal_map(const Mould &a, PalMapDirection direction)
{
    if (a.alphabet() != Alphabet::u || !a.in_ari())
        throw DomainError("the pal map applies to u-alphabet ARI moulds");
    int depth = a.max_depth();
    Mould p = pari(pal(depth)); // forward carries al*al onto al*il
    return direction == PalMapDirection::forward ? adari(p, a) : adari(invgari(p), a);
}

VerificationReport check_dar_dupal_series(int depth)
{
    VerificationReport report("dar-dupal");
    report.set_bound("depth", std::to_string(depth));
    // series side: x - sum_n (B_n/n!) ad(-y)^n (x), truncated at n <= depth
    NCPoly minus_y = -NCPoly::y();
    NCPoly series = NCPoly::x();
    NCPoly iterate = NCPoly::x(); // ad(-y)^n (x)
    Rational fact(1);
    series = series - iterate.scaled(bernoulli(0));
    for (int n = 1; n <= depth; ++n) {
        iterate = lie_bracket(minus_y, iterate);
        fact /= n;
        series = series - iterate.scaled(bernoulli(n) * fact);
    }
    Mould lhs = dar(dupal(depth));
    Mould rhs = ma(series, depth);
    bool ok = true;
    for (int r = 0; r <= depth && ok; ++r) {
        if (!lfd_equal(lhs.at(r), rhs.at(r))) {
            ok = false;
            report.check("dar.dupal matches the dictionary image of the generating series", false,
                         "first failing depth " + std::to_string(r) + ": dar.dupal = " +
                             lhs.at(r).to_string() + ", series image = " + rhs.at(r).to_string());
        }
    }
    if (ok)
        report.check("dar.dupal matches the dictionary image of the generating series", true);
    return report;
}

} // namespace mouldcalc
