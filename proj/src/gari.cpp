#include "gari.hpp"

#include "bch.hpp"

#include <functional>

namespace mouldcalc {

static bool all_zero(const Mould &m)
{
    for (int r = 0; r <= m.max_depth(); ++r)
        if (!m.at(r).is_zero())
            return false;
    return true;
}

Mould preari(const Mould &a, const Mould &b)
{
    return arit(b, a) + mu(a, b);
}

Mould expari(const Mould &a)
{
    if (!a.in_ari())
        throw DomainError("expari expects an ARI mould");
    int depth = a.max_depth();
    Mould result = Mould::unit(a.alphabet(), depth);
    Mould power = Mould::unit(a.alphabet(), depth);
    Rational fact(1);
    for (int n = 1; n <= depth; ++n) {
        power = preari(power, a);
        fact /= n;
        result = result + power.scaled(fact);
    }
    return result;
}

Mould logari(const Mould &a)
{
    if (!a.in_gari())
        throw DomainError("logari expects a GARI mould (constant term 1)");
    int depth = a.max_depth();
    Mould x = Mould::zero(a.alphabet(), depth);
    // the depth-d component of expari(X) is X_d plus terms built from
    // shallower components only
    for (int d = 1; d <= depth; ++d) {
        Mould e = expari(x);
        x.set(d, x.at(d) + (a.at(d) - e.at(d)));
    }
    return x;
}

Mould ch_ari(const Mould &a, const Mould &b)
{
    if (!a.in_ari() || !b.in_ari())
        throw DomainError("ch_ari expects ARI moulds");
    if (a.alphabet() != b.alphabet())
        throw DomainError("alphabet mismatch in ch_ari");
    int depth = common_depth(a, b);
    auto coeffs = bch_word_coefficients(depth);
    Mould acc = Mould::zero(a.alphabet(), depth);
    // Depth-first over words, reusing the left-nested bracket of the prefix.
    auto letter_mould = [&](int l) -> const Mould & { return l == 0 ? a : b; };
    std::function<void(const BWord &, const Mould &)> walk = [&](const BWord &w, const Mould &bracket) {
        if (all_zero(bracket))
            return;
        auto it = coeffs.find(w);
        if (it != coeffs.end())
            acc = acc + bracket.scaled(it->second / Rational(static_cast<unsigned long>(w.len)));
        if (w.len >= depth)
            return;
        for (int l = 0; l < 2; ++l)
            walk(w.appended(l), ari(bracket, letter_mould(l)));
    };
    for (int l = 0; l < 2; ++l) {
        BWord w = BWord{}.appended(l);
        if (depth >= 1)
            walk(w, letter_mould(l).truncated(depth));
    }
    return acc;
}

Mould gari(const Mould &a, const Mould &b)
{
    return expari(ch_ari(logari(a), logari(b)));
}

Mould invgari(const Mould &a)
{
    return expari(-logari(a));
}

Mould adari(const Mould &a, const Mould &b)
{
    if (!b.in_ari())
        throw DomainError("adari acts on ARI moulds");
    Mould ell = logari(a);
    int depth = common_depth(a, b);
    Mould acc = b.truncated(depth);
    Mould iterate = acc;
    Rational fact(1);
    for (int n = 1; n <= depth; ++n) {
        iterate = ari(ell, iterate);
        fact /= n;
        acc = acc + iterate.scaled(fact);
    }
    return acc;
}

AdariForms adari_forms(const Mould &a, const Mould &b)
{
    AdariForms out{adari(a, b), Mould::zero(a.alphabet(), common_depth(a, b)), false};
    // conjugation form, with gari(-, C) extended off the group by
    // gari(unit + X, C) - gari(unit, C) = gari(unit + X, C) - C
    Mould x = preari(a, b).truncated(common_depth(a, b));
    Mould inv = invgari(a.truncated(common_depth(a, b)));
    Mould shifted = Mould::unit(a.alphabet(), x.max_depth()) + x;
    out.conjugation = gari(shifted, inv) - inv;
    out.agree = mould_equal(out.series, out.conjugation);
    return out;
}

Mould ganit(const Mould &b, const Mould &a)
{
    if (a.alphabet() != Alphabet::v || b.alphabet() != Alphabet::v)
        throw DomainError("ganit is implemented for v-alphabet moulds");
    int depth = common_depth(a, b);
    Mould out(Alphabet::v, depth);
    out.set(0, a.at(0));
    for (int r = 1; r <= depth; ++r) {
        LFDRatio acc = LFDRatio::zero(Alphabet::v);
        // blocks[i] = (b-block, c-block) as index ranges; c of the last
        // pair may be empty
        std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> blocks;
        std::function<void(int)> walk = [&](int pos) {
            if (pos > r) {
                Word aw;
                for (const auto &[bb, cb] : blocks)
                    for (int i = bb.first; i <= bb.second; ++i)
                        aw.push_back(LinearForm::variable(Alphabet::v, i));
                LFDRatio term = evaluate(a, aw);
                for (const auto &[bb, cb] : blocks) {
                    if (term.is_zero())
                        break;
                    if (cb.first > cb.second)
                        continue;
                    Word cw;
                    for (int i = cb.first; i <= cb.second; ++i)
                        cw.push_back(LinearForm::difference(Alphabet::v, i, bb.second));
                    term = term * evaluate(b, cw);
                }
                acc = acc + term;
                return;
            }
            for (int blen = 1; pos + blen - 1 <= r; ++blen) {
                int cstart = pos + blen;
                if (cstart > r) {
                    // final pair with empty c
                    blocks.push_back({{pos, pos + blen - 1}, {1, 0}});
                    walk(cstart);
                    blocks.pop_back();
                    continue;
                }
                for (int clen = 1; cstart + clen - 1 <= r; ++clen) {
                    blocks.push_back({{pos, pos + blen - 1}, {cstart, cstart + clen - 1}});
                    walk(cstart + clen);
                    blocks.pop_back();
                }
            }
        };
        walk(1);
        out.set(r, std::move(acc));
    }
    return out;
}

Mould ganit_expder(const Mould &b, const Mould &a)
{
    if (a.alphabet() != Alphabet::v || b.alphabet() != Alphabet::v)
        throw DomainError("ganit_expder is implemented for v-alphabet moulds");
    Mould ell = logari(b);
    int depth = common_depth(a, b);
    Mould acc = a.truncated(depth);
    Mould iterate = acc;
    Rational fact(1);
    for (int n = 1; n <= depth; ++n) {
        iterate = anit(ell, iterate);
        fact /= n;
        acc = acc + iterate.scaled(fact);
    }
    return acc;
}

} // namespace mouldcalc
