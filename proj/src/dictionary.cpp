#include "dictionary.hpp"

#include "qlinalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mouldcalc {

Rational CPoly::coeff(const CWord &w) const
{
    auto it = terms.find(w);
    return it == terms.end() ? Rational(0) : it->second;
}

void CPoly::add_term(const CWord &w, const Rational &c)
{
    if (is_zero(c))
        return;
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second))
            terms.erase(it);
    }
}

static NCPoly expand_single(unsigned a)
{
    // C_a = ad(x)^(a-1) y = sum_i (-1)^i binom(a-1,i) x^(a-1-i) y x^i
    NCPoly out;
    for (unsigned i = 0; i < a; ++i) {
        XYWord w;
        for (unsigned k = 0; k < a - 1 - i; ++k)
            w = w.appended(0);
        w = w.appended(1);
        for (unsigned k = 0; k < i; ++k)
            w = w.appended(0);
        Rational c = Rational(binomial(a - 1, i));
        out.add_term(w, i % 2 == 0 ? c : -c);
    }
    return out;
}

NCPoly expand_cword(const CWord &w)
{
    NCPoly out = NCPoly::constant(Rational(1));
    for (unsigned a : w)
        out = out * expand_single(a);
    return out;
}

static unsigned cword_weight(const CWord &w)
{
    unsigned n = 0;
    for (unsigned a : w)
        n += a;
    return n;
}

// composition of a word ending in y, by maximal x-runs
static CWord composition_of(const XYWord &w)
{
    CWord out;
    unsigned run = 1;
    for (int i = 0; i < w.len; ++i) {
        if (w.letter(i) == 0) {
            ++run;
        } else {
            out.push_back(run);
            run = 1;
        }
    }
    return out;
}

CPoly to_C_basis(const NCPoly &f)
{
    CPoly out;
    NCPoly g = f;
    out.add_term({}, g.coeff(XYWord{}));
    g.add_term(XYWord{}, -out.coeff({}));
    out.x_coeff = g.coeff(XYWord::parse("x"));
    g.add_term(XYWord::parse("x"), -out.x_coeff);

    while (true) {
        // lexicographically greatest composition among words ending in y
        const XYWord *best = nullptr;
        CWord best_comp;
        for (const auto &[w, c] : g.terms()) {
            if (w.len == 0 || w.letter(w.len - 1) != 1)
                continue;
            CWord comp = composition_of(w);
            if (!best || std::lexicographical_compare(best_comp.begin(), best_comp.end(), comp.begin(),
                                                      comp.end())) {
                best = &w;
                best_comp = comp;
            }
        }
        if (!best)
            break;
        Rational lambda = g.coeff(*best);
        out.add_term(best_comp, lambda);
        g = g - expand_cword(best_comp).scaled(lambda);
    }
    if (!g.is_zero()) {
        std::ostringstream os;
        os << "polynomial is not in Q<C> + Qx; offending words:";
        int listed = 0;
        for (const auto &[w, c] : g.terms()) {
            os << " " << w.to_string();
            if (++listed == 8)
                break;
        }
        throw DomainError(os.str());
    }
    return out;
}

NCPoly from_C_basis(const CPoly &g)
{
    NCPoly out;
    out.add_term(XYWord::parse("x"), g.x_coeff);
    for (const auto &[w, c] : g.terms)
        out = out + expand_cword(w).scaled(c);
    return out;
}

Mould ma(const NCPoly &f, int max_depth)
{
    CPoly c = to_C_basis(f);
    if (!is_zero(c.x_coeff))
        throw DomainError("the dictionary map needs a vanishing x-component");
    int depth = max_depth >= 0 ? max_depth : f.max_weight();
    Mould out(Alphabet::u, depth);
    out.set(0, LFDRatio::constant(Alphabet::u, c.coeff({})));
    std::vector<Poly> comps(static_cast<size_t>(depth) + 1, Poly::zero(Alphabet::u));
    for (const auto &[w, coeff] : c.terms) {
        int r = static_cast<int>(w.size());
        if (r == 0 || r > depth)
            continue;
        Monomial m;
        for (unsigned a : w)
            m.push_back(a - 1);
        unsigned weight = cword_weight(w);
        Rational value = (weight - static_cast<unsigned>(r)) % 2 == 0 ? coeff : -coeff;
        comps[static_cast<size_t>(r)].add_term(m, value);
    }
    for (int r = 1; r <= depth; ++r)
        out.set(r, LFDRatio::from_poly(comps[static_cast<size_t>(r)]));
    return out;
}

Mould mi(const NCPoly &f, int max_depth) { return swap(ma(f, max_depth)); }

NCPoly ma_inverse(const Mould &a)
{
    if (a.alphabet() != Alphabet::u)
        throw DomainError("the inverse dictionary map reads u-alphabet moulds");
    CPoly c;
    if (!a.at(0).is_zero())
        c.add_term({}, a.at(0).constant_value());
    for (int r = 1; r <= a.max_depth(); ++r) {
        const LFDRatio &comp = a.at(r);
        if (!comp.is_polynomial())
            throw DomainError("the inverse dictionary map needs polynomial components, got " +
                              comp.to_string());
        for (const auto &[m, coeff] : comp.num().terms()) {
            CWord w;
            for (int i = 0; i < r; ++i)
                w.push_back((i < static_cast<int>(m.size()) ? m[static_cast<size_t>(i)] : 0) + 1);
            unsigned weight = cword_weight(w);
            Rational value = (weight - static_cast<unsigned>(r)) % 2 == 0 ? coeff : -coeff;
            c.add_term(w, value);
        }
    }
    return from_C_basis(c);
}

Mould correction_mould(const NCPoly &f, int max_depth)
{
    if (f.is_zero())
        return Mould::zero(Alphabet::v, std::max(max_depth, 0));
    if (!f.is_homogeneous())
        throw DomainError("correction mould needs a homogeneous input");
    int n = f.max_weight();
    int depth = max_depth >= 0 ? max_depth : n;
    XYWord xny;
    for (int i = 0; i < n - 1; ++i)
        xny = xny.appended(0);
    xny = xny.appended(1);
    Rational c = f.coeff(xny);
    Rational sign(n % 2 == 1 ? 1 : -1, static_cast<unsigned long>(n));
    Mould out(Alphabet::v, depth);
    if (n <= depth)
        out.set(n, LFDRatio::constant(Alphabet::v, c * sign));
    return out;
}

Mould y_transcription(const YPoly &fs, int max_depth)
{
    Mould out(Alphabet::v, max_depth);
    std::vector<Poly> comps(static_cast<size_t>(max_depth) + 1, Poly::zero(Alphabet::v));
    for (const auto &[w, c] : fs.terms()) {
        int r = static_cast<int>(w.size());
        if (r > max_depth)
            throw DomainError("transcription depth exceeds the requested bound");
        Monomial m;
        for (unsigned a : w)
            m.push_back(a - 1);
        comps[static_cast<size_t>(r)].add_term(m, c);
    }
    for (int r = 1; r <= max_depth; ++r)
        out.set(r, LFDRatio::from_poly(comps[static_cast<size_t>(r)]));
    return out;
}

Mould weight_truncate(const Mould &a, int max_weight)
{
    Mould out(a.alphabet(), a.max_depth());
    for (int r = 0; r <= a.max_depth(); ++r) {
        const LFDRatio &comp = a.at(r);
        if (comp.is_zero()) {
            continue;
        }
        if (!comp.is_polynomial())
            throw DomainError("weight truncation applies to polynomial moulds");
        Poly kept(a.alphabet());
        for (const auto &[m, c] : comp.num().terms())
            if (static_cast<int>(monomial_degree(m)) + r <= max_weight)
                kept.add_term(m, c);
        out.set(r, LFDRatio::from_poly(std::move(kept)));
    }
    return out;
}

VerificationReport check_ma_homomorphism(const NCPoly &f, const NCPoly &g)
{
    VerificationReport report("ma-homomorphism");
    int depth = f.max_weight() + g.max_weight();
    report.set_bound("depth", std::to_string(depth));
    Mould lhs = ma(poisson(f, g), depth);
    Mould rhs = ari(ma(f, depth), ma(g, depth));
    bool ok = true;
    for (int r = 0; r <= depth && ok; ++r) {
        if (!lfd_equal(lhs.at(r), rhs.at(r))) {
            ok = false;
            report.check("ma{f,g} = ari(ma f, ma g)", false,
                         "first failing depth " + std::to_string(r));
        }
    }
    if (ok)
        report.check("ma{f,g} = ari(ma f, ma g)", true);
    return report;
}

NCPoly prelie_odot(const NCPoly &f, const NCPoly &g, OdotConvention conv)
{
    if (conv == OdotConvention::add_df_g)
        return f * g + apply_derivation(f, g);
    return f * g - apply_derivation(g, f);
}

NCPoly exp_odot(const NCPoly &f, int weight_cap, OdotConvention conv)
{
    NCPoly acc = NCPoly::constant(Rational(1));
    NCPoly power = NCPoly::constant(Rational(1));
    Rational fact(1);
    int minw = std::max(1, f.min_weight());
    for (int n = 1; n * minw <= weight_cap; ++n) {
        power = prelie_odot(power, f, conv).truncated(weight_cap);
        fact /= n;
        acc = acc + power.scaled(fact);
    }
    return acc;
}

NCPoly mt_inverse(const NCPoly &f, int weight_cap)
{
    if (f.coeff(XYWord{}) != 1)
        throw DomainError("group inversion needs constant term 1");
    NCPoly n = NCPoly::constant(Rational(1)) - f; // 1 - F
    NCPoly acc = NCPoly::constant(Rational(1));
    NCPoly power = NCPoly::constant(Rational(1));
    for (int k = 1; k <= weight_cap; ++k) {
        power = (power * n).truncated(weight_cap);
        if (power.is_zero())
            break;
        acc = acc + power;
    }
    return acc;
}

static NCPoly substitute_y(const NCPoly &f, const NCPoly &yimage, int weight_cap)
{
    NCPoly out;
    for (const auto &[w, c] : f.terms()) {
        NCPoly term = NCPoly::constant(c);
        for (int i = 0; i < w.len && !term.is_zero(); ++i) {
            term = (w.letter(i) == 0) ? term * NCPoly::x() : (term * yimage).truncated(weight_cap);
        }
        out = out + term;
    }
    return out.truncated(weight_cap);
}

NCPoly mt_group_mul(const NCPoly &f, const NCPoly &g, int weight_cap)
{
    if (f.coeff(XYWord{}) != 1 || g.coeff(XYWord{}) != 1)
        throw DomainError("the twisted Magnus product needs constant term 1");
    NCPoly conj = (g * NCPoly::y() * mt_inverse(g, weight_cap)).truncated(weight_cap);
    return (substitute_y(f, conj, weight_cap) * g).truncated(weight_cap);
}

bool is_in_ds(const NCPoly &f)
{
    if (f.is_zero())
        return false; // the degree convention excludes the trivial element
    if (f.min_weight() < 3)
        return false;
    if (!shuffle_relations_check(f).pass())
        return false;
    return stuffle_relations_check(fstar(f)).pass();
}

std::vector<NCPoly> ds_basis(int weight)
{
    if (weight < 3)
        throw DomainError("the double shuffle space starts at weight 3");
    std::vector<XYWord> words;
    for (unsigned bits = 0; bits < (1u << weight); ++bits)
        words.push_back({weight, bits});
    std::sort(words.begin(), words.end());

    // rows: shuffle relations on f, then stuffle relations on f_*
    std::vector<std::vector<Rational>> rows;
    {
        NCPoly probe;
        // shuffle rows, one per word pair
        for (int k = 1; 2 * k <= weight; ++k) {
            std::vector<XYWord> lefts, rights;
            for (unsigned b = 0; b < (1u << k); ++b)
                lefts.push_back({k, b});
            for (unsigned b = 0; b < (1u << (weight - k)); ++b)
                rights.push_back({weight - k, b});
            for (const auto &u : lefts) {
                for (const auto &v : rights) {
                    if (weight - k == k && v < u)
                        continue;
                    std::map<XYWord, Rational> sum;
                    IndexWord up, vp;
                    for (int i = 0; i < k; ++i)
                        up.push_back(i);
                    for (int i = 0; i < weight - k; ++i)
                        vp.push_back(100 + i);
                    for (const auto &mix : shuffle_set(up, vp)) {
                        XYWord w;
                        for (int tag : mix)
                            w = w.appended(tag >= 100 ? v.letter(tag - 100) : u.letter(tag));
                        sum[w] += 1;
                    }
                    std::vector<Rational> row(words.size(), Rational(0));
                    for (size_t i = 0; i < words.size(); ++i) {
                        auto it = sum.find(words[i]);
                        if (it != sum.end())
                            row[i] = it->second;
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    {
        // stuffle rows act through the linear map f -> f_*
        std::vector<YPoly> images;
        for (const auto &w : words)
            images.push_back(fstar(NCPoly::word(w)));
        for (int wa = 1; 2 * wa <= weight; ++wa) {
            std::vector<YWord> A, B;
            // enumerate compositions
            std::function<void(int, YWord &, std::vector<YWord> &)> rec = [&](int rest, YWord &cur,
                                                                              std::vector<YWord> &out) {
                if (rest == 0) {
                    out.push_back(cur);
                    return;
                }
                for (int a = 1; a <= rest; ++a) {
                    cur.push_back(static_cast<unsigned>(a));
                    rec(rest - a, cur, out);
                    cur.pop_back();
                }
            };
            YWord cur;
            rec(wa, cur, A);
            rec(weight - wa, cur, B);
            for (const auto &ca : A) {
                for (const auto &cb : B) {
                    if (wa == weight - wa && cb < ca)
                        continue;
                    YWord all = ca;
                    all.insert(all.end(), cb.begin(), cb.end());
                    IndexWord p1, p2;
                    for (size_t i = 0; i < ca.size(); ++i)
                        p1.push_back(static_cast<int>(i) + 1);
                    for (size_t i = 0; i < cb.size(); ++i)
                        p2.push_back(static_cast<int>(ca.size() + i) + 1);
                    std::vector<YWord> stuffle_words;
                    for (const auto &sw : stuffle_set(p1, p2)) {
                        YWord w;
                        for (const auto &slot : sw.slots) {
                            unsigned sub = all[static_cast<size_t>(slot.first) - 1];
                            if (slot.contracted())
                                sub += all[static_cast<size_t>(slot.second) - 1];
                            w.push_back(sub);
                        }
                        stuffle_words.push_back(std::move(w));
                    }
                    std::vector<Rational> row(words.size(), Rational(0));
                    for (size_t i = 0; i < words.size(); ++i)
                        for (const auto &w : stuffle_words)
                            row[i] += images[i].coeff(w);
                    rows.push_back(std::move(row));
                }
            }
        }
    }

    QMatrix m(rows.size(), words.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < words.size(); ++j)
            m.at(i, j) = rows[i][j];
    std::vector<NCPoly> basis;
    for (const auto &v : kernel_basis(std::move(m))) {
        NCPoly f;
        for (size_t j = 0; j < words.size(); ++j)
            f.add_term(words[j], v[j]);
        basis.push_back(std::move(f));
    }
    return basis;
}

VerificationReport check_racinet_closure(int w1, int w2)
{
    VerificationReport report("racinet-closure");
    report.set_bound("weights", std::to_string(w1) + "+" + std::to_string(w2));
    auto basis1 = ds_basis(w1);
    auto basis2 = ds_basis(w2);
    report.check("ds basis solved at weight " + std::to_string(w1) + " (dim " +
                     std::to_string(basis1.size()) + ")",
                 true);
    if (w2 != w1)
        report.check("ds basis solved at weight " + std::to_string(w2) + " (dim " +
                         std::to_string(basis2.size()) + ")",
                     true);
    int depth = w1 + w2;
    for (size_t i = 0; i < basis1.size(); ++i) {
        for (size_t j = 0; j < basis2.size(); ++j) {
            std::string tag = "pair (" + std::to_string(w1) + "#" + std::to_string(i + 1) + ", " +
                              std::to_string(w2) + "#" + std::to_string(j + 1) + ")";
            NCPoly bracket = poisson(basis1[i], basis2[j]);
            if (bracket.is_zero()) {
                report.check(tag + ": poisson bracket vanishes, trivially closed", true);
                continue;
            }
            bool poly_route = is_in_ds(bracket);
            report.check(tag + ": poisson bracket lies in ds", poly_route);
            Mould lhs = ma(bracket, depth);
            Mould rhs = ari(ma(basis1[i], depth), ma(basis2[j], depth));
            report.check(tag + ": mould route agrees with the polynomial route", mould_equal(lhs, rhs));
            Classification cls = classify(rhs);
            bool mould_route = cls.al_star_il() && cls.depth1_even;
            report.check(tag + ": ari bracket classifies al*il (underline), got " + cls.to_string(),
                         mould_route);
        }
    }
    return report;
}

} // namespace mouldcalc
