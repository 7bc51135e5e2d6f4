#include "flexion.hpp"

namespace mouldcalc {

Word identity_word(Alphabet alpha, int r)
{
    Word w;
    w.reserve(static_cast<size_t>(r));
    for (int i = 1; i <= r; ++i)
        w.push_back(LinearForm::variable(alpha, i));
    return w;
}

Word vars_word(Alphabet alpha, const std::vector<int> &ix)
{
    Word w;
    w.reserve(ix.size());
    for (int i : ix)
        w.push_back(LinearForm::variable(alpha, i));
    return w;
}

Word WordSplit::a() const
{
    Word w;
    for (int i = 1; i <= k; ++i)
        w.push_back(LinearForm::variable(alpha, i));
    return w;
}

Word WordSplit::b() const
{
    Word w;
    for (int i = k + 1; i <= k + l; ++i)
        w.push_back(LinearForm::variable(alpha, i));
    return w;
}

Word WordSplit::c() const
{
    Word w;
    for (int i = k + l + 1; i <= r; ++i)
        w.push_back(LinearForm::variable(alpha, i));
    return w;
}

Word WordSplit::a_flex() const
{
    Word w = a();
    if (l > 0 && k > 0)
        w.back() = LinearForm::sum_range(alpha, k, k + l);
    return w;
}

Word WordSplit::flex_c() const
{
    Word w = c();
    if (l > 0 && !w.empty())
        w.front() = LinearForm::sum_range(alpha, k + 1, k + l + 1);
    return w;
}

Word WordSplit::b_floor() const
{
    Word w = b();
    if (c_len() > 0)
        for (int i = 0; i < l; ++i)
            w[static_cast<size_t>(i)] = LinearForm::difference(alpha, k + 1 + i, k + l + 1);
    return w;
}

Word WordSplit::floor_b() const
{
    Word w = b();
    if (k > 0)
        for (int i = 0; i < l; ++i)
            w[static_cast<size_t>(i)] = LinearForm::difference(alpha, k + 1 + i, k);
    return w;
}

std::vector<WordSplit> enumerate_splits(Alphabet alpha, int r)
{
    std::vector<WordSplit> splits;
    for (int k = 0; k <= r; ++k)
        for (int l = 0; k + l <= r; ++l)
            splits.push_back(WordSplit{alpha, r, k, l});
    return splits;
}

static Word concat(Word x, const Word &y)
{
    x.insert(x.end(), y.begin(), y.end());
    return x;
}

static void require_u(const Mould &m, const char *op)
{
    if (m.alphabet() != Alphabet::u)
        throw DomainError(std::string(op) + " is defined for u-alphabet moulds only");
}

static void require_same(const Mould &a, const Mould &b, const char *op)
{
    if (a.alphabet() != b.alphabet())
        throw DomainError(std::string("alphabet mismatch in ") + op);
}

// neg(A)(u1..ur) = A(-u1,...,-ur)
Mould neg(const Mould &a)
{
    require_u(a, "neg");
    Mould out(a.alphabet(), a.max_depth());
    out.set(0, a.at(0));
    for (int r = 1; r <= a.max_depth(); ++r) {
        Word w;
        for (int i = 1; i <= r; ++i)
            w.push_back(LinearForm::variable(a.alphabet(), i).negated());
        out.set(r, a.at(r).substitute(w));
    }
    return out;
}

// push(A)(u1..ur) = A(-u1-...-ur, u1, ..., u_{r-1})
Mould push(const Mould &a)
{
    require_u(a, "push");
    Mould out(a.alphabet(), a.max_depth());
    out.set(0, a.at(0));
    for (int r = 1; r <= a.max_depth(); ++r) {
        Word w;
        w.push_back(LinearForm::sum_range(a.alphabet(), 1, r, -1));
        for (int i = 1; i < r; ++i)
            w.push_back(LinearForm::variable(a.alphabet(), i));
        out.set(r, a.at(r).substitute(w));
    }
    return out;
}

// mantar(A)(u1..ur) = (-1)^{r-1} A(ur,...,u1), depth 0 untouched
Mould mantar(const Mould &a)
{
    Mould out(a.alphabet(), a.max_depth());
    out.set(0, a.at(0));
    for (int r = 1; r <= a.max_depth(); ++r) {
        Word w;
        for (int i = r; i >= 1; --i)
            w.push_back(LinearForm::variable(a.alphabet(), i));
        LFDRatio v = a.at(r).substitute(w);
        out.set(r, (r % 2 == 0) ? -v : std::move(v));
    }
    return out;
}

Mould pari(const Mould &a)
{
    Mould out(a.alphabet(), a.max_depth());
    out.set(0, a.at(0));
    for (int r = 1; r <= a.max_depth(); ++r)
        out.set(r, r % 2 == 1 ? -a.at(r) : a.at(r));
    return out;
}

Mould dur(const Mould &a)
{
    require_u(a, "dur");
    Mould out(a.alphabet(), a.max_depth());
    // depth 0 multiplies by the empty sum
    for (int r = 1; r <= a.max_depth(); ++r)
        out.set(r, a.at(r).mul_form(LinearForm::sum_range(a.alphabet(), 1, r)));
    return out;
}

Mould dar(const Mould &a)
{
    require_u(a, "dar");
    Mould out(a.alphabet(), a.max_depth());
    out.set(0, a.at(0));
    for (int r = 1; r <= a.max_depth(); ++r) {
        LFDRatio v = a.at(r);
        for (int i = 1; i <= r; ++i)
            v = v.mul_form(LinearForm::variable(a.alphabet(), i));
        out.set(r, std::move(v));
    }
    return out;
}

Mould dur_inverse(const Mould &a)
{
    require_u(a, "dur_inverse");
    if (!a.at(0).is_zero())
        throw DomainError("dur_inverse needs a vanishing depth-0 component");
    Mould out(a.alphabet(), a.max_depth());
    for (int r = 1; r <= a.max_depth(); ++r)
        out.set(r, a.at(r).div_form(LinearForm::sum_range(a.alphabet(), 1, r)));
    return out;
}

Mould dar_inverse(const Mould &a)
{
    require_u(a, "dar_inverse");
    Mould out(a.alphabet(), a.max_depth());
    out.set(0, a.at(0));
    for (int r = 1; r <= a.max_depth(); ++r) {
        LFDRatio v = a.at(r);
        for (int i = 1; i <= r; ++i)
            v = v.div_form(LinearForm::variable(a.alphabet(), i));
        out.set(r, std::move(v));
    }
    return out;
}

// u-mould: swap(A)(v1..vr) = A(v_r, v_{r-1}-v_r, ..., v_1-v_2)
// v-mould: swap(A)(u1..ur) = A(u1+...+ur, u1+...+u_{r-1}, ..., u1)
Mould swap(const Mould &a)
{
    Alphabet target = a.alphabet() == Alphabet::u ? Alphabet::v : Alphabet::u;
    Mould out(target, a.max_depth());
    if (a.at(0).is_zero())
        out.set(0, LFDRatio::zero(target));
    else
        out.set(0, LFDRatio::constant(target, a.at(0).constant_value()));
    for (int r = 1; r <= a.max_depth(); ++r) {
        Word w;
        if (a.alphabet() == Alphabet::u) {
            w.push_back(LinearForm::variable(target, r));
            for (int i = 2; i <= r; ++i)
                w.push_back(LinearForm::difference(target, r - i + 1, r - i + 2));
        } else {
            for (int i = 1; i <= r; ++i)
                w.push_back(LinearForm::sum_range(target, 1, r - i + 1));
        }
        out.set(r, a.at(r).substitute(w));
    }
    return out;
}

// mu(A,B)(w) = sum over two-block splittings w = a.b (both possibly empty)
// of A(a)B(b).
Mould mu(const Mould &a, const Mould &b)
{
    require_same(a, b, "mu");
    Alphabet alpha = a.alphabet();
    Mould out(alpha, common_depth(a, b));
    for (int r = 0; r <= out.max_depth(); ++r) {
        LFDRatio acc = LFDRatio::zero(alpha);
        for (int k = 0; k <= r; ++k) {
            const LFDRatio &left = a.at(k);
            if (left.is_zero())
                continue;
            Word suffix;
            for (int i = k + 1; i <= r; ++i)
                suffix.push_back(LinearForm::variable(alpha, i));
            LFDRatio right = evaluate(b, suffix);
            if (right.is_zero())
                continue;
            acc = acc + left * right;
        }
        out.set(r, std::move(acc));
    }
    return out;
}

Mould lu(const Mould &a, const Mould &b) { return mu(a, b) - mu(b, a); }

// amit(B).A: u-alphabet sum of A(a [c) B(b) over splits with b,c nonempty;
// v-alphabet sum of A(ac) B(b_floor).
Mould amit(const Mould &b, const Mould &a)
{
    require_same(a, b, "amit");
    Alphabet alpha = a.alphabet();
    Mould out(alpha, common_depth(a, b));
    for (int r = 1; r <= out.max_depth(); ++r) {
        LFDRatio acc = LFDRatio::zero(alpha);
        for (const WordSplit &s : enumerate_splits(alpha, r)) {
            if (s.b_len() == 0 || s.c_len() == 0)
                continue;
            Word aw = alpha == Alphabet::u ? concat(s.a(), s.flex_c()) : concat(s.a(), s.c());
            Word bw = alpha == Alphabet::u ? s.b() : s.b_floor();
            LFDRatio av = evaluate(a, aw);
            if (av.is_zero())
                continue;
            LFDRatio bv = evaluate(b, bw);
            if (bv.is_zero())
                continue;
            acc = acc + av * bv;
        }
        out.set(r, std::move(acc));
    }
    return out;
}

// anit(B).A: u-alphabet sum of A(a] c) B(b) over splits with a,b nonempty;
// v-alphabet sum of A(ac) B(floor_b).
Mould anit(const Mould &b, const Mould &a)
{
    require_same(a, b, "anit");
    Alphabet alpha = a.alphabet();
    Mould out(alpha, common_depth(a, b));
    for (int r = 1; r <= out.max_depth(); ++r) {
        LFDRatio acc = LFDRatio::zero(alpha);
        for (const WordSplit &s : enumerate_splits(alpha, r)) {
            if (s.a_len() == 0 || s.b_len() == 0)
                continue;
            Word aw = alpha == Alphabet::u ? concat(s.a_flex(), s.c()) : concat(s.a(), s.c());
            Word bw = alpha == Alphabet::u ? s.b() : s.floor_b();
            LFDRatio av = evaluate(a, aw);
            if (av.is_zero())
                continue;
            LFDRatio bv = evaluate(b, bw);
            if (bv.is_zero())
                continue;
            acc = acc + av * bv;
        }
        out.set(r, std::move(acc));
    }
    return out;
}

Mould arit(const Mould &b, const Mould &a) { return amit(b, a) - anit(b, a); }

Mould axit(const Mould &b, const Mould &c, const Mould &a) { return amit(b, a) + anit(c, a); }

Mould ari(const Mould &a, const Mould &b)
{
    require_same(a, b, "ari");
    return arit(b, a) + lu(a, b) - arit(a, b);
}

Mould push_symmetrize(const Mould &a)
{
    require_u(a, "push_symmetrize");
    int depth = a.max_depth();
    // push iterates; component r needs push^0..push^r
    std::vector<Mould> orbit;
    orbit.push_back(a);
    for (int j = 1; j <= depth; ++j)
        orbit.push_back(push(orbit.back()));
    Mould out(a.alphabet(), depth);
    out.set(0, a.at(0));
    for (int r = 1; r <= depth; ++r) {
        LFDRatio acc = LFDRatio::zero(a.alphabet());
        for (int j = 0; j <= r; ++j)
            acc = acc + orbit[static_cast<size_t>(j)].at(r);
        out.set(r, acc.scaled(Rational(1, static_cast<unsigned long>(r) + 1)));
    }
    return out;
}

VerificationReport swap_ari_identity_check(const Mould &a, const Mould &b)
{
    VerificationReport report("swap-ari-identity");
    require_u(a, "swap_ari_identity_check");
    require_same(a, b, "swap_ari_identity_check");
    if (!a.in_ari() || !b.in_ari())
        throw DomainError("swap_ari_identity_check expects ARI moulds");
    report.set_bound("depth", std::to_string(common_depth(a, b)));

    auto both_sides = [](const Mould &x, const Mould &y) {
        Mould lhs = swap(ari(swap(x), swap(y)));
        Mould rhs = axit(y, -push(y), x) - axit(x, -push(x), y) + lu(x, y);
        return std::pair<Mould, Mould>(std::move(lhs), std::move(rhs));
    };

    auto [lhs, rhs] = both_sides(a, b);
    bool general_ok = true;
    for (int r = 0; r <= common_depth(a, b) && general_ok; ++r) {
        if (!lfd_equal(lhs.at(r), rhs.at(r))) {
            general_ok = false;
            report.check("general identity", false,
                         "first failing depth " + std::to_string(r) + ": lhs = " + lhs.at(r).to_string() +
                             ", rhs = " + rhs.at(r).to_string());
        }
    }
    if (general_ok)
        report.check("general identity", true);

    Mould ap = push_symmetrize(a);
    Mould bp = push_symmetrize(b);
    Mould lhs2 = swap(ari(swap(ap), swap(bp)));
    Mould rhs2 = ari(ap, bp);
    bool inv_ok = true;
    for (int r = 0; r <= common_depth(ap, bp) && inv_ok; ++r) {
        if (!lfd_equal(lhs2.at(r), rhs2.at(r))) {
            inv_ok = false;
            report.check("push-invariant corollary", false,
                         "first failing depth " + std::to_string(r) + ": lhs = " + lhs2.at(r).to_string() +
                             ", rhs = " + rhs2.at(r).to_string());
        }
    }
    if (inv_ok)
        report.check("push-invariant corollary", true);
    return report;
}

} // namespace mouldcalc
