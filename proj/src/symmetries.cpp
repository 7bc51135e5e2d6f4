#include "symmetries.hpp"

#include <sstream>

namespace mouldcalc {

std::string SymmetryDefect::summary() const
{
    if (pass())
        return "no defects up to depth " + std::to_string(checked_depth);
    std::ostringstream os;
    os << defects.size() << " defect(s) up to depth " << checked_depth << "; first at " << defects[0].where
       << " with value " << defects[0].value.to_string();
    return os.str();
}

static IndexWord index_range(int lo, int hi)
{
    IndexWord w;
    for (int i = lo; i <= hi; ++i)
        w.push_back(i);
    return w;
}

SymmetryDefect is_alternal(const Mould &a)
{
    SymmetryDefect result;
    result.checked_depth = a.max_depth();
    for (int r = 2; r <= a.max_depth(); ++r) {
        for (int k = 1; 2 * k <= r; ++k) {
            LFDRatio sum = LFDRatio::zero(a.alphabet());
            for (const auto &w : shuffle_set(index_range(1, k), index_range(k + 1, r)))
                sum = sum + evaluate(a, vars_word(a.alphabet(), w));
            if (!sum.is_zero())
                result.defects.push_back(
                    {"sh((1.." + std::to_string(k) + "),(" + std::to_string(k + 1) + ".." + std::to_string(r) + "))",
                     sum});
        }
    }
    return result;
}

SymmetryDefect is_symmetral(const Mould &a)
{
    if (!a.in_gari())
        throw DomainError("symmetrality applies to moulds with depth-0 component 1");
    SymmetryDefect result;
    result.checked_depth = a.max_depth();
    for (int r = 2; r <= a.max_depth(); ++r) {
        for (int k = 1; 2 * k <= r; ++k) {
            LFDRatio sum = LFDRatio::zero(a.alphabet());
            for (const auto &w : shuffle_set(index_range(1, k), index_range(k + 1, r)))
                sum = sum + evaluate(a, vars_word(a.alphabet(), w));
            LFDRatio product = evaluate(a, vars_word(a.alphabet(), index_range(1, k))) *
                               evaluate(a, vars_word(a.alphabet(), index_range(k + 1, r)));
            LFDRatio diff = sum - product;
            if (!diff.is_zero())
                result.defects.push_back(
                    {"sh((1.." + std::to_string(k) + "),(" + std::to_string(k + 1) + ".." + std::to_string(r) + "))",
                     diff});
        }
    }
    return result;
}

FlexionUnit::FlexionUnit(LFDRatio e1) : e1_(std::move(e1))
{
    if (e1_.alphabet() != Alphabet::v)
        throw DomainError("flexion units live in the v alphabet");
    if (e1_.num().max_var() > 1)
        throw DomainError("flexion units are depth-1 values of v1 only");
    for (const auto &[form, mult] : e1_.den())
        if (form.max_var() > 1)
            throw DomainError("flexion units are depth-1 values of v1 only");
}

FlexionUnit FlexionUnit::reciprocal()
{
    return FlexionUnit(LFDRatio::make(Poly::constant(Alphabet::v, Rational(1)),
                                      {{LinearForm::variable(Alphabet::v, 1), 1}}));
}

LFDRatio FlexionUnit::at(const LinearForm &arg) const { return e1_.substitute({arg}); }

VerificationReport flexion_unit_check(const LFDRatio &e1)
{
    VerificationReport report("flexion-unit");
    FlexionUnit e(e1);
    // oddness e(v1) = -e(-v1)
    LFDRatio odd = e1 + e.at(LinearForm::variable(Alphabet::v, 1).negated());
    report.check("oddness", odd.is_zero(), odd.is_zero() ? "" : "residual " + odd.to_string());
    // tripartite identity e(v1)e(v2) = e(v1-v2)e(v2) + e(v1)e(v2-v1)
    LFDRatio lhs = e.at(LinearForm::variable(Alphabet::v, 1)) * e.at(LinearForm::variable(Alphabet::v, 2));
    LFDRatio rhs = e.at(LinearForm::difference(Alphabet::v, 1, 2)) * e.at(LinearForm::variable(Alphabet::v, 2)) +
                   e.at(LinearForm::variable(Alphabet::v, 1)) * e.at(LinearForm::difference(Alphabet::v, 2, 1));
    LFDRatio tri = lhs - rhs;
    report.check("tripartite identity", tri.is_zero(), tri.is_zero() ? "" : "residual " + tri.to_string());
    return report;
}

Mould ez_mould(const FlexionUnit &e, int depth)
{
    Mould m(Alphabet::v, depth);
    m.set(0, LFDRatio::constant(Alphabet::v, Rational(1)));
    for (int r = 1; r <= depth; ++r) {
        LFDRatio prod = e.at(LinearForm::variable(Alphabet::v, 1));
        for (int i = 2; i <= r; ++i)
            prod = prod * e.at(LinearForm::variable(Alphabet::v, i));
        m.set(r, std::move(prod));
    }
    return m;
}

Mould pic_mould(int depth)
{
    Mould m(Alphabet::v, depth);
    m.set(0, LFDRatio::constant(Alphabet::v, Rational(1)));
    for (int r = 1; r <= depth; ++r) {
        std::vector<LFDRatio::Factor> den;
        for (int i = 1; i <= r; ++i)
            den.emplace_back(LinearForm::variable(Alphabet::v, i), 1);
        m.set(r, LFDRatio::make(Poly::constant(Alphabet::v, Rational(1)), std::move(den)));
    }
    return m;
}

// Shared skeleton of the contraction sums. For a stuffle word the term is
//   factor(contraction_1) * ... * factor(contraction_m)
//     * sum over keep-choices of sign * A(chosen variables),
// where keeping the first-sequence variable counts positive. Plain
// alternility divides by (v_a - v_b); a flexion unit multiplies by
// e(v_a - v_b).
static LFDRatio contraction_term(const Mould &a, const StuffleWord &word, const FlexionUnit *unit)
{
    Alphabet alpha = Alphabet::v;
    std::vector<size_t> contracted;
    for (size_t i = 0; i < word.slots.size(); ++i)
        if (word.slots[i].contracted())
            contracted.push_back(i);

    LFDRatio signed_sum = LFDRatio::zero(alpha);
    for (size_t mask = 0; mask < (size_t{1} << contracted.size()); ++mask) {
        Word args;
        int sign = 1;
        size_t ci = 0;
        for (const auto &slot : word.slots) {
            if (!slot.contracted()) {
                args.push_back(LinearForm::variable(alpha, slot.first));
            } else {
                bool keep_second = (mask >> ci) & 1;
                if (keep_second) {
                    args.push_back(LinearForm::variable(alpha, slot.second));
                    sign = -sign;
                } else {
                    args.push_back(LinearForm::variable(alpha, slot.first));
                }
                ++ci;
            }
        }
        LFDRatio value = evaluate(a, args);
        signed_sum = sign > 0 ? signed_sum + value : signed_sum - value;
    }

    LFDRatio term = std::move(signed_sum);
    for (size_t i : contracted) {
        const auto &slot = word.slots[i];
        if (unit)
            term = term * unit->at(LinearForm::difference(alpha, slot.first, slot.second));
        else
            term = term.div_form(LinearForm::difference(alpha, slot.first, slot.second));
    }
    return term;
}

static std::vector<LFDRatio> contraction_terms(const Mould &a, const FlexionUnit *unit, int r, int s)
{
    if (a.alphabet() != Alphabet::v)
        throw DomainError("contraction sums apply to v-alphabet moulds");
    if (r < 1 || s < 1)
        throw DomainError("sequence lengths must be >= 1");
    if (r + s > a.max_depth())
        throw DomainError("contraction sum depth " + std::to_string(r + s) + " beyond truncation bound " +
                          std::to_string(a.max_depth()));
    IndexWord y1, y2;
    for (int i = 1; i <= r; ++i)
        y1.push_back(i);
    for (int i = r + 1; i <= r + s; ++i)
        y2.push_back(i);
    std::vector<LFDRatio> terms;
    for (const auto &word : stuffle_set(y1, y2))
        terms.push_back(contraction_term(a, word, unit));
    return terms;
}

std::vector<LFDRatio> alternility_terms(const Mould &a, int r, int s)
{
    return contraction_terms(a, nullptr, r, s);
}

LFDRatio alternility_sum(const Mould &a, int r, int s)
{
    LFDRatio sum = LFDRatio::zero(Alphabet::v);
    for (const auto &t : alternility_terms(a, r, s))
        sum = sum + t;
    return sum;
}

std::vector<LFDRatio> e_alternality_terms(const Mould &a, const FlexionUnit &e, int r, int s)
{
    return contraction_terms(a, &e, r, s);
}

LFDRatio e_alternality_sum(const Mould &a, const FlexionUnit &e, int r, int s)
{
    LFDRatio sum = LFDRatio::zero(Alphabet::v);
    for (const auto &t : e_alternality_terms(a, e, r, s))
        sum = sum + t;
    return sum;
}

SymmetryDefect is_alternil(const Mould &a)
{
    SymmetryDefect result;
    result.checked_depth = a.max_depth();
    for (int r = 1; r <= a.max_depth(); ++r) {
        for (int s = r; r + s <= a.max_depth(); ++s) {
            LFDRatio sum = alternility_sum(a, r, s);
            if (!sum.is_zero())
                result.defects.push_back({"st(" + std::to_string(r) + "," + std::to_string(s) + ")", sum});
        }
    }
    return result;
}

SymmetryDefect is_e_alternal(const Mould &a, const FlexionUnit &e)
{
    SymmetryDefect result;
    result.checked_depth = a.max_depth();
    for (int r = 1; r <= a.max_depth(); ++r) {
        for (int s = r; r + s <= a.max_depth(); ++s) {
            LFDRatio sum = e_alternality_sum(a, e, r, s);
            if (!sum.is_zero())
                result.defects.push_back({"st(" + std::to_string(r) + "," + std::to_string(s) + ")", sum});
        }
    }
    return result;
}

std::optional<Mould> solve_constant_correction(const Mould &a, VSymmetry flavor)
{
    if (a.alphabet() != Alphabet::v)
        throw DomainError("constant corrections are solved for v-alphabet moulds");
    std::vector<Rational> constants(static_cast<size_t>(a.max_depth()), Rational(0));
    for (int n = 2; n <= a.max_depth(); ++n) {
        bool have = false;
        Rational c_n(0);
        auto consider = [&](const LFDRatio &sum, const Integer &plain_words) -> bool {
            if (!sum.is_constant())
                return false;
            Rational candidate = -sum.constant_value() / Rational(plain_words);
            if (have && candidate != c_n)
                return false;
            c_n = candidate;
            have = true;
            return true;
        };
        if (flavor == VSymmetry::alternil) {
            for (int r = 1; 2 * r <= n; ++r)
                if (!consider(alternility_sum(a, r, n - r), binomial(static_cast<unsigned long>(n),
                                                                     static_cast<unsigned long>(r))))
                    return std::nullopt;
        } else {
            for (int k = 1; 2 * k <= n; ++k) {
                LFDRatio sum = LFDRatio::zero(a.alphabet());
                for (const auto &w : shuffle_set(index_range(1, k), index_range(k + 1, n)))
                    sum = sum + evaluate(a, vars_word(a.alphabet(), w));
                if (!consider(sum, binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))))
                    return std::nullopt;
            }
        }
        if (have)
            constants[static_cast<size_t>(n) - 1] = c_n;
    }
    return Mould::constant_mould(Alphabet::v, constants, a.max_depth());
}

std::string Classification::to_string() const
{
    std::string cls;
    if (al_slash_il())
        cls = "al/il";
    else if (al_star_il())
        cls = "al*il";
    else if (al_slash_al())
        cls = "al/al";
    else if (al_star_al())
        cls = "al*al";
    else if (al())
        cls = "al";
    else
        cls = "none";
    if (cls != "none" && depth1_even)
        cls += " (underline)";
    return cls + " verified to depth " + std::to_string(depth);
}

Classification classify(const Mould &a)
{
    if (a.alphabet() != Alphabet::u)
        throw DomainError("classification applies to u-alphabet moulds");
    if (!a.in_ari())
        throw DomainError("classification applies to ARI moulds");
    Classification c;
    c.depth = a.max_depth();
    c.alternal = is_alternal(a).pass();
    if (a.max_depth() >= 1) {
        LFDRatio even =
            a.at(1) - a.at(1).substitute({LinearForm::variable(Alphabet::u, 1).negated()});
        c.depth1_even = even.is_zero();
    } else {
        c.depth1_even = true;
    }
    Mould s = swap(a);
    c.swap_alternal = is_alternal(s).pass();
    c.swap_alternil = is_alternil(s).pass();
    if (auto corr = solve_constant_correction(s, VSymmetry::alternal))
        c.swap_alternal_up_to_constant = is_alternal(s + *corr).pass();
    if (auto corr = solve_constant_correction(s, VSymmetry::alternil))
        c.swap_alternil_up_to_constant = is_alternil(s + *corr).pass();
    return c;
}

VerificationReport invariance_checks(const Mould &a)
{
    VerificationReport report("invariance");
    report.set_bound("depth", std::to_string(a.max_depth()));
    auto compare = [&](const char *label, const Mould &image) {
        for (int r = 0; r <= a.max_depth(); ++r) {
            if (!lfd_equal(image.at(r), a.at(r))) {
                report.check(label, false,
                             "first failing depth " + std::to_string(r) + ": image " + image.at(r).to_string() +
                                 " vs " + a.at(r).to_string());
                return;
            }
        }
        report.check(label, true);
    };
    compare("mantar-invariant", mantar(a));
    if (a.alphabet() == Alphabet::u) {
        compare("neg-invariant", neg(a));
        compare("push-invariant", push(a));
        compare("neg.push-invariant", neg(push(a)));
    }
    return report;
}

} // namespace mouldcalc
