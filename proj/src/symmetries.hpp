#pragma once

#include "flexion.hpp"
#include "report.hpp"
#include "words.hpp"

#include <optional>

namespace mouldcalc {

// One failing relation: which word pair, and the exact nonzero value.
struct Defect {
    std::string where;
    LFDRatio value;
};

struct SymmetryDefect {
    int checked_depth = 0;
    std::vector<Defect> defects;
    bool pass() const { return defects.empty(); }
    std::string summary() const;
};

// Shuffle symmetries, both alphabets: alternal means every shuffle sum of
// mould values vanishes, symmetral means it equals the product of values.
SymmetryDefect is_alternal(const Mould &a);
SymmetryDefect is_symmetral(const Mould &a); // depth-0 component must be 1

// Depth-1 v-alphabet value e with e(x) = -e(-x) and the tripartite identity
// e(x)e(y) = e(x-y)e(y) + e(x)e(y-x). The reciprocal unit 1/v1 recovers
// plain alternility.
class FlexionUnit {
  public:
    explicit FlexionUnit(LFDRatio e1);
    static FlexionUnit reciprocal(); // 1/v1
    const LFDRatio &value() const { return e1_; }
    LFDRatio at(const LinearForm &arg) const; // e(arg)
  private:
    LFDRatio e1_;
};

// Axiom verification for a candidate depth-1 value.
VerificationReport flexion_unit_check(const LFDRatio &e1);

Mould ez_mould(const FlexionUnit &e, int depth); // ez(v1..vr) = e(v1)...e(vr)
Mould pic_mould(int depth);                      // 1/(v1...vr)

// The stuffle-with-contractions sum attached to sequence lengths (r,s),
// for a v-alphabet mould. Each contracted slot of a stuffle word turns
// into a divided difference: a factor 1/(v_a - v_b) against the signed
// two-term difference of evaluations (keep-first positive). Terms are
// returned per stuffle word, in stuffle_set order.
std::vector<LFDRatio> alternility_terms(const Mould &a, int r, int s);
LFDRatio alternility_sum(const Mould &a, int r, int s);

// Same sum skeleton with each contraction contributing a multiplicative
// factor e(v_a - v_b) instead of the divided-difference denominator.
std::vector<LFDRatio> e_alternality_terms(const Mould &a, const FlexionUnit &e, int r, int s);
LFDRatio e_alternality_sum(const Mould &a, const FlexionUnit &e, int r, int s);

SymmetryDefect is_alternil(const Mould &a);
SymmetryDefect is_e_alternal(const Mould &a, const FlexionUnit &e);

// Per-depth constants c_n making A + C satisfy the requested symmetry,
// when they exist: only the uncontracted words of a sum see the constant,
// binom(n,r) of them at total depth n. Inconsistent or non-constant
// defects yield nullopt.
enum class VSymmetry { alternal, alternil };
std::optional<Mould> solve_constant_correction(const Mould &a, VSymmetry flavor = VSymmetry::alternil);

// Membership of a u-alphabet ARI mould in the dimorphic subspaces, all
// verified up to the truncation depth, never absolutely.
struct Classification {
    int depth = 0;
    bool alternal = false;
    bool depth1_even = false;
    bool swap_alternal = false;
    bool swap_alternil = false;
    bool swap_alternal_up_to_constant = false;
    bool swap_alternil_up_to_constant = false;

    bool al() const { return alternal; }
    bool al_slash_al() const { return alternal && swap_alternal; }
    bool al_star_al() const { return alternal && swap_alternal_up_to_constant; }
    bool al_slash_il() const { return alternal && swap_alternil; }
    bool al_star_il() const { return alternal && swap_alternil_up_to_constant; }

    std::string to_string() const;
};

Classification classify(const Mould &a);

// mantar / neg / push / neg.push invariance, componentwise exact. The neg
// and push checks only apply to u-alphabet moulds.
VerificationReport invariance_checks(const Mould &a);

} // namespace mouldcalc
