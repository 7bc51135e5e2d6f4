#pragma once

#include "ncpoly.hpp"
#include "report.hpp"
#include "symmetries.hpp"

#include <optional>

namespace mouldcalc {

// Monomial in the free generators C_i = ad(x)^(i-1) y, stored as the
// composition (a_1,...,a_r); weight is the sum.
using CWord = std::vector<unsigned>;

// Polynomial in the C_i together with the tracked multiple of the letter
// x (Lie[x,y] splits as Qx + Lie[C]).
class CPoly {
  public:
    Rational x_coeff = Rational(0);
    std::map<CWord, Rational> terms;

    Rational coeff(const CWord &w) const;
    void add_term(const CWord &w, const Rational &c);
    bool operator==(const CPoly &other) const = default;
};

// Expansion of one C-monomial into Q<x,y>.
NCPoly expand_cword(const CWord &w);

// Rewriting into the C-basis. The expansion of a C-word is unitriangular
// against compositions in lexicographic order (stray terms only move
// weight rightward), so a greedy elimination on words ending in y
// terminates; anything left over besides the tracked x means the input
// was outside Q<C> + Qx and is reported with the offending words.
CPoly to_C_basis(const NCPoly &f);
NCPoly from_C_basis(const CPoly &g);

// The dictionary map: C_{a_1}...C_{a_r} goes to the mould concentrated in
// depth r with value (-1)^(a_1+...+a_r-r) u_1^(a_1-1)...u_r^(a_r-1); the
// empty C-word feeds the depth-0 component. max_depth defaults to the
// weight of f (all higher components vanish identically).
Mould ma(const NCPoly &f, int max_depth = -1);
Mould mi(const NCPoly &f, int max_depth = -1); // swap(ma(f))
NCPoly ma_inverse(const Mould &a);             // polynomial u-moulds only

// The constant v-mould concentrated in depth n = weight(f) with value
// ((-1)^(n-1)/n) (f|x^(n-1)y).
Mould correction_mould(const NCPoly &f, int max_depth = -1);

// The v-mould with depth-r component sum c_a v_1^(a_1-1)...v_r^(a_r-1)
// over the y-monomials of fs; the monomial transcription of f_*.
Mould y_transcription(const YPoly &fs, int max_depth);

// Restrict a polynomial mould to total weight <= cap, where a depth-r
// monomial of degree d weighs d + r. Weight caps on the polynomial side
// correspond to this truncation on the mould side, because every
// dictionary operation is weight graded.
Mould weight_truncate(const Mould &a, int max_weight);

// ma({f,g}) = ari(ma f, ma g), both sides computed independently.
VerificationReport check_ma_homomorphism(const NCPoly &f, const NCPoly &g);

// The two printed pre-Lie conventions; the dictionary test selects the
// one compatible with expari under ma.
enum class OdotConvention {
    add_df_g, // f (.) g = fg + D_f(g)
    sub_dg_f, // f (.) g = fg - D_g(f)
};
NCPoly prelie_odot(const NCPoly &f, const NCPoly &g, OdotConvention conv = OdotConvention::sub_dg_f);
NCPoly exp_odot(const NCPoly &f, int weight_cap, OdotConvention conv = OdotConvention::sub_dg_f);

// Twisted Magnus group law (F (.) G)(x,y) = F(x, G y G^-1) G(x,y), on
// power series with constant term 1, truncated at the weight cap.
NCPoly mt_group_mul(const NCPoly &f, const NCPoly &g, int weight_cap);
NCPoly mt_inverse(const NCPoly &f, int weight_cap);

// Double shuffle membership: degree >= 3, shuffle relations on f, stuffle
// relations on f_*. The zero polynomial is not a member (callers treat
// vanishing brackets as trivially closed).
bool is_in_ds(const NCPoly &f);

// Exact kernel of the combined shuffle + stuffle system on the
// homogeneous weight component; deterministic echelon basis over the
// word order.
std::vector<NCPoly> ds_basis(int weight);

// Closure of the double shuffle space under the Poisson bracket, run both
// through the polynomial route (is_in_ds) and the mould route
// (classification of ari(ma f, ma g)), cross-checked.
VerificationReport check_racinet_closure(int w1, int w2);

} // namespace mouldcalc
