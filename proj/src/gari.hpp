#pragma once

#include "flexion.hpp"

namespace mouldcalc {

// The pre-Lie law preari(A,B) = arit(B).A + mu(A,B); its antisymmetrization
// is the ari bracket.
Mould preari(const Mould &a, const Mould &b);

// expari(A) = sum_n preari(A,...,A)/n! with left-nested pre-Lie powers,
// mapping ARI onto the group GARI of moulds with constant term 1. The
// series terminates at the truncation bound because every factor from ARI
// raises depth. logari inverts it by depth recursion.
Mould expari(const Mould &a);
Mould logari(const Mould &a);

// Campbell-Hausdorff series in the ari bracket, exact at the truncation
// depth (a bracket of n letters has depth >= n).
Mould ch_ari(const Mould &a, const Mould &b);

// Group law gari(A,B) = expari(ch_ari(logari A, logari B)), its inverse,
// and the adjoint action of GARI on ARI.
Mould gari(const Mould &a, const Mould &b);
Mould invgari(const Mould &a);

// adari is computed in BOTH printed forms. The series form
//   B + ari(L,B) + ari(L,ari(L,B))/2! + ...,  L = logari(A),
// is what every other operation consumes; the conjugation form
//   gari(preari(A,B), invgari(A))
// (gari extended linearly in its first slot to tangent vectors) is kept
// as a consistency diagnostic. Disagreement is reported, never resolved
// silently.
//
// The adjoint that transports al*al onto al*il and enters the pal/pil
// exchange identity is adari(pari(pal)): the recursion normalizes pal
// with B1 = +1/2, while the transport needs its parity twist (the B1 =
// -1/2 bisymmetral). The special-mould checkers compose accordingly.
struct AdariForms {
    Mould series;
    Mould conjugation;
    bool agree = false;
};
AdariForms adari_forms(const Mould &a, const Mould &b);
Mould adari(const Mould &a, const Mould &b); // the series form

// ganit(B).A over the flexion decompositions w = b1 c1 ... bs cs (all
// blocks nonempty except possibly the last c): A picks up the b-blocks,
// each c-block contributes a factor B(c - last letter of its b-block).
// This explicit form is the authoritative ganit.
Mould ganit(const Mould &b, const Mould &a);

// The "exponential of the derivation anit(logari B)" reading; kept solely
// for the consistency report against the explicit form.
Mould ganit_expder(const Mould &b, const Mould &a);

} // namespace mouldcalc
