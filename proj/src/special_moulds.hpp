#pragma once

#include "gari.hpp"
#include "report.hpp"
#include "symmetries.hpp"

namespace mouldcalc {

// Bernoulli numbers in the B1 = +1/2 convention. The sign is forced by
// the pal recursion at depth 1: u1 * pal(u1) = dupal(u1) with
// pal(u1) = 1/(2u1), so dupal(u1) = B1 must be +1/2. All other values
// agree with the standard recurrence (odd indices >= 3 vanish).
Rational bernoulli(int n);

// dupal(u1..ur) = (B_r/r!) (1/(u1...ur)) sum_i (-1)^i binom(r-1,i) u_{i+1}
Mould dupal(int depth);

// pal is determined by pal(empty) = 1 and dur.pal = mu(pal, dupal): each
// component is the depth-r part of mu(pal, dupal) divided exactly by
// u1+...+ur. Components are memoized; recomputation reproduces them.
class PalCache {
  public:
    explicit PalCache(int depth);
    void extend(int depth);
    int depth() const { return mould_.max_depth(); }
    Mould mould(int depth) const;

  private:
    Mould mould_;
    Mould dupal_;
};

Mould pal(int depth);
Mould pil(int depth); // swap(pal)

// Symmetrality of pal and pil through the requested depth.
VerificationReport check_theorem_6_1(int depth);

// The pal/pil exchange identity for push-invariant A, with the transport
// normalization pari(pal) (see gari.hpp):
//   swap(adari(pari.pal).A) = ganit(pic).(adari(pari.pil).swap(A)).
// Callers symmetrize first when needed.
VerificationReport check_fundamental_identity(const Mould &a);

// Constant-valued moulds are fixed by ganit(pic) . adari(pari.pil).
VerificationReport check_lemma_7_1(int depth);

// The adari(pal) map between the dimorphic subspaces, forwards and back.
enum class PalMapDirection { forward, inverse };
Mould adari_pal_map(const Mould &a, PalMapDirection direction);

// dar.dupal against the dictionary image of the generating series
// x - (t/(exp(t)-1))(x) at t = ad(-y), expanded with this library's
// Bernoulli convention.
VerificationReport check_dar_dupal_series(int depth);

} // namespace mouldcalc
