#pragma once

#include "mould.hpp"
#include "report.hpp"

namespace mouldcalc {

// Words of linear forms: the arguments fed to mould evaluation. All flexion
// operators are expressed by building such words and evaluating.
using Word = std::vector<LinearForm>;

Word identity_word(Alphabet alpha, int r);                 // (x1, ..., xr)
Word vars_word(Alphabet alpha, const std::vector<int> &ix); // (x_{ix[0]}, ...)

// One way of cutting (x1..xr) into three consecutive blocks a|b|c, together
// with the four flexion images. Block b is x_{k+1}..x_{k+l}.
//
// u-alphabet flexions merge by adding the sum of b:
//   a]  = a with its last entry increased by sum(b)        (a if b empty)
//   [c  = c with its first entry increased by sum(b)       (c if b empty)
// v-alphabet flexions shift by subtracting a neighbour:
//   b_floor  = b minus the first entry of c                (b if c empty)
//   floor_b  = b minus the last entry of a                 (b if a empty)
struct WordSplit {
    Alphabet alpha;
    int r, k, l;

    int a_len() const { return k; }
    int b_len() const { return l; }
    int c_len() const { return r - k - l; }

    Word a() const;
    Word b() const;
    Word c() const;
    Word a_flex() const;  // a]
    Word flex_c() const;  // [c
    Word b_floor() const; // b with first-of-c subtracted
    Word floor_b() const; // b with last-of-a subtracted
};

std::vector<WordSplit> enumerate_splits(Alphabet alpha, int r);

// Unary operators and the dur/dar multipliers.
Mould neg(const Mould &a);
Mould push(const Mould &a);
Mould mantar(const Mould &a);
// Parity twist (-1)^r per depth. An automorphism of mu, lu, ari and the
// whole group tower; it does not preserve alternility (contraction sums
// mix depths).
Mould pari(const Mould &a);
Mould dur(const Mould &a); // multiply depth r by x1+...+xr (0 at depth 0)
Mould dar(const Mould &a); // multiply depth r by x1*...*xr
Mould dur_inverse(const Mould &a);
Mould dar_inverse(const Mould &a);

// The involution between the two alphabets: a u-mould is read off along
// (v_r, v_{r-1}-v_r, ..., v_1-v_2), a v-mould along partial sums.
Mould swap(const Mould &a);

// Mould multiplication over all two-block splittings, mu(A,B)(w) =
// sum_{w=ab} A(a)B(b), and its commutator bracket lu.
Mould mu(const Mould &a, const Mould &b);
Mould lu(const Mould &a, const Mould &b);

// Flexion derivations. First argument is the operator parameter:
// amit(B).A, anit(B).A, arit(B).A = amit(B).A - anit(B).A.
Mould amit(const Mould &b, const Mould &a);
Mould anit(const Mould &b, const Mould &a);
Mould arit(const Mould &b, const Mould &a);
Mould axit(const Mould &b, const Mould &c, const Mould &a); // amit(B).A + anit(C).A

// The ari bracket arit(B).A + lu(A,B) - arit(A).B.
Mould ari(const Mould &a, const Mould &b);

// Averages each depth-r component over its (r+1)-element push orbit; the
// result is push-invariant, and push-invariant input is unchanged.
Mould push_symmetrize(const Mould &a);

// Checks the general swap/ari exchange identity on arbitrary u-moulds in
// ARI, and its push-invariant corollary after symmetrizing both inputs:
//   swap(ari(swap A, swap B)) = axit(B,-push B).A - axit(A,-push A).B + lu(A,B)
//   swap(ari(swap A', swap B')) = ari(A',B')   for push-invariant A',B'
VerificationReport swap_ari_identity_check(const Mould &a, const Mould &b);

} // namespace mouldcalc
