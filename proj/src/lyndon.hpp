#pragma once

#include "ncpoly.hpp"

namespace mouldcalc {

// Lyndon words over {x,y} of the given exact length, lexicographic order
// (Duval's generation).
std::vector<XYWord> lyndon_words(int length);

// Standard bracketing of a Lyndon word: single letters map to themselves,
// otherwise bracket the standard factorization w = uv with v the longest
// proper Lyndon suffix.
NCPoly lyndon_bracketing(const XYWord &w);

// Expansions of the bracketed Lyndon words of one weight; a basis of the
// homogeneous piece of the free Lie algebra.
std::vector<NCPoly> lyndon_basis(int weight);

// Independent Lie-membership oracle: exact solve of f against the Lyndon
// basis of each homogeneous piece. The production path goes through the
// shuffle relations instead; the two must agree.
bool is_lie_lyndon(const NCPoly &f);

} // namespace mouldcalc
