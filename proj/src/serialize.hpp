#pragma once

#include "mould.hpp"
#include "ncpoly.hpp"

#include <string>

namespace mouldcalc {

// Line-oriented exact text formats; integers only, deterministic term
// order, bit-exact roundtrips. Parsers reject malformed or non-canonical
// records with line-precise diagnostics.
//
//   mouldfile 1
//   alphabet u
//   maxdepth 2
//   component 0
//   zero
//   component 1
//   num 1/2 0
//   den 1 ^ 1
//   component 2
//   ...
//   end
//
// A numerator line carries the coefficient and one exponent per variable
// of the component's depth; a denominator line carries the integer
// coefficients of one primitive linear form, '^' and its multiplicity.
std::string mould_to_text(const Mould &m);
Mould mould_from_text(const std::string &text);

//   ncpolyfile 1
//   term -2 xyx
//   term 1/3 1        (the empty word is written as 1)
//   end
std::string ncpoly_to_text(const NCPoly &f);
NCPoly ncpoly_from_text(const std::string &text);

//   ypolyfile 1
//   term 1 y2 y1
//   end
std::string ypoly_to_text(const YPoly &f);
YPoly ypoly_from_text(const std::string &text);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

} // namespace mouldcalc
