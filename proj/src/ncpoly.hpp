#pragma once

#include "rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace mouldcalc {

// Word over the noncommutative letters x, y; bit i (from the left) set
// means letter i is y. Ordered by length, then left-to-right with x < y.
struct XYWord {
    int len = 0;
    unsigned bits = 0;

    int letter(int i) const { return (bits >> i) & 1u; } // 0 = x, 1 = y
    XYWord appended(int l) const { return {len + 1, bits | (static_cast<unsigned>(l & 1) << len)}; }
    XYWord concat(const XYWord &w) const { return {len + w.len, bits | (w.bits << len)}; }
    XYWord prefix(int n) const { return {n, bits & ((1u << n) - 1u)}; }
    XYWord suffix_from(int i) const { return {len - i, bits >> i}; }
    int ycount() const;
    bool operator==(const XYWord &w) const = default;
    bool operator<(const XYWord &w) const;

    static XYWord parse(const std::string &s); // e.g. "xxy"
    std::string to_string() const;
};

// Polynomial in Q<x,y>, graded by word length (weight). No zero
// coefficients stored.
class NCPoly {
  public:
    static NCPoly zero() { return NCPoly(); }
    static NCPoly constant(const Rational &c);
    static NCPoly word(const XYWord &w, const Rational &c = Rational(1));
    static NCPoly x() { return word(XYWord{}.appended(0)); }
    static NCPoly y() { return word(XYWord{}.appended(1)); }

    const std::map<XYWord, Rational> &terms() const { return t_; }
    Rational coeff(const XYWord &w) const;
    void add_term(const XYWord &w, const Rational &c);
    bool is_zero() const { return t_.empty(); }
    int min_weight() const; // 0 for the zero polynomial
    int max_weight() const;
    bool is_homogeneous() const;
    NCPoly homogeneous_part(int weight) const;
    NCPoly truncated(int max_weight) const;

    NCPoly operator-() const;
    friend NCPoly operator+(const NCPoly &a, const NCPoly &b);
    friend NCPoly operator-(const NCPoly &a, const NCPoly &b);
    friend NCPoly operator*(const NCPoly &a, const NCPoly &b);
    friend bool operator==(const NCPoly &a, const NCPoly &b);
    NCPoly scaled(const Rational &c) const;

    std::string to_string() const;

  private:
    std::map<XYWord, Rational> t_;
};

NCPoly lie_bracket(const NCPoly &f, const NCPoly &g);

// The derivation with D_f(x) = 0, D_f(y) = [y,f], extended by Leibniz.
NCPoly apply_derivation(const NCPoly &f, const NCPoly &target);

// Poisson (Ihara) bracket {f,g} = [f,g] + D_f(g) - D_g(f).
NCPoly poisson(const NCPoly &f, const NCPoly &g);

// A failing linear relation on coefficients.
struct ScalarDefect {
    std::string where;
    Rational value;
};

struct RelationCheck {
    std::vector<ScalarDefect> defects;
    bool pass() const { return defects.empty(); }
    std::string summary() const;
};

// Shuffle relations on the coefficients of f: the sum of (f|w) over each
// shuffle sh(u,v) of nonempty words vanishes. Holding them all is
// equivalent to membership in the free Lie algebra.
RelationCheck shuffle_relations_check(const NCPoly &f);
bool is_lie(const NCPoly &f);

// Words over y_1, y_2, ...; entry a >= 1 stands for y_a = x^{a-1} y.
using YWord = std::vector<unsigned>;

class YPoly {
  public:
    static YPoly zero() { return YPoly(); }
    const std::map<YWord, Rational> &terms() const { return t_; }
    Rational coeff(const YWord &w) const;
    void add_term(const YWord &w, const Rational &c);
    bool is_zero() const { return t_.empty(); }

    friend YPoly operator+(const YPoly &a, const YPoly &b);
    friend bool operator==(const YPoly &a, const YPoly &b);
    YPoly scaled(const Rational &c) const;

    std::string to_string() const;

  private:
    std::map<YWord, Rational> t_;
};

// f_* : the projection of f onto words ending in y, rewritten in the y_i,
// plus the corrective sum of ((-1)^(n-1)/n)(f|x^(n-1)y) y_1^n.
YPoly fstar(const NCPoly &f);

// Stuffle relations on the coefficients of a y-alphabet polynomial.
RelationCheck stuffle_relations_check(const YPoly &fs);

} // namespace mouldcalc
