#pragma once

#include "rational.hpp"

#include <map>
#include <vector>

namespace mouldcalc {

// Word over a two-letter alphabet {0,1}, at most 31 letters.
struct BWord {
    int len = 0;
    unsigned bits = 0;
    int letter(int i) const { return (bits >> i) & 1u; }
    BWord appended(int l) const { return {len + 1, bits | (static_cast<unsigned>(l & 1) << len)}; }
    friend auto operator<=>(const BWord &a, const BWord &b) = default;
};

// Truncated series in the free associative algebra Q<X,Y>.
class FreeSeries {
  public:
    explicit FreeSeries(int max_degree) : maxdeg_(max_degree) {}
    static FreeSeries generator(int letter, int max_degree);

    int max_degree() const { return maxdeg_; }
    const std::map<BWord, Rational> &terms() const { return t_; }
    Rational coeff(const BWord &w) const;
    void add_term(const BWord &w, const Rational &c);

    friend FreeSeries operator+(const FreeSeries &a, const FreeSeries &b);
    friend FreeSeries operator*(const FreeSeries &a, const FreeSeries &b);
    FreeSeries scaled(const Rational &c) const;

    FreeSeries exp() const; // requires zero constant term
    FreeSeries log() const; // requires constant term 1

  private:
    int maxdeg_;
    std::map<BWord, Rational> t_;
};

// Word coefficients of log(exp(X) exp(Y)) up to the given degree. Each
// homogeneous piece is a Lie element, so feeding the words through the
// Dynkin left-bracketing map (divided by the degree) reproduces the
// Campbell-Hausdorff series in any Lie algebra.
std::map<BWord, Rational> bch_word_coefficients(int max_degree);

} // namespace mouldcalc
