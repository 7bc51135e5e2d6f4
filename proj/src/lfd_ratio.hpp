#pragma once

#include "poly.hpp"

#include <vector>

namespace mouldcalc {

// Rational function whose denominator is a multiset of primitive linear
// forms: numerator / prod_j form_j^mult_j. This class is closed under all
// flexion operations, so trial division gives a true canonical form and
// exact equality without multivariate gcd.
//
// Canonical form: no denominator form divides the numerator exactly, the
// factor list is sorted with multiplicities merged, all scalar content
// lives in the numerator, and zero has an empty denominator.
class LFDRatio {
  public:
    using Factor = std::pair<LinearForm, unsigned>;

    static LFDRatio zero(Alphabet alpha) { return LFDRatio(Poly::zero(alpha), {}); }
    static LFDRatio constant(Alphabet alpha, const Rational &c)
    {
        return LFDRatio(Poly::constant(alpha, c), {});
    }
    static LFDRatio from_poly(Poly p) { return LFDRatio(std::move(p), {}); }
    // Canonicalizes: merges duplicate factors and cancels against the
    // numerator. Idempotent on canonical input.
    static LFDRatio make(Poly num, std::vector<Factor> den);

    Alphabet alphabet() const { return num_.alphabet(); }
    const Poly &num() const { return num_; }
    const std::vector<Factor> &den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    bool is_constant() const { return den_.empty() && num_.is_constant(); }
    Rational constant_value() const; // throws unless constant

    LFDRatio operator-() const;
    friend LFDRatio operator+(const LFDRatio &a, const LFDRatio &b);
    friend LFDRatio operator-(const LFDRatio &a, const LFDRatio &b);
    friend LFDRatio operator*(const LFDRatio &a, const LFDRatio &b);
    LFDRatio scaled(const Rational &c) const;
    LFDRatio mul_form(const LinearForm &form) const; // multiply by the form
    LFDRatio div_form(const LinearForm &form) const; // divide by the form

    // Structural equality of canonical representatives (== a-b canonicalizes
    // to zero; both routes agree, see kernel tests).
    friend bool operator==(const LFDRatio &a, const LFDRatio &b);

    // x_i -> images[i-1], exact. Denominator forms stay linear; any scalar
    // content they shed is folded into the numerator.
    LFDRatio substitute(const std::vector<LinearForm> &images) const;

    std::string to_string() const;

  private:
    LFDRatio(Poly num, std::vector<Factor> den) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_;
    std::vector<Factor> den_;
};

bool lfd_equal(const LFDRatio &a, const LFDRatio &b);

} // namespace mouldcalc
