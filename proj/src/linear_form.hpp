#pragma once

#include "rational.hpp"

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace mouldcalc {

// The two variable families. Every mould, polynomial and linear form is
// tagged; u-flexions and v-flexions are distinct code paths.
enum class Alphabet : uint8_t { u, v };

inline const char *alphabet_name(Alphabet a) { return a == Alphabet::u ? "u" : "v"; }

// Nonzero integer linear form c1*x1 + ... + cr*xr over one alphabet, with
// trailing zero coefficients trimmed. These are the substitution images of
// all flexion operations and the only denominator atoms the kernel needs.
//
// A form is primitive when its first nonzero coefficient is positive and
// the coefficients are coprime; denominator factors of LFDRatio are kept
// primitive, with scalar content pushed into the numerator.
class LinearForm {
  public:
    LinearForm(Alphabet alpha, std::vector<int64_t> coeffs); // throws on the zero form

    static LinearForm variable(Alphabet alpha, int index); // x_index
    static LinearForm sum_range(Alphabet alpha, int lo, int hi, int64_t sign = 1);
    static LinearForm difference(Alphabet alpha, int i, int j); // x_i - x_j

    Alphabet alphabet() const { return alpha_; }
    const std::vector<int64_t> &coeffs() const { return c_; }
    int64_t coeff(int index) const; // coefficient of x_index, 1-based
    size_t max_var() const { return c_.size(); }

    bool is_primitive() const;
    // this == scale * primitive, scale a nonzero integer
    std::pair<LinearForm, Integer> primitive_part() const;

    LinearForm negated() const;
    friend LinearForm operator+(const LinearForm &a, const LinearForm &b);

    friend bool operator==(const LinearForm &a, const LinearForm &b) = default;
    std::strong_ordering operator<=>(const LinearForm &other) const;

    std::string to_string() const;

  private:
    Alphabet alpha_;
    std::vector<int64_t> c_;
};

// Applies x_i -> images[i-1] to a form; the result is again linear. Throws
// DomainError if the substituted form vanishes identically.
LinearForm substitute_form(const LinearForm &form, const std::vector<LinearForm> &images);

} // namespace mouldcalc
