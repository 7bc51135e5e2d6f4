#pragma once

#include "linear_form.hpp"
#include "rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace mouldcalc {

// Exponent vector over the variables 1..r, trailing zeros trimmed.
using Monomial = std::vector<unsigned>;

// Graded lexicographic: total degree first, then lex with x1 most
// significant. Term iteration order is the serialization order.
struct MonomialLess {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

unsigned monomial_degree(const Monomial &m);

// Sparse polynomial with exact rational coefficients, tagged by alphabet.
// No zero coefficients are stored.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    explicit Poly(Alphabet alpha) : alpha_(alpha) {}
    static Poly zero(Alphabet alpha) { return Poly(alpha); }
    static Poly constant(Alphabet alpha, const Rational &c);
    static Poly variable(Alphabet alpha, int index);
    static Poly from_linear(const LinearForm &form);

    Alphabet alphabet() const { return alpha_; }
    const TermMap &terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // throws unless constant
    Rational coeff(const Monomial &m) const;
    unsigned total_degree() const; // 0 for the zero polynomial
    size_t max_var() const;

    void add_term(const Monomial &m, const Rational &c);

    Poly operator-() const;
    friend Poly operator+(const Poly &a, const Poly &b);
    friend Poly operator-(const Poly &a, const Poly &b);
    friend Poly operator*(const Poly &a, const Poly &b);
    friend bool operator==(const Poly &a, const Poly &b);
    Poly scaled(const Rational &c) const;
    Poly pow(unsigned e) const;

    // Ring morphism x_i -> images[i-1]; every variable actually appearing
    // must have an image. All images share the target alphabet.
    Poly substitute(const std::vector<LinearForm> &images) const;

    // Exact division by a linear form. Non-divisibility is a normal
    // outcome, reported as nullopt.
    std::optional<Poly> div_exact_linear(const LinearForm &form) const;

    std::string to_string() const;

  private:
    Alphabet alpha_;
    TermMap t_;
};

} // namespace mouldcalc
