#pragma once

#include "rational.hpp"

#include <optional>
#include <vector>

namespace mouldcalc {

// Dense exact matrix over Q, just big enough for the desk-scale linear
// systems in the dictionary (word spaces up to weight 9).
class QMatrix {
  public:
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational &at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational &at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    // Reduced row echelon form, in place. Pivot choice is deterministic
    // (first nonzero entry scanning rows top-down). Returns pivot columns.
    std::vector<size_t> rref();

  private:
    size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Deterministic echelon basis of the right kernel {x : M x = 0}: one basis
// vector per free column, with entry 1 in that column.
std::vector<std::vector<Rational>> kernel_basis(QMatrix m);

// Least-effort exact solve of M x = b; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(QMatrix m, std::vector<Rational> b);

} // namespace mouldcalc
