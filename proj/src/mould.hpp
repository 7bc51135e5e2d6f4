#pragma once

#include "lfd_ratio.hpp"

#include <vector>

namespace mouldcalc {

// Depth-graded family A = (A_r), 0 <= r <= max_depth, with the depth-r
// component an LFDRatio in the variables 1..r of the tagged alphabet.
// Components beyond max_depth are absent, never implicitly zero: binary
// operators truncate to the smaller bound.
class Mould {
  public:
    Mould(Alphabet alpha, int max_depth);

    static Mould zero(Alphabet alpha, int max_depth) { return Mould(alpha, max_depth); }
    // 1 at depth 0, zero elsewhere: the mu/gari unit.
    static Mould unit(Alphabet alpha, int max_depth);
    // Constant value c_r at each depth r >= 1 (depth 0 stays 0).
    static Mould constant_mould(Alphabet alpha, const std::vector<Rational> &c, int max_depth);

    Alphabet alphabet() const { return alpha_; }
    int max_depth() const { return static_cast<int>(c_.size()) - 1; }
    const LFDRatio &at(int r) const;
    void set(int r, LFDRatio value);

    bool in_ari() const { return at(0).is_zero(); }
    bool in_gari() const;

    Mould operator-() const;
    friend Mould operator+(const Mould &a, const Mould &b);
    friend Mould operator-(const Mould &a, const Mould &b);
    Mould scaled(const Rational &c) const;
    Mould truncated(int max_depth) const; // lower the bound

  private:
    Alphabet alpha_;
    std::vector<LFDRatio> c_;
};

// A(args): the component at depth |args| with variable i sent to args[i-1].
// The target alphabet is taken from the argument forms, so this is also how
// swap changes alphabet. Throws when |args| exceeds the truncation bound.
LFDRatio evaluate(const Mould &m, const std::vector<LinearForm> &args);

// Componentwise equality through depth `depth` (default: common bound).
bool mould_equal(const Mould &a, const Mould &b, int depth = -1);

int common_depth(const Mould &a, const Mould &b);

} // namespace mouldcalc
