#include "lfd_ratio.hpp"

#include <algorithm>
#include <sstream>

namespace mouldcalc {

static std::vector<LFDRatio::Factor> merge_factors(std::vector<LFDRatio::Factor> den)
{
    std::sort(den.begin(), den.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    std::vector<LFDRatio::Factor> out;
    for (auto &f : den) {
        if (f.second == 0)
            continue;
        if (!out.empty() && out.back().first == f.first)
            out.back().second += f.second;
        else
            out.push_back(std::move(f));
    }
    return out;
}

LFDRatio LFDRatio::make(Poly num, std::vector<Factor> den)
{
    for (const auto &[form, mult] : den)
        if (form.alphabet() != num.alphabet())
            throw DomainError("alphabet mismatch between numerator and denominator");
    if (num.is_zero())
        return LFDRatio(std::move(num), {});
    // Denominator factors are kept primitive; their scalar content moves
    // into the numerator.
    Rational scale(1);
    for (auto &[form, mult] : den) {
        if (!form.is_primitive()) {
            auto [prim, s] = form.primitive_part();
            for (unsigned k = 0; k < mult; ++k)
                scale /= Rational(s);
            form = prim;
        }
    }
    if (!is_one(scale))
        num = num.scaled(scale);
    auto factors = merge_factors(std::move(den));
    // Cancel: keep dividing the numerator by denominator forms until no
    // form divides exactly.
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto &f : factors) {
            while (f.second > 0) {
                auto q = num.div_exact_linear(f.first);
                if (!q)
                    break;
                num = std::move(*q);
                --f.second;
                progress = true;
            }
        }
        std::erase_if(factors, [](const Factor &f) { return f.second == 0; });
    }
    return LFDRatio(std::move(num), std::move(factors));
}

Rational LFDRatio::constant_value() const
{
    if (!is_constant())
        throw DomainError("value is not constant: " + to_string());
    return num_.constant_value();
}

LFDRatio LFDRatio::operator-() const { return LFDRatio(-num_, den_); }

LFDRatio LFDRatio::scaled(const Rational &c) const
{
    if (mouldcalc::is_zero(c))
        return LFDRatio::zero(alphabet());
    return LFDRatio(num_.scaled(c), den_);
}

LFDRatio operator+(const LFDRatio &a, const LFDRatio &b)
{
    if (a.alphabet() != b.alphabet())
        throw DomainError("alphabet mismatch in addition");
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    // Least common denominator over the two factor multisets.
    std::vector<LFDRatio::Factor> lcd;
    size_t i = 0, j = 0;
    while (i < a.den_.size() || j < b.den_.size()) {
        if (j == b.den_.size() || (i < a.den_.size() && a.den_[i].first < b.den_[j].first))
            lcd.push_back(a.den_[i++]);
        else if (i == a.den_.size() || b.den_[j].first < a.den_[i].first)
            lcd.push_back(b.den_[j++]);
        else {
            lcd.emplace_back(a.den_[i].first, std::max(a.den_[i].second, b.den_[j].second));
            ++i, ++j;
        }
    }
    auto cofactor = [&](const std::vector<LFDRatio::Factor> &den) {
        Poly p = Poly::constant(a.alphabet(), Rational(1));
        for (const auto &[form, mult] : lcd) {
            unsigned have = 0;
            for (const auto &[f2, m2] : den)
                if (f2 == form)
                    have = m2;
            for (unsigned k = have; k < mult; ++k)
                p = p * Poly::from_linear(form);
        }
        return p;
    };
    Poly num = a.num_ * cofactor(a.den_) + b.num_ * cofactor(b.den_);
    return LFDRatio::make(std::move(num), std::move(lcd));
}

LFDRatio operator-(const LFDRatio &a, const LFDRatio &b) { return a + (-b); }

LFDRatio operator*(const LFDRatio &a, const LFDRatio &b)
{
    if (a.alphabet() != b.alphabet())
        throw DomainError("alphabet mismatch in multiplication");
    if (a.is_zero() || b.is_zero())
        return LFDRatio::zero(a.alphabet());
    std::vector<LFDRatio::Factor> den = a.den_;
    den.insert(den.end(), b.den_.begin(), b.den_.end());
    return LFDRatio::make(a.num_ * b.num_, std::move(den));
}

LFDRatio LFDRatio::mul_form(const LinearForm &form) const
{
    if (is_zero())
        return *this;
    auto [prim, s] = form.primitive_part();
    Poly num = num_.scaled(Rational(s));
    // Cancel against the denominator first; only multiply through when the
    // form is absent there.
    std::vector<Factor> den = den_;
    for (auto &f : den) {
        if (f.first == prim) {
            f.second -= 1;
            return LFDRatio::make(std::move(num), std::move(den));
        }
    }
    return LFDRatio::make(num * Poly::from_linear(prim), std::move(den));
}

LFDRatio LFDRatio::div_form(const LinearForm &form) const
{
    if (is_zero())
        return *this;
    auto [prim, s] = form.primitive_part();
    std::vector<Factor> den = den_;
    den.emplace_back(prim, 1);
    return LFDRatio::make(num_.scaled(Rational(1) / Rational(s)), std::move(den));
}

bool operator==(const LFDRatio &a, const LFDRatio &b)
{
    return a.num_ == b.num_ && a.den_ == b.den_;
}

bool lfd_equal(const LFDRatio &a, const LFDRatio &b) { return (a - b).is_zero(); }

LFDRatio LFDRatio::substitute(const std::vector<LinearForm> &images) const
{
    if (is_zero()) {
        Alphabet target = images.empty() ? alphabet() : images.front().alphabet();
        return LFDRatio::zero(target);
    }
    Poly num = num_.substitute(images);
    std::vector<Factor> den;
    for (const auto &[form, mult] : den_)
        den.emplace_back(substitute_form(form, images), mult);
    return LFDRatio::make(std::move(num), std::move(den));
}

std::string LFDRatio::to_string() const
{
    if (den_.empty())
        return num_.to_string();
    std::ostringstream os;
    bool parens = num_.terms().size() > 1;
    os << (parens ? "(" : "") << num_.to_string() << (parens ? ")" : "") << " / (";
    bool first = true;
    for (const auto &[form, mult] : den_) {
        if (!first)
            os << "*";
        os << "(" << form.to_string() << ")";
        if (mult > 1)
            os << "^" << mult;
        first = false;
    }
    os << ")";
    return os.str();
}

} // namespace mouldcalc
