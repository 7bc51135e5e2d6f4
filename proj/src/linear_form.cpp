#include "linear_form.hpp"

#include <numeric>
#include <sstream>

namespace mouldcalc {

static void trim(std::vector<int64_t> &c)
{
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

LinearForm::LinearForm(Alphabet alpha, std::vector<int64_t> coeffs) : alpha_(alpha), c_(std::move(coeffs))
{
    trim(c_);
    if (c_.empty())
        throw DomainError("linear form is identically zero");
}

LinearForm LinearForm::variable(Alphabet alpha, int index)
{
    if (index < 1)
        throw DomainError("variable index must be >= 1");
    std::vector<int64_t> c(static_cast<size_t>(index), 0);
    c.back() = 1;
    return LinearForm(alpha, std::move(c));
}

LinearForm LinearForm::sum_range(Alphabet alpha, int lo, int hi, int64_t sign)
{
    if (lo < 1 || hi < lo)
        throw DomainError("bad variable range");
    std::vector<int64_t> c(static_cast<size_t>(hi), 0);
    for (int i = lo; i <= hi; ++i)
        c[static_cast<size_t>(i) - 1] = sign;
    return LinearForm(alpha, std::move(c));
}

LinearForm LinearForm::difference(Alphabet alpha, int i, int j)
{
    if (i == j)
        throw DomainError("x_i - x_i is the zero form");
    std::vector<int64_t> c(static_cast<size_t>(std::max(i, j)), 0);
    c[static_cast<size_t>(i) - 1] += 1;
    c[static_cast<size_t>(j) - 1] -= 1;
    return LinearForm(alpha, std::move(c));
}

int64_t LinearForm::coeff(int index) const
{
    if (index < 1 || static_cast<size_t>(index) > c_.size())
        return 0;
    return c_[static_cast<size_t>(index) - 1];
}

bool LinearForm::is_primitive() const
{
    int64_t g = 0;
    for (int64_t c : c_)
        g = std::gcd(g, c);
    int64_t first = 0;
    for (int64_t c : c_)
        if (c != 0) {
            first = c;
            break;
        }
    return g == 1 && first > 0;
}

std::pair<LinearForm, Integer> LinearForm::primitive_part() const
{
    int64_t g = 0;
    for (int64_t c : c_)
        g = std::gcd(g, c);
    int64_t first = 0;
    for (int64_t c : c_)
        if (c != 0) {
            first = c;
            break;
        }
    int64_t scale = first > 0 ? g : -g;
    std::vector<int64_t> out = c_;
    for (int64_t &c : out)
        c /= scale;
    return {LinearForm(alpha_, std::move(out)), Integer(static_cast<long>(scale))};
}

LinearForm LinearForm::negated() const
{
    std::vector<int64_t> out = c_;
    for (int64_t &c : out)
        c = -c;
    return LinearForm(alpha_, std::move(out));
}

LinearForm operator+(const LinearForm &a, const LinearForm &b)
{
    if (a.alpha_ != b.alpha_)
        throw DomainError("alphabet mismatch in linear form addition");
    std::vector<int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i)
        c[i] += b.c_[i];
    return LinearForm(a.alpha_, std::move(c));
}

std::strong_ordering LinearForm::operator<=>(const LinearForm &other) const
{
    if (alpha_ != other.alpha_)
        return static_cast<int>(alpha_) <=> static_cast<int>(other.alpha_);
    if (c_.size() != other.c_.size())
        return c_.size() <=> other.c_.size();
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != other.c_[i])
            return c_[i] <=> other.c_[i];
    return std::strong_ordering::equal;
}

std::string LinearForm::to_string() const
{
    std::ostringstream os;
    bool firstterm = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        int64_t c = c_[i];
        if (c == 0)
            continue;
        if (c > 0 && !firstterm)
            os << "+";
        if (c == -1)
            os << "-";
        else if (c != 1)
            os << c << "*";
        os << alphabet_name(alpha_) << (i + 1);
        firstterm = false;
    }
    return os.str();
}

LinearForm substitute_form(const LinearForm &form, const std::vector<LinearForm> &images)
{
    Alphabet target = images.empty() ? form.alphabet() : images.front().alphabet();
    std::vector<int64_t> acc;
    const auto &c = form.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0)
            continue;
        if (i >= images.size())
            throw DomainError("missing image for variable " + std::string(alphabet_name(form.alphabet())) +
                              std::to_string(i + 1) + " in linear substitution");
        const auto &img = images[i].coeffs();
        if (images[i].alphabet() != target)
            throw DomainError("mixed alphabets in linear substitution");
        if (acc.size() < img.size())
            acc.resize(img.size(), 0);
        for (size_t j = 0; j < img.size(); ++j)
            acc[j] += c[i] * img[j];
    }
    trim(acc);
    if (acc.empty())
        throw DomainError("linear substitution annihilates the form " + form.to_string());
    return LinearForm(target, std::move(acc));
}

} // namespace mouldcalc
