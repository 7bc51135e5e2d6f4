#include "qlinalg.hpp"

namespace mouldcalc {

std::vector<size_t> QMatrix::rref()
{
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t sel = row;
        while (sel < rows_ && is_zero(at(sel, col)))
            ++sel;
        if (sel == rows_)
            continue;
        if (sel != row)
            for (size_t j = 0; j < cols_; ++j)
                std::swap(at(sel, j), at(row, j));
        Rational inv = at(row, col);
        for (size_t j = col; j < cols_; ++j)
            at(row, j) /= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row || is_zero(at(i, col)))
                continue;
            Rational f = at(i, col);
            for (size_t j = col; j < cols_; ++j)
                at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rational>> kernel_basis(QMatrix m)
{
    auto pivots = m.rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = 1;
        for (size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -m.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(QMatrix m, std::vector<Rational> b)
{
    if (b.size() != m.rows())
        throw DomainError("solve: dimension mismatch");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt; // row (0 ... 0 | 1)
    std::vector<Rational> x(m.cols(), Rational(0));
    for (size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = aug.at(k, m.cols());
    return x;
}

} // namespace mouldcalc
