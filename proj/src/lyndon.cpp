#include "lyndon.hpp"

#include "qlinalg.hpp"

#include <algorithm>

namespace mouldcalc {

std::vector<XYWord> lyndon_words(int length)
{
    // Duval's algorithm over the alphabet {0,1}
    std::vector<XYWord> out;
    std::vector<int> w = {0};
    while (!w.empty()) {
        if (static_cast<int>(w.size()) == length) {
            XYWord word;
            for (int l : w)
                word = word.appended(l);
            out.push_back(word);
        }
        int n = static_cast<int>(w.size());
        while (static_cast<int>(w.size()) < length)
            w.push_back(w[w.size() % static_cast<size_t>(n)]);
        while (!w.empty() && w.back() == 1)
            w.pop_back();
        if (!w.empty())
            w.back() += 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

static bool is_lyndon(const XYWord &w)
{
    if (w.len == 0)
        return false;
    for (int i = 1; i < w.len; ++i) {
        XYWord rot = w.suffix_from(i).concat(w.prefix(i));
        if (!(w < rot))
            return false;
    }
    return true;
}

NCPoly lyndon_bracketing(const XYWord &w)
{
    if (w.len == 0)
        throw DomainError("empty word has no bracketing");
    if (w.len == 1)
        return NCPoly::word(w);
    // standard factorization: v is the longest proper Lyndon suffix
    for (int i = 1; i < w.len; ++i) {
        XYWord v = w.suffix_from(i);
        if (is_lyndon(v))
            return lie_bracket(lyndon_bracketing(w.prefix(i)), lyndon_bracketing(v));
    }
    throw DomainError("not a Lyndon word: " + w.to_string());
}

std::vector<NCPoly> lyndon_basis(int weight)
{
    std::vector<NCPoly> basis;
    for (const auto &w : lyndon_words(weight))
        basis.push_back(lyndon_bracketing(w));
    return basis;
}

bool is_lie_lyndon(const NCPoly &f)
{
    if (f.is_zero())
        return true;
    if (!is_zero(f.coeff(XYWord{})))
        return false;
    for (int n = f.min_weight(); n <= f.max_weight(); ++n) {
        NCPoly part = f.homogeneous_part(n);
        if (part.is_zero())
            continue;
        auto basis = lyndon_basis(n);
        // columns: basis elements; rows: all words of weight n
        std::vector<XYWord> words;
        for (unsigned bits = 0; bits < (1u << n); ++bits)
            words.push_back({n, bits});
        std::sort(words.begin(), words.end());
        QMatrix m(words.size(), basis.size());
        std::vector<Rational> rhs(words.size());
        for (size_t i = 0; i < words.size(); ++i) {
            for (size_t j = 0; j < basis.size(); ++j)
                m.at(i, j) = basis[j].coeff(words[i]);
            rhs[i] = part.coeff(words[i]);
        }
        if (!solve(m, rhs).has_value())
            return false;
    }
    return true;
}

} // namespace mouldcalc
