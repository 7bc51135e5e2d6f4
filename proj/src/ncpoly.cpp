#include "ncpoly.hpp"

#include "words.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mouldcalc {

int XYWord::ycount() const
{
    int n = 0;
    for (int i = 0; i < len; ++i)
        n += letter(i);
    return n;
}

bool XYWord::operator<(const XYWord &w) const
{
    if (len != w.len)
        return len < w.len;
    for (int i = 0; i < len; ++i)
        if (letter(i) != w.letter(i))
            return letter(i) < w.letter(i);
    return false;
}

XYWord XYWord::parse(const std::string &s)
{
    XYWord w;
    for (char c : s) {
        if (c == 'x')
            w = w.appended(0);
        else if (c == 'y')
            w = w.appended(1);
        else
            throw ParseError("bad letter '" + std::string(1, c) + "' in word '" + s + "'");
    }
    return w;
}

std::string XYWord::to_string() const
{
    if (len == 0)
        return "1";
    std::string s;
    for (int i = 0; i < len; ++i)
        s += letter(i) ? 'y' : 'x';
    return s;
}

NCPoly NCPoly::constant(const Rational &c)
{
    NCPoly p;
    p.add_term(XYWord{}, c);
    return p;
}

NCPoly NCPoly::word(const XYWord &w, const Rational &c)
{
    NCPoly p;
    p.add_term(w, c);
    return p;
}

Rational NCPoly::coeff(const XYWord &w) const
{
    auto it = t_.find(w);
    return it == t_.end() ? Rational(0) : it->second;
}

void NCPoly::add_term(const XYWord &w, const Rational &c)
{
    if (mouldcalc::is_zero(c))
        return;
    auto [it, inserted] = t_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (mouldcalc::is_zero(it->second))
            t_.erase(it);
    }
}

int NCPoly::min_weight() const { return t_.empty() ? 0 : t_.begin()->first.len; }
int NCPoly::max_weight() const { return t_.empty() ? 0 : t_.rbegin()->first.len; }

bool NCPoly::is_homogeneous() const { return min_weight() == max_weight(); }

NCPoly NCPoly::homogeneous_part(int weight) const
{
    NCPoly p;
    for (const auto &[w, c] : t_)
        if (w.len == weight)
            p.add_term(w, c);
    return p;
}

NCPoly NCPoly::truncated(int max_weight) const
{
    NCPoly p;
    for (const auto &[w, c] : t_)
        if (w.len <= max_weight)
            p.add_term(w, c);
    return p;
}

NCPoly NCPoly::operator-() const
{
    NCPoly p;
    for (const auto &[w, c] : t_)
        p.t_.emplace(w, -c);
    return p;
}

NCPoly operator+(const NCPoly &a, const NCPoly &b)
{
    NCPoly p = a;
    for (const auto &[w, c] : b.t_)
        p.add_term(w, c);
    return p;
}

NCPoly operator-(const NCPoly &a, const NCPoly &b)
{
    NCPoly p = a;
    for (const auto &[w, c] : b.t_)
        p.add_term(w, -c);
    return p;
}

NCPoly operator*(const NCPoly &a, const NCPoly &b)
{
    NCPoly p;
    for (const auto &[wa, ca] : a.t_)
        for (const auto &[wb, cb] : b.t_)
            p.add_term(wa.concat(wb), ca * cb);
    return p;
}

bool operator==(const NCPoly &a, const NCPoly &b) { return a.t_ == b.t_; }

NCPoly NCPoly::scaled(const Rational &c) const
{
    NCPoly p;
    if (mouldcalc::is_zero(c))
        return p;
    for (const auto &[w, v] : t_)
        p.t_.emplace(w, v * c);
    return p;
}

std::string NCPoly::to_string() const
{
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[w, c] : t_) {
        Rational a = c;
        if (!first)
            os << (sgn(a) >= 0 ? " + " : " - ");
        else if (sgn(a) < 0)
            os << "-";
        if (sgn(a) < 0)
            a = -a;
        if (!is_one(a) || w.len == 0)
            os << mouldcalc::to_string(a) << (w.len > 0 ? "*" : "");
        os << (w.len > 0 ? w.to_string() : "");
        first = false;
    }
    return os.str();
}

NCPoly lie_bracket(const NCPoly &f, const NCPoly &g) { return f * g - g * f; }

NCPoly apply_derivation(const NCPoly &f, const NCPoly &target)
{
    NCPoly dy = lie_bracket(NCPoly::y(), f); // D_f(y) = [y,f]
    NCPoly out;
    for (const auto &[w, c] : target.terms()) {
        for (int i = 0; i < w.len; ++i) {
            if (w.letter(i) != 1)
                continue; // D_f(x) = 0
            NCPoly pre = NCPoly::word(w.prefix(i), c);
            NCPoly post = NCPoly::word(w.suffix_from(i + 1));
            out = out + pre * dy * post;
        }
    }
    return out;
}

NCPoly poisson(const NCPoly &f, const NCPoly &g)
{
    return lie_bracket(f, g) + apply_derivation(f, g) - apply_derivation(g, f);
}

std::string RelationCheck::summary() const
{
    if (pass())
        return "no defects";
    std::ostringstream os;
    os << defects.size() << " defect(s); first at " << defects[0].where << " with value "
       << mouldcalc::to_string(defects[0].value);
    return os.str();
}

static std::vector<XYWord> all_words(int len)
{
    std::vector<XYWord> out;
    for (unsigned bits = 0; bits < (1u << len); ++bits)
        out.push_back({len, bits});
    std::sort(out.begin(), out.end());
    return out;
}

RelationCheck shuffle_relations_check(const NCPoly &f)
{
    RelationCheck check;
    if (f.is_zero())
        return check;
    for (int n = f.min_weight(); n <= f.max_weight(); ++n) {
        NCPoly part = f.homogeneous_part(n);
        if (part.is_zero())
            continue;
        for (int k = 1; 2 * k <= n; ++k) {
            for (const auto &u : all_words(k)) {
                for (const auto &v : all_words(n - k)) {
                    if (n - k == k && v < u)
                        continue;
                    // interleave by choosing the positions of u
                    Rational sum(0);
                    IndexWord uplaces, vplaces;
                    for (int i = 0; i < k; ++i)
                        uplaces.push_back(i);
                    for (int i = 0; i < n - k; ++i)
                        vplaces.push_back(100 + i);
                    for (const auto &mix : shuffle_set(uplaces, vplaces)) {
                        XYWord w;
                        for (int tag : mix)
                            w = w.appended(tag >= 100 ? v.letter(tag - 100) : u.letter(tag));
                        sum += part.coeff(w);
                    }
                    if (!mouldcalc::is_zero(sum))
                        check.defects.push_back(
                            {"sh(" + u.to_string() + "," + v.to_string() + ")", sum});
                }
            }
        }
    }
    return check;
}

bool is_lie(const NCPoly &f)
{
    if (!mouldcalc::is_zero(f.coeff(XYWord{})))
        return false; // constants are not Lie elements
    return shuffle_relations_check(f).pass();
}

Rational YPoly::coeff(const YWord &w) const
{
    auto it = t_.find(w);
    return it == t_.end() ? Rational(0) : it->second;
}

void YPoly::add_term(const YWord &w, const Rational &c)
{
    if (mouldcalc::is_zero(c))
        return;
    auto [it, inserted] = t_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (mouldcalc::is_zero(it->second))
            t_.erase(it);
    }
}

YPoly operator+(const YPoly &a, const YPoly &b)
{
    YPoly p = a;
    for (const auto &[w, c] : b.t_)
        p.add_term(w, c);
    return p;
}

bool operator==(const YPoly &a, const YPoly &b) { return a.t_ == b.t_; }

YPoly YPoly::scaled(const Rational &c) const
{
    YPoly p;
    if (mouldcalc::is_zero(c))
        return p;
    for (const auto &[w, v] : t_)
        p.t_.emplace(w, v * c);
    return p;
}

std::string YPoly::to_string() const
{
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[w, c] : t_) {
        if (!first)
            os << " + ";
        os << mouldcalc::to_string(c) << "*";
        for (size_t i = 0; i < w.size(); ++i)
            os << (i ? " " : "") << "y" << w[i];
        first = false;
    }
    return os.str();
}

// weight of a y-word: sum of subscripts
static int yweight(const YWord &w)
{
    int n = 0;
    for (unsigned a : w)
        n += static_cast<int>(a);
    return n;
}

YPoly fstar(const NCPoly &f)
{
    YPoly out;
    for (const auto &[w, c] : f.terms()) {
        if (w.len == 0 || w.letter(w.len - 1) != 1)
            continue; // keep words ending in y
        YWord yw;
        unsigned run = 1;
        for (int i = 0; i < w.len; ++i) {
            if (w.letter(i) == 0) {
                ++run;
            } else {
                yw.push_back(run);
                run = 1;
            }
        }
        out.add_term(yw, c);
    }
    // corrective series on powers of y_1
    for (int n = 1; n <= f.max_weight(); ++n) {
        XYWord xny;
        for (int i = 0; i < n - 1; ++i)
            xny = xny.appended(0);
        xny = xny.appended(1);
        Rational c = f.coeff(xny);
        if (mouldcalc::is_zero(c))
            continue;
        Rational sign(n % 2 == 1 ? 1 : -1, static_cast<unsigned long>(n));
        out.add_term(YWord(static_cast<size_t>(n), 1u), c * sign);
    }
    return out;
}

static void compositions_of(int n, std::vector<YWord> &out)
{
    // all compositions of n, n >= 1
    out.clear();
    YWord cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int a = 1; a <= rest; ++a) {
            cur.push_back(static_cast<unsigned>(a));
            rec(rest - a);
            cur.pop_back();
        }
    };
    rec(n);
}

RelationCheck stuffle_relations_check(const YPoly &fs)
{
    RelationCheck check;
    if (fs.is_zero())
        return check;
    int maxw = 0;
    for (const auto &[w, c] : fs.terms())
        maxw = std::max(maxw, yweight(w));
    for (int n = 2; n <= maxw; ++n) {
        for (int wa = 1; 2 * wa <= n; ++wa) {
            std::vector<YWord> lefts, rights;
            compositions_of(wa, lefts);
            compositions_of(n - wa, rights);
            for (const auto &A : lefts) {
                for (const auto &B : rights) {
                    if (wa == n - wa && B < A)
                        continue;
                    YWord all = A;
                    all.insert(all.end(), B.begin(), B.end());
                    IndexWord p1, p2;
                    for (size_t i = 0; i < A.size(); ++i)
                        p1.push_back(static_cast<int>(i) + 1);
                    for (size_t i = 0; i < B.size(); ++i)
                        p2.push_back(static_cast<int>(A.size() + i) + 1);
                    Rational sum(0);
                    for (const auto &sw : stuffle_set(p1, p2)) {
                        YWord w;
                        for (const auto &slot : sw.slots) {
                            unsigned sub = all[static_cast<size_t>(slot.first) - 1];
                            if (slot.contracted())
                                sub += all[static_cast<size_t>(slot.second) - 1];
                            w.push_back(sub);
                        }
                        sum += fs.coeff(w);
                    }
                    if (!mouldcalc::is_zero(sum)) {
                        std::ostringstream os;
                        os << "st((";
                        for (size_t i = 0; i < A.size(); ++i)
                            os << (i ? "," : "") << "y" << A[i];
                        os << "),(";
                        for (size_t i = 0; i < B.size(); ++i)
                            os << (i ? "," : "") << "y" << B[i];
                        os << "))";
                        check.defects.push_back({os.str(), sum});
                    }
                }
            }
        }
    }
    return check;
}

} // namespace mouldcalc
