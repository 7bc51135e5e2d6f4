#include "serialize.hpp"

#include <fstream>
#include <sstream>

namespace mouldcalc {

namespace {

struct LineReader {
    std::istringstream in;
    int lineno = 0;
    std::string current;

    explicit LineReader(const std::string &text) : in(text) {}

    bool next()
    {
        while (std::getline(in, current)) {
            ++lineno;
            if (!current.empty() && current.back() == '\r')
                current.pop_back();
            if (!current.empty())
                return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string &what) const
    {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    }
};

std::vector<std::string> split(const std::string &s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

long parse_long(LineReader &r, const std::string &tok, const char *what)
{
    try {
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size())
            r.fail(std::string("malformed ") + what + " '" + tok + "'");
        return v;
    } catch (const ParseError &) {
        throw;
    } catch (...) {
        r.fail(std::string("malformed ") + what + " '" + tok + "'");
    }
}

Rational parse_rational_tok(LineReader &r, const std::string &tok)
{
    try {
        return rational_from_string(tok);
    } catch (const ParseError &e) {
        r.fail(e.what());
    }
}

} // namespace

std::string mould_to_text(const Mould &m)
{
    std::ostringstream os;
    os << "mouldfile 1\n";
    os << "alphabet " << alphabet_name(m.alphabet()) << "\n";
    os << "maxdepth " << m.max_depth() << "\n";
    for (int r = 0; r <= m.max_depth(); ++r) {
        os << "component " << r << "\n";
        const LFDRatio &c = m.at(r);
        if (c.is_zero()) {
            os << "zero\n";
            continue;
        }
        for (const auto &[mono, coeff] : c.num().terms()) {
            os << "num " << to_string(coeff);
            for (int i = 0; i < r; ++i)
                os << " " << (i < static_cast<int>(mono.size()) ? mono[static_cast<size_t>(i)] : 0);
            os << "\n";
        }
        for (const auto &[form, mult] : c.den()) {
            os << "den";
            for (int i = 1; i <= r; ++i)
                os << " " << form.coeff(i);
            os << " ^ " << mult << "\n";
        }
    }
    os << "end\n";
    return os.str();
}

Mould mould_from_text(const std::string &text)
{
    LineReader r(text);
    if (!r.next() || split(r.current) != std::vector<std::string>{"mouldfile", "1"})
        r.fail("expected header 'mouldfile 1'");
    if (!r.next())
        r.fail("expected 'alphabet u' or 'alphabet v'");
    auto alpha_toks = split(r.current);
    if (alpha_toks.size() != 2 || alpha_toks[0] != "alphabet" ||
        (alpha_toks[1] != "u" && alpha_toks[1] != "v"))
        r.fail("expected 'alphabet u' or 'alphabet v'");
    Alphabet alpha = alpha_toks[1] == "u" ? Alphabet::u : Alphabet::v;
    if (!r.next())
        r.fail("expected 'maxdepth D'");
    auto depth_toks = split(r.current);
    if (depth_toks.size() != 2 || depth_toks[0] != "maxdepth")
        r.fail("expected 'maxdepth D'");
    long depth = parse_long(r, depth_toks[1], "depth");
    if (depth < 0 || depth > 64)
        r.fail("truncation depth out of range");

    Mould m(alpha, static_cast<int>(depth));
    int expected_component = 0;
    bool saw_end = false;

    int current = -1;
    Poly num(alpha);
    std::vector<LFDRatio::Factor> den;
    bool explicit_zero = false;
    bool has_content = false;
    int content_line = 0;

    auto flush = [&](LineReader &reader) {
        if (current < 0)
            return;
        if (!has_content && !explicit_zero)
            reader.fail("component " + std::to_string(current) +
                        " has no terms; an all-zero component must say 'zero'");
        LFDRatio value = explicit_zero ? LFDRatio::zero(alpha) : LFDRatio::make(num, den);
        if (!explicit_zero) {
            // reject non-canonical payloads: the stored record must equal
            // its own canonical form
            if (!(value.num() == num) || value.den() != den) {
                reader.lineno = content_line;
                reader.fail("component " + std::to_string(current) + " is not in canonical form");
            }
        }
        try {
            m.set(current, std::move(value));
        } catch (const DomainError &e) {
            reader.lineno = content_line;
            reader.fail(std::string("component ") + std::to_string(current) + ": " + e.what());
        }
    };

    while (true) {
        if (!r.next())
            r.fail("unexpected end of input (missing 'end')");
        auto toks = split(r.current);
        if (toks[0] == "end") {
            flush(r);
            if (expected_component != static_cast<int>(depth) + 1)
                r.fail("missing components before 'end'");
            saw_end = true;
            break;
        }
        if (toks[0] == "component") {
            flush(r);
            if (toks.size() != 2)
                r.fail("expected 'component R'");
            long idx = parse_long(r, toks[1], "component index");
            if (idx != expected_component)
                r.fail("expected component " + std::to_string(expected_component) + ", got " + toks[1]);
            ++expected_component;
            current = static_cast<int>(idx);
            num = Poly(alpha);
            den.clear();
            explicit_zero = false;
            has_content = false;
            content_line = r.lineno;
            continue;
        }
        if (current < 0)
            r.fail("expected 'component 0' before record '" + toks[0] + "'");
        content_line = r.lineno;
        if (toks[0] == "zero") {
            if (toks.size() != 1 || has_content)
                r.fail("'zero' must be the only record of a component");
            explicit_zero = true;
            has_content = true;
            continue;
        }
        if (toks[0] == "num") {
            if (explicit_zero)
                r.fail("numerator term after 'zero'");
            if (static_cast<int>(toks.size()) != 2 + current)
                r.fail("numerator term of component " + std::to_string(current) + ": expected " +
                       std::to_string(current) + " exponents, got " +
                       std::to_string(static_cast<int>(toks.size()) - 2));
            Rational coeff = parse_rational_tok(r, toks[1]);
            Monomial mono;
            for (int i = 0; i < current; ++i) {
                long e = parse_long(r, toks[static_cast<size_t>(2 + i)], "exponent");
                if (e < 0)
                    r.fail("negative exponent");
                mono.push_back(static_cast<unsigned>(e));
            }
            if (!is_zero(num.coeff(mono)))
                r.fail("duplicate numerator monomial in component " + std::to_string(current));
            num.add_term(mono, coeff);
            has_content = true;
            continue;
        }
        if (toks[0] == "den") {
            if (explicit_zero)
                r.fail("denominator factor after 'zero'");
            if (static_cast<int>(toks.size()) != current + 3 || toks[static_cast<size_t>(current) + 1] != "^")
                r.fail("denominator factor of component " + std::to_string(current) + ": expected " +
                       std::to_string(current) + " coefficients, '^' and a multiplicity");
            std::vector<int64_t> coeffs;
            for (int i = 0; i < current; ++i)
                coeffs.push_back(parse_long(r, toks[static_cast<size_t>(1 + i)], "coefficient"));
            long mult = parse_long(r, toks.back(), "multiplicity");
            if (mult <= 0)
                r.fail("multiplicity must be positive");
            try {
                den.emplace_back(LinearForm(alpha, std::move(coeffs)), static_cast<unsigned>(mult));
            } catch (const DomainError &e) {
                r.fail(e.what());
            }
            has_content = true;
            continue;
        }
        r.fail("unknown record '" + toks[0] + "'");
    }
    if (!saw_end)
        r.fail("missing 'end'");
    return m;
}

std::string ncpoly_to_text(const NCPoly &f)
{
    std::ostringstream os;
    os << "ncpolyfile 1\n";
    for (const auto &[w, c] : f.terms())
        os << "term " << to_string(c) << " " << w.to_string() << "\n";
    os << "end\n";
    return os.str();
}

NCPoly ncpoly_from_text(const std::string &text)
{
    LineReader r(text);
    if (!r.next() || split(r.current) != std::vector<std::string>{"ncpolyfile", "1"})
        r.fail("expected header 'ncpolyfile 1'");
    NCPoly f;
    while (true) {
        if (!r.next())
            r.fail("unexpected end of input (missing 'end')");
        auto toks = split(r.current);
        if (toks[0] == "end")
            break;
        if (toks[0] != "term" || toks.size() != 3)
            r.fail("expected 'term <rational> <word>'");
        Rational c = parse_rational_tok(r, toks[1]);
        XYWord w;
        if (toks[2] != "1") {
            try {
                w = XYWord::parse(toks[2]);
            } catch (const ParseError &e) {
                r.fail(e.what());
            }
        }
        if (!is_zero(f.coeff(w)))
            r.fail("duplicate word '" + toks[2] + "'");
        f.add_term(w, c);
    }
    return f;
}

std::string ypoly_to_text(const YPoly &f)
{
    std::ostringstream os;
    os << "ypolyfile 1\n";
    for (const auto &[w, c] : f.terms()) {
        os << "term " << to_string(c);
        for (unsigned a : w)
            os << " y" << a;
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

YPoly ypoly_from_text(const std::string &text)
{
    LineReader r(text);
    if (!r.next() || split(r.current) != std::vector<std::string>{"ypolyfile", "1"})
        r.fail("expected header 'ypolyfile 1'");
    YPoly f;
    while (true) {
        if (!r.next())
            r.fail("unexpected end of input (missing 'end')");
        auto toks = split(r.current);
        if (toks[0] == "end")
            break;
        if (toks[0] != "term" || toks.size() < 3)
            r.fail("expected 'term <rational> y<i> ...'");
        Rational c = parse_rational_tok(r, toks[1]);
        YWord w;
        for (size_t i = 2; i < toks.size(); ++i) {
            if (toks[i].size() < 2 || toks[i][0] != 'y')
                r.fail("expected a letter of the form y<i>, got '" + toks[i] + "'");
            long a = parse_long(r, toks[i].substr(1), "letter index");
            if (a < 1)
                r.fail("letter index must be >= 1");
            w.push_back(static_cast<unsigned>(a));
        }
        if (!is_zero(f.coeff(w)))
            r.fail("duplicate word");
        f.add_term(w, c);
    }
    return f;
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "' for reading");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot open '" + path + "' for writing");
    out << content;
    if (!out)
        throw ParseError("failed writing '" + path + "'");
}

} // namespace mouldcalc
