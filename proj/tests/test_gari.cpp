#include "doctest.h"

#include "bch.hpp"
#include "gari.hpp"
#include "symmetries.hpp"
#include "test_helpers.hpp"

using namespace mouldcalc;
using namespace mouldcalc::testing;

namespace {

const Alphabet U = Alphabet::u;
const Alphabet V = Alphabet::v;

Mould random_ari(TestRng &rng, Alphabet alpha, int depth)
{
    Mould m(alpha, depth);
    for (int r = 1; r <= depth; ++r)
        m.set(r, random_lfd(rng, alpha, r));
    return m;
}

Mould random_gari(TestRng &rng, Alphabet alpha, int depth)
{
    Mould m = random_ari(rng, alpha, depth);
    m.set(0, LFDRatio::constant(alpha, Rational(1)));
    return m;
}

BWord word_of(const char *s)
{
    BWord w;
    for (const char *p = s; *p; ++p)
        w = w.appended(*p == 'y' ? 1 : 0);
    return w;
}

} // namespace

TEST_CASE("free series exp and log invert each other")
{
    FreeSeries x = FreeSeries::generator(0, 5);
    FreeSeries y = FreeSeries::generator(1, 5);
    FreeSeries s = x + y.scaled(rat(3, 2)) + x * y;
    FreeSeries back = s.exp().log();
    CHECK(back.terms() == s.terms());
}

TEST_CASE("campbell-hausdorff word coefficients at low degree")
{
    auto c = bch_word_coefficients(3);
    CHECK(c.at(word_of("x")) == rat(1));
    CHECK(c.at(word_of("y")) == rat(1));
    CHECK(c.at(word_of("xy")) == rat(1, 2));
    CHECK(c.at(word_of("yx")) == rat(-1, 2));
    // degree 3: [X,[X,Y]]/12 + [Y,[Y,X]]/12 expanded on words
    CHECK(c.at(word_of("xxy")) == rat(1, 12));
    CHECK(c.at(word_of("xyx")) == rat(-1, 6));
    CHECK(c.at(word_of("yxx")) == rat(1, 12));
    CHECK(c.at(word_of("yyx")) == rat(1, 12));
    CHECK(c.at(word_of("yxy")) == rat(-1, 6));
    CHECK(c.at(word_of("xyy")) == rat(1, 12));
    CHECK(c.count(word_of("xx")) == 0);
}

TEST_CASE("preari antisymmetrizes to ari")
{
    TestRng rng(41);
    Mould a = random_ari(rng, U, 4);
    Mould b = random_ari(rng, U, 4);
    CHECK(mould_equal(preari(a, b) - preari(b, a), ari(a, b)));

    Mould zero = Mould::zero(U, 4);
    CHECK(mould_equal(preari(a, zero), zero));
    CHECK(mould_equal(preari(zero, b), zero));

    // depth-1 concentrated inputs: depth-2 component is
    // A(u1+u2)(B(u1)-B(u2)) + A(u1)B(u2)
    Mould da(U, 2), db(U, 2);
    TestRng rng2(42);
    da.set(1, random_lfd(rng2, U, 1));
    db.set(1, random_lfd(rng2, U, 1));
    Word merged = {LinearForm(U, {1, 1})};
    Word u1 = {LinearForm::variable(U, 1)};
    Word u2 = {LinearForm::variable(U, 2)};
    LFDRatio expect = evaluate(da, merged) * (evaluate(db, u1) - evaluate(db, u2)) +
                      evaluate(da, u1) * evaluate(db, u2);
    CHECK(lfd_equal(preari(da, db).at(2), expect));
}

TEST_CASE("expari and logari invert each other")
{
    TestRng rng(43);
    for (Alphabet alpha : {U, V}) {
        Mould a = random_ari(rng, alpha, 4);
        Mould g = expari(a);
        CHECK(g.in_gari());
        CHECK(lfd_equal(g.at(1), a.at(1))); // only the n=1 term reaches depth 1
        CHECK(mould_equal(logari(g), a));

        Mould h = random_gari(rng, alpha, 4);
        CHECK(mould_equal(expari(logari(h)), h));
    }
    CHECK_THROWS_AS(expari(Mould::unit(U, 2)), DomainError);
    CHECK_THROWS_AS(logari(Mould::zero(U, 2)), DomainError);
}

TEST_CASE("expari of an alternal mould is symmetral")
{
    // a hand-built alternal mould: weight-3 dictionary image plus a
    // depth-1 rational component
    Mould a(U, 3);
    a.set(1, LFDRatio::make(qc(U, 1), {{LinearForm::variable(U, 1), 1}}) +
                 LFDRatio::from_poly(var(U, 1) * var(U, 1)));
    a.set(2, LFDRatio::from_poly(var(U, 2) - var(U, 1)));
    REQUIRE(is_alternal(a).pass());
    Mould g = expari(a);
    CHECK(is_symmetral(g).pass());
}

TEST_CASE("ch_ari matches the nested-bracket expansion at depth 3")
{
    TestRng rng(44);
    Mould a = random_ari(rng, U, 3);
    Mould b = random_ari(rng, U, 3);
    Mould expect = a + b + ari(a, b).scaled(rat(1, 2)) +
                   (ari(a, ari(a, b)) + ari(b, ari(b, a))).scaled(rat(1, 12));
    CHECK(mould_equal(ch_ari(a, b), expect));

    Mould zero = Mould::zero(U, 3);
    CHECK(mould_equal(ch_ari(a, zero), a));
    CHECK(mould_equal(ch_ari(zero, b), b));
}

TEST_CASE("gari group laws")
{
    TestRng rng(45);
    Mould a = random_gari(rng, U, 4);
    Mould unit = Mould::unit(U, 4);

    CHECK(mould_equal(gari(unit, a), a));
    CHECK(mould_equal(gari(a, unit), a));
    CHECK(mould_equal(gari(a, invgari(a)), unit));
    CHECK(mould_equal(gari(invgari(a), a), unit));

    Mould b = random_gari(rng, U, 3);
    Mould c = random_gari(rng, U, 3);
    Mould a3 = a.truncated(3);
    CHECK(mould_equal(gari(gari(a3, b), c), gari(a3, gari(b, c))));
}

TEST_CASE("adari properties")
{
    TestRng rng(46);
    Mould a = random_gari(rng, U, 3);
    Mould b = random_ari(rng, U, 3);

    // unit acts trivially
    CHECK(mould_equal(adari(Mould::unit(U, 3), b), b));

    // constant moulds are fixed (every ari bracket against them vanishes)
    Mould c = Mould::constant_mould(U, {rat(2), rat(-5, 3), rat(1)}, 3);
    CHECK(mould_equal(adari(a, c), c));

    // depth-1 components are preserved
    CHECK(lfd_equal(adari(a, b).at(1), b.at(1)));

    // the two printed forms agree
    AdariForms forms = adari_forms(a, b);
    CHECK(forms.agree);

    // group action: adari(gari(A,B)) = adari(A) . adari(B)
    Mould g = random_gari(rng, U, 3);
    CHECK(mould_equal(adari(gari(a, g), b), adari(a, adari(g, b))));

    // acts by bracket automorphisms
    Mould b2 = random_ari(rng, U, 3);
    CHECK(mould_equal(adari(a, ari(b, b2)), ari(adari(a, b), adari(a, b2))));
}

TEST_CASE("ganit explicit small-depth expansion")
{
    TestRng rng(47);
    Mould a = random_gari(rng, V, 3);
    Mould b = random_gari(rng, V, 3);
    Mould g = ganit(b, a);

    auto vvar = [](int i) { return LinearForm::variable(V, i); };
    auto vdiff = [](int i, int j) { return LinearForm::difference(V, i, j); };

    // depth 1: C(v1) = A(v1)
    CHECK(lfd_equal(g.at(1), a.at(1)));

    // depth 2: C(v1,v2) = A(v1,v2) + A(v1) B(v2-v1)
    LFDRatio d2 = a.at(2) + evaluate(a, {vvar(1)}) * evaluate(b, {vdiff(2, 1)});
    CHECK(lfd_equal(g.at(2), d2));

    // depth 3: A(v1,v2,v3) + A(v1,v2)B(v3-v2) + A(v1)B(v2-v1,v3-v1)
    //          + A(v1,v3)B(v2-v1)
    LFDRatio d3 = a.at(3) + evaluate(a, {vvar(1), vvar(2)}) * evaluate(b, {vdiff(3, 2)}) +
                  evaluate(a, {vvar(1)}) * evaluate(b, {vdiff(2, 1), vdiff(3, 1)}) +
                  evaluate(a, {vvar(1), vvar(3)}) * evaluate(b, {vdiff(2, 1)});
    CHECK(lfd_equal(g.at(3), d3));

    // the unit acts trivially, in both readings
    CHECK(mould_equal(ganit(Mould::unit(V, 3), a), a));
    CHECK(mould_equal(ganit_expder(Mould::unit(V, 3), a), a));
}

TEST_CASE("ganit is an automorphism of mu")
{
    TestRng rng(48);
    Mould b = random_gari(rng, V, 3);
    Mould x = random_gari(rng, V, 3);
    Mould y = random_gari(rng, V, 3);
    CHECK(mould_equal(ganit(b, mu(x, y)), mu(ganit(b, x), ganit(b, y))));
}

TEST_CASE("ganit explicit and exponential-derivation readings")
{
    TestRng rng(49);
    Mould b = random_gari(rng, V, 3);
    Mould a = random_gari(rng, V, 3);
    Mould explicit_form = ganit(b, a);
    Mould expder_form = ganit_expder(b, a);
    // the two printed definitions coincide through depth 2; the depth-3
    // comparison is the business of the ganit-consistency suite
    CHECK(mould_equal(explicit_form, expder_form, 2));
}
