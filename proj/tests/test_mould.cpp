#include "doctest.h"

#include "flexion.hpp"
#include "test_helpers.hpp"

using namespace mouldcalc;
using namespace mouldcalc::testing;

namespace {

const Alphabet U = Alphabet::u;
const Alphabet V = Alphabet::v;

Mould random_mould(TestRng &rng, Alphabet alpha, int depth, bool ari_member = true)
{
    Mould m(alpha, depth);
    if (!ari_member)
        m.set(0, LFDRatio::constant(alpha, rng.small_rational()));
    for (int r = 1; r <= depth; ++r)
        m.set(r, random_lfd(rng, alpha, r));
    return m;
}

// concentrated in depth 1 with component f(x1)
Mould depth1_mould(Alphabet alpha, const LFDRatio &f, int depth)
{
    Mould m(alpha, depth);
    m.set(1, f);
    return m;
}

LFDRatio inv_of(Alphabet alpha, const LinearForm &form, const Rational &c)
{
    return LFDRatio::make(Poly::constant(alpha, c), {{form, 1}});
}

} // namespace

TEST_CASE("push and mantar at small depth")
{
    TestRng rng(11);
    Mould a = random_mould(rng, U, 3);

    // push at depth 1 sends A(u1) to A(-u1)
    Mould p = push(a);
    CHECK(lfd_equal(p.at(1), a.at(1).substitute({LinearForm::variable(U, 1).negated()})));

    // mantar at depth 2 sends A(u1,u2) to -A(u2,u1)
    Mould t = mantar(a);
    Word rev = {LinearForm::variable(U, 2), LinearForm::variable(U, 1)};
    CHECK(lfd_equal(t.at(2), -a.at(2).substitute(rev)));

    // dar multiplies depth 1 by u1: dar(1/(2u1)) = 1/2
    Mould pal1 = depth1_mould(U, inv_of(U, LinearForm::variable(U, 1), rat(1, 2)), 2);
    CHECK(lfd_equal(dar(pal1).at(1), LFDRatio::constant(U, rat(1, 2))));
}

TEST_CASE("unary operator involutions and orders")
{
    TestRng rng(12);
    Mould a = random_mould(rng, U, 4);
    CHECK(mould_equal(neg(neg(a)), a));
    CHECK(mould_equal(mantar(mantar(a)), a));
    CHECK(mould_equal(swap(swap(a)), a));
    CHECK(mould_equal(neg(push(a)), push(neg(a))));
    CHECK(mould_equal(dur_inverse(dur(a)), a));
    CHECK(mould_equal(dar_inverse(dar(a)), a));

    // push has order r+1 on the depth-r component
    Mould it = a;
    for (int j = 0; j < 5; ++j)
        it = push(it);
    CHECK(lfd_equal(it.at(4), a.at(4)));
    Mould it3 = push(push(push(push(a))));
    CHECK(lfd_equal(it3.at(3), a.at(3)));

    CHECK_THROWS_AS(neg(random_mould(rng, V, 2)), DomainError);
}

TEST_CASE("operator identity neg.push = mantar.swap.mantar.swap")
{
    TestRng rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        Mould a = random_mould(rng, U, 4, false);
        Mould lhs = neg(push(a));
        Mould rhs = mantar(swap(mantar(swap(a))));
        CHECK(mould_equal(lhs, rhs));
    }
}

TEST_CASE("swap golden values")
{
    Mould pal1 = depth1_mould(U, inv_of(U, LinearForm::variable(U, 1), rat(1, 2)), 1);
    Mould s = swap(pal1);
    CHECK(s.alphabet() == V);
    CHECK(lfd_equal(s.at(1), inv_of(V, LinearForm::variable(V, 1), rat(1, 2))));
}

TEST_CASE("mu and lu")
{
    TestRng rng(14);
    Mould a = random_mould(rng, U, 3);
    Mould b = random_mould(rng, U, 3);
    Mould c = random_mould(rng, U, 3);

    // both boundary terms vanish for ARI moulds
    CHECK(mu(a, b).at(1).is_zero());

    // the unit mould is a two-sided mu unit
    Mould one = Mould::unit(U, 3);
    CHECK(mould_equal(mu(one, a), a));
    CHECK(mould_equal(mu(a, one), a));

    // associativity
    CHECK(mould_equal(mu(mu(a, b), c), mu(a, mu(b, c))));

    // lu is the commutator
    CHECK(mould_equal(lu(a, a), Mould::zero(U, 3)));
    CHECK(mould_equal(lu(a, b), -lu(b, a)));

    // depth-1 concentrated inputs: lu(A,B)(u1,u2) = A(u1)B(u2) - B(u1)A(u2)
    LFDRatio fa = inv_of(U, LinearForm::variable(U, 1), rat(1));
    LFDRatio fb = LFDRatio::from_poly(var(U, 1));
    Mould da = depth1_mould(U, fa, 2), db = depth1_mould(U, fb, 2);
    Word w1 = {LinearForm::variable(U, 1)};
    Word w2 = {LinearForm::variable(U, 2)};
    LFDRatio expect = evaluate(da, w1) * evaluate(db, w2) - evaluate(db, w1) * evaluate(da, w2);
    CHECK(lfd_equal(lu(da, db).at(2), expect));
}

TEST_CASE("amit and anit at depth 2 enumerate a single split")
{
    TestRng rng(15);
    Mould a = random_mould(rng, U, 2);
    Mould b = random_mould(rng, U, 2);

    // depth 1: no split has the required nonempty blocks
    CHECK(amit(b, a).at(1).is_zero());
    CHECK(anit(b, a).at(1).is_zero());

    Word merged = {LinearForm(U, {1, 1})};
    Word u1 = {LinearForm::variable(U, 1)};
    Word u2 = {LinearForm::variable(U, 2)};
    // amit: a = empty, b = (u1), c = (u2): A(u1+u2) B(u1)
    CHECK(lfd_equal(amit(b, a).at(2), evaluate(a, merged) * evaluate(b, u1)));
    // anit: a = (u1), b = (u2), c = empty: A(u1+u2) B(u2)
    CHECK(lfd_equal(anit(b, a).at(2), evaluate(a, merged) * evaluate(b, u2)));
}

TEST_CASE("arit golden values and constants")
{
    TestRng rng(16);
    // depth-1 concentrated A, B: arit(B).A at depth 2 is A(u1+u2)(B(u1)-B(u2))
    Mould a = depth1_mould(U, random_lfd(rng, U, 1), 2);
    Mould b = depth1_mould(U, random_lfd(rng, U, 1), 2);
    Word merged = {LinearForm(U, {1, 1})};
    Word u1 = {LinearForm::variable(U, 1)};
    Word u2 = {LinearForm::variable(U, 2)};
    LFDRatio expect = evaluate(a, merged) * (evaluate(b, u1) - evaluate(b, u2));
    CHECK(lfd_equal(arit(b, a).at(2), expect));

    // a constant-valued mould acting through arit annihilates everything
    Mould m = random_mould(rng, U, 3);
    Mould m0 = Mould::constant_mould(U, {rat(2), rat(-1, 3), rat(5)}, 3);
    CHECK(mould_equal(arit(m0, m), Mould::zero(U, 3)));

    // arit(B) applied to a constant mould reduces to lu(B, M0)
    CHECK(mould_equal(arit(m, m0), lu(m, m0)));
}

TEST_CASE("axit combines amit and anit")
{
    TestRng rng(17);
    Mould a = random_mould(rng, U, 3);
    Mould b = random_mould(rng, U, 3);
    Mould c = random_mould(rng, U, 3);
    Mould zero = Mould::zero(U, 3);

    CHECK(mould_equal(axit(b, -b, a), arit(b, a)));
    CHECK(mould_equal(axit(zero, zero, a), zero));

    // depth-1 concentrated: depth-2 component A(u1+u2)(B(u1)+C(u2))
    Mould da = depth1_mould(U, random_lfd(rng, U, 1), 2);
    Mould db = depth1_mould(U, random_lfd(rng, U, 1), 2);
    Mould dc = depth1_mould(U, random_lfd(rng, U, 1), 2);
    Word merged = {LinearForm(U, {1, 1})};
    Word u1 = {LinearForm::variable(U, 1)};
    Word u2 = {LinearForm::variable(U, 2)};
    LFDRatio expect = evaluate(da, merged) * (evaluate(db, u1) + evaluate(dc, u2));
    CHECK(lfd_equal(axit(db, dc, da).at(2), expect));
}

TEST_CASE("ari is an antisymmetric bracket with Jacobi")
{
    TestRng rng(18);
    Mould a = random_mould(rng, U, 4);
    Mould b = random_mould(rng, U, 4);
    Mould c = random_mould(rng, U, 4);

    CHECK(mould_equal(ari(a, a), Mould::zero(U, 4)));
    CHECK(mould_equal(ari(a, b), -ari(b, a)));
    CHECK(ari(a, b).at(1).is_zero());

    Mould jac = ari(a, ari(b, c)) + ari(b, ari(c, a)) + ari(c, ari(a, b));
    CHECK(mould_equal(jac, Mould::zero(U, 4)));

    // same bracket axioms hold for the v-alphabet structure
    Mould av = random_mould(rng, V, 3);
    Mould bv = random_mould(rng, V, 3);
    Mould cv = random_mould(rng, V, 3);
    CHECK(mould_equal(ari(av, bv), -ari(bv, av)));
    Mould jacv = ari(av, ari(bv, cv)) + ari(bv, ari(cv, av)) + ari(cv, ari(av, bv));
    CHECK(mould_equal(jacv, Mould::zero(V, 3)));

    // ari against a constant mould vanishes
    Mould m0 = Mould::constant_mould(U, {rat(1), rat(1), rat(1), rat(1)}, 4);
    CHECK(mould_equal(ari(a, m0), Mould::zero(U, 4)));
}

TEST_CASE("arit is a derivation of lu")
{
    TestRng rng(19);
    Mould a = random_mould(rng, U, 3);
    Mould b = random_mould(rng, U, 3);
    Mould c = random_mould(rng, U, 3);
    Mould lhs = arit(b, lu(a, c));
    Mould rhs = lu(arit(b, a), c) + lu(a, arit(b, c));
    CHECK(mould_equal(lhs, rhs));
}

TEST_CASE("binary operators are truncation stable")
{
    TestRng rng(20);
    Mould a5 = random_mould(rng, U, 5);
    Mould b5 = random_mould(rng, U, 5);
    Mould a3 = a5.truncated(3), b3 = b5.truncated(3);
    CHECK(mould_equal(mu(a5, b5).truncated(3), mu(a3, b3)));
    CHECK(mould_equal(ari(a5, b5).truncated(3), ari(a3, b3)));
    CHECK(mould_equal(arit(b5, a5).truncated(3), arit(b3, a3)));

    // output bound is the smaller input bound
    CHECK(mu(a5, b3).max_depth() == 3);
}

TEST_CASE("push_symmetrize produces push-invariant moulds")
{
    TestRng rng(21);
    Mould a = random_mould(rng, U, 3);
    Mould s = push_symmetrize(a);
    CHECK(mould_equal(push(s), s));
    CHECK(mould_equal(push_symmetrize(s), s));

    // depth 1 component is (A(u1) + A(-u1))/2
    LFDRatio expect =
        (a.at(1) + a.at(1).substitute({LinearForm::variable(U, 1).negated()})).scaled(rat(1, 2));
    CHECK(lfd_equal(s.at(1), expect));
}

TEST_CASE("swap ari exchange identity")
{
    TestRng rng(22);
    for (int trial = 0; trial < 3; ++trial) {
        Mould a = random_mould(rng, U, 3);
        Mould b = random_mould(rng, U, 3);
        VerificationReport report = swap_ari_identity_check(a, b);
        CHECK(report.ok());
    }

    // constant moulds: both sides vanish
    Mould c1 = Mould::constant_mould(U, {rat(0), rat(3), rat(-2)}, 3);
    Mould c2 = Mould::constant_mould(U, {rat(0), rat(1), rat(7)}, 3);
    Mould lhs = swap(ari(swap(c1), swap(c2)));
    CHECK(mould_equal(lhs, Mould::zero(U, 3)));
    CHECK(mould_equal(ari(c1, c2), Mould::zero(U, 3)));
}
