#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coop/f2.hpp"
#include "coop/poly.hpp"
#include "coop/rat.hpp"
#include "coop/series.hpp"

using namespace coop;

TEST_CASE("nu2 on integers and rationals") {
    CHECK(nu2(40320L) == 7);   // 8!
    CHECK(nu2(756L) == 2);
    CHECK(nu2(rat(5, 24)) == -3);
    CHECK(nu2(rat(1)) == 0);
    CHECK(nu2(rat(-12)) == 2);
    CHECK(nu2(rat(0)) == nu2_inf);
    CHECK(nu2(rat(3, 2) + rat(1, 2)) == 1);
}

TEST_CASE("alpha counts dyadic digits") {
    CHECK(alpha(0) == 0);
    CHECK(alpha(7) == 3);
    CHECK(alpha(22) == 3);
    CHECK(alpha(1024) == 1);
    for (unsigned long n = 1; n < 200; ++n)
        CHECK(alpha(2 * n) == alpha(n));
}

TEST_CASE("rat helpers") {
    CHECK(rat(3, 6) == rat(1, 2));
    CHECK(rat_from_string("-21/14") == rat(-3, 2));
    CHECK(to_string(rat(-3, 2)) == "-3/2");
    CHECK(is_2integral(rat(7, 3)));
    CHECK(!is_2integral(rat(1, 6)));
    CHECK(mod_pow2(rat(7, 3), 3) == 5);  // 7 * 3^{-1} = 7*3 = 21 = 5 mod 8
    CHECK_THROWS(mod_pow2(rat(1, 2), 3));
}

// frozen from tools/oracles/oracle_exactcore.py
TEST_CASE("series reversion and reciprocal") {
    TruncSeries1<Rat> f(8, Rat(0));
    f.set(1, 1);
    f.set(2, 1);
    TruncSeries1<Rat> g = f.reversion(Rat(1));
    long expect[] = {0, 1, -1, 2, -5, 14, -42, 132, -429};
    for (size_t k = 0; k <= 8; ++k) CHECK(g[k] == Rat(expect[k]));
    TruncSeries1<Rat> fg = f.compose(g, Rat(1));
    CHECK(fg[1] == 1);
    CHECK(fg[4] == 0);

    TruncSeries1<Rat> h(8, Rat(0));
    h.set(0, 1);
    h.set(1, -1);
    TruncSeries1<Rat> r = h.reciprocal(Rat(1));
    for (size_t k = 0; k <= 8; ++k) CHECK(r[k] == 1);
    TruncSeries1<Rat> prod = h * r;
    CHECK(prod[0] == 1);
    for (size_t k = 1; k <= 8; ++k) CHECK(prod[k] == 0);
}

TEST_CASE("series integrate") {
    TruncSeries1<Rat> f(5, Rat(0));
    for (size_t k = 0; k <= 4; ++k) f.set(k, 1);
    TruncSeries1<Rat> g = integrate(f);
    CHECK(g[0] == 0);
    CHECK(g[3] == rat(1, 3));
    CHECK(g[5] == rat(1, 5));
}

TEST_CASE("bivariate series arithmetic") {
    TruncSeries2<Rat> x(6, Rat(0)), y(6, Rat(0));
    x.set(1, 0, 1);
    y.set(0, 1, 1);
    TruncSeries2<Rat> s = x + y;
    TruncSeries2<Rat> p = s * s * s;
    CHECK(p.at(3, 0) == 1);
    CHECK(p.at(2, 1) == 3);
    CHECK(p.at(1, 2) == 3);
    CHECK(p.swap_vars() == p);

    // (x+y)^3 composed with (y, x) stays symmetric
    TruncSeries2<Rat> q = compose2(p, y, x, Rat(1));
    CHECK(q == p);

    TruncSeries1<Rat> f(6, Rat(0));
    f.set(1, 1);
    f.set(2, -1);
    TruncSeries2<Rat> c = compose1(f, s, Rat(1));
    CHECK(c.at(1, 0) == 1);
    CHECK(c.at(1, 1) == -2);
    CHECK(c.y_linear_part()[1] == -2);
}

TEST_CASE("graded poly arithmetic and ordering") {
    static const PolyRing R{{"a1", "a3"}, {1, 3}};
    GradedPoly a1 = GradedPoly::var(&R, 0);
    GradedPoly a3 = GradedPoly::var(&R, 1);
    GradedPoly p = a1.pow(3) + a3 * rat(-27);
    CHECK(p.degree() == 3);
    CHECK(p.is_homogeneous());
    GradedPoly q = p * a3.pow(3);
    CHECK(q.degree() == 12);
    CHECK(q.coeff({3, 3}) == 1);
    CHECK(q.coeff({0, 4}) == -27);
    CHECK(q.to_string() == "a1^3*a3^3 - 27*a3^4");
    CHECK((p - p).is_zero());
    CHECK(p.min_nu2() == 0);
    CHECK((p * rat(4)).min_nu2() == 2);
    CHECK(p.scale_pow2(-2).coeff({3, 0}) == rat(1, 4));

    auto [lt, lc] = q.leading_term();
    CHECK(lt == ExpVec{3, 3});
    CHECK(lc == 1);

    // substitution: a1 -> x^4, a3 -> x^3 y in another ring
    static const PolyRing S{{"x", "y"}, {1, 1}};
    GradedPoly img = p.subst({GradedPoly::var(&S, 0, 4), GradedPoly::var(&S, 0, 3) * GradedPoly::var(&S, 1)}, &S);
    CHECK(img.coeff({12, 0}) == 1);
    CHECK(img.coeff({3, 1}) == -27);
}

TEST_CASE("f2 matrix rank, solve, kernel") {
    // rows {110, 011}, target 101: x = (1,1)
    F2Matrix m(2, 3);
    m.set(0, 0);
    m.set(0, 1);
    m.set(1, 1);
    m.set(1, 2);
    CHECK(m.rank() == 2);
    F2Vec t(3);
    t.set(0);
    t.set(2);
    auto x = m.row_solve(t);
    REQUIRE(x.has_value());
    CHECK(x->get(0));
    CHECK(x->get(1));
    F2Vec t2(3);
    t2.set(0);
    CHECK(!m.row_solve(t2).has_value());

    F2Matrix k(3, 3);
    k.set(0, 0);
    k.set(1, 1);
    k.set(2, 0);
    k.set(2, 1);
    F2Matrix ker = k.left_kernel_basis();
    REQUIRE(ker.row_count() == 1);
    CHECK(ker.get(0, 0));
    CHECK(ker.get(0, 1));
    CHECK(ker.get(0, 2));

    F2Matrix r = k.rref();
    CHECK(r.get(0, 0));
    CHECK(!r.get(0, 1));
    CHECK(r.get(1, 1));
    CHECK(r.row(2).is_zero());

    F2Matrix tr = m.transpose();
    CHECK(tr.row_count() == 3);
    CHECK(tr.get(1, 0));
    CHECK(tr.get(1, 1));
    CHECK(tr.rank() == 2);
}

TEST_CASE("f2 reduction is deterministic under row order") {
    F2Matrix m(3, 4);
    m.set(0, 1);
    m.set(0, 3);
    m.set(1, 1);
    m.set(2, 2);
    F2Matrix ker = m.left_kernel_basis();
    CHECK(ker.row_count() == 0);
    CHECK(m.rank() == 3);
    F2Matrix r = m.rref();
    // leftmost pivot rule: row 0 pivots at column 1 after swap with first row holding it
    CHECK(r.get(0, 1));
    CHECK(r.get(1, 2));
    CHECK(r.get(2, 3));
}
