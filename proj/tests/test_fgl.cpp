#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <stdexcept>
#include <utility>

#include "coop/fgl.hpp"

using namespace coop;

namespace {

GradedPoly A1() { return GradedPoly::var(curve_ring(), 0); }
GradedPoly A3() { return GradedPoly::var(curve_ring(), 1); }

const FGLSeries& f8() {
    static FGLSeries f = formal_group_law(8);
    return f;
}

const FGLSeries& f20() {
    static FGLSeries f = formal_group_law(20);
    return f;
}

TruncSeries2<GradedPoly> clip2(const TruncSeries2<GradedPoly>& f, size_t order) {
    TruncSeries2<GradedPoly> r(order, f.zero());
    for (size_t i = 0; i <= order; ++i)
        for (size_t j = 0; i + j <= order; ++j) r.set(i, j, f.at(i, j));
    return r;
}

}  // namespace

TEST_CASE("weierstrass series") {
    auto w = weierstrass_w(12);
    GradedPoly a1 = A1(), a3 = A3(), zero(curve_ring());
    CHECK(w[0] == zero);
    CHECK(w[1] == zero);
    CHECK(w[2] == zero);
    CHECK(w[3] == GradedPoly::constant(curve_ring(), 1));
    CHECK(w[4] == a1);
    CHECK(w[5] == a1.pow(2));
    CHECK(w[6] == a1.pow(3) + a3);
    CHECK(w[7] == a1.pow(4) + a1 * a3 * rat(3));
    CHECK(w[8] == a1.pow(5) + a1.pow(2) * a3 * rat(6));
    CHECK(w[9] == a1.pow(6) + a1.pow(3) * a3 * rat(10) + a3.pow(2) * rat(2));
    CHECK_THROWS_AS(weierstrass_w(2), std::invalid_argument);
}

TEST_CASE("group law low-order coefficients") {
    const FGLSeries& f = f8();
    GradedPoly a1 = A1(), a3 = A3(), zero(curve_ring());
    GradedPoly one = GradedPoly::constant(curve_ring(), 1);

    CHECK(fgl_unital(f));
    CHECK(fgl_commutative(f));

    std::map<std::pair<size_t, size_t>, GradedPoly> expect;
    expect[{1, 0}] = one;
    expect[{0, 1}] = one;
    expect[{1, 1}] = a1 * rat(-1);
    expect[{3, 1}] = a3 * rat(-2);
    expect[{2, 2}] = a3 * rat(-3);
    expect[{1, 3}] = a3 * rat(-2);
    expect[{4, 1}] = a1 * a3 * rat(-2);
    expect[{3, 2}] = a1 * a3 * rat(-1);
    expect[{2, 3}] = a1 * a3 * rat(-1);
    expect[{1, 4}] = a1 * a3 * rat(-2);
    for (size_t i = 0; i <= 5; ++i)
        for (size_t j = 0; i + j <= 5; ++j) {
            auto it = expect.find({i, j});
            CHECK(f.f.at(i, j) == (it == expect.end() ? zero : it->second));
        }

    GradedPoly q6 = a1.pow(2) * a3 * rat(-1);
    CHECK(f.f.at(1, 5) == q6 * rat(2));
    CHECK(f.f.at(2, 4) == q6);
    CHECK(f.f.at(3, 3) == q6);
    CHECK(f.f.at(4, 2) == q6);
    CHECK(f.f.at(5, 1) == q6 * rat(2));

    GradedPoly q7a = a1.pow(3) * a3 * rat(-2) + a3.pow(2) * rat(-2);
    GradedPoly q7b = a1.pow(3) * a3 * rat(-1);
    GradedPoly q7c = a1.pow(3) * a3 * rat(-1) + a3.pow(2) * rat(4);
    CHECK(f.f.at(1, 6) == q7a);
    CHECK(f.f.at(2, 5) == q7b);
    CHECK(f.f.at(3, 4) == q7c);
    CHECK(f.f.at(4, 3) == q7c);
    CHECK(f.f.at(5, 2) == q7b);
    CHECK(f.f.at(6, 1) == q7a);
}

TEST_CASE("group law associativity") {
    CHECK(fgl_associative(f8(), 6));
    CHECK(fgl_associative(f8(), 7));
    CHECK_THROWS_AS(fgl_associative(f8(), 9), std::invalid_argument);
}

TEST_CASE("logarithm coefficients") {
    FGLLog log = fgl_log(f20(), 4);
    GradedPoly a1 = A1(), a3 = A3();
    CHECK(log.l.size() == 5);
    CHECK(log.l[0] == GradedPoly::constant(curve_ring(), 1));
    CHECK(log.l[1] == a1 / rat(2));
    CHECK(log.l[2] == (a1.pow(3) + a3 * rat(2)) / rat(4));
    CHECK(log.l[3] == (a1.pow(7) + a1.pow(4) * a3 * rat(30) + a1 * a3.pow(2) * rat(30)) / rat(8));
    CHECK(log.l[4] == (a1.pow(15) + a1.pow(12) * a3 * rat(182) + a1.pow(9) * a3.pow(2) * rat(4290) +
                       a1.pow(6) * a3.pow(3) * rat(18480) + a1.pow(3) * a3.pow(4) * rat(11550) +
                       a3.pow(5) * rat(252)) /
                          rat(16));
    for (int i = 1; i <= 4; ++i) {
        CHECK(log.l[static_cast<size_t>(i)].is_homogeneous());
        CHECK(log.l[static_cast<size_t>(i)].degree() == (1L << i) - 1);
    }
    CHECK(log.series[1] == GradedPoly::constant(curve_ring(), 1));
    CHECK_THROWS_AS(fgl_log(f8(), 4), std::invalid_argument);
}

TEST_CASE("logarithm linearizes the group law") {
    FGLSeries f = formal_group_law(12);
    FGLLog log = fgl_log(f, 3);
    GradedPoly one = GradedPoly::constant(curve_ring(), 1);
    size_t n = log.series.order();
    TruncSeries2<GradedPoly> lhs = compose1(log.series, clip2(f.f, n), one);
    TruncSeries2<GradedPoly> rhs =
        TruncSeries2<GradedPoly>::from_x(log.series, n) + TruncSeries2<GradedPoly>::from_y(log.series, n);
    CHECK(lhs == rhs);
}

TEST_CASE("hazewinkel images") {
    FGLLog log = fgl_log(f20(), 4);
    auto v = hazewinkel_images(log.l, 4);
    GradedPoly a1 = A1(), a3 = A3();
    REQUIRE(v.size() == 5);
    CHECK(v[0] == GradedPoly::constant(curve_ring(), 2));
    CHECK(v[1] == a1);
    CHECK(v[2] == a3);
    CHECK(v[3] == a1 * a3 * (a1.pow(3) + a3) * rat(7));
    CHECK(v[4] == a1.pow(12) * a3 * rat(19) + a1.pow(9) * a3.pow(2) * rat(508) +
                      a1.pow(6) * a3.pow(3) * rat(2261) + a1.pow(3) * a3.pow(4) * rat(1419) +
                      a3.pow(5) * rat(31));
    for (int n = 1; n <= 4; ++n) {
        CHECK(v[static_cast<size_t>(n)].coeffs_2integral());
        CHECK(v[static_cast<size_t>(n)].is_homogeneous());
        CHECK(v[static_cast<size_t>(n)].degree() == (1L << n) - 1);
    }
}

TEST_CASE("t images") {
    FGLLog log = fgl_log(f20(), 4);
    auto t = t_images(log.l, 4);
    const PolyRing* cr = cooperations_ring();
    GradedPoly a1 = GradedPoly::var(cr, 0), a3 = GradedPoly::var(cr, 1);
    GradedPoly b1 = GradedPoly::var(cr, 2), b3 = GradedPoly::var(cr, 3);
    REQUIRE(t.size() == 5);
    CHECK(t[0] == GradedPoly::constant(cr, 1));
    CHECK(t[1] == (b1 - a1) / rat(2));
    CHECK(t[2] == (b3 * rat(4) + b1.pow(3) * rat(2) - a1 * b1.pow(2) + a1.pow(2) * b1 * rat(2) -
                   a3 * rat(4) - a1.pow(3) * rat(3)) /
                      rat(8));
    GradedPoly t3 = b1 * b3.pow(2) * rat(480) - a1 * b3.pow(2) * rat(16) +
                    b1.pow(4) * b3 * rat(480) - a1 * b1.pow(3) * b3 * rat(16) +
                    a1.pow(2) * b1.pow(2) * b3 * rat(8) - a1.pow(3) * b1 * b3 * rat(16) +
                    a1 * a3 * b3 * rat(32) + a1.pow(4) * b3 * rat(24) + b1.pow(7) * rat(16) -
                    a1 * b1.pow(6) * rat(4) + a1.pow(2) * b1.pow(5) * rat(4) -
                    a3 * b1.pow(4) * rat(4) - a1.pow(3) * b1.pow(4) * rat(11) +
                    a1 * a3 * b1.pow(3) * rat(32) + a1.pow(4) * b1.pow(3) * rat(24) -
                    a1.pow(2) * a3 * b1.pow(2) * rat(32) - a1.pow(5) * b1.pow(2) * rat(22) +
                    a1.pow(3) * a3 * b1 * rat(32) + a1.pow(6) * b1 * rat(20) -
                    a1 * a3.pow(2) * rat(496) - a1.pow(4) * a3 * rat(508) - a1.pow(7) * rat(27);
    CHECK(t[3] == t3 / rat(128));
    CHECK(t[3].term_count() == 22);
    CHECK(t[4].term_count() == 126);

    std::vector<GradedPoly> counit{A1(), A3(), A1(), A3()};
    for (int n = 1; n <= 4; ++n) {
        const GradedPoly& tn = t[static_cast<size_t>(n)];
        CHECK(tn.subst(counit, curve_ring()).is_zero());
        CHECK(tn.is_homogeneous());
        CHECK(tn.degree() == (1L << n) - 1);
        AdamsLeading al = adams_leading(tn);
        CHECK(al.finite);
        CHECK(al.af == 0);
    }
}

TEST_CASE("adams filtration leading parts") {
    GradedPoly a1 = A1(), a3 = A3();

    AdamsLeading c4 = adams_leading(a1.pow(4) - a1 * a3 * rat(24));
    CHECK(c4.finite);
    CHECK(c4.af == 4);
    CHECK(c4.leading == a1.pow(4));

    AdamsLeading c6 = adams_leading(a1.pow(6) * rat(-1) + a1.pow(3) * a3 * rat(36) - a3.pow(2) * rat(216));
    CHECK(c6.af == 5);
    CHECK(c6.leading == a3.pow(2) * rat(8));

    AdamsLeading del = adams_leading((a1.pow(3) - a3 * rat(27)) * a3.pow(3));
    CHECK(del.af == 4);
    CHECK(del.leading == a3.pow(4));

    CHECK(adams_leading(a1).af == 1);
    CHECK(adams_leading(a3).af == 1);
    CHECK_FALSE(adams_leading(GradedPoly(curve_ring())).finite);

    const PolyRing* cr = cooperations_ring();
    GradedPoly t1 = (GradedPoly::var(cr, 2) - GradedPoly::var(cr, 0)) / rat(2);
    AdamsLeading lt1 = adams_leading(t1);
    CHECK(lt1.af == 0);
    CHECK(lt1.leading == (GradedPoly::var(cr, 2) + GradedPoly::var(cr, 0)) / rat(2));
}

TEST_CASE("bp image table") {
    BPImageTable bp = bp_images(3, 12);
    GradedPoly a1 = A1(), a3 = A3();
    REQUIRE(bp.l.size() == 4);
    REQUIRE(bp.v.size() == 4);
    REQUIRE(bp.t.size() == 4);
    CHECK(bp.l[2] == (a1.pow(3) + a3 * rat(2)) / rat(4));
    CHECK(bp.v[3] == a1 * a3 * (a1.pow(3) + a3) * rat(7));
    CHECK(bp.t[1] == (GradedPoly::var(cooperations_ring(), 2) - GradedPoly::var(cooperations_ring(), 0)) / rat(2));
}
