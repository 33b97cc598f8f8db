#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "coop/numpoly.hpp"

using namespace coop;

namespace {

Rat binom(long k, int n) {
    Rat acc = 1;
    for (int i = 0; i < n; ++i) acc *= rat(k - i, i + 1);
    return acc;
}

Rat pow9k(int k) {
    Int p = 1;
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) p *= 9;
    if (k >= 0) return Rat(p);
    Rat q(1, p);
    q.canonicalize();
    return q;
}

LatticeGenerator find_gen(const std::vector<LatticeGenerator>& gens, GenFamily fam, int n, int m,
                          int eta = 0) {
    for (const auto& g : gens)
        if (g.family == fam && g.n == n && g.m == m && g.eta_power == eta) return g;
    REQUIRE(false);
    return {};
}

}  // namespace

TEST_CASE("odd mahler basis") {
    CHECK(g_basis(0) == NumPolyQ{{Rat(1)}});
    CHECK(g_basis(1) == NumPolyQ{{rat(-1, 2), rat(1, 2)}});
    CHECK(g_basis(2) == NumPolyQ{{rat(3, 8), rat(-1, 2), rat(1, 8)}});
    for (int n = 0; n <= 8; ++n) {
        NumPolyQ g = g_basis(n);
        CHECK(g.degree() == n);
        for (long k = -6; k <= 6; ++k) {
            Rat v = g.eval(rat(2 * k + 1));
            CHECK(v == binom(k, n));
            if (v != 0) CHECK(nu2(v) >= 0);
        }
    }
    CHECK_THROWS_AS(g_basis(-1), std::invalid_argument);
}

TEST_CASE("nine mahler basis") {
    CHECK(f9_basis(0) == NumPolyQ{{Rat(1)}});
    CHECK(f9_basis(1) == NumPolyQ{{rat(-1, 8), rat(1, 8)}});
    CHECK(f9_basis(2) == NumPolyQ{{rat(1, 640), rat(-1, 576), rat(1, 5760)}});
    CHECK(f9_denominator(2) == 5760);
    for (int n = 1; n <= 16; ++n) CHECK(nu2(f9_denominator(n)) == 4L * n - alpha(n));
    for (int n = 0; n <= 6; ++n)
        for (int k = -6; k <= 6; ++k) {
            Rat v = f9_basis(n).eval(pow9k(k));
            if (v != 0) CHECK(nu2(v) >= 0);
        }
}

TEST_CASE("adams filtration of the bases") {
    std::vector<long> gtab{0, -1, -3, -4, -7, -8, -10, -11, -15};
    for (int n = 0; n <= 8; ++n) CHECK(af_of_basis(BasisKind::g, n) == gtab[static_cast<size_t>(n)]);
    std::vector<long> ftab{0, -3, -7, -10, -15};
    for (int n = 0; n <= 4; ++n) CHECK(af_of_basis(BasisKind::f9, n) == ftab[static_cast<size_t>(n)]);
}

TEST_CASE("g-basis expansion of the 9-mahler basis") {
    CHECK(expand_in_g(0) == std::vector<Rat>{Rat(1)});
    CHECK(expand_in_g(1) == std::vector<Rat>{Rat(0), Rat(1), Rat(1)});
    CHECK(expand_in_g(2) == std::vector<Rat>{Rat(0), Rat(0), rat(1, 15), rat(2, 15), rat(1, 15)});
    CHECK(expand_in_g(3) == std::vector<Rat>{Rat(0), Rat(0), rat(-1, 15795), rat(1, 110565),
                                             rat(38, 110565), rat(1, 2457), rat(1, 7371)});
    for (int n = 0; n <= 5; ++n) {
        std::vector<Rat> c = expand_in_g(n);
        NumPolyQ acc;
        for (size_t i = 0; i < c.size(); ++i) acc = acc + g_basis(static_cast<int>(i)).scale(c[i]);
        CHECK(acc == f9_as_w_poly(n));
        for (const Rat& v : c)
            if (v != 0) CHECK(nu2(v) >= 0);
    }
}

TEST_CASE("mahler expansion roundtrip") {
    NumPolyQ p{{rat(3), rat(-5, 7), Rat(0), rat(11, 3)}};
    std::vector<Rat> c = mahler_expand(p);
    NumPolyQ acc;
    for (size_t i = 0; i < c.size(); ++i) acc = acc + g_basis(static_cast<int>(i)).scale(c[i]);
    CHECK(acc == p);
}

TEST_CASE("evaluation matrix") {
    EvalMatrix m = eval_matrix(6, 6);
    CHECK(m.triangular);
    for (int j = 0; j <= 6; ++j) {
        for (int k = 0; k < j; ++k) CHECK(m.entry[static_cast<size_t>(j)][static_cast<size_t>(k)] == 0);
        CHECK(m.entry[static_cast<size_t>(j)][static_cast<size_t>(j)] == 1);
    }
    CHECK(m.entry[2][3] == 91);
    CHECK(m.entry[3][4] == 820);
    CHECK(nu2(m.entry[2][3]) == 0);
}

TEST_CASE("lattice families") {
    auto bu = lattice("bu", 0, 8);
    CHECK(find_gen(bu, GenFamily::bu, 0, 0).two_power == 0);
    CHECK(find_gen(bu, GenFamily::bu, 2, 2).two_power == 1);
    CHECK(find_gen(bu, GenFamily::bu, 1, 1).two_power == 0);
    CHECK(find_gen(bu, GenFamily::bu, 3, 3).two_power == 1);
    for (const auto& g : bu) {
        CHECK(g.family == GenFamily::bu);
        CHECK(g.m >= g.n);
        CHECK(g.stem() == 2 * g.m);
        CHECK(g.two_power + af_of_basis(BasisKind::g, g.n) + g.m >= 0);
    }

    auto bo = lattice("bo", 0, 16);
    CHECK(find_gen(bo, GenFamily::bo_free, 2, 2).two_power == 3);
    CHECK(find_gen(bo, GenFamily::bo_v0, 2, 3).two_power == 1);
    CHECK(find_gen(bo, GenFamily::bo_eta, 0, 0, 1).stem() == 1);
    CHECK(find_gen(bo, GenFamily::bo_eta, 0, 0, 2).stem() == 2);
    for (const auto& g : bo) {
        CHECK(g.m >= g.n);
        if (g.family == GenFamily::bo_free) {
            CHECK(g.m % 2 == 0);
            CHECK(g.eta_power == 0);
        } else if (g.family == GenFamily::bo_v0) {
            CHECK(g.m % 2 == 1);
            CHECK(g.two_power >= 1);
        } else {
            CHECK(g.family == GenFamily::bo_eta);
            CHECK(g.m % 2 == 0);
            CHECK(g.two_power == 0);
            CHECK(af_of_basis(BasisKind::f9, g.n) + 2L * g.m + g.eta_power >= 0);
        }
        // every member has Adams filtration >= 0
        if (g.family != GenFamily::bo_eta)
            CHECK(g.two_power + af_of_basis(BasisKind::f9, g.n) + 2L * g.m >= 0);
    }
    CHECK_THROWS_AS(lattice("ko", 0, 8), std::invalid_argument);
}

TEST_CASE("integral brown-gitler images") {
    auto rows = hz_image(1, 0, 12);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == LatticeGenerator{GenFamily::bo_v0, 1, 1, 1, 0});
    CHECK(rows[1] == LatticeGenerator{GenFamily::bo_free, 1, 2, 0, 0});
    CHECK(rows[2] == LatticeGenerator{GenFamily::bo_eta, 1, 2, 0, 1});
    CHECK(rows[3] == LatticeGenerator{GenFamily::bo_eta, 1, 2, 0, 2});
    CHECK(rows[4] == LatticeGenerator{GenFamily::bo_v0, 1, 3, 1, 0});
    CHECK(rows[0].stem() == 4);

    auto j0 = hz_image(0, 0, 4);
    REQUIRE(!j0.empty());
    CHECK(j0[0] == LatticeGenerator{GenFamily::bo_free, 0, 0, 0, 0});

    // the m = j member is b_j with 2-power (here v0-power) 2j - alpha(j)
    std::vector<int> bpow{0, 1, 3, 4, 7, 8, 10};
    for (int j = 0; j <= 6; ++j) {
        auto fam = j % 2 == 0 ? GenFamily::bo_free : GenFamily::bo_v0;
        auto bj = find_gen(hz_image(j, 0, 4L * j), fam, j, j);
        CHECK(bj.two_power == bpow[static_cast<size_t>(j)]);
        CHECK(bj.stem() == 4L * j);
    }
}

TEST_CASE("b_j leading-term congruence") {
    // 2^(2j-alpha(j)) u^(2j) f_j(w^2) agrees with ((v^2-u^2)/4)^j modulo
    // higher Adams filtration; with u-powers factored out this says
    // 4^j 2^(2j-alpha(j)) f_j(W) - (W-1)^j has all coefficient valuations > 0
    for (int j = 1; j <= 6; ++j) {
        Int sc = 1;
        sc <<= static_cast<unsigned long>(2 * j + 2 * j - alpha(j));
        NumPolyQ lhs = f9_basis(j).scale(Rat(sc));
        NumPolyQ rhs{{Rat(1)}};
        for (int i = 0; i < j; ++i) rhs = rhs * NumPolyQ{{rat(-1), rat(1)}};
        NumPolyQ diff = lhs - rhs;
        for (const Rat& v : diff.c)
            if (v != 0) CHECK(nu2(v) > 0);
        if (j == 1) CHECK(diff == NumPolyQ{});
    }
    // the j = 1 identity upstairs: u g_1(w) = (v - u)/2 under w = v/u
    NumPolyQ g1 = g_basis(1);
    CHECK(g1.c[0] == rat(-1, 2));  // u-coefficient of u g_1(v/u)
    CHECK(g1.c[1] == rat(1, 2));   // v-coefficient
}
