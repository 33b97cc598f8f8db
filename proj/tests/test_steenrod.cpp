#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coop/bg.hpp"
#include "coop/xi.hpp"

#include <map>
#include <set>
#include <string>

using namespace coop;

namespace {

std::string coaction_str(const XiMon& m, int n) {
    std::map<XiMon, XiPoly> grouped;
    for (const auto& [a, r] : coaction_an(m, n)) grouped[r].push_back(a);
    std::vector<std::pair<XiMon, XiPoly>> items(grouped.begin(), grouped.end());
    std::sort(items.begin(), items.end(),
              [](const auto& x, const auto& y) {
                  long dx = x.first.degree(), dy = y.first.degree();
                  if (dx != dy) return dx < dy;
                  return x.first < y.first;
              });
    std::string out;
    for (auto& [r, p] : items) {
        if (!out.empty()) out += "; ";
        out += "[" + poly_str(p, "x") + "] (x) " + r.str("xb");
    }
    return out;
}

std::string tensor_str(const XiTensor& t) {
    std::string out;
    for (const auto& [a, b] : t) {
        if (!out.empty()) out += " + ";
        out += "(" + a.str("xb") + ")(x)(" + b.str("xb") + ")";
    }
    return out;
}

} // namespace

TEST_CASE("conjugate generators in the xi basis") {
    CHECK(poly_str(conjugate_xi(1), "x") == "x1");
    CHECK(poly_str(conjugate_xi(2), "x") == "x2 + x1^3");
    CHECK(poly_str(conjugate_xi(3), "x") == "x3 + x1 x2^2 + x1^4 x2 + x1^7");
    CHECK(poly_str(conjugate_xi(4), "x") ==
          "x4 + x2^5 + x1 x3^2 + x1^3 x2^4 + x1^8 x3 + x1^9 x2^2 + x1^12 x2 + "
          "x1^15");
    CHECK(poly_str(conjugate_xi(5), "x") ==
          "x5 + x2 x3^4 + x2^8 x3 + x1 x4^2 + x1 x2^10 + x1^3 x3^4 + x1^4 x2^9 "
          "+ x1^7 x2^8 + x1^16 x4 + x1^16 x2^5 + x1^17 x3^2 + x1^19 x2^4 + "
          "x1^24 x3 + x1^25 x2^2 + x1^28 x2 + x1^31");
}

TEST_CASE("defining relation of the conjugates") {
    // sum_{i+j=n} xi_i^{2^j} xibar_j = 0 for n >= 1
    for (int n = 1; n <= 6; ++n) {
        XiPoly acc;
        for (int i = 0; i <= n; ++i) {
            int j = n - i;
            XiPoly xi_part =
                i ? poly_pow({XiMon::gen(i)}, 1L << j) : XiPoly{XiMon::one()};
            acc = poly_add(acc, poly_mul(xi_part, conjugate_xi(j)));
        }
        CHECK(acc.empty());
    }
}

TEST_CASE("coproduct in the conjugate basis") {
    CHECK(tensor_str(coproduct_xibar(XiMon::gen(2))) ==
          "(1)(x)(xb2) + (xb2)(x)(1) + (xb1)(x)(xb1^2)");
    CHECK(tensor_str(coproduct_xibar(XiMon::gen(2, 2))) ==
          "(1)(x)(xb2^2) + (xb2^2)(x)(1) + (xb1^2)(x)(xb1^4)");

    // coassociativity through the full coproduct, spot monomials; terms of
    // even multiplicity cancel
    auto reduce = [](std::vector<std::tuple<XiMon, XiMon, XiMon>>& v) {
        std::sort(v.begin(), v.end());
        std::vector<std::tuple<XiMon, XiMon, XiMon>> r;
        for (std::size_t a = 0; a < v.size();) {
            std::size_t b = a;
            while (b < v.size() && v[b] == v[a]) ++b;
            if ((b - a) & 1) r.push_back(v[a]);
            a = b;
        }
        v.swap(r);
    };
    for (const XiMon& m : {XiMon({4, 2}), XiMon({0, 0, 2}), XiMon({1, 1, 1})}) {
        std::vector<std::tuple<XiMon, XiMon, XiMon>> lhs, rhs;
        for (const auto& [a, b] : coproduct_xibar(m))
            for (const auto& [a1, a2] : coproduct_xibar(a))
                lhs.emplace_back(a1, a2, b);
        for (const auto& [a, b] : coproduct_xibar(m))
            for (const auto& [b1, b2] : coproduct_xibar(b))
                rhs.emplace_back(a, b1, b2);
        reduce(lhs);
        reduce(rhs);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("reduced coactions over A(n)") {
    CHECK(coaction_str(XiMon::gen(2, 4), 2) ==
          "[x1^4] (x) xb1^8; [1] (x) xb2^4");
    CHECK(coaction_str(XiMon::gen(3, 12), 2) ==
          "[x1^4] (x) xb2^8 xb3^8; [1] (x) xb3^12");
    CHECK(coaction_str(XiMon::gen(1, 2), 1) == "[x1^2] (x) 1; [1] (x) xb1^2");
    CHECK(coaction_str(XiMon::gen(1, 4), 1) == "[1] (x) xb1^4");

    // right factors never gain weight, left factors make up the degree
    // difference
    for (const XiMon& m : {XiMon({8, 4}), XiMon({0, 4, 2}), XiMon({2, 1})}) {
        for (int lvl : {0, 1, 2}) {
            for (const auto& [a, r] : coaction_an(m, lvl)) {
                CHECK(r.weight() <= m.weight());
                CHECK(a.degree() + r.degree() == m.degree());
            }
        }
    }

    // for a monomial matched to the level (exponent pattern of (A//A(lvl))_*)
    // the coaction is weight-homogeneous: the lefts that would absorb weight
    // expand to zero in A(lvl)_*
    for (const XiMon& m : {XiMon({8, 4}), XiMon({0, 4, 2}), XiMon({16, 0, 2, 1})}) {
        for (const auto& [a, r] : coaction_an(m, 2)) CHECK(r.weight() == m.weight());
    }
    for (const XiMon& m : {XiMon({4, 2}), XiMon({8, 0, 3})}) {
        for (const auto& [a, r] : coaction_an(m, 1)) CHECK(r.weight() == m.weight());
    }
}

TEST_CASE("weight filtration basis sizes") {
    auto sizes = [](int lvl, int hi) {
        std::vector<std::size_t> v;
        for (int j = 0; j <= hi; ++j) v.push_back(bg_basis(lvl, j).size());
        return v;
    };
    CHECK(sizes(-1, 8) == std::vector<std::size_t>{1, 2, 4, 6, 10, 14, 20, 26, 36});
    CHECK(sizes(0, 6) == std::vector<std::size_t>{1, 3, 7, 13, 23, 37, 57});
    CHECK(sizes(1, 8) ==
          std::vector<std::size_t>{1, 4, 11, 24, 47, 84, 141, 224, 343});
    CHECK(sizes(2, 3) == std::vector<std::size_t>{1, 5, 16, 40});
}

TEST_CASE("comodule axioms hold for built modules") {
    CHECK(comodule_axioms(BGModule::make(1, 0, {CellAlgebra::bg(0, 2)})));
    CHECK(comodule_axioms(BGModule::make(2, 0, {CellAlgebra::bg(1, 2)})));
    CHECK(comodule_axioms(BGModule::make(1, 0, {CellAlgebra::quotient(1, 0)})));
    CHECK(comodule_axioms(BGModule::make(2, 0, {CellAlgebra::quotient(2, 1)})));
    CHECK(comodule_axioms(
        BGModule::make(2, 0, {CellAlgebra::bg(2, 1), CellAlgebra::quotient(2, 1)})));
    CHECK(comodule_axioms(
        BGModule::make(2, 8, {CellAlgebra::bg(1, 1), CellAlgebra::bg(1, 1)})));
}

TEST_CASE("integral family exact sequences") {
    for (int j = 1; j <= 4; ++j) {
        for (bool odd : {false, true}) {
            auto ses = ses_maps(0, j, odd);
            CAPTURE(j);
            CAPTURE(odd);
            CHECK(ses.exact);
            CHECK(ses.incl_strict);
            CHECK(ses.proj_graded);
            CHECK(ses.maps_commute_with_coaction);
        }
    }
    auto s1 = ses_maps(0, 1, false);
    CHECK(s1.mid.dim() == 7);  // weight filtration 2
    CHECK(s1.sub.dim() == 3);
    CHECK(s1.quot.dim() == 4);
}

TEST_CASE("bo family exact sequences") {
    for (int j = 1; j <= 3; ++j) {
        for (bool odd : {false, true}) {
            auto ses = ses_maps(1, j, odd);
            CAPTURE(j);
            CAPTURE(odd);
            CHECK(ses.exact);
            CHECK(ses.incl_strict);
            CHECK(ses.proj_graded);
            CHECK(ses.coker_strict);
            CHECK(ses.maps_commute_with_coaction);
            if (!odd) CHECK(ses.coker.has_value());
        }
    }
    auto s1 = ses_maps(1, 1, false);
    CHECK(s1.mid.dim() == 11);
    CHECK(s1.sub.dim() == 4);
    CHECK(s1.quot.dim() == 8);
    CHECK(s1.coker->dim() == 1);
}

TEST_CASE("weight splitting partitions the degree-64 skeleton") {
    auto full = CellAlgebra::bg(2, 8).enumerate(64);
    CHECK(full.size() == 148);
    std::set<XiMon> seen;
    std::size_t produced = 0;
    for (int j = 0; j <= 8; ++j) {
        for (const auto& src : bg_basis(1, j)) {
            if (src.degree() + 8L * j > 64) continue;
            XiMon img = splitting_map(2, j, src);
            CHECK(img.weight() == 8L * j);
            CHECK(img.degree() == src.degree() + 8L * j);
            CHECK(seen.insert(img).second);
            ++produced;
        }
    }
    CHECK(produced == full.size());
    for (const auto& m : full) CHECK(seen.count(m) == 1);

    std::map<long, int> by_deg;
    for (const auto& m : full) by_deg[m.degree()]++;
    CHECK(by_deg[49] == 1);
    CHECK(by_deg[60] == 8);
    CHECK(by_deg[64] == 7);
}

TEST_CASE("rational generator table") {
    auto fmt = [](int n) {
        std::vector<std::string> lines;
        for (const auto& row : rational_generators(n)) {
            std::string s = "S^" + std::to_string(row.susp) + " " + row.label + ": ";
            for (std::size_t i = 0; i < row.gens.size(); ++i)
                s += (i ? ", " : "") + row.gens[i];
            lines.push_back(s);
        }
        return lines;
    };
    CHECK(fmt(0) == std::vector<std::string>{"S^0 F2: 1"});
    CHECK(fmt(1) == std::vector<std::string>{"S^8 bo_1: xb1^8, xb2^4"});
    CHECK(fmt(2) == std::vector<std::string>{
                        "S^16 (A(2)//A(1)): xb1^16, xb1^8 xb2^4",
                        "S^24 bo_1: xb2^8, xb3^4",
                        "S^32 F2[1]: v0^-4 [c6] xb1^8 xb2^4 + ...",
                    });
    CHECK(fmt(3) == std::vector<std::string>{
                        "S^24 (A(2)//A(1)): xb1^24, xb1^16 xb2^4",
                        "S^32 bo_1^2: xb1^8 xb2^8, xb2^12, xb1^8 xb3^4, xb2^4 xb3^4",
                    });
    CHECK(fmt(4) ==
          std::vector<std::string>{
              "S^32 (A(2)//A(1)) (x) tmf_1: xb1^32, xb1^24 xb2^4, xb1^16 "
              "xb2^8, xb1^8 xb2^12, xb1^16 xb3^4, xb1^8 xb2^4 xb3^4",
              "S^48 (A(2)//A(1)): xb2^16, xb2^8 xb3^4",
              "S^56 bo_1: xb3^8, xb4^4",
              "S^64 F2[1]: v0^-4 [c6] xb2^8 xb3^4 + ...",
              "S^56 bo_1[1]: v0^-4 [c6] xb1^8 xb2^12 + ..., v0^-4 [c6] xb1^8 "
              "xb2^4 xb3^4 + ...",
          });
    CHECK(fmt(8) ==
          std::vector<std::string>{
              "S^64 (A(2)//A(1)) (x) tmf_3: xb1^64, xb1^56 xb2^4, xb1^48 "
              "xb2^8, xb1^40 xb2^12, xb1^48 xb3^4, xb1^40 xb2^4 xb3^4, xb1^32 "
              "xb2^16, xb1^24 xb2^20, xb1^32 xb2^8 xb3^4, xb1^24 xb2^12 "
              "xb3^4, xb1^32 xb3^8, xb1^24 xb2^4 xb3^8, xb1^16 xb2^24, xb1^8 "
              "xb2^28, xb1^16 xb2^16 xb3^4, xb1^8 xb2^20 xb3^4, xb1^16 xb2^8 "
              "xb3^8, xb1^8 xb2^12 xb3^8, xb1^16 xb3^12, xb1^8 xb2^4 xb3^12",
              "S^96 (A(2)//A(1)) (x) tmf_1: xb2^32, xb2^24 xb3^4, xb2^16 "
              "xb3^8, xb2^8 xb3^12, xb2^16 xb4^4, xb2^8 xb3^4 xb4^4",
              "S^112 (A(2)//A(1)): xb3^16, xb3^8 xb4^4",
              "S^120 bo_1: xb4^8, xb5^4",
              "S^128 F2[1]: v0^-4 [c6] xb3^8 xb4^4 + ...",
              "S^120 bo_1[1]: v0^-4 [c6] xb2^8 xb3^12 + ..., v0^-4 [c6] "
              "xb2^8 xb3^4 xb4^4 + ...",
              "S^104 bo_3[1]: v0^-4 [c6] xb1^8 xb2^28 + ..., v0^-4 [c6] "
              "xb1^8 xb2^20 xb3^4 + ..., v0^-4 [c6] xb1^8 xb2^12 xb3^8 + "
              "..., v0^-4 [c6] xb1^8 xb2^4 xb3^12 + ...",
          });

    // every generator of the weight-8n summand has weight exactly 8n
    for (int n = 0; n <= 8; ++n) {
        std::size_t total = 0;
        for (const auto& row : rational_generators(n)) total += row.gens.size();
        static const std::size_t expect[] = {1, 2, 5, 6, 13, 16, 21, 24, 37};
        CHECK(total == expect[n]);
    }
}
