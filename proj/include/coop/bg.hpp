#pragma once

#include "coop/f2.hpp"
#include "coop/xi.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coop {

// Span of conjugate-basis monomials cut out by exponent steps (and, for
// quotient algebras, exponent bounds) plus an optional weight cap.
struct CellAlgebra {
    // kind 0: monomials of (A//A(i))_* of weight <= wt_cap
    // kind 1: (A(n)//A(m))_*
    int kind = 0;
    int i = 0;
    int n = 0, m = 0;
    long wt_cap = -1;

    static CellAlgebra bg(int i, int j);       // weight <= 2^{i+1} j
    static CellAlgebra quotient(int n, int m); // (A(n)//A(m))_*

    bool admits(const XiMon& mon) const;
    std::vector<XiMon> enumerate(long maxdeg = -1) const;
};

// Finite comodule over A(level)_* with a basis of tensor words of
// conjugate-basis monomials.
struct BGModule {
    int level = 0;
    long susp = 0;
    std::vector<CellAlgebra> factors;
    std::vector<std::vector<XiMon>> basis; // sorted words
    std::vector<long> deg;                 // susp + word degree
    // reduced coaction: per basis element, xor-list of (A(level)_* xi-monomial,
    // target basis index), sorted
    std::vector<std::vector<std::pair<XiMon, std::size_t>>> coact;

    std::size_t dim() const { return basis.size(); }
    std::size_t index_of(const std::vector<XiMon>& word) const;

    // maxdeg >= 0 keeps only basis words with deg <= maxdeg
    static BGModule make(int level, long susp, std::vector<CellAlgebra> fs,
                         long maxdeg = -1);
};

// Monomial basis of the weight-filtration piece N_i(j), by (degree, lex).
std::vector<XiMon> bg_basis(int i, int j, long maxdeg = -1);

// N_{i-1}(j) -> (A//A(i))_*: m -> g_1^(2^{i+1} j - 2 wt(m)) * shift(m).
XiMon splitting_map(int i, int j, const XiMon& m);

// Comodule axioms (counit and coassociativity) for a built module.
bool comodule_axioms(const BGModule& mod);

// f given by rows over src basis; checks (1 (x) f) alpha_src = alpha_tgt f.
bool is_comodule_map(const BGModule& src, const BGModule& tgt, const F2Matrix& f);

// Like is_comodule_map, but the two sides may differ by terms whose target
// body weight strictly exceeds the source body weight. With the target
// filtered by body weight this says f is a filtered comodule map that is
// strict on the associated graded.
bool is_graded_comodule_map(const BGModule& src, const BGModule& tgt,
                            const F2Matrix& f, const std::vector<long>& src_bw,
                            const std::vector<long>& tgt_bw);

struct SESData {
    BGModule sub, mid, quot;
    std::optional<BGModule> coker;
    F2Matrix incl, proj, cokermap;
    // The inclusion commutes with the coactions on the nose. The projection
    // onto the tensor target does not (its target is the associated graded of
    // the body-weight filtration, not the quotient itself): it commutes up to
    // terms of strictly higher body weight, and since the body factor's
    // coaction is weight-homogeneous, that makes it an isomorphism of
    // comodules on the associated graded. The cokernel map (bo family, even
    // index) commutes on the nose.
    bool incl_strict = false;
    bool proj_graded = false;
    bool coker_strict = true;
    bool maps_commute_with_coaction = false; // AND of the three above
    bool exact = false;
};

// family 0: integral modules over A(1)_* (parity of the middle term follows
// j: even middle N_0(2j), odd N_0(2j+1)); family 1: bo modules over A(2)_*.
SESData ses_maps(int family, int j, bool odd);

struct RatRow {
    long susp;
    std::string label;
    std::vector<std::string> gens;
};

// Generator table of the weight-8n summand of the rationalized Ext of
// (A//A(2))_*, rendered canonically.
std::vector<RatRow> rational_generators(int n);

} // namespace coop
