#pragma once

#include "coop/algebra.hpp"
#include "coop/bg.hpp"
#include "coop/xi.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace coop {

struct CobarOptions {
    int s_max = 6;
    long t_max = 12;
    // hard bound on the total number of cochain basis words; exceeding it
    // throws instead of grinding
    std::size_t guard = 200000;
};

struct CobarChart {
    int s_max = 0;
    long t_max = 0;
    std::map<std::pair<int, long>, int> dims;
    std::map<std::pair<int, long>, std::size_t> cdim; // cochain block sizes
    std::size_t total_cells = 0;
    // per-column Euler characteristic identity, checked on the complete
    // columns t <= s_max
    bool euler_ok = false;

    int dim(int s, long t) const;
};

// Reduced cobar complex of a comodule; ranks of the bar differential give
// Ext^{s,t} for s <= s_max, t <= t_max.
CobarChart cobar_ext(const BGModule& mod, const CobarOptions& opt);

// Cochain with bars written as conjugate-basis monomials and coefficients in
// the conjugate-basis monomial span; expanded internally to the dual basis.
struct CobarChain {
    int level = 2;
    std::vector<std::pair<std::vector<XiMon>, XiPoly>> terms;
};

// cells of the expanded chain: (bar word in the dual basis, module monomial)
using CobarCells = std::vector<std::pair<std::vector<XiMon>, XiMon>>;

CobarCells cobar_expand(const CobarChain& chain);
CobarCells cobar_boundary(const CobarCells& cells, int level);
bool cobar_is_cocycle(const CobarChain& chain);

// One configured dataset both Ext engines run on: a comodule plus a
// resolution window and a cobar window.
struct ExtPair {
    std::string name;
    int level = 0;
    BGModule comodule;
    int res_s_max = 0;
    long res_t_max = 0;
    CobarOptions cobar;
};

// The five datasets the engines are certified to agree on.
std::vector<ExtPair> ext_oracle_pairs();

// Compares the two engines on a dataset over s <= cobar s_max,
// t <= cobar t_max; true iff every dimension matches.
bool ext_engines_agree(const ExtPair& pair);

} // namespace coop
