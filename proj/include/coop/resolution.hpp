#pragma once

#include "coop/algebra.hpp"
#include "coop/f2.hpp"

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace coop {

// Minimal free resolution of an AModule through homological degree s_max and
// internal degree t_max.  F_s has basis (generator k, algebra element a);
// the differential of each generator is stored as a sorted list of basis
// indices of F_{s-1} (of the module itself for s = 0).
struct FreeResolution {
    int level = 0;
    int s_max = 0;
    long t_max = 0;
    FiniteAlgebra alg;
    AModule mod;

    std::vector<std::vector<long>> gen_deg; // gen_deg[s][k]
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>
        fbasis;                             // fbasis[s][g] = (k, a)
    std::vector<std::vector<std::vector<std::uint32_t>>>
        findex;                             // findex[s][k][a], ~0 if absent
    std::vector<std::vector<std::vector<std::uint32_t>>>
        fby_deg;                            // fby_deg[s][t] (global indices)
    std::vector<std::vector<std::vector<std::uint32_t>>>
        dvec;                               // dvec[s][k], sorted

    int dim_at(int s, long t) const;
    std::vector<std::uint32_t> gens_at(int s, long t) const;
    // e_a . (k2, a2 = unit) expanded over F_{s-1} (module indices for s = 0)
    std::vector<std::uint32_t> image_of(int s, std::uint32_t k,
                                        std::uint32_t a) const;
};

FreeResolution minimal_resolution(const FiniteAlgebra& alg, const AModule& mod,
                                  int s_max, long t_max);

// d(d(g)) = 0 for every generator, and no differential hits a generator
// with unit algebra coefficient.
bool resolution_is_exact_complex(const FreeResolution& res);

struct ExtChart {
    int level = 0;
    int s_max = 0;
    long t_max = 0;
    std::map<std::pair<int, long>, int> dims;
    // hmul[{i, s, t}]: matrix of multiplication by h_i from (s, t) to
    // (s + 1, t + 2^i); rows = source classes
    std::map<std::tuple<int, int, long>, F2Matrix> hmul;

    int dim(int s, long t) const;
    const F2Matrix* hmat(int i, int s, long t) const;
};

ExtChart chart_of(const FreeResolution& res);

// One even stem of the h_0-tower census: how many infinite towers survive
// all h_0 multiplications visible in the window, and the filtrations of
// their bottom classes.  stable reports whether the count had settled for
// `margin` extra filtration steps before the window edge.
struct TowerReport {
    long stem = 0;
    bool known = false; // window too shallow for this stem when false
    int count = 0;
    std::vector<int> bottoms;
    bool stable = false;
    int margin_used = 0;
};

std::vector<TowerReport> v0_towers(const ExtChart& chart, long stem_lo,
                                   long stem_hi, int margin = 4);

} // namespace coop
