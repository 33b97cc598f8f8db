#include "coop/resolution.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace coop {

namespace {

constexpr std::uint32_t kAbsent = ~std::uint32_t(0);

void parity_reduce(std::vector<std::uint32_t>& v) {
    std::sort(v.begin(), v.end());
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if ((j - i) & 1) out.push_back(v[i]);
        i = j;
    }
    v.swap(out);
}

// incremental echelon basis used for both the span and the new generators
struct Echelon {
    std::vector<F2Vec> rows;
    std::vector<std::size_t> pivots;

    // reduces v in place; returns false if it drops to zero
    bool reduce(F2Vec& v) const {
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (v.get(pivots[r])) v.xor_in(rows[r]);
        return !v.is_zero();
    }
    void insert(const F2Vec& v) {
        rows.push_back(v);
        pivots.push_back(v.first_set());
    }
};

} // namespace

int FreeResolution::dim_at(int s, long t) const {
    if (s < 0 || s > s_max || t < 0 || t > t_max) return 0;
    int n = 0;
    for (long d : gen_deg[s])
        if (d == t) ++n;
    return n;
}

std::vector<std::uint32_t> FreeResolution::gens_at(int s, long t) const {
    std::vector<std::uint32_t> out;
    if (s < 0 || s > s_max) return out;
    for (std::uint32_t k = 0; k < gen_deg[s].size(); ++k)
        if (gen_deg[s][k] == t) out.push_back(k);
    return out;
}

std::vector<std::uint32_t> FreeResolution::image_of(int s, std::uint32_t k,
                                                    std::uint32_t a) const {
    std::vector<std::uint32_t> out;
    if (s == 0) {
        F2Vec acc(mod.dim());
        for (std::uint32_t i : dvec[0][k]) acc.xor_in(mod.act[a].row(i));
        for (std::size_t i = 0; i < acc.size(); ++i)
            if (acc.get(i)) out.push_back((std::uint32_t)i);
        return out;
    }
    for (std::uint32_t gi : dvec[s][k]) {
        auto [k2, a2] = fbasis[s - 1][gi];
        for (std::size_t c : alg.mult[a][a2]) {
            std::uint32_t idx = findex[s - 1][k2][c];
            if (idx == kAbsent)
                throw std::logic_error("image_of: basis element out of range");
            out.push_back(idx);
        }
    }
    parity_reduce(out);
    return out;
}

FreeResolution minimal_resolution(const FiniteAlgebra& alg, const AModule& mod,
                                  int s_max, long t_max) {
    FreeResolution res;
    res.level = alg.level;
    res.s_max = s_max;
    res.t_max = t_max;
    res.alg = alg;
    res.mod = mod;
    res.gen_deg.resize(s_max + 1);
    res.fbasis.resize(s_max + 1);
    res.findex.resize(s_max + 1);
    res.fby_deg.assign(s_max + 1,
                       std::vector<std::vector<std::uint32_t>>(t_max + 1));

    std::size_t asize = alg.dim();
    std::vector<std::vector<std::uint32_t>> mod_by_deg(t_max + 1);
    for (std::uint32_t i = 0; i < mod.dim(); ++i)
        if (mod.deg[i] >= 0 && mod.deg[i] <= t_max)
            mod_by_deg[mod.deg[i]].push_back(i);

    auto add_generator = [&](int s, long t,
                             const std::vector<std::uint32_t>& d_sorted) {
        std::uint32_t k = (std::uint32_t)res.gen_deg[s].size();
        res.gen_deg[s].push_back(t);
        res.dvec[s].push_back(d_sorted);
        res.findex[s].emplace_back(asize, kAbsent);
        for (std::size_t a = 0; a < asize; ++a) {
            long td = t + alg.deg[a];
            if (td > t_max) continue;
            std::uint32_t gidx = (std::uint32_t)res.fbasis[s].size();
            res.fbasis[s].emplace_back(k, (std::uint32_t)a);
            res.findex[s][k][a] = gidx;
            res.fby_deg[s][td].push_back(gidx);
        }
    };
    res.dvec.resize(s_max + 1);

    for (long t = 0; t <= t_max; ++t) {
        for (int s = 0; s <= s_max; ++s) {
            // coordinate space where degree-t cycles of d_{s-1} live
            const std::vector<std::uint32_t>& space =
                s == 0 ? mod_by_deg[t] : res.fby_deg[s - 1][t];
            if (space.empty()) continue;

            std::vector<F2Vec> cycles;
            if (s == 0) {
                for (std::size_t i = 0; i < space.size(); ++i) {
                    F2Vec v(space.size());
                    v.set(i);
                    cycles.push_back(v);
                }
            } else {
                const std::vector<std::uint32_t>& cols =
                    s == 1 ? mod_by_deg[t] : res.fby_deg[s - 2][t];
                std::unordered_map<std::uint32_t, std::size_t> cpos;
                for (std::size_t i = 0; i < cols.size(); ++i) cpos[cols[i]] = i;
                F2Matrix m(space.size(), cols.size());
                for (std::size_t i = 0; i < space.size(); ++i) {
                    auto [k2, a2] = res.fbasis[s - 1][space[i]];
                    for (std::uint32_t g : res.image_of(s - 1, k2, a2))
                        m.flip(i, cpos.at(g));
                }
                F2Matrix ker = m.left_kernel_basis();
                for (std::size_t i = 0; i < ker.row_count(); ++i)
                    cycles.push_back(ker.row(i));
            }
            if (cycles.empty()) continue;

            // boundaries: images of the non-generator part of F_s at degree t
            Echelon ech;
            std::unordered_map<std::uint32_t, std::size_t> spos;
            for (std::size_t i = 0; i < space.size(); ++i) spos[space[i]] = i;
            for (std::uint32_t gidx : res.fby_deg[s][t]) {
                auto [k2, a2] = res.fbasis[s][gidx];
                F2Vec v(space.size());
                for (std::uint32_t g : res.image_of(s, k2, a2))
                    v.flip(spos.at(g));
                if (ech.reduce(v)) ech.insert(v);
            }

            for (F2Vec& v : cycles) {
                if (!ech.reduce(v)) continue;
                ech.insert(v);
                std::vector<std::uint32_t> d_global;
                for (std::size_t i = 0; i < space.size(); ++i)
                    if (v.get(i)) d_global.push_back(space[i]);
                if (s >= 1)
                    for (std::uint32_t g : d_global)
                        if (res.fbasis[s - 1][g].second == 0)
                            throw std::logic_error(
                                "minimal_resolution: non-minimal kernel");
                std::sort(d_global.begin(), d_global.end());
                add_generator(s, t, d_global);
            }
        }
    }
    return res;
}

bool resolution_is_exact_complex(const FreeResolution& res) {
    for (int s = 1; s <= res.s_max; ++s)
        for (std::uint32_t k = 0; k < res.gen_deg[s].size(); ++k) {
            std::vector<std::uint32_t> dd;
            for (std::uint32_t gi : res.dvec[s][k]) {
                auto [k2, a2] = res.fbasis[s - 1][gi];
                if (a2 == 0) return false;
                auto part = res.image_of(s - 1, k2, a2);
                dd.insert(dd.end(), part.begin(), part.end());
            }
            parity_reduce(dd);
            if (!dd.empty()) return false;
        }
    return true;
}

int ExtChart::dim(int s, long t) const {
    auto it = dims.find({s, t});
    return it == dims.end() ? 0 : it->second;
}

const F2Matrix* ExtChart::hmat(int i, int s, long t) const {
    auto it = hmul.find({i, s, t});
    return it == hmul.end() ? nullptr : &it->second;
}

ExtChart chart_of(const FreeResolution& res) {
    ExtChart chart;
    chart.level = res.level;
    chart.s_max = res.s_max;
    chart.t_max = res.t_max;
    for (int s = 0; s <= res.s_max; ++s)
        for (long d : res.gen_deg[s]) ++chart.dims[{s, d}];

    // <h_i g^_{s,j}, g_{s+1,k}> reads off the (xi_1^{2^i}, j) coefficient of
    // d(g_{s+1,k}); valid because xi_1^{2^i} is primitive in A(level)_*.
    for (int i = 0; i <= res.level; ++i) {
        std::uint32_t a_hi =
            (std::uint32_t)res.alg.index.at(XiMon::gen(1, 1 << i));
        for (const auto& kv : chart.dims) {
            auto [s, t] = kv.first;
            if (s + 1 > res.s_max || t + (1 << i) > res.t_max) continue;
            auto src = res.gens_at(s, t);
            auto tgt = res.gens_at(s + 1, t + (1 << i));
            F2Matrix m(src.size(), tgt.size());
            for (std::size_t col = 0; col < tgt.size(); ++col) {
                const auto& d = res.dvec[s + 1][tgt[col]];
                for (std::size_t row = 0; row < src.size(); ++row) {
                    std::uint32_t want = res.findex[s][src[row]][a_hi];
                    if (want != kAbsent &&
                        std::binary_search(d.begin(), d.end(), want))
                        m.set(row, col);
                }
            }
            chart.hmul[{i, s, t}] = std::move(m);
        }
    }
    return chart;
}

std::vector<TowerReport> v0_towers(const ExtChart& chart, long stem_lo,
                                   long stem_hi, int margin) {
    std::vector<TowerReport> out;
    for (long n = stem_lo; n <= stem_hi; ++n) {
        TowerReport rep;
        rep.stem = n;
        rep.margin_used = margin;
        int cap = (int)std::min<long>(chart.s_max, chart.t_max - n);
        if (cap - margin < 1) {
            out.push_back(std::move(rep));
            continue;
        }
        rep.known = true;
        std::vector<int> alive;
        for (int s = 0; s + margin <= cap; ++s) {
            int d = chart.dim(s, n + s);
            F2Matrix acc = identity_matrix(d);
            for (int s2 = s; s2 < cap && acc.col_count() > 0; ++s2) {
                const F2Matrix* h = chart.hmat(0, s2, n + s2);
                if (!h) {
                    acc = F2Matrix(acc.row_count(), 0);
                    break;
                }
                acc = matmul(acc, *h);
            }
            alive.push_back((int)acc.rank());
        }
        if (!alive.empty()) {
            rep.count = alive.back();
            std::size_t m = alive.size();
            rep.stable = m >= 3 && alive[m - 1] == alive[m - 2] &&
                         alive[m - 2] == alive[m - 3];
            int prev = 0;
            for (std::size_t s = 0; s < m; ++s) {
                for (int r = 0; r < alive[s] - prev; ++r)
                    rep.bottoms.push_back((int)s);
                prev = alive[s];
            }
        }
        out.push_back(std::move(rep));
    }
    return out;
}

} // namespace coop
