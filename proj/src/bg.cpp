#include "coop/bg.hpp"

#include <algorithm>
#include <stdexcept>

namespace coop {

CellAlgebra CellAlgebra::bg(int i, int j) {
    CellAlgebra c;
    c.kind = 0;
    c.i = i;
    c.wt_cap = (1L << (i + 1)) * j;
    return c;
}

CellAlgebra CellAlgebra::quotient(int n, int m) {
    CellAlgebra c;
    c.kind = 1;
    c.n = n;
    c.m = m;
    return c;
}

static int step_of(int lvl, int k) { return 1 << std::max(lvl + 2 - k, 0); }

bool CellAlgebra::admits(const XiMon& mon) const {
    if (kind == 0) {
        if (mon.weight() > wt_cap) return false;
        for (std::size_t t = 0; t < mon.e.size(); ++t)
            if (mon.e[t] % step_of(i, (int)t + 1)) return false;
        return true;
    }
    for (std::size_t t = 0; t < mon.e.size(); ++t) {
        int k = (int)t + 1;
        if (k > n + 1) {
            if (mon.e[t]) return false;
        } else if (mon.e[t] % step_of(m, k) || mon.e[t] >= (1 << (n + 2 - k))) {
            return false;
        }
    }
    return true;
}

std::vector<XiMon> CellAlgebra::enumerate(long maxdeg) const {
    std::vector<XiMon> out{XiMon::one()};
    if (kind == 1) {
        for (int k = 1; k <= n + 1; ++k) {
            std::vector<XiMon> next;
            for (const auto& mon : out)
                for (int e = 0; e < (1 << (n + 2 - k)); e += step_of(m, k))
                    next.push_back(mon * XiMon::gen(k, e));
            out.swap(next);
        }
    } else {
        long bound = wt_cap;
        std::vector<std::pair<int, int>> gens; // (k, step)
        for (int k = 1; step_of(i, k) * (1L << (k - 1)) <= bound; ++k)
            gens.emplace_back(k, step_of(i, k));

        struct Frame {
            std::size_t gi;
            long wt;
            XiMon cur;
        };
        std::vector<Frame> stack{{0, 0, XiMon::one()}};
        out.clear();
        out.push_back(XiMon::one());
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            for (std::size_t g = f.gi; g < gens.size(); ++g) {
                auto [k, st] = gens[g];
                for (long e = st; f.wt + e * (1L << (k - 1)) <= bound; e += st) {
                    XiMon mon = f.cur * XiMon::gen(k, (int)e);
                    if (maxdeg >= 0 && mon.degree() > maxdeg) continue;
                    out.push_back(mon);
                    stack.push_back({g + 1, f.wt + e * (1L << (k - 1)), mon});
                }
            }
        }
    }
    if (maxdeg >= 0) {
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [&](const XiMon& m) { return m.degree() > maxdeg; }),
                  out.end());
    }
    std::sort(out.begin(), out.end(), [](const XiMon& a, const XiMon& b) {
        long da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<XiMon> bg_basis(int i, int j, long maxdeg) {
    return CellAlgebra::bg(i, j).enumerate(maxdeg);
}

XiMon splitting_map(int i, int j, const XiMon& m) {
    long a = (1L << (i + 1)) * j - 2 * m.weight();
    if (a < 0) throw std::invalid_argument("weight exceeds filtration");
    return XiMon::gen(1, (int)a) * m.shift_up();
}

std::size_t BGModule::index_of(const std::vector<XiMon>& word) const {
    std::size_t lo = 0, hi = basis.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (basis[mid] < word) lo = mid + 1;
        else hi = mid;
    }
    if (lo == basis.size() || basis[lo] != word)
        throw std::logic_error("word not in basis");
    return lo;
}

template <class T>
static void xor_normalize(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    std::vector<T> r;
    for (std::size_t a = 0; a < v.size();) {
        std::size_t b = a;
        while (b < v.size() && v[b] == v[a]) ++b;
        if ((b - a) & 1) r.push_back(v[a]);
        a = b;
    }
    v.swap(r);
}

BGModule BGModule::make(int level, long susp, std::vector<CellAlgebra> fs,
                        long maxdeg) {
    BGModule mod;
    mod.level = level;
    mod.susp = susp;
    mod.factors = fs;

    long word_cap = maxdeg >= 0 ? maxdeg - susp : -1;
    std::vector<std::pair<std::vector<XiMon>, long>> grown{{{}, 0}};
    for (const auto& f : fs) {
        auto fb = f.enumerate(word_cap);
        std::vector<std::pair<std::vector<XiMon>, long>> next;
        next.reserve(grown.size() * fb.size());
        for (const auto& [w, wd] : grown)
            for (const auto& m : fb) {
                long d = wd + m.degree();
                if (word_cap >= 0 && d > word_cap) continue;
                auto w2 = w;
                w2.push_back(m);
                next.emplace_back(std::move(w2), d);
            }
        grown.swap(next);
    }
    std::vector<std::vector<XiMon>> words;
    words.reserve(grown.size());
    for (auto& [w, wd] : grown) words.push_back(std::move(w));
    std::sort(words.begin(), words.end());
    mod.basis = std::move(words);
    mod.deg.reserve(mod.basis.size());
    for (const auto& w : mod.basis) {
        long d = susp;
        for (const auto& m : w) d += m.degree();
        mod.deg.push_back(d);
    }

    mod.coact.resize(mod.basis.size());
    for (std::size_t s = 0; s < mod.basis.size(); ++s) {
        // per-factor coactions with pattern-clipped right factors, combined
        std::vector<std::pair<XiMon, std::vector<XiMon>>> acc{{XiMon::one(), {}}};
        for (std::size_t t = 0; t < fs.size(); ++t) {
            std::vector<std::pair<XiMon, XiMon>> part;
            for (const auto& [l, r] : coproduct_xibar(mod.basis[s][t]))
                if (fs[t].admits(r)) part.emplace_back(l, r);
            std::vector<std::pair<XiMon, std::vector<XiMon>>> next;
            next.reserve(acc.size() * part.size());
            for (const auto& [l0, w0] : acc)
                for (const auto& [l, r] : part) {
                    auto w = w0;
                    w.push_back(r);
                    next.emplace_back(l0 * l, std::move(w));
                }
            xor_normalize(next);
            acc.swap(next);
        }
        std::vector<std::pair<XiMon, std::size_t>> rows;
        for (const auto& [lbar, w] : acc) {
            std::size_t tgt = mod.index_of(w);
            for (const auto& a : clip_an(expand_xibar(lbar), level))
                rows.emplace_back(a, tgt);
        }
        xor_normalize(rows);
        mod.coact[s] = std::move(rows);
    }
    return mod;
}

bool comodule_axioms(const BGModule& mod) {
    for (std::size_t s = 0; s < mod.dim(); ++s) {
        // counit
        std::vector<std::size_t> unit_terms;
        for (const auto& [a, t] : mod.coact[s])
            if (a.is_one()) unit_terms.push_back(t);
        if (unit_terms.size() != 1 || unit_terms[0] != s) return false;
        // coassociativity
        std::vector<std::tuple<XiMon, XiMon, std::size_t>> lhs, rhs;
        for (const auto& [a, t] : mod.coact[s])
            for (const auto& [a1, a2] : coproduct_an(a, mod.level))
                lhs.emplace_back(a1, a2, t);
        for (const auto& [a, t] : mod.coact[s])
            for (const auto& [b, u] : mod.coact[t])
                rhs.emplace_back(a, b, u);
        xor_normalize(lhs);
        xor_normalize(rhs);
        if (lhs != rhs) return false;
    }
    return true;
}

bool is_comodule_map(const BGModule& src, const BGModule& tgt, const F2Matrix& f) {
    if (f.row_count() != src.dim() || f.col_count() != tgt.dim()) return false;
    for (std::size_t s = 0; s < src.dim(); ++s) {
        std::vector<std::pair<XiMon, std::size_t>> lhs, rhs;
        for (const auto& [a, t] : src.coact[s])
            for (std::size_t n = 0; n < tgt.dim(); ++n)
                if (f.get(t, n)) lhs.emplace_back(a, n);
        for (std::size_t n = 0; n < tgt.dim(); ++n)
            if (f.get(s, n))
                rhs.insert(rhs.end(), tgt.coact[n].begin(), tgt.coact[n].end());
        xor_normalize(lhs);
        xor_normalize(rhs);
        if (lhs != rhs) return false;
    }
    return true;
}

bool is_graded_comodule_map(const BGModule& src, const BGModule& tgt,
                            const F2Matrix& f, const std::vector<long>& src_bw,
                            const std::vector<long>& tgt_bw) {
    if (f.row_count() != src.dim() || f.col_count() != tgt.dim()) return false;
    // the target filtration must be coaction-invariant degreewise: every
    // coaction term of a target element keeps its body weight
    for (std::size_t n = 0; n < tgt.dim(); ++n)
        for (const auto& [a, u] : tgt.coact[n])
            if (tgt_bw[u] != tgt_bw[n]) return false;
    for (std::size_t s = 0; s < src.dim(); ++s) {
        std::vector<std::pair<XiMon, std::size_t>> diff;
        for (const auto& [a, t] : src.coact[s])
            for (std::size_t n = 0; n < tgt.dim(); ++n)
                if (f.get(t, n)) diff.emplace_back(a, n);
        for (std::size_t n = 0; n < tgt.dim(); ++n)
            if (f.get(s, n))
                diff.insert(diff.end(), tgt.coact[n].begin(), tgt.coact[n].end());
        xor_normalize(diff);
        for (const auto& [a, n] : diff)
            if (tgt_bw[n] <= src_bw[s]) return false;
    }
    return true;
}

// degree-preserving rank bookkeeping: alternating sum of per-degree
// dimensions vanishes and ranks match exactness at every slot
static bool exactness_ranks(const std::vector<const BGModule*>& mods,
                            const std::vector<const F2Matrix*>& maps) {
    // exact sequence 0 -> M0 -> M1 -> ... -> Mk -> 0
    // check: composite of consecutive maps is zero, rank(f0) = dim M0,
    // rank(f_i) + rank(f_{i-1}) = dim M_i, rank(f_last) = dim M_last.
    std::size_t k = mods.size();
    std::vector<std::size_t> rank(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) rank[i] = maps[i]->rank();
    if (rank[0] != mods[0]->dim()) return false;
    for (std::size_t i = 1; i < k - 1; ++i)
        if (rank[i - 1] + rank[i] != mods[i]->dim()) return false;
    if (rank[maps.size() - 1] != mods[k - 1]->dim()) return false;
    for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
        // composite zero
        const F2Matrix& f = *maps[i];
        const F2Matrix& g = *maps[i + 1];
        for (std::size_t r = 0; r < f.row_count(); ++r) {
            F2Vec acc(g.col_count());
            for (std::size_t c = 0; c < f.col_count(); ++c)
                if (f.get(r, c)) acc.xor_in(g.row(c));
            if (!acc.is_zero()) return false;
        }
    }
    return true;
}

SESData ses_maps(int family, int j, bool odd) {
    SESData out;
    if (family == 0) {
        int lvl = 1;
        long mid_j = odd ? 2L * j + 1 : 2L * j;
        out.mid = BGModule::make(lvl, 0, {CellAlgebra::bg(0, (int)mid_j)});
        if (!odd) {
            out.sub = BGModule::make(lvl, 4L * j, {CellAlgebra::bg(0, j)});
        } else {
            out.sub = BGModule::make(lvl, 4L * j,
                                     {CellAlgebra::bg(0, j), CellAlgebra::bg(0, 1)});
        }
        out.quot = BGModule::make(lvl, 0,
                                  {CellAlgebra::bg(1, j - 1), CellAlgebra::quotient(1, 0)});

        out.incl = F2Matrix(out.sub.dim(), out.mid.dim());
        for (std::size_t s = 0; s < out.sub.dim(); ++s) {
            const auto& w = out.sub.basis[s];
            XiMon img = splitting_map(1, j, w[0]);
            if (w.size() > 1) img = img * w[1];
            out.incl.set(s, out.mid.index_of({img}), 1);
        }
        out.proj = F2Matrix(out.mid.dim(), out.quot.dim());
        std::vector<long> mid_bw(out.mid.dim()), quot_bw(out.quot.dim());
        for (std::size_t s = 0; s < out.quot.dim(); ++s)
            quot_bw[s] = out.quot.basis[s][0].weight();
        for (std::size_t s = 0; s < out.mid.dim(); ++s) {
            const XiMon& m = out.mid.basis[s][0];
            XiMon body, mult;
            body.e.assign(m.e.begin(), m.e.end());
            mult.e.assign(m.e.size(), 0);
            for (std::size_t t = 0; t < m.e.size() && t < 2; ++t) {
                int st = 2 << (1 - (int)t); // 4 for g1, 2 for g2
                mult.e[t] = m.e[t] % st;
                body.e[t] = m.e[t] - mult.e[t];
            }
            body = XiMon(body.e);
            mult = XiMon(mult.e);
            mid_bw[s] = body.weight();
            if (body.weight() <= 4L * (j - 1))
                out.proj.set(s, out.quot.index_of({body, mult}), 1);
        }
        out.incl_strict = is_comodule_map(out.sub, out.mid, out.incl);
        out.proj_graded =
            is_graded_comodule_map(out.mid, out.quot, out.proj, mid_bw, quot_bw);
        out.maps_commute_with_coaction = out.incl_strict && out.proj_graded;
        out.exact = exactness_ranks({&out.sub, &out.mid, &out.quot},
                                    {&out.incl, &out.proj});
        return out;
    }

    int lvl = 2;
    long mid_j = odd ? 2L * j + 1 : 2L * j;
    out.mid = BGModule::make(lvl, 0, {CellAlgebra::bg(1, (int)mid_j)});
    if (!odd) {
        out.sub = BGModule::make(lvl, 8L * j, {CellAlgebra::bg(1, j)});
    } else {
        out.sub = BGModule::make(lvl, 8L * j,
                                 {CellAlgebra::bg(1, j), CellAlgebra::bg(1, 1)});
    }
    out.quot = BGModule::make(lvl, 0,
                              {CellAlgebra::bg(2, j - 1), CellAlgebra::quotient(2, 1)});

    out.incl = F2Matrix(out.sub.dim(), out.mid.dim());
    for (std::size_t s = 0; s < out.sub.dim(); ++s) {
        const auto& w = out.sub.basis[s];
        XiMon img = splitting_map(2, j, w[0]);
        if (w.size() > 1) img = img * w[1];
        out.incl.set(s, out.mid.index_of({img}), 1);
    }
    out.proj = F2Matrix(out.mid.dim(), out.quot.dim());
    std::vector<long> mid_bw(out.mid.dim()), quot_bw(out.quot.dim());
    for (std::size_t s = 0; s < out.quot.dim(); ++s)
        quot_bw[s] = out.quot.basis[s][0].weight();
    for (std::size_t s = 0; s < out.mid.dim(); ++s) {
        const XiMon& m = out.mid.basis[s][0];
        XiMon body, mult;
        body.e.assign(m.e.begin(), m.e.end());
        mult.e.assign(m.e.size(), 0);
        for (std::size_t t = 0; t < m.e.size() && t < 3; ++t) {
            int st = 4 >> t; // 8i+4e1 / 4i+2e2 / 2i+e3 decomposition
            mult.e[t] = m.e[t] % (2 * st);
            body.e[t] = m.e[t] - mult.e[t];
        }
        body = XiMon(body.e);
        mult = XiMon(mult.e);
        mid_bw[s] = body.weight();
        if (body.weight() <= 8L * (j - 1))
            out.proj.set(s, out.quot.index_of({body, mult}), 1);
    }

    out.incl_strict = is_comodule_map(out.sub, out.mid, out.incl);
    out.proj_graded =
        is_graded_comodule_map(out.mid, out.quot, out.proj, mid_bw, quot_bw);
    if (!odd) {
        out.coker = BGModule::make(lvl, 8L * j + 9, {CellAlgebra::bg(1, j - 1)});
        out.cokermap = F2Matrix(out.quot.dim(), out.coker->dim());
        XiMon top = XiMon({4, 2, 1});
        for (std::size_t s = 0; s < out.quot.dim(); ++s) {
            const auto& w = out.quot.basis[s];
            if (!(w[1] == top)) continue;
            const XiMon& body = w[0];
            if (body.weight() != 8L * (j - 1)) continue;
            // invert the level-2 splitting map
            std::vector<int> down;
            if (body.e.size() > 1) down.assign(body.e.begin() + 1, body.e.end());
            XiMon src{down};
            if (!CellAlgebra::bg(1, j - 1).admits(src)) continue;
            out.cokermap.set(s, out.coker->index_of({src}), 1);
        }
        out.coker_strict = is_comodule_map(out.quot, *out.coker, out.cokermap);
        out.maps_commute_with_coaction =
            out.incl_strict && out.proj_graded && out.coker_strict;
        out.exact = exactness_ranks({&out.sub, &out.mid, &out.quot, &*out.coker},
                                    {&out.incl, &out.proj, &out.cokermap});
    } else {
        out.maps_commute_with_coaction = out.incl_strict && out.proj_graded;
        out.exact = exactness_ranks({&out.sub, &out.mid, &out.quot},
                                    {&out.incl, &out.proj});
    }
    return out;
}

// ---------- rational generator table ----------

namespace {

struct GenEntry {
    bool marker;
    XiMon mon;
};

struct RowStruct {
    long susp;
    int base_kind; // 0: A21 (x) tmf_k, 1: bo_k / F2
    int base_k;
    int pow1;
    bool mk;
    std::vector<GenEntry> gens;
};

std::vector<std::pair<XiMon, XiMon>> fam_pairs(int j, bool odd) {
    std::vector<std::pair<XiMon, XiMon>> out;
    for (int t = 0; t < j; ++t)
        for (int i2 = 0; i2 <= t; ++i2) {
            int i1 = t - i2;
            int a = 16 * j + (odd ? 8 : 0) - 16 * t;
            out.emplace_back(XiMon({a, 8 * i1, 4 * i2}),
                             XiMon({a - 8, 8 * i1 + 4, 4 * i2}));
        }
    return out;
}

std::vector<XiMon> marker_mons(int j) {
    std::vector<XiMon> out;
    for (int i2 = 0; i2 < j; ++i2)
        out.push_back(XiMon({8, 8 * (j - 1 - i2) + 4, 4 * i2}));
    return out;
}

std::vector<RowStruct> rows_struct(int n) {
    if (n == 0) return {{0, 1, 0, 0, false, {{false, XiMon::one()}}}};
    std::vector<RowStruct> rows;
    int j = n / 2;
    if (n % 2 == 0) {
        RowStruct fam{16L * j, 0, j - 1, 0, false, {}};
        for (const auto& [a, b] : fam_pairs(j, false)) {
            fam.gens.push_back({false, a});
            fam.gens.push_back({false, b});
        }
        rows.push_back(std::move(fam));
        for (auto r : rows_struct(j)) {
            for (auto& g : r.gens) g.mon = g.mon.shift_up();
            r.susp += 8L * n;
            rows.push_back(std::move(r));
        }
        auto mks = marker_mons(j);
        RowStruct mk{mks[0].degree() + 12, 1, j - 1, 0, true, {}};
        for (const auto& m : mks) mk.gens.push_back({true, m});
        rows.push_back(std::move(mk));
    } else {
        if (j >= 1) {
            RowStruct fam{16L * j + 8, 0, j - 1, 0, false, {}};
            for (const auto& [a, b] : fam_pairs(j, true)) {
                fam.gens.push_back({false, a});
                fam.gens.push_back({false, b});
            }
            rows.push_back(std::move(fam));
        }
        const XiMon b1 = XiMon::gen(1, 8), b2 = XiMon::gen(2, 4);
        for (auto r : rows_struct(j)) {
            std::vector<GenEntry> gens;
            for (const auto& g : r.gens) {
                gens.push_back({g.marker, g.mon.shift_up() * b1});
                gens.push_back({g.marker, g.mon.shift_up() * b2});
            }
            r.gens = std::move(gens);
            r.susp += 8L * n;
            r.pow1 += 1;
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

std::string row_label(const RowStruct& r) {
    std::string s;
    if (r.base_kind == 0) {
        s = "(A(2)//A(1))";
        if (r.base_k > 0) s += " (x) tmf_" + std::to_string(r.base_k);
    } else {
        s = r.base_k > 0 ? "bo_" + std::to_string(r.base_k) : "F2";
    }
    if (r.pow1) {
        std::string t = r.pow1 > 1 ? "bo_1^" + std::to_string(r.pow1) : "bo_1";
        s = (s == "F2") ? t : s + " (x) " + t;
    }
    if (r.mk) s += "[1]";
    return s;
}

} // namespace

std::vector<RatRow> rational_generators(int n) {
    std::vector<RatRow> out;
    for (const auto& r : rows_struct(n)) {
        RatRow row{r.susp, row_label(r), {}};
        for (const auto& g : r.gens)
            row.gens.push_back(g.marker ? "v0^-4 [c6] " + g.mon.str("xb") + " + ..."
                                        : g.mon.str("xb"));
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace coop
