#include "coop/cobar.hpp"

#include "coop/f2.hpp"
#include "coop/resolution.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace coop {

namespace {

using Word = std::pair<std::vector<std::uint16_t>, std::uint32_t>;

template <typename T> void xor_reduce(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    std::vector<T> out;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if ((j - i) & 1) out.push_back(v[i]);
        i = j;
    }
    v.swap(out);
}

} // namespace

int CobarChart::dim(int s, long t) const {
    auto it = dims.find({s, t});
    return it == dims.end() ? 0 : it->second;
}

CobarChart cobar_ext(const BGModule& mod, const CobarOptions& opt) {
    CobarChart chart;
    chart.s_max = opt.s_max;
    chart.t_max = opt.t_max;

    std::vector<XiMon> letters;
    for (const auto& m : an_basis(mod.level))
        if (!m.is_one()) letters.push_back(m);
    std::map<XiMon, std::uint16_t> lidx;
    std::vector<long> ldeg;
    for (std::uint16_t i = 0; i < letters.size(); ++i) {
        lidx[letters[i]] = i;
        ldeg.push_back(letters[i].degree());
    }
    std::vector<std::vector<std::pair<std::uint16_t, std::uint16_t>>> lred(
        letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i)
        for (const auto& [l, r] : coproduct_an(letters[i], mod.level))
            if (!l.is_one() && !r.is_one())
                lred[i].emplace_back(lidx.at(l), lidx.at(r));
    std::vector<std::vector<std::pair<std::uint16_t, std::uint32_t>>> mco(
        mod.dim());
    for (std::size_t i = 0; i < mod.dim(); ++i)
        for (const auto& [a, tgt] : mod.coact[i])
            if (!a.is_one())
                mco[i].emplace_back(lidx.at(a), (std::uint32_t)tgt);

    // words by length, then by internal degree
    std::map<std::pair<int, long>, std::vector<Word>> blocks;
    std::map<Word, std::uint32_t> windex;
    std::vector<std::pair<Word, long>> cur;
    for (std::uint32_t i = 0; i < mod.dim(); ++i)
        if (mod.deg[i] <= opt.t_max)
            cur.push_back({{{}, i}, mod.deg[i]});
    for (int s = 0; s <= opt.s_max + 1; ++s) {
        for (const auto& [w, t] : cur) {
            auto& blk = blocks[{s, t}];
            windex[w] = (std::uint32_t)blk.size();
            blk.push_back(w);
            if (++chart.total_cells > opt.guard)
                throw std::runtime_error("cobar_ext: cell guard exceeded");
        }
        std::vector<std::pair<Word, long>> nxt;
        for (const auto& [w, t] : cur)
            for (std::uint16_t a = 0; a < letters.size(); ++a)
                if (t + ldeg[a] <= opt.t_max) {
                    Word w2 = w;
                    w2.first.push_back(a);
                    nxt.push_back({std::move(w2), t + ldeg[a]});
                }
        cur.swap(nxt);
    }

    auto d_row = [&](const Word& w) {
        std::vector<Word> out;
        const auto& bars = w.first;
        for (std::size_t pos = 0; pos < bars.size(); ++pos)
            for (const auto& [l, r] : lred[bars[pos]]) {
                Word w2 = w;
                w2.first[pos] = l;
                w2.first.insert(w2.first.begin() + (long)pos + 1, r);
                out.push_back(std::move(w2));
            }
        for (const auto& [a, m2] : mco[w.second]) {
            Word w2{bars, m2};
            w2.first.push_back(a);
            out.push_back(std::move(w2));
        }
        xor_reduce(out);
        return out;
    };

    std::map<std::pair<int, long>, std::size_t> ranks;
    for (const auto& [st, els] : blocks) {
        auto [s, t] = st;
        chart.cdim[st] = els.size();
        if (s > opt.s_max) continue;
        auto nit = blocks.find({s + 1, t});
        std::size_t ncols = nit == blocks.end() ? 0 : nit->second.size();
        F2Matrix m(els.size(), ncols);
        for (std::size_t i = 0; i < els.size(); ++i)
            for (const Word& cell : d_row(els[i]))
                m.flip(i, windex.at(cell));
        ranks[st] = m.rank();
    }
    for (const auto& [st, els] : blocks) {
        auto [s, t] = st;
        if (s > opt.s_max) continue;
        auto rit = ranks.find({s - 1, t});
        std::size_t rp = rit == ranks.end() ? 0 : rit->second;
        long d = (long)els.size() - (long)ranks.at(st) - (long)rp;
        if (d != 0) chart.dims[st] = (int)d;
    }

    chart.euler_ok = true;
    for (long t = 0; t <= std::min<long>(opt.s_max, opt.t_max); ++t) {
        long lhs = 0, rhs = 0;
        for (int s = 0; s <= (int)t + 1; ++s) {
            auto cit = chart.cdim.find({s, t});
            long sz = cit == chart.cdim.end() ? 0 : (long)cit->second;
            lhs += (s & 1) ? -sz : sz;
            if (s <= opt.s_max)
                rhs += (s & 1) ? -chart.dim(s, t) : chart.dim(s, t);
        }
        if (lhs != rhs) chart.euler_ok = false;
    }
    return chart;
}

CobarCells cobar_expand(const CobarChain& chain) {
    CobarCells out;
    for (const auto& [bars, coeff] : chain.terms) {
        std::vector<std::vector<XiMon>> acc{{}};
        for (const auto& b : bars) {
            XiPoly exp = clip_an(expand_xibar(b), chain.level);
            std::vector<std::vector<XiMon>> next;
            next.reserve(acc.size() * exp.size());
            for (const auto& w : acc)
                for (const auto& x : exp) {
                    auto w2 = w;
                    w2.push_back(x);
                    next.push_back(std::move(w2));
                }
            acc.swap(next);
        }
        for (const auto& w : acc)
            for (const auto& m : coeff) out.emplace_back(w, m);
    }
    xor_reduce(out);
    return out;
}

CobarCells cobar_boundary(const CobarCells& cells, int level) {
    CobarCells out;
    for (const auto& [w, m] : cells) {
        for (std::size_t pos = 0; pos < w.size(); ++pos)
            for (const auto& [l, r] : coproduct_an(w[pos], level)) {
                if (l.is_one() || r.is_one()) continue;
                auto w2 = w;
                w2[pos] = l;
                w2.insert(w2.begin() + (long)pos + 1, r);
                out.emplace_back(std::move(w2), m);
            }
        for (const auto& [a, r] : coaction_an(m, level)) {
            if (a.is_one()) continue;
            auto w2 = w;
            w2.push_back(a);
            out.emplace_back(std::move(w2), r);
        }
    }
    xor_reduce(out);
    return out;
}

bool cobar_is_cocycle(const CobarChain& chain) {
    return cobar_boundary(cobar_expand(chain), chain.level).empty();
}

std::vector<ExtPair> ext_oracle_pairs() {
    std::vector<ExtPair> out;
    auto add = [&](std::string name, int level, BGModule mod, int rs, long rt,
                   int cs, long ct) {
        ExtPair p;
        p.name = std::move(name);
        p.level = level;
        p.comodule = std::move(mod);
        p.res_s_max = rs;
        p.res_t_max = rt;
        p.cobar.s_max = cs;
        p.cobar.t_max = ct;
        out.push_back(std::move(p));
    };
    add("trivial-A0", 0, BGModule::make(0, 0, {}), 10, 10, 8, 8);
    add("trivial-A1", 1, BGModule::make(1, 0, {}), 12, 22, 10, 10);
    add("integral-A1", 1, BGModule::make(1, 0, {CellAlgebra::bg(0, 1)}), 8, 16,
        7, 12);
    add("trivial-A2", 2, BGModule::make(2, 0, {}), 15, 30, 6, 12);
    add("bo-slice-A2", 2, BGModule::make(2, 8, {CellAlgebra::bg(1, 1)}), 12,
        26, 5, 14);
    return out;
}

bool ext_engines_agree(const ExtPair& pair) {
    FiniteAlgebra alg = build_an_algebra(pair.level);
    AModule dual = dual_module(alg, pair.comodule);
    FreeResolution res =
        minimal_resolution(alg, dual, pair.res_s_max, pair.res_t_max);
    ExtChart rchart = chart_of(res);
    CobarChart cchart = cobar_ext(pair.comodule, pair.cobar);
    if (!cchart.euler_ok) return false;
    for (int s = 0; s <= pair.cobar.s_max; ++s)
        for (long t = 0; t <= pair.cobar.t_max; ++t)
            if (rchart.dim(s, t) != cchart.dim(s, t)) return false;
    return true;
}

} // namespace coop
