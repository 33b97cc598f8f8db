#include "coop/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace coop {

long FiniteAlgebra::top_degree() const {
    long top = 0;
    for (long d : deg) top = std::max(top, d);
    return top;
}

FiniteAlgebra build_an_algebra(int n) {
    FiniteAlgebra alg;
    alg.level = n;
    alg.basis = an_basis(n);
    for (std::size_t i = 0; i < alg.basis.size(); ++i) {
        alg.index[alg.basis[i]] = i;
        alg.deg.push_back(alg.basis[i].degree());
    }
    std::size_t d = alg.dim();
    alg.mult.assign(d, std::vector<std::vector<std::size_t>>(d));
    for (std::size_t e = 0; e < d; ++e) {
        for (const auto& [l, r] : coproduct_an(alg.basis[e], n)) {
            auto& cell = alg.mult[alg.index.at(l)][alg.index.at(r)];
            auto it = std::find(cell.begin(), cell.end(), e);
            if (it != cell.end())
                cell.erase(it);
            else
                cell.push_back(e);
        }
    }
    for (auto& row : alg.mult)
        for (auto& cell : row) std::sort(cell.begin(), cell.end());
    return alg;
}

static void toggle(std::vector<std::size_t>& v, std::size_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x)
        v.erase(it);
    else
        v.insert(it, x);
}

static std::vector<std::size_t> product_list(const FiniteAlgebra& alg,
                                             const std::vector<std::size_t>& u,
                                             const std::vector<std::size_t>& v) {
    std::vector<std::size_t> out;
    for (std::size_t a : u)
        for (std::size_t b : v)
            for (std::size_t c : alg.mult[a][b]) toggle(out, c);
    return out;
}

bool algebra_associative(const FiniteAlgebra& alg) {
    std::size_t d = alg.dim();
    for (std::size_t a = 0; a < d; ++a) {
        if (alg.mult[0][a] != std::vector<std::size_t>{a}) return false;
        if (alg.mult[a][0] != std::vector<std::size_t>{a}) return false;
    }
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const auto& ab = alg.mult[a][b];
            for (std::size_t c = 0; c < d; ++c) {
                auto lhs = product_list(alg, ab, {c});
                auto rhs = product_list(alg, {a}, alg.mult[b][c]);
                if (lhs != rhs) return false;
            }
        }
    return true;
}

AModule trivial_module(const FiniteAlgebra& alg) {
    AModule mod;
    mod.level = alg.level;
    mod.deg = {0};
    for (std::size_t a = 0; a < alg.dim(); ++a) {
        F2Matrix m(1, 1);
        if (a == 0) m.set(0, 0, true);
        mod.act.push_back(m);
    }
    return mod;
}

AModule dual_module(const FiniteAlgebra& alg, const BGModule& comod) {
    if (comod.level != alg.level)
        throw std::invalid_argument("dual_module: level mismatch");
    AModule mod;
    mod.level = alg.level;
    mod.deg = comod.deg;
    std::size_t dim = comod.dim();
    mod.act.assign(alg.dim(), F2Matrix(dim, dim));
    // rho_a(m_i) = sum of coaction targets with left factor e_a; the dual
    // action is its transpose and raises degree by |a|.
    for (std::size_t i = 0; i < dim; ++i)
        for (const auto& [left, tgt] : comod.coact[i])
            mod.act[alg.index.at(left)].flip(tgt, i);
    return mod;
}

bool module_axioms(const FiniteAlgebra& alg, const AModule& mod) {
    std::size_t dim = mod.dim();
    if (mod.act.size() != alg.dim()) return false;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (mod.act[0].get(i, j) != (i == j)) return false;
    for (std::size_t a = 0; a < alg.dim(); ++a) {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                if (mod.act[a].get(i, j) &&
                    mod.deg[j] != mod.deg[i] + alg.deg[a])
                    return false;
        for (std::size_t b = 0; b < alg.dim(); ++b) {
            // rows index the input, so e_a(e_b(m)) has matrix act[b]*act[a]
            F2Matrix lhs = matmul(mod.act[b], mod.act[a]);
            F2Matrix rhs(dim, dim);
            for (std::size_t c : alg.mult[a][b])
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = 0; j < dim; ++j)
                        if (mod.act[c].get(i, j)) rhs.flip(i, j);
            for (std::size_t i = 0; i < dim; ++i)
                if (!(lhs.row(i) == rhs.row(i))) return false;
        }
    }
    return true;
}

BGModule coalgebra_comodule(int level, long maxdeg) {
    return BGModule::make(level, 0, {CellAlgebra::bg(level, (int)maxdeg)},
                          maxdeg);
}

} // namespace coop
