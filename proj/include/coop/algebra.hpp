#pragma once

#include "coop/bg.hpp"
#include "coop/f2.hpp"
#include "coop/xi.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace coop {

// The dual of A(n)_*, with basis dual to the xi-monomial basis (the Milnor
// basis).  The product is the transpose of the coproduct.
struct FiniteAlgebra {
    int level = 0;
    std::vector<XiMon> basis; // basis[0] = 1, sorted by (degree, lex)
    std::map<XiMon, std::size_t> index;
    std::vector<long> deg;
    // mult[a][b]: sorted index list, the F2 expansion of e_a e_b
    std::vector<std::vector<std::vector<std::size_t>>> mult;

    std::size_t dim() const { return basis.size(); }
    long top_degree() const;
};

FiniteAlgebra build_an_algebra(int n);

// (e_a e_b) e_c == e_a (e_b e_c) on all basis triples, and e_0 is a unit.
bool algebra_associative(const FiniteAlgebra& alg);

// Finite module over A(n), presented by the action of every algebra basis
// element: act[a].get(i, j) is the coefficient of m_j in e_a . m_i.
struct AModule {
    int level = 0;
    std::vector<long> deg;
    std::vector<F2Matrix> act;

    std::size_t dim() const { return deg.size(); }
};

// F2 concentrated in degree zero.
AModule trivial_module(const FiniteAlgebra& alg);

// Dual of a comodule: basis dual to the comodule's, same degrees; e_a acts
// as the transpose of "pair a against the left coaction factor".
AModule dual_module(const FiniteAlgebra& alg, const BGModule& comod);

// Unit acts as the identity and (e_a e_b) . m == e_a . (e_b . m).
bool module_axioms(const FiniteAlgebra& alg, const AModule& mod);

// All of (A//A(level))_* through the given internal degree, as a comodule.
BGModule coalgebra_comodule(int level, long maxdeg);

} // namespace coop
