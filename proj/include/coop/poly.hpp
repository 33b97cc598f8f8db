#pragma once
#include <map>
#include <string>
#include <vector>

#include "coop/rat.hpp"

namespace coop {

// variable names with integer weights; polynomial degrees are weighted sums
struct PolyRing {
    std::vector<std::string> vars;
    std::vector<long> degs;

    size_t arity() const { return vars.size(); }
    bool operator==(const PolyRing& o) const { return vars == o.vars && degs == o.degs; }
};

using ExpVec = std::vector<int>;

// sparse polynomial over Q with a fixed ring descriptor.
// term storage is lex-ordered on exponent vectors; printing and leading_term
// use graded lex (weighted total degree first, then lex, highest first).
class GradedPoly {
  public:
    GradedPoly() = default;
    explicit GradedPoly(const PolyRing* ring) : ring_(ring) {}

    static GradedPoly constant(const PolyRing* ring, const Rat& c);
    static GradedPoly var(const PolyRing* ring, size_t i, int exp = 1);
    static GradedPoly monomial(const PolyRing* ring, const ExpVec& e, const Rat& c);

    const PolyRing* ring() const { return ring_; }
    const std::map<ExpVec, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly operator*(const Rat& c) const;
    GradedPoly operator/(const Rat& c) const;
    GradedPoly& operator+=(const GradedPoly& o);
    bool operator==(const GradedPoly& o) const;
    bool operator!=(const GradedPoly& o) const { return !(*this == o); }

    GradedPoly pow(unsigned long e) const;

    long degree() const;           // max weighted degree, -1 for 0
    long term_degree(const ExpVec& e) const;
    bool is_homogeneous() const;
    Rat coeff(const ExpVec& e) const;

    // minimum nu2 over coefficients; nu2_inf for 0
    long min_nu2() const;
    bool coeffs_2integral() const;
    // divides every coefficient by 2^k (k may be negative)
    GradedPoly scale_pow2(long k) const;

    // graded-lex greatest term
    std::pair<ExpVec, Rat> leading_term() const;

    // simultaneous substitution; images live in target ring
    GradedPoly subst(const std::vector<GradedPoly>& images, const PolyRing* target) const;

    std::string to_string() const;

  private:
    void add_term(const ExpVec& e, const Rat& c);
    const PolyRing* ring_ = nullptr;
    std::map<ExpVec, Rat> terms_;
    friend class TruncSeries1Helper;
};

} // namespace coop
