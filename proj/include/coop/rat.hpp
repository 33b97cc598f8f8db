#pragma once
#include <gmpxx.h>
#include <limits>
#include <stdexcept>
#include <string>

namespace coop {

using Rat = mpq_class;
using Int = mpz_class;

// 2-adic valuation of q, as +infinity sentinel for q == 0.
inline constexpr long nu2_inf = std::numeric_limits<long>::max();

inline long nu2(const Int& n) {
    if (n == 0) return nu2_inf;
    return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}

inline long nu2(const Rat& q) {
    if (q == 0) return nu2_inf;
    return nu2(q.get_num()) - nu2(q.get_den());
}

inline long nu2(long n) { return nu2(Int(n)); }

// number of ones in the dyadic expansion
inline long alpha(unsigned long n) {
    long c = 0;
    while (n) { c += n & 1; n >>= 1; }
    return c;
}

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat_from_string: bad literal " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline bool is_2integral(const Rat& q) { return mpz_odd_p(q.get_den().get_mpz_t()) != 0; }

// q mod 2^k for 2-integral q, result in [0, 2^k): num * den^{-1} mod 2^k
inline Int mod_pow2(const Rat& q, unsigned k) {
    if (!is_2integral(q)) throw std::invalid_argument("mod_pow2: not 2-integral");
    Int m = Int(1) << k;
    Int den_inv;
    if (!mpz_invert(den_inv.get_mpz_t(), q.get_den().get_mpz_t(), m.get_mpz_t()))
        throw std::runtime_error("mod_pow2: denominator not invertible");
    Int r = (q.get_num() % m) * den_inv % m;
    if (r < 0) r += m;
    return r;
}

} // namespace coop
