#include "coop/numpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace coop {

namespace {

void trim(std::vector<Rat>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Int pow9(int k) {
    Int p = 1;
    for (int i = 0; i < k; ++i) p *= 9;
    return p;
}

Rat inv_of(const Int& den) {
    Rat q(1, den);
    q.canonicalize();
    return q;
}

}  // namespace

int NumPolyQ::degree() const {
    for (size_t k = c.size(); k > 0; --k)
        if (c[k - 1] != 0) return static_cast<int>(k - 1);
    return -1;
}

Rat NumPolyQ::eval(const Rat& x) const {
    Rat acc = 0;
    for (size_t k = c.size(); k > 0; --k) acc = acc * x + c[k - 1];
    return acc;
}

NumPolyQ NumPolyQ::operator+(const NumPolyQ& o) const {
    NumPolyQ r;
    r.c.resize(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t k = 0; k < c.size(); ++k) r.c[k] += c[k];
    for (size_t k = 0; k < o.c.size(); ++k) r.c[k] += o.c[k];
    trim(r.c);
    return r;
}

NumPolyQ NumPolyQ::operator-(const NumPolyQ& o) const { return *this + o.scale(Rat(-1)); }

NumPolyQ NumPolyQ::operator*(const NumPolyQ& o) const {
    NumPolyQ r;
    if (c.empty() || o.c.empty()) return r;
    r.c.assign(c.size() + o.c.size() - 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    trim(r.c);
    return r;
}

NumPolyQ NumPolyQ::scale(const Rat& s) const {
    NumPolyQ r = *this;
    for (Rat& v : r.c) v *= s;
    trim(r.c);
    return r;
}

bool NumPolyQ::operator==(const NumPolyQ& o) const {
    NumPolyQ a = *this, b = o;
    trim(a.c);
    trim(b.c);
    return a.c == b.c;
}

NumPolyQ g_basis(int n) {
    if (n < 0) throw std::invalid_argument("g_basis: n < 0");
    NumPolyQ p{{Rat(1)}};
    for (int i = 0; i < n; ++i) p = p * NumPolyQ{{rat(-(2 * i + 1)), Rat(1)}};
    Int den = 1;
    for (int i = 1; i <= n; ++i) den *= 2 * i;
    return p.scale(inv_of(den));
}

NumPolyQ f9_basis(int n) {
    if (n < 0) throw std::invalid_argument("f9_basis: n < 0");
    NumPolyQ p{{Rat(1)}};
    for (int i = 0; i < n; ++i) p = p * NumPolyQ{{Rat(-pow9(i)), Rat(1)}};
    return p.scale(inv_of(f9_denominator(n)));
}

NumPolyQ f9_as_w_poly(int n) {
    NumPolyQ f = f9_basis(n);
    NumPolyQ r;
    r.c.assign(f.c.empty() ? 0 : 2 * f.c.size() - 1, Rat(0));
    for (size_t i = 0; i < f.c.size(); ++i) r.c[2 * i] = f.c[i];
    trim(r.c);
    return r;
}

Int f9_denominator(int n) {
    Int den = 1;
    for (int i = 0; i < n; ++i) den *= pow9(n) - pow9(i);
    return den;
}

long af_of_basis(BasisKind kind, int n) {
    if (n < 0) throw std::invalid_argument("af_of_basis: n < 0");
    return alpha(n) - (kind == BasisKind::g ? 2L : 4L) * n;
}

std::vector<Rat> mahler_expand(const NumPolyQ& p) {
    int d = p.degree();
    std::vector<Rat> vals;
    for (int k = 0; k <= d; ++k) vals.push_back(p.eval(rat(2 * k + 1)));
    std::vector<Rat> out;
    for (int i = 0; i <= d; ++i) {
        Rat acc = 0;
        for (int k = 0; k <= i; ++k) {
            Int b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(i),
                         static_cast<unsigned long>(k));
            if ((i - k) % 2 != 0) b = -b;
            acc += Rat(b) * vals[static_cast<size_t>(k)];
        }
        out.push_back(acc);
    }
    return out;
}

std::vector<Rat> expand_in_g(int n) { return mahler_expand(f9_as_w_poly(n)); }

long LatticeGenerator::stem() const {
    return family == GenFamily::bu ? 2L * m : 4L * m + eta_power;
}

bool LatticeGenerator::operator==(const LatticeGenerator& o) const {
    return family == o.family && n == o.n && m == o.m && two_power == o.two_power &&
           eta_power == o.eta_power;
}

namespace {

void sort_gens(std::vector<LatticeGenerator>& out) {
    std::sort(out.begin(), out.end(), [](const LatticeGenerator& a, const LatticeGenerator& b) {
        return std::make_tuple(a.stem(), static_cast<int>(a.family), a.n, a.m, a.eta_power) <
               std::make_tuple(b.stem(), static_cast<int>(b.family), b.n, b.m, b.eta_power);
    });
}

}  // namespace

std::vector<LatticeGenerator> lattice(const std::string& theory, long stem_lo, long stem_hi) {
    std::vector<LatticeGenerator> out;
    if (theory == "bu") {
        for (int m = 0; 2L * m <= stem_hi; ++m)
            for (int n = 0; n <= m; ++n) {
                LatticeGenerator gen{GenFamily::bu, n, m,
                                     static_cast<int>(std::max(0L, 2L * n - m - alpha(n))), 0};
                if (gen.stem() >= stem_lo) out.push_back(gen);
            }
    } else if (theory == "bo") {
        for (int m = 0; 4L * m <= stem_hi; ++m)
            for (int n = 0; n <= m; ++n) {
                long af = alpha(n) - 4L * n;
                if (m % 2 == 0) {
                    LatticeGenerator gen{GenFamily::bo_free, n, m,
                                         static_cast<int>(std::max(0L, -af - 2L * m)), 0};
                    if (gen.stem() >= stem_lo) out.push_back(gen);
                    for (int c = 1; c <= 2; ++c) {
                        if (af + 2L * m + c < 0) continue;
                        LatticeGenerator eta{GenFamily::bo_eta, n, m, 0, c};
                        if (eta.stem() >= stem_lo && eta.stem() <= stem_hi) out.push_back(eta);
                    }
                } else {
                    LatticeGenerator gen{GenFamily::bo_v0, n, m,
                                         static_cast<int>(std::max(0L, -af - 2L * m - 1) + 1), 0};
                    if (gen.stem() >= stem_lo) out.push_back(gen);
                }
            }
    } else {
        throw std::invalid_argument("lattice: theory must be bu or bo");
    }
    sort_gens(out);
    return out;
}

std::vector<LatticeGenerator> hz_image(int j, long stem_lo, long stem_hi) {
    if (j < 0) throw std::invalid_argument("hz_image: j < 0");
    std::vector<LatticeGenerator> out;
    long af = alpha(j) - 4L * j;
    for (int m = j; 4L * m <= stem_hi; ++m) {
        if (m % 2 == 0) {
            LatticeGenerator gen{GenFamily::bo_free, j, m,
                                 static_cast<int>(std::max(0L, -af - 2L * m)), 0};
            if (gen.stem() >= stem_lo) out.push_back(gen);
            for (int c = 1; c <= 2; ++c) {
                if (af + 2L * m + c < 0) continue;
                LatticeGenerator eta{GenFamily::bo_eta, j, m, 0, c};
                if (eta.stem() >= stem_lo && eta.stem() <= stem_hi) out.push_back(eta);
            }
        } else {
            LatticeGenerator gen{GenFamily::bo_v0, j, m,
                                 static_cast<int>(std::max(0L, -af - 2L * m - 1) + 1), 0};
            if (gen.stem() >= stem_lo) out.push_back(gen);
        }
    }
    sort_gens(out);
    return out;
}

EvalMatrix eval_matrix(int j_max, int k_max) {
    if (j_max < 0 || k_max < 0) throw std::invalid_argument("eval_matrix: negative bound");
    EvalMatrix m;
    m.j_max = j_max;
    m.k_max = k_max;
    m.triangular = true;
    for (int j = 0; j <= j_max; ++j) {
        NumPolyQ f = f9_basis(j);
        std::vector<Rat> row;
        for (int k = 0; k <= k_max; ++k) {
            Rat v = f.eval(Rat(pow9(k)));
            if (k < j && v != 0) m.triangular = false;
            if (k == j && v != 1) m.triangular = false;
            row.push_back(v);
        }
        m.entry.push_back(std::move(row));
    }
    return m;
}

}  // namespace coop
