#include "coop/xi.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace coop {

static void strip(std::vector<int>& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

XiMon::XiMon(std::vector<int> exps) : e(std::move(exps)) { strip(e); }

XiMon XiMon::gen(int k, int exp) {
    XiMon m;
    if (exp != 0) {
        m.e.assign(k, 0);
        m.e[k - 1] = exp;
    }
    return m;
}

long XiMon::degree() const {
    long d = 0;
    for (size_t i = 0; i < e.size(); ++i)
        d += (long)e[i] * ((1L << (i + 1)) - 1);
    return d;
}

long XiMon::weight() const {
    long w = 0;
    for (size_t i = 0; i < e.size(); ++i)
        w += (long)e[i] << i;
    return w;
}

int XiMon::exp(int k) const {
    return (k >= 1 && (size_t)k <= e.size()) ? e[k - 1] : 0;
}

XiMon XiMon::operator*(const XiMon& o) const {
    XiMon r;
    r.e.resize(std::max(e.size(), o.e.size()), 0);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += e[i];
    for (size_t i = 0; i < o.e.size(); ++i) r.e[i] += o.e[i];
    strip(r.e);
    return r;
}

XiMon XiMon::pow2(int k) const {
    XiMon r = *this;
    for (auto& x : r.e) x <<= k;
    return r;
}

XiMon XiMon::shift_up() const {
    if (e.empty()) return {};
    XiMon r;
    r.e.assign(e.size() + 1, 0);
    for (size_t i = 0; i < e.size(); ++i) r.e[i + 1] = e[i];
    return r;
}

bool XiMon::operator<(const XiMon& o) const {
    size_t n = std::max(e.size(), o.e.size());
    for (size_t i = 0; i < n; ++i) {
        int a = i < e.size() ? e[i] : 0;
        int b = i < o.e.size() ? o.e[i] : 0;
        if (a != b) return a < b;
    }
    return false;
}

std::string XiMon::str(const char* sym) const {
    if (e.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!s.empty()) s += ' ';
        s += sym;
        s += std::to_string(i + 1);
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

template <class T>
static std::vector<T> sym_diff(const std::vector<T>& p, const std::vector<T>& q) {
    std::vector<T> r;
    r.reserve(p.size() + q.size());
    size_t i = 0, j = 0;
    while (i < p.size() && j < q.size()) {
        if (p[i] < q[j]) r.push_back(p[i++]);
        else if (q[j] < p[i]) r.push_back(q[j++]);
        else { ++i; ++j; }
    }
    r.insert(r.end(), p.begin() + i, p.end());
    r.insert(r.end(), q.begin() + j, q.end());
    return r;
}

template <class T>
static void normalize(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    std::vector<T> r;
    for (size_t i = 0; i < v.size();) {
        size_t j = i;
        while (j < v.size() && !(v[i] < v[j]) && !(v[j] < v[i])) ++j;
        if ((j - i) & 1) r.push_back(v[i]);
        i = j;
    }
    v.swap(r);
}

XiPoly poly_add(const XiPoly& p, const XiPoly& q) { return sym_diff(p, q); }

XiPoly poly_mul(const XiPoly& p, const XiPoly& q) {
    XiPoly r;
    r.reserve(p.size() * q.size());
    for (const auto& a : p)
        for (const auto& b : q) r.push_back(a * b);
    normalize(r);
    return r;
}

XiPoly poly_pow(const XiPoly& p, long e) {
    XiPoly r{XiMon::one()};
    XiPoly b = p;
    while (e) {
        if (e & 1) r = poly_mul(r, b);
        b = poly_mul(b, b);
        e >>= 1;
    }
    return r;
}

std::string poly_str(const XiPoly& p, const char* sym) {
    if (p.empty()) return "0";
    XiPoly s = p;
    std::sort(s.begin(), s.end(), [](const XiMon& a, const XiMon& b) {
        long da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a < b;
    });
    std::string out;
    for (const auto& m : s) {
        if (!out.empty()) out += " + ";
        out += m.str(sym);
    }
    return out;
}

XiTensor tensor_add(const XiTensor& s, const XiTensor& t) { return sym_diff(s, t); }

XiTensor tensor_mul(const XiTensor& s, const XiTensor& t) {
    XiTensor r;
    r.reserve(s.size() * t.size());
    for (const auto& [a, b] : s)
        for (const auto& [c, d] : t) r.emplace_back(a * c, b * d);
    normalize(r);
    return r;
}

static XiTensor tensor_pow2(const XiTensor& s, int k) {
    XiTensor r;
    r.reserve(s.size());
    for (const auto& [a, b] : s) r.emplace_back(a.pow2(k), b.pow2(k));
    std::sort(r.begin(), r.end());
    return r;
}

XiPoly conjugate_xi(int n) {
    static std::map<int, XiPoly> cache;
    if (n <= 0) return {XiMon::one()};
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    XiPoly acc{XiMon::gen(n)};
    for (int i = 1; i < n; ++i) {
        XiPoly t = poly_mul(poly_pow({XiMon::gen(i)}, 1L << (n - i)),
                            conjugate_xi(n - i));
        acc = poly_add(acc, t);
    }
    cache[n] = acc;
    return acc;
}

XiPoly expand_xibar(const XiMon& m) {
    XiPoly acc{XiMon::one()};
    for (size_t i = 0; i < m.e.size(); ++i)
        if (m.e[i]) acc = poly_mul(acc, poly_pow(conjugate_xi((int)i + 1), m.e[i]));
    return acc;
}

int an_cap(int n, int k) {
    if (k > n + 1) return 0;
    return 1 << (n + 2 - k);
}

bool in_an(int n, const XiMon& m) {
    for (size_t i = 0; i < m.e.size(); ++i) {
        int cap = an_cap(n, (int)i + 1);
        if (cap == 0 ? m.e[i] != 0 : m.e[i] >= cap) return false;
    }
    return true;
}

XiPoly clip_an(const XiPoly& p, int n) {
    XiPoly r;
    for (const auto& m : p)
        if (in_an(n, m)) r.push_back(m);
    return r;
}

std::vector<XiMon> an_basis(int n) {
    std::vector<XiMon> out{XiMon::one()};
    for (int k = 1; k <= n + 1; ++k) {
        std::vector<XiMon> next;
        for (const auto& m : out)
            for (int e = 0; e < an_cap(n, k); ++e)
                next.push_back(m * XiMon::gen(k, e));
        out.swap(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

static XiTensor coproduct_xibar_gen(int k) {
    XiTensor out;
    for (int i = 0; i <= k; ++i) {
        int j = k - i;
        XiMon l = i ? XiMon::gen(i) : XiMon::one();
        XiMon r = j ? XiMon::gen(j, 1 << i) : XiMon::one();
        out.emplace_back(l, r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

XiTensor coproduct_xibar(const XiMon& m) {
    XiTensor acc{{XiMon::one(), XiMon::one()}};
    for (size_t idx = 0; idx < m.e.size(); ++idx) {
        int k = (int)idx + 1;
        int e = m.e[idx];
        for (int bit = 0; e; ++bit, e >>= 1)
            if (e & 1) acc = tensor_mul(acc, tensor_pow2(coproduct_xibar_gen(k), bit));
    }
    return acc;
}

static XiTensor coproduct_xi_gen(int k) {
    XiTensor out;
    for (int i = 0; i <= k; ++i) {
        int j = k - i;
        XiMon l = j ? XiMon::gen(j, 1 << i) : XiMon::one();
        XiMon r = i ? XiMon::gen(i) : XiMon::one();
        out.emplace_back(l, r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

static XiTensor clip_tensor_an(const XiTensor& t, int n) {
    XiTensor r;
    for (const auto& [a, b] : t)
        if (in_an(n, a) && in_an(n, b)) r.push_back({a, b});
    return r;
}

XiTensor coproduct_an(const XiMon& m, int n) {
    if (!in_an(n, m)) throw std::invalid_argument("monomial not in A(n)*");
    XiTensor acc{{XiMon::one(), XiMon::one()}};
    for (size_t idx = 0; idx < m.e.size(); ++idx) {
        int k = (int)idx + 1;
        int e = m.e[idx];
        for (int bit = 0; e; ++bit, e >>= 1)
            if (e & 1)
                acc = clip_tensor_an(
                    tensor_mul(acc, tensor_pow2(coproduct_xi_gen(k), bit)), n);
    }
    return acc;
}

XiTensor coaction_an(const XiMon& m, int n) {
    std::map<XiMon, XiPoly> grouped;
    for (const auto& [l, r] : coproduct_xibar(m)) {
        XiPoly lp = clip_an(expand_xibar(l), n);
        if (!lp.empty()) {
            auto& cur = grouped[r];
            cur = poly_add(cur, lp);
        }
    }
    XiTensor out;
    for (const auto& [r, lp] : grouped)
        for (const auto& a : lp) out.emplace_back(a, r);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace coop
