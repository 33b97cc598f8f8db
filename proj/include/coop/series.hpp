#pragma once
#include <stdexcept>
#include <vector>

#include "coop/rat.hpp"

namespace coop {

// univariate power series truncated past degree `order`.
// C needs +, -, *, == and is copied from a zero prototype, so it works for
// Rat as well as polynomial coefficient rings.
template <class C>
class TruncSeries1 {
  public:
    TruncSeries1(size_t order, C zero) : zero_(std::move(zero)), c_(order + 1, zero_) {}

    size_t order() const { return c_.size() - 1; }
    const C& operator[](size_t k) const { return c_.at(k); }
    void set(size_t k, const C& v) { c_.at(k) = v; }
    const C& zero() const { return zero_; }

    TruncSeries1 operator+(const TruncSeries1& o) const {
        TruncSeries1 r = *this;
        for (size_t k = 0; k <= order() && k <= o.order(); ++k) r.c_[k] = r.c_[k] + o.c_[k];
        return r;
    }
    TruncSeries1 operator-(const TruncSeries1& o) const {
        TruncSeries1 r = *this;
        for (size_t k = 0; k <= order() && k <= o.order(); ++k) r.c_[k] = r.c_[k] - o.c_[k];
        return r;
    }
    TruncSeries1 operator*(const TruncSeries1& o) const {
        TruncSeries1 r(order(), zero_);
        for (size_t i = 0; i <= order(); ++i) {
            if (c_[i] == zero_) continue;
            for (size_t j = 0; i + j <= order() && j <= o.order(); ++j)
                r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        }
        return r;
    }
    TruncSeries1 scale(const C& s) const {
        TruncSeries1 r(order(), zero_);
        for (size_t k = 0; k <= order(); ++k) r.c_[k] = c_[k] * s;
        return r;
    }
    bool operator==(const TruncSeries1& o) const { return c_ == o.c_; }

    // 1/f for f with constant term equal to `one`
    TruncSeries1 reciprocal(const C& one) const {
        if (!(c_[0] == one)) throw std::invalid_argument("reciprocal: constant term must be 1");
        TruncSeries1 r(order(), zero_);
        r.c_[0] = one;
        for (size_t k = 1; k <= order(); ++k) {
            C acc = zero_;
            for (size_t j = 1; j <= k; ++j) acc = acc + c_[j] * r.c_[k - j];
            r.c_[k] = zero_ - acc;
        }
        return r;
    }

    // f(g) for g with zero constant term
    TruncSeries1 compose(const TruncSeries1& g, const C& one) const {
        if (!(g.c_[0] == zero_)) throw std::invalid_argument("compose: inner constant term must be 0");
        TruncSeries1 r(order(), zero_);
        r.c_[0] = c_[0];
        TruncSeries1 p(order(), zero_);
        p.c_[0] = one;
        for (size_t k = 1; k <= order(); ++k) {
            p = p * g;
            if (c_[k] == zero_) continue;
            for (size_t j = 0; j <= order(); ++j) r.c_[j] = r.c_[j] + c_[k] * p.c_[j];
        }
        return r;
    }

    // compositional inverse of f = t + O(t^2)
    TruncSeries1 reversion(const C& one) const {
        if (!(c_[0] == zero_) || !(c_[1] == one))
            throw std::invalid_argument("reversion: series must start t + O(t^2)");
        TruncSeries1 g(order(), zero_);
        g.c_[1] = one;
        for (size_t k = 2; k <= order(); ++k) {
            TruncSeries1 fg = compose(g, one);
            g.c_[k] = g.c_[k] - fg.c_[k];
        }
        return g;
    }

  private:
    C zero_;
    std::vector<C> c_;
};

// antiderivative with zero constant term, for coefficient rings with *Rat
template <class C>
TruncSeries1<C> integrate(const TruncSeries1<C>& f) {
    TruncSeries1<C> r(f.order(), f.zero());
    for (size_t k = 1; k <= f.order(); ++k) r.set(k, f[k - 1] * Rat(1, static_cast<long>(k)));
    return r;
}

// bivariate power series truncated past total degree `order`
template <class C>
class TruncSeries2 {
  public:
    TruncSeries2(size_t order, C zero) : n_(order), zero_(std::move(zero)) {
        c_.resize(n_ + 1);
        for (size_t i = 0; i <= n_; ++i) c_[i].assign(n_ + 1 - i, zero_);
    }

    size_t order() const { return n_; }
    const C& zero() const { return zero_; }
    const C& at(size_t i, size_t j) const {
        static const C* dummy = nullptr;
        (void)dummy;
        if (i + j > n_) throw std::out_of_range("TruncSeries2::at");
        return c_[i][j];
    }
    void set(size_t i, size_t j, const C& v) {
        if (i + j > n_) throw std::out_of_range("TruncSeries2::set");
        c_[i][j] = v;
    }

    TruncSeries2 operator+(const TruncSeries2& o) const {
        TruncSeries2 r = *this;
        for (size_t i = 0; i <= n_; ++i)
            for (size_t j = 0; i + j <= n_; ++j) r.c_[i][j] = r.c_[i][j] + o.c_[i][j];
        return r;
    }
    TruncSeries2 operator-(const TruncSeries2& o) const {
        TruncSeries2 r = *this;
        for (size_t i = 0; i <= n_; ++i)
            for (size_t j = 0; i + j <= n_; ++j) r.c_[i][j] = r.c_[i][j] - o.c_[i][j];
        return r;
    }
    TruncSeries2 operator*(const TruncSeries2& o) const {
        TruncSeries2 r(n_, zero_);
        for (size_t i = 0; i <= n_; ++i)
            for (size_t j = 0; i + j <= n_; ++j) {
                if (c_[i][j] == zero_) continue;
                for (size_t k = 0; i + j + k <= n_; ++k)
                    for (size_t l = 0; i + j + k + l <= n_; ++l)
                        r.c_[i + k][j + l] = r.c_[i + k][j + l] + c_[i][j] * o.c_[k][l];
            }
        return r;
    }
    TruncSeries2 scale(const C& s) const {
        TruncSeries2 r(n_, zero_);
        for (size_t i = 0; i <= n_; ++i)
            for (size_t j = 0; i + j <= n_; ++j) r.c_[i][j] = c_[i][j] * s;
        return r;
    }
    bool operator==(const TruncSeries2& o) const { return n_ == o.n_ && c_ == o.c_; }

    TruncSeries2 swap_vars() const {
        TruncSeries2 r(n_, zero_);
        for (size_t i = 0; i <= n_; ++i)
            for (size_t j = 0; i + j <= n_; ++j) r.c_[j][i] = c_[i][j];
        return r;
    }

    static TruncSeries2 from_x(const TruncSeries1<C>& f, size_t order) {
        TruncSeries2 r(order, f.zero());
        for (size_t k = 0; k <= order && k <= f.order(); ++k) r.c_[k][0] = f[k];
        return r;
    }
    static TruncSeries2 from_y(const TruncSeries1<C>& f, size_t order) {
        TruncSeries2 r(order, f.zero());
        for (size_t k = 0; k <= order && k <= f.order(); ++k) r.c_[0][k] = f[k];
        return r;
    }

    // coefficients of Y^1 as a univariate series in X
    TruncSeries1<C> y_linear_part() const {
        TruncSeries1<C> r(n_ >= 1 ? n_ - 1 : 0, zero_);
        for (size_t i = 0; i + 1 <= n_; ++i) r.set(i, c_[i][1]);
        return r;
    }

  private:
    size_t n_;
    C zero_;
    std::vector<std::vector<C>> c_;
};

// f(arg) for univariate f and bivariate arg with zero constant term
template <class C>
TruncSeries2<C> compose1(const TruncSeries1<C>& f, const TruncSeries2<C>& arg, const C& one) {
    if (!(arg.at(0, 0) == f.zero())) throw std::invalid_argument("compose1: inner constant term must be 0");
    size_t n = arg.order();
    TruncSeries2<C> r(n, f.zero());
    r.set(0, 0, f[0]);
    TruncSeries2<C> p(n, f.zero());
    p.set(0, 0, one);
    for (size_t k = 1; k <= n && k <= f.order(); ++k) {
        p = p * arg;
        if (f[k] == f.zero()) continue;
        for (size_t i = 0; i <= n; ++i)
            for (size_t j = 0; i + j <= n; ++j) r.set(i, j, r.at(i, j) + f[k] * p.at(i, j));
    }
    return r;
}

// f(g, h) for bivariate f, g, h; g and h need zero constant term
template <class C>
TruncSeries2<C> compose2(const TruncSeries2<C>& f, const TruncSeries2<C>& g,
                         const TruncSeries2<C>& h, const C& one) {
    if (!(g.at(0, 0) == f.zero()) || !(h.at(0, 0) == f.zero()))
        throw std::invalid_argument("compose2: inner constant terms must be 0");
    size_t n = f.order();
    std::vector<TruncSeries2<C>> gp, hp;
    TruncSeries2<C> unit(n, f.zero());
    unit.set(0, 0, one);
    gp.push_back(unit);
    hp.push_back(unit);
    for (size_t k = 1; k <= n; ++k) {
        gp.push_back(gp.back() * g);
        hp.push_back(hp.back() * h);
    }
    TruncSeries2<C> r(n, f.zero());
    for (size_t i = 0; i <= n; ++i)
        for (size_t j = 0; i + j <= n; ++j) {
            if (f.at(i, j) == f.zero()) continue;
            TruncSeries2<C> m = gp[i] * hp[j];
            for (size_t a = 0; a <= n; ++a)
                for (size_t b = 0; a + b <= n; ++b)
                    r.set(a, b, r.at(a, b) + f.at(i, j) * m.at(a, b));
        }
    return r;
}

} // namespace coop
