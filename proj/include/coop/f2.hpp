#pragma once
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace coop {

// dense GF(2) vector, 64-bit blocks
class F2Vec {
  public:
    F2Vec() = default;
    explicit F2Vec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v = true) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void xor_in(const F2Vec& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }
    bool is_zero() const {
        for (uint64_t x : w_) if (x) return false;
        return true;
    }
    // index of first set bit, or size() if none
    size_t first_set() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return (k << 6) + static_cast<size_t>(__builtin_ctzll(w_[k]));
        return n_;
    }
    size_t popcount() const {
        size_t c = 0;
        for (uint64_t x : w_) c += static_cast<size_t>(__builtin_popcountll(x));
        return c;
    }
    bool operator==(const F2Vec& o) const { return n_ == o.n_ && w_ == o.w_; }

  private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// row-major GF(2) matrix; all reductions use the leftmost pivot column and
// the first remaining row holding a 1 there, so results are deterministic
class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, F2Vec(cols)) {}

    size_t row_count() const { return rows_.size(); }
    size_t col_count() const { return cols_; }
    F2Vec& row(size_t i) { return rows_[i]; }
    const F2Vec& row(size_t i) const { return rows_[i]; }
    bool get(size_t i, size_t j) const { return rows_[i].get(j); }
    void set(size_t i, size_t j, bool v = true) { rows_[i].set(j, v); }
    void flip(size_t i, size_t j) { rows_[i].flip(j); }
    void append_row(const F2Vec& v) {
        if (v.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
        rows_.push_back(v);
    }

    size_t rank() const;
    F2Matrix rref() const;
    // coefficients x over the rows with sum_i x_i row_i = target, if any
    std::optional<F2Vec> row_solve(const F2Vec& target) const;
    // basis of { x : sum_i x_i row_i = 0 }, echelonized over row indices
    F2Matrix left_kernel_basis() const;
    F2Matrix transpose() const;

  private:
    size_t cols_ = 0;
    std::vector<F2Vec> rows_;
};

F2Matrix matmul(const F2Matrix& a, const F2Matrix& b);
F2Matrix identity_matrix(size_t n);

} // namespace coop
