#include "coop/f2.hpp"

namespace coop {

size_t F2Matrix::rank() const {
    std::vector<F2Vec> ech;
    std::vector<size_t> pivots;
    for (const F2Vec& r0 : rows_) {
        F2Vec r = r0;
        for (size_t k = 0; k < ech.size(); ++k)
            if (r.get(pivots[k])) r.xor_in(ech[k]);
        size_t p = r.first_set();
        if (p < cols_) {
            ech.push_back(r);
            pivots.push_back(p);
        }
    }
    return ech.size();
}

F2Matrix F2Matrix::rref() const {
    F2Matrix m = *this;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < m.rows_.size(); ++c) {
        size_t sel = m.rows_.size();
        for (size_t i = r; i < m.rows_.size(); ++i)
            if (m.rows_[i].get(c)) { sel = i; break; }
        if (sel == m.rows_.size()) continue;
        std::swap(m.rows_[r], m.rows_[sel]);
        for (size_t i = 0; i < m.rows_.size(); ++i)
            if (i != r && m.rows_[i].get(c)) m.rows_[i].xor_in(m.rows_[r]);
        ++r;
    }
    return m;
}

std::optional<F2Vec> F2Matrix::row_solve(const F2Vec& target) const {
    if (target.size() != cols_) throw std::invalid_argument("row_solve: width mismatch");
    // echelonize rows while tracking coefficients in an identity tail
    std::vector<F2Vec> ech, coef;
    std::vector<size_t> pivots;
    for (size_t i = 0; i < rows_.size(); ++i) {
        F2Vec r = rows_[i];
        F2Vec c(rows_.size());
        c.set(i);
        for (size_t k = 0; k < ech.size(); ++k)
            if (r.get(pivots[k])) { r.xor_in(ech[k]); c.xor_in(coef[k]); }
        size_t p = r.first_set();
        if (p < cols_) {
            ech.push_back(r);
            coef.push_back(c);
            pivots.push_back(p);
        }
    }
    F2Vec r = target;
    F2Vec x(rows_.size());
    for (size_t k = 0; k < ech.size(); ++k)
        if (r.get(pivots[k])) { r.xor_in(ech[k]); x.xor_in(coef[k]); }
    if (!r.is_zero()) return std::nullopt;
    return x;
}

F2Matrix F2Matrix::left_kernel_basis() const {
    size_t n = rows_.size();
    std::vector<F2Vec> ech, coef;
    std::vector<size_t> pivots;
    F2Matrix ker(0, n);
    for (size_t i = 0; i < n; ++i) {
        F2Vec r = rows_[i];
        F2Vec c(n);
        c.set(i);
        for (size_t k = 0; k < ech.size(); ++k)
            if (r.get(pivots[k])) { r.xor_in(ech[k]); c.xor_in(coef[k]); }
        size_t p = r.first_set();
        if (p < cols_) {
            ech.push_back(r);
            coef.push_back(c);
            pivots.push_back(p);
        } else {
            ker.append_row(c);
        }
    }
    return ker;
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix t(cols_, rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (rows_[i].get(j)) t.set(j, i);
    return t;
}

F2Matrix matmul(const F2Matrix& a, const F2Matrix& b) {
    if (a.col_count() != b.row_count())
        throw std::invalid_argument("matmul: shape mismatch");
    F2Matrix out(a.row_count(), b.col_count());
    for (size_t i = 0; i < a.row_count(); ++i)
        for (size_t k = 0; k < a.col_count(); ++k)
            if (a.get(i, k)) out.row(i).xor_in(b.row(k));
    return out;
}

F2Matrix identity_matrix(size_t n) {
    F2Matrix out(n, n);
    for (size_t i = 0; i < n; ++i) out.set(i, i);
    return out;
}

} // namespace coop
