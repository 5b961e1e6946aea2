#include "nrt/linalg.hpp"

#include <algorithm>

namespace nrt {

namespace {

// Row reduction skeleton shared by the rational and GF(q) instantiations.
// Ops supplies the element type and its field arithmetic.
template <class Ops>
std::vector<int> rref_in_place(std::vector<typename Ops::Elem>& a, int rows, int cols,
                               const Ops& ops) {
    std::vector<int> pivots;
    int prow = 0;
    for (int col = 0; col < cols && prow < rows; ++col) {
        int sel = -1;
        for (int r = prow; r < rows; ++r) {
            if (!ops.is_zero(a[static_cast<size_t>(r) * cols + col])) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != prow) {
            for (int j = 0; j < cols; ++j)
                std::swap(a[static_cast<size_t>(sel) * cols + j],
                          a[static_cast<size_t>(prow) * cols + j]);
        }
        auto inv = ops.inv(a[static_cast<size_t>(prow) * cols + col]);
        for (int j = col; j < cols; ++j) {
            auto& x = a[static_cast<size_t>(prow) * cols + j];
            x = ops.mul(x, inv);
        }
        for (int r = 0; r < rows; ++r) {
            if (r == prow) continue;
            auto factor = a[static_cast<size_t>(r) * cols + col];
            if (ops.is_zero(factor)) continue;
            for (int j = col; j < cols; ++j) {
                auto& x = a[static_cast<size_t>(r) * cols + j];
                x = ops.sub(x, ops.mul(factor, a[static_cast<size_t>(prow) * cols + j]));
            }
        }
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

struct RatOps {
    using Elem = Rational;
    bool is_zero(const Elem& x) const { return x.is_zero(); }
    Elem mul(const Elem& x, const Elem& y) const { return x * y; }
    Elem sub(const Elem& x, const Elem& y) const { return x - y; }
    Elem inv(const Elem& x) const { return Rational(1) / x; }
};

struct GFOps {
    const Field* f;
    using Elem = uint32_t;
    bool is_zero(Elem x) const { return x == 0; }
    Elem mul(Elem x, Elem y) const { return f->mul(x, y); }
    Elem sub(Elem x, Elem y) const { return f->sub(x, y); }
    Elem inv(Elem x) const { return f->inv(x); }
};

// Kernel basis from an RREF: free variables become unit vectors in
// increasing column order.
template <class Elem, class MakeNeg>
std::vector<std::vector<Elem>> kernel_from_rref(const std::vector<Elem>& a, int cols,
                                                const std::vector<int>& pivots, Elem zero,
                                                Elem one, MakeNeg neg) {
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Elem>> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Elem> v(cols, zero);
        v[free_col] = one;
        for (size_t r = 0; r < pivots.size(); ++r) {
            // pivot variable = -(entry in free column)
            v[pivots[r]] = neg(a[r * cols + free_col]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty() || rows[0].empty()) throw DimensionMismatch("empty matrix");
    RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols_)
            throw DimensionMismatch("ragged rows");
        for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rational> RatMatrix::row(int i) const {
    std::vector<Rational> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape");
    RatMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < other.cols_; ++j)
                out.at(i, j) += x * other.at(k, j);
        }
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix sum shape");
    RatMatrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + other.a_[i];
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix difference shape");
    RatMatrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - other.a_[i];
    return out;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
    RatMatrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
    return out;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Rational RatMatrix::trace() const {
    if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
    Rational t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool RatMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

RrefResult rref(const RatMatrix& m) {
    RatMatrix out = m;
    std::vector<Rational> flat;
    flat.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) flat.push_back(m.at(i, j));
    auto pivots = rref_in_place(flat, m.rows(), m.cols(), RatOps{});
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.at(i, j) = flat[static_cast<size_t>(i) * m.cols() + j];
    return {std::move(out), pivots, static_cast<int>(pivots.size())};
}

std::vector<std::vector<Rational>> kernel(const RatMatrix& m) {
    std::vector<Rational> flat;
    flat.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) flat.push_back(m.at(i, j));
    auto pivots = rref_in_place(flat, m.rows(), m.cols(), RatOps{});
    return kernel_from_rref<Rational>(flat, m.cols(), pivots, Rational(0), Rational(1),
                                      [](const Rational& x) { return -x; });
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    int n = m.rows();
    // [M | I] -> [I | M^-1]
    std::vector<Rational> aug(static_cast<size_t>(n) * 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[static_cast<size_t>(i) * 2 * n + j] = m.at(i, j);
        aug[static_cast<size_t>(i) * 2 * n + n + i] = 1;
    }
    auto pivots = rref_in_place(aug, n, 2 * n, RatOps{});
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] >= n)
        throw SingularMatrix();
    RatMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug[static_cast<size_t>(i) * 2 * n + n + j];
    return out;
}

std::optional<std::vector<Rational>> solve_with_free_zero(const RatMatrix& a,
                                                          const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw DimensionMismatch("rhs length does not match row count");
    int rows = a.rows(), cols = a.cols();
    std::vector<Rational> aug(static_cast<size_t>(rows) * (cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[static_cast<size_t>(i) * (cols + 1) + j] = a.at(i, j);
        aug[static_cast<size_t>(i) * (cols + 1) + cols] = b[i];
    }
    auto pivots = rref_in_place(aug, rows, cols + 1, RatOps{});
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = 1 row
    std::vector<Rational> x(cols, Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug[r * (cols + 1) + cols];
    return x;
}

std::vector<Rational> RowSpan::reduce(std::vector<Rational> v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("vector length");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        Rational factor = c;  // rows are monic at their pivot
        for (int j = 0; j < cols_; ++j) v[j] -= factor * rows_[r][j];
    }
    return v;
}

std::optional<std::vector<Rational>> RowSpan::insert(std::vector<Rational> v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (int j = 0; j < cols_; ++j) {
        if (!v[j].is_zero()) {
            piv = j;
            break;
        }
    }
    if (piv < 0) return std::nullopt;
    Rational lead = v[piv];
    for (int j = 0; j < cols_; ++j) v[j] /= lead;
    // keep existing rows reduced against the new one
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rational c = rows_[r][piv];
        if (c.is_zero()) continue;
        for (int j = 0; j < cols_; ++j) rows_[r][j] -= c * v[j];
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, v);
    return v;
}

bool RowSpan::contains(std::vector<Rational> v) const {
    v = reduce(std::move(v));
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

GFRrefResult gf_rref(const GFMatrix& m) {
    GFMatrix out = m;
    auto pivots = rref_in_place(out.a, m.rows, m.cols, GFOps{m.field.get()});
    return {std::move(out), pivots, static_cast<int>(pivots.size())};
}

std::vector<std::vector<uint32_t>> gf_kernel(const GFMatrix& m) {
    GFMatrix red = m;
    auto pivots = rref_in_place(red.a, m.rows, m.cols, GFOps{m.field.get()});
    const Field* f = m.field.get();
    return kernel_from_rref<uint32_t>(red.a, m.cols, pivots, 0u, f->one_index(),
                                      [f](uint32_t x) { return f->neg(x); });
}

}  // namespace nrt
