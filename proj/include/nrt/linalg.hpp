#pragma once

#include <optional>
#include <vector>

#include "nrt/errors.hpp"
#include "nrt/gf.hpp"
#include "nrt/rational.hpp"

namespace nrt {

// Dense matrix over the rationals, value semantics, exact throughout.
class RatMatrix {
public:
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows <= 0 || cols <= 0) throw DimensionMismatch("matrix dimensions must be positive");
    }

    static RatMatrix identity(int n);
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<Rational> row(int i) const;

    RatMatrix operator*(const RatMatrix& other) const;
    RatMatrix operator+(const RatMatrix& other) const;
    RatMatrix operator-(const RatMatrix& other) const;
    RatMatrix scaled(const Rational& c) const;
    RatMatrix transposed() const;
    Rational trace() const;
    bool is_identity() const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

struct RrefResult {
    RatMatrix mat;
    std::vector<int> pivots;
    int rank;
};

// Unique reduced row echelon form; pivot columns strictly increasing.
RrefResult rref(const RatMatrix& m);

// Canonical basis of the right null space: one vector per free column in
// increasing order, that free variable set to 1 and the others to 0.
std::vector<std::vector<Rational>> kernel(const RatMatrix& m);

RatMatrix inverse(const RatMatrix& m);  // SingularMatrix if not invertible

// Solves A x = b exactly; free variables are set to zero. Returns nullopt
// when the system is inconsistent.
std::optional<std::vector<Rational>> solve_with_free_zero(const RatMatrix& a,
                                                          const std::vector<Rational>& b);

// Incrementally maintained row space in reduced echelon form; used for
// span-membership tests and for splitting new vectors off a known subspace.
class RowSpan {
public:
    explicit RowSpan(int cols) : cols_(cols) {}

    // Residual of v after reduction by the current rows (not normalized).
    std::vector<Rational> reduce(std::vector<Rational> v) const;
    // Reduce, and if the residual is nonzero insert its monic normalization.
    // Returns the inserted row, or nullopt if v was already in the span.
    std::optional<std::vector<Rational>> insert(std::vector<Rational> v);
    bool contains(std::vector<Rational> v) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    // Fully reduced rows in increasing pivot order (an RREF of the span).
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    int cols_;
    std::vector<std::vector<Rational>> rows_;  // kept fully reduced
    std::vector<int> pivots_;
};

// --- the same solvers over GF(q) ---------------------------------------

// Rows of index-encoded field elements; field kept alongside.
struct GFMatrix {
    FieldPtr field;
    int rows = 0, cols = 0;
    std::vector<uint32_t> a;

    GFMatrix() = default;
    GFMatrix(FieldPtr f, int r, int c)
        : field(std::move(f)), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint32_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    uint32_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    friend bool operator==(const GFMatrix& x, const GFMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a &&
               same_field(*x.field, *y.field);
    }
};

struct GFRrefResult {
    GFMatrix mat;
    std::vector<int> pivots;
    int rank;
};

GFRrefResult gf_rref(const GFMatrix& m);
std::vector<std::vector<uint32_t>> gf_kernel(const GFMatrix& m);

}  // namespace nrt
