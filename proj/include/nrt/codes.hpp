#pragma once

#include <cstdint>
#include <vector>

#include "nrt/gf.hpp"
#include "nrt/linalg.hpp"
#include "nrt/multipoly.hpp"

namespace nrt {

// Default guardrail for exhaustive enumeration (messages per enumerator,
// ambient space size per self-dual scan).
inline constexpr uint64_t kDefaultBudget = uint64_t(1) << 24;

// n x m matrix over GF(q), the points of the NRT space.
class CodeMatrix {
public:
    CodeMatrix(FieldPtr field, int n, int m)
        : field_(std::move(field)), n_(n), m_(m),
          e_(static_cast<size_t>(n) * m, 0) {}

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    int n() const { return n_; }
    int m() const { return m_; }

    uint32_t& idx_at(int i, int j) { return e_[static_cast<size_t>(i) * m_ + j]; }
    uint32_t idx_at(int i, int j) const { return e_[static_cast<size_t>(i) * m_ + j]; }
    FieldElement at(int i, int j) const { return field_->element(idx_at(i, j)); }

    std::vector<FieldElement> row(int i) const;
    const std::vector<uint32_t>& flat() const { return e_; }

    friend bool operator==(const CodeMatrix& a, const CodeMatrix& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.e_ == b.e_ &&
               same_field(*a.field_, *b.field_);
    }

private:
    FieldPtr field_;
    int n_, m_;
    std::vector<uint32_t> e_;
};

// Row counts by NRT weight: e[j-1] rows of weight j, e0 zero rows.
struct ShapeVector {
    std::vector<int> e;
    int e0 = 0;

    // (e0, e1, ..., em), the exponent vector of the associated monomial.
    Monomial exponents() const;
    friend bool operator==(const ShapeVector& a, const ShapeVector& b) {
        return a.e == b.e && a.e0 == b.e0;
    }
};

// Largest 1-based index of a nonzero entry; 0 for the zero vector.
int rho_row(const std::vector<FieldElement>& v);
// Sum of row weights.
int rho_matrix(const CodeMatrix& a);
ShapeVector shape_of(const CodeMatrix& a);

// <A,B> = sum_i sum_j a_ij * b_i,m-j+1 (1-based), the NRT pairing.
FieldElement nrt_inner_product(const CodeMatrix& a, const CodeMatrix& b);

// Linear code given by a generator matrix of row-major flattened codewords,
// stored in RREF so equal codes compare equal.
class LinearCode {
public:
    static LinearCode from_generators(FieldPtr field, int n, int m,
                                      const std::vector<std::vector<uint32_t>>& rows);
    static LinearCode zero_code(FieldPtr field, int n, int m);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    int n() const { return n_; }
    int m() const { return m_; }
    int dim() const { return r_; }
    const GFMatrix& generators() const { return gen_; }

    // message_index < q^dim, decoded big-endian in canonical element order
    CodeMatrix codeword(uint64_t message_index) const;
    uint64_t size() const;  // q^dim, DegreeMismatch if it overflows 64 bits

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.r_ == b.r_ && a.gen_ == b.gen_;
    }

private:
    LinearCode(FieldPtr field, int n, int m, GFMatrix gen, int r)
        : field_(std::move(field)), n_(n), m_(m), r_(r), gen_(std::move(gen)) {}

    FieldPtr field_;
    int n_, m_, r_;
    GFMatrix gen_;  // r x (n*m), RREF
};

LinearCode dual_code(const LinearCode& c);
bool is_self_dual(const LinearCode& c);

// Homogeneous degree-n polynomial in m+1 variables counting codewords by
// shape; exhaustive over the q^dim messages. BudgetExceeded when q^dim is
// above the budget.
MultiPoly shape_enumerator(const LinearCode& c, uint64_t budget = kDefaultBudget,
                           int threads = 1);

// All r-dimensional codes in M_{n,m}(GF(q)), one RREF canonical form per
// subspace: pivot column sets in lex order, free entries in canonical
// element order.
std::vector<LinearCode> enumerate_codes(const FieldPtr& field, int n, int m, int r);

// The self-dual ones (dimension nm/2). OddAmbient when nm is odd,
// BudgetExceeded when q^(nm) is above the budget.
std::vector<LinearCode> enumerate_self_dual_codes(const FieldPtr& field, int n, int m,
                                                  uint64_t budget = kDefaultBudget,
                                                  int threads = 1);

}  // namespace nrt
