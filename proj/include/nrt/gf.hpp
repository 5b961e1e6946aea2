#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nrt {

class FieldElement;

// GF(p^k) with exact arithmetic. Elements are identified by their rank in
// the canonical element order: lexicographic on the coefficient vector
// (constant term first), so index 0 is always the zero element and, for
// prime fields, index i is the residue i.
class Field : public std::enable_shared_from_this<Field> {
public:
    // modulus: k+1 coefficients of a monic irreducible polynomial over
    // GF(p), constant term first. Required for k >= 2 except for GF(4),
    // GF(8), GF(9), which fall back to built-in defaults.
    static std::shared_ptr<const Field> make(int p, int k,
                                             std::optional<std::vector<int>> modulus = std::nullopt);

    int p() const { return p_; }
    int k() const { return k_; }
    uint32_t q() const { return q_; }
    // Empty for prime fields.
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement element(uint32_t idx) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rep(const std::vector<int>& rep) const;

    std::vector<int> rep_of(uint32_t idx) const;
    uint32_t index_of_rep(const std::vector<int>& rep) const;
    uint32_t one_index() const { return one_; }

    // Index-level arithmetic, used directly in enumeration loops.
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t div(uint32_t a, uint32_t b) const;  // DivisionByZero if b == 0
    uint32_t neg(uint32_t a) const;
    uint32_t inv(uint32_t a) const;              // DivisionByZero if a == 0

    std::string element_str(uint32_t idx) const;

    friend bool same_field(const Field& a, const Field& b);

private:
    Field(int p, int k, std::vector<int> modulus);
    void build_tables();

    uint32_t add_raw(uint32_t a, uint32_t b) const;
    uint32_t mul_raw(uint32_t a, uint32_t b) const;
    uint32_t inv_raw(uint32_t a) const;

    int p_;
    int k_;
    uint32_t q_;
    uint32_t one_;
    std::vector<int> modulus_;
    // Flat q*q tables, only built for small fields.
    std::vector<uint16_t> add_table_;
    std::vector<uint16_t> mul_table_;
    std::vector<uint32_t> inv_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

class FieldElement {
public:
    FieldElement(const Field* field, uint32_t idx) : field_(field), idx_(idx) {}

    const Field& field() const { return *field_; }
    uint32_t index() const { return idx_; }
    std::vector<int> rep() const { return field_->rep_of(idx_); }
    bool is_zero() const { return idx_ == 0; }
    std::string str() const { return field_->element_str(idx_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const { return {field_, field_->neg(idx_)}; }
    FieldElement inverse() const { return {field_, field_->inv(idx_)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    const Field* field_;
    uint32_t idx_;
};

bool same_field(const Field& a, const Field& b);

}  // namespace nrt
