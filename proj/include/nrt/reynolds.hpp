#pragma once

#include <vector>

#include "nrt/linalg.hpp"
#include "nrt/multipoly.hpp"
#include "nrt/transfer.hpp"

namespace nrt {

inline constexpr size_t kDefaultClosureCap = 10000;

// Finite group of rational matrices, closed under products, with identity.
struct MatrixGroup {
    int dim = 0;
    std::vector<RatMatrix> elements;    // identity first, then discovery order
    std::vector<RatMatrix> generators;  // the inputs, deduplicated

    size_t order() const { return elements.size(); }
};

// Breadth-first closure of the generators under multiplication. Throws
// CapExceeded once more than `cap` elements appear (the group may well be
// infinite at that point), SingularMatrix for non-invertible generators.
MatrixGroup group_closure(const std::vector<RatMatrix>& gens,
                          size_t cap = kDefaultClosureCap);

// (1/|G|) * sum over the group of the substituted polynomial; projects onto
// the invariants and is the identity on them.
MultiPoly reynolds_average(const MultiPoly& p, const MatrixGroup& g);

// RREF-canonical basis of the degree-d invariants, obtained by averaging
// every degree-d monomial.
std::vector<MultiPoly> invariant_basis(const MatrixGroup& g, int d);

// Degree-by-degree minimal generating set: at each degree the invariants are
// split against the span of products of lower-degree output, and a canonical
// complement basis is emitted. With maxdeg >= |G| (characteristic zero) the
// result generates the whole invariant ring.
GeneratorSet minimal_generators(const MatrixGroup& g, int maxdeg);

// True iff the determinant of the Jacobian matrix is a nonzero polynomial,
// i.e. the polynomials are algebraically independent. Requires exactly as
// many polynomials as variables.
bool jacobian_independent(const std::vector<MultiPoly>& polys);  // ShapeMismatch

}  // namespace nrt
