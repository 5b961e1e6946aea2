#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nrt/linalg.hpp"
#include "nrt/multipoly.hpp"

namespace nrt {

// T rows form eigenbases of the involution: T * sigma = D * T with
// D = diag(+1 x plus_count, -1 x minus_count).
struct Diagonalization {
    RatMatrix t;
    int plus_count;
    int minus_count;
};

// Rows of T are the canonical kernel bases of (sigma^T - I), then of
// (sigma^T + I). Throws NotInvolution unless sigma^2 = I.
Diagonalization diagonalize_involution(const RatMatrix& sigma);

// Where a generator came from: a variable x_i, a product x_i x_j, or a
// canonical basis element picked at some degree.
struct GenSource {
    enum class Kind { Variable, Product, Basis };
    Kind kind;
    int i = -1;
    int j = -1;

    std::string str() const;
    friend bool operator==(const GenSource& a, const GenSource& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j;
    }
};

struct Generator {
    MultiPoly poly;
    int degree;
    GenSource source;
};

// Homogeneous generators in nondecreasing degree order.
struct GeneratorSet {
    std::vector<Generator> items;

    size_t size() const { return items.size(); }
    std::vector<MultiPoly> polys() const;
    std::vector<int> degrees() const;
};

// Generating set of the polynomials fixed by diag(1 x (m/2+1), -1 x (m/2)):
// the variables x_0..x_{m/2}, then the products x_i x_j for
// m/2+1 <= i <= j <= m in lex order on (i, j). Requires m even.
GeneratorSet diagonal_invariant_generators(int m);  // OddM

// Closed-form diagonalizing matrix for sigma_matrix(q, m), known for
// m in {2, 4, 6}; entries are explicit rational functions of q.
RatMatrix closed_form_diagonalizer(long long q, int m);

// Push a generating set through the change of basis: each polynomial is
// substituted with T (row convention). Degrees are preserved, and every
// image is fixed by the conjugated involution.
GeneratorSet transfer_generators(const RatMatrix& t, const GeneratorSet& a);

// For every pair of degree-2 generators with sources x_i x_j and x_k x_l,
// the images satisfy im(x_i x_j) * im(x_k x_l) = im(x_i x_k) * im(x_j x_l)
// for each re-pairing of {i,j,k,l}. Returns the list of checked identities;
// throws RelationViolated if any fails (which would be an implementation
// bug, not a mathematical one).
struct RelationReport {
    struct Entry {
        std::string relation;
        bool holds;
    };
    std::vector<Entry> checked;
    bool all_hold() const;
};

RelationReport verify_relations(const GeneratorSet& b);

// Expresses p as a polynomial in the generators: solves the exact linear
// system over all generator-monomials of matching weighted degree, free
// coefficients set to zero in grlex order. Returns a polynomial in
// |b| variables, or nullopt when p is not in the generated subring.
std::optional<MultiPoly> rewrite_in_generators(const MultiPoly& p, const GeneratorSet& b);

// Substitutes the generators back into an expression produced by
// rewrite_in_generators.
MultiPoly expand_in_generators(const MultiPoly& expr, const GeneratorSet& b);

}  // namespace nrt
