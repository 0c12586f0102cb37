#pragma once

#include "linkcob/int_matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace linkcob::zlattice {

// Row-style Hermite normal form: U * A = H with U unimodular, H in echelon
// form with positive pivots and entries above each pivot reduced into
// [0, pivot).  H is the canonical basis of the row lattice of A.
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
    std::size_t rank = 0;
};

HnfResult hnf(const IntMatrix& a);

// Smith normal form: U * A * V = D with U, V unimodular and D diagonal,
// d_1 | d_2 | ... | d_r >= 1 followed by zeros.
struct SnfDecomposition {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
    std::size_t rank = 0;                 // number of nonzero diagonal entries
    std::vector<Int> invariant_factors;   // the nonzero d_i, 1s included
};

SnfDecomposition snf(const IntMatrix& a);

// A finite-rank submodule of Z^m stored as an HNF-canonical row basis, so two
// equal submodules compare equal syntactically.
class Submodule {
public:
    Submodule() = default;
    explicit Submodule(std::size_t ambient_rank) : ambient_(ambient_rank), basis_(0, ambient_rank) {}

    // Canonicalizes: rows of `generators` may be dependent or zero.
    static Submodule from_generators(std::size_t ambient_rank, const IntMatrix& generators);
    static Submodule full(std::size_t ambient_rank);

    std::size_t ambient_rank() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }

    bool contains(const std::vector<Int>& x) const;
    bool contains(const Submodule& other) const;

    bool operator==(const Submodule& rhs) const = default;

private:
    std::size_t ambient_ = 0;
    IntMatrix basis_{0, 0};
};

// Exact integral kernel {x in Z^cols : A x = 0}; always a pure submodule.
Submodule kernel_basis(const IntMatrix& a);

// Smallest pure submodule containing M (same rank, torsion-free quotient).
Submodule saturate(const Submodule& m);

// True iff Z^m / M is torsion free, i.e. all invariant factors of the basis are 1.
bool is_pure(const Submodule& m);

// Some integral solution of A x = b, or nullopt if none exists.
std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b);

// Lattice intersection inside a common ambient Z^m.
Submodule intersect(const Submodule& m, const Submodule& n);

// Inverse of a matrix with |det| = 1; throws if the input is not unimodular.
IntMatrix inverse_unimodular(const IntMatrix& p);

// The quotient Z^rows / colspan(A), in invariant-factor normal form, plus the
// change of basis needed to express any covector in quotient coordinates.
//
// Coordinates are laid out [free block | torsion block], free part first,
// torsion factors in ascending divisibility order.
class CokernelDecomposition {
public:
    CokernelDecomposition() = default;
    explicit CokernelDecomposition(const IntMatrix& a);

    std::size_t ambient_rank() const { return ambient_; }
    std::size_t free_rank() const { return free_idx_.size(); }
    const std::vector<Int>& torsion() const { return torsion_; }  // factors >= 2
    Int torsion_order() const;

    // Coordinates of a covector's class: free coordinates exact, torsion
    // coordinates reduced into [0, d_i).
    std::vector<Int> project(const std::vector<Int>& w) const;

    // Raw quotient map as a matrix Q ((free+torsion) x rows); torsion rows are
    // meaningful mod their factor.
    IntMatrix quotient_matrix() const;

    const IntMatrix& row_transform() const { return u_; }

private:
    std::size_t ambient_ = 0;
    IntMatrix u_{0, 0};
    std::vector<Int> row_factors_;          // per row of U: d_i or 0
    std::vector<std::size_t> free_idx_;     // rows of U giving free coordinates
    std::vector<std::size_t> torsion_idx_;  // rows of U giving torsion coordinates
    std::vector<Int> torsion_;
};

CokernelDecomposition cokernel(const IntMatrix& a);

// Index [big : small] for nested full-rank-equal lattices (small subset of big,
// equal ranks); throws if the inclusion fails.
Int lattice_index(const Submodule& big, const Submodule& small);

// For a pure submodule K of Z^m: a projection Q with kernel exactly K
// presenting the free quotient Z^m/K, and a section C with Q * C = I.
// Both come deterministically from the Smith normal form of the inclusion.
struct PureQuotient {
    IntMatrix projection;  // (m - k) x m
    IntMatrix section;     // m x (m - k)
};

PureQuotient pure_quotient(const Submodule& k);

}  // namespace linkcob::zlattice
