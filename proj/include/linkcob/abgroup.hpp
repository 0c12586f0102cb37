#pragma once

#include "linkcob/zlattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace linkcob::abgroup {

using zlattice::CokernelDecomposition;
using zlattice::Submodule;

// Finitely generated abelian group in invariant-factor normal form:
// Z^free_rank + Z_{d_1} + ... + Z_{d_t} with 2 <= d_1 | d_2 | ... | d_t.
//
// Elements are coordinate vectors of length free_rank + t, free coordinates
// first, torsion coordinates canonically reduced into [0, d_i).
class FgAbelianGroup {
public:
    FgAbelianGroup() = default;
    FgAbelianGroup(std::size_t free_rank, std::vector<Int> torsion);

    static FgAbelianGroup free(std::size_t rank) { return FgAbelianGroup(rank, {}); }
    static FgAbelianGroup trivial() { return FgAbelianGroup(0, {}); }
    static FgAbelianGroup from_cokernel(const CokernelDecomposition& c);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    std::size_t n_coords() const { return free_rank_ + torsion_.size(); }
    bool is_trivial() const { return n_coords() == 0; }
    bool is_free() const { return torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    Int torsion_order() const;
    Int order() const;  // throws DomainError when infinite

    // Rows of the relation lattice in the coordinate cover Z^{n_coords()}.
    IntMatrix relation_matrix() const;

    std::vector<Int> reduce(std::vector<Int> coords) const;
    FgAbelianGroup torsion_subgroup_as_group() const { return FgAbelianGroup(0, torsion_); }

    std::string to_string() const;

    bool operator==(const FgAbelianGroup& rhs) const = default;

private:
    std::size_t free_rank_ = 0;
    std::vector<Int> torsion_;
};

// Z^n modulo the row span of `relations`, in normal form.
FgAbelianGroup from_presentation(const IntMatrix& relations);

// Normal form of A + B (invariant factors get re-merged, e.g. Z2 + Z3 = Z6).
FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

// Homomorphism between groups in normal form, stored as a matrix on the
// normal-form generators (columns indexed by source coordinates).
// Construction verifies well-definedness: every source relation must map
// into the target relation lattice.
class GroupHom {
public:
    GroupHom() = default;
    GroupHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix);

    static GroupHom identity(const FgAbelianGroup& g);
    static GroupHom zero(const FgAbelianGroup& source, const FgAbelianGroup& target);

    const FgAbelianGroup& source() const { return source_; }
    const FgAbelianGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    std::vector<Int> apply(const std::vector<Int>& coords) const;
    GroupHom compose_after(const GroupHom& inner) const;  // this ∘ inner

    bool is_identity() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const { return is_injective() && is_surjective(); }

    // Kernel and image as lattices in the coordinate covers (both contain the
    // respective relation lattices).
    Submodule kernel_lattice() const;
    Submodule image_lattice() const;

    std::string to_string() const;

    bool operator==(const GroupHom& rhs) const = default;

private:
    FgAbelianGroup source_;
    FgAbelianGroup target_;
    IntMatrix matrix_;  // canonicalized: torsion-target rows reduced mod factor
};

// True iff image(f) = kernel(g) inside target(f) = source(g).
bool is_exact_at(const GroupHom& f, const GroupHom& g);

// A subgroup of a product G0 x G1, given by generator coordinate rows
// (layout: [G0 coords | G1 coords]).
struct SubgroupInProduct {
    FgAbelianGroup g0;
    FgAbelianGroup g1;
    IntMatrix generators;

    // Lift to the coordinate cover Z^{n0+n1}, relations included.
    Submodule lattice() const;
    Int order() const;  // throws when the ambient product is not finite
};

// The diagonal-style decision of conditions (c1)/(c2): when H is the graph of
// an isomorphism G0 -> G1, extract it; otherwise return nullopt.  Both
// factors must be free, or both finite.
std::optional<GroupHom> is_graph_of_isomorphism(const SubgroupInProduct& h);

// The graph {(x, phi(x))} of a hom as a subgroup of source x target.
SubgroupInProduct graph_of(const GroupHom& phi);

// All torsion elements, each exactly once; throws BudgetError when the
// torsion order exceeds the budget.
std::vector<std::vector<Int>> torsion_elements(const FgAbelianGroup& g, const Int& budget);

}  // namespace linkcob::abgroup
