#pragma once

#include "linkcob/witt.hpp"

#include <optional>
#include <utility>

namespace linkcob::cobordism {

using abgroup::GroupHom;
using forms::BilinearForm;
using witt::SearchOutcome;
using zlattice::Submodule;

// Clause order mirrors the verification: M must be a metabolizer for
// B = (-A0) + A1, its image in the quotient by Ker S_B* must stay pure, the
// kernel intersection must be the graph of an isomorphism phi (c1), and the
// saturated image must project to the graph of an isomorphism theta between
// the torsion subgroups of the cokernels (c2).
enum class CobordismClause { NotMetabolizer, MbarNotPure, C1NotGraph, C2NotGraph };

std::string to_string(CobordismClause c);

struct CobordismReport {
    bool verdict = false;
    Submodule metabolizer;
    std::optional<GroupHom> phi;    // Ker S0* -> Ker S1*, in kernel-basis coordinates
    std::optional<GroupHom> theta;  // Tors Coker S0* -> Tors Coker S1*
    std::optional<CobordismClause> failed_clause;
    // (|d(S_B*(M)^)|, |Tors Coker S0*|): computed whenever the metabolizer and
    // purity clauses pass; equal on every true verdict.
    std::optional<std::pair<Int, Int>> order_check;
    witt::MetabolizerCheck metabolizer_check;
    // S_B*(G0+G1) meet S_B*(M)^ = S_B*(M), and the index [X : S_B*(M)] agrees
    // with the order of d(X).
    bool image_identity_check = true;
};

// Full clause-by-clause verification of algebraic cobordism with witness M.
// phi and theta are always derived from M, never supplied.
CobordismReport verify_witness(const BilinearForm& a0, const BilinearForm& a1,
                               const Submodule& m);

// The diagonal {(x, x)} in Z^{2m}; the canonical reflexivity witness.
Submodule diagonal_witness(const BilinearForm& a);

// {(y, x) : (x, y) in M}: turns a witness for A0 ~ A1 into one for A1 ~ A0.
Submodule swap_witness(const Submodule& m, std::size_t m0, std::size_t m1);

// One algebraic surgery step: extend A by generators l, l* with A'(l, -) =
// A'(-, l) = 0 on G, A'(l, l) = 0, A'(l, l*) = 1, A'(l*, l) = 0 and the l*
// pairings given by the caller.  The returned witness is the diagonal
// together with l; with the zero defaults the new block of S' is unimodular
// and verify_witness(A, A', M) holds.
struct Stabilization {
    BilinearForm stabilized;
    Submodule witness;  // inside Z^{m + (m+2)}
};

Stabilization stabilize(const BilinearForm& a, const std::vector<Int>& cross_row,
                        const std::vector<Int>& cross_col, const Int& self_pair);
Stabilization stabilize_default(const BilinearForm& a);

// Metabolizer search on B = (-A0) + A1 with graph-compatibility pruning; every
// Found witness has passed verify_witness in full.
SearchOutcome search_witness(const BilinearForm& a0, const BilinearForm& a1, long height,
                             long long node_budget, const std::atomic<bool>* cancel = nullptr);

}  // namespace linkcob::cobordism
