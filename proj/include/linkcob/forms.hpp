#pragma once

#include "linkcob/abgroup.hpp"
#include "linkcob/zlattice.hpp"

#include <atomic>
#include <optional>

namespace linkcob::forms {

using abgroup::FgAbelianGroup;
using abgroup::GroupHom;
using zlattice::CokernelDecomposition;
using zlattice::Submodule;

// The matrix of the adjoint S* : G -> G* in dual bases.  The default takes
// S*(x)(y) = S(y, x), i.e. the matrix is S itself; the flipped convention
// uses the transpose.  Since S^T = eps * S every derived group is identical
// under either choice; only signs inside extracted witnesses can move.  The
// convention is process-global so an entire run can be re-executed flipped.
enum class AdjointConvention { Standard, Transposed };

AdjointConvention adjoint_convention();
void set_adjoint_convention(AdjointConvention c);

struct ScopedAdjointConvention {
    explicit ScopedAdjointConvention(AdjointConvention c)
        : previous(adjoint_convention()) {
        set_adjoint_convention(c);
    }
    ~ScopedAdjointConvention() { set_adjoint_convention(previous); }
    AdjointConvention previous;
};

IntMatrix adjoint_matrix(const IntMatrix& s);

// An integral bilinear form on Z^m with its symmetrization sign
// eps = (-1)^n; the geometric dimension n itself is never consulted.
class BilinearForm {
public:
    BilinearForm() : gram_(0, 0) {}
    BilinearForm(IntMatrix gram, int epsilon);

    std::size_t rank() const { return gram_.rows(); }
    const IntMatrix& gram() const { return gram_; }
    int epsilon() const { return epsilon_; }

    Int evaluate(const std::vector<Int>& x, const std::vector<Int>& y) const;

    bool operator==(const BilinearForm& rhs) const = default;

private:
    IntMatrix gram_;
    int epsilon_ = 1;
};

// S = A + eps * A^T.
IntMatrix symmetrize(const BilinearForm& a);

struct FormInvariants {
    IntMatrix symmetrized;
    Submodule kernel_of_adjoint;
    FgAbelianGroup cokernel;
    FgAbelianGroup torsion_of_cokernel;
    Int det_s;
    std::optional<long> signature;  // only for eps = +1
};

FormInvariants invariants(const BilinearForm& a);

// Cokernel decomposition of the adjoint, with projection data; the torsion
// coordinates here are the ones conditions (c2) computations live in.
CokernelDecomposition adjoint_cokernel(const BilinearForm& a);

// Exact signature of a symmetric integer matrix (rational congruence
// diagonalization; singular matrices allowed).
long signature_of_symmetric(const IntMatrix& s);

// The nondegenerate form induced on G/Ker S*, with the projection map.
// The complement basis is produced deterministically from the Smith normal
// form of the kernel inclusion.
struct InducedForm {
    IntMatrix sbar;
    GroupHom projection;  // free G -> free Gbar
};

InducedForm induced_form(const BilinearForm& a);

// The homology of the boundary read off the form: H_n(K) = Ker S* (free),
// H_{n-1}(K) = Coker S*.
struct BoundaryHomology {
    FgAbelianGroup hn;
    FgAbelianGroup hn1;

    bool operator==(const BoundaryHomology& rhs) const = default;
};

BoundaryHomology boundary_homology(const BilinearForm& a);

// Block difference (-A0) + A1 on Z^{m0+m1}; epsilons must agree.
BilinearForm assemble_difference(const BilinearForm& a0, const BilinearForm& a1);

}  // namespace linkcob::forms
