#include "linkcob/forms.hpp"

#include "linkcob/errors.hpp"

#include <atomic>

namespace linkcob::forms {

using zlattice::cokernel;
using zlattice::inverse_unimodular;
using zlattice::kernel_basis;
using zlattice::snf;

namespace {
std::atomic<AdjointConvention> g_convention{AdjointConvention::Standard};
}

AdjointConvention adjoint_convention() { return g_convention.load(); }
void set_adjoint_convention(AdjointConvention c) { g_convention.store(c); }

IntMatrix adjoint_matrix(const IntMatrix& s) {
    return adjoint_convention() == AdjointConvention::Standard ? s : s.transpose();
}

BilinearForm::BilinearForm(IntMatrix gram, int epsilon)
    : gram_(std::move(gram)), epsilon_(epsilon) {
    if (!gram_.is_square()) throw DomainError("BilinearForm: Gram matrix must be square");
    if (epsilon_ != 1 && epsilon_ != -1) throw DomainError("BilinearForm: epsilon must be +1 or -1");
}

Int BilinearForm::evaluate(const std::vector<Int>& x, const std::vector<Int>& y) const {
    if (x.size() != rank() || y.size() != rank())
        throw DomainError("BilinearForm::evaluate: vector length mismatch");
    return dot(x, gram_.apply(y));
}

IntMatrix symmetrize(const BilinearForm& a) {
    IntMatrix at = a.gram().transpose();
    IntMatrix s(a.rank(), a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j)
            s(i, j) = a.gram()(i, j) + a.epsilon() * at(i, j);
    return s;
}

CokernelDecomposition adjoint_cokernel(const BilinearForm& a) {
    return cokernel(adjoint_matrix(symmetrize(a)));
}

long signature_of_symmetric(const IntMatrix& s) {
    if (!s.is_square()) throw DomainError("signature: matrix not square");
    std::size_t n = s.rows();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(s(i, j));
    long sig = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t j = k + 1;
            while (j < n && m[j][j] == 0) ++j;
            if (j < n) {
                std::swap(m[k], m[j]);
                for (std::size_t i = 0; i < n; ++i) std::swap(m[i][k], m[i][j]);
            } else {
                // all remaining diagonal entries vanish; couple a hyperbolic pair
                j = k + 1;
                while (j < n && m[k][j] == 0) ++j;
                if (j == n) continue;  // zero row: no contribution
                for (std::size_t i = 0; i < n; ++i) m[k][i] += m[j][i];
                for (std::size_t i = 0; i < n; ++i) m[i][k] += m[i][j];
            }
        }
        Rat p = m[k][k];
        sig += (p > 0) ? 1 : -1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] / p;
            for (std::size_t j2 = k; j2 < n; ++j2) m[i][j2] -= f * m[k][j2];
        }
        for (std::size_t j2 = k + 1; j2 < n; ++j2) m[k][j2] = 0;
        for (std::size_t i = k + 1; i < n; ++i) m[i][k] = 0;
    }
    return sig;
}

FormInvariants invariants(const BilinearForm& a) {
    FormInvariants inv;
    inv.symmetrized = symmetrize(a);
    IntMatrix adj = adjoint_matrix(inv.symmetrized);
    inv.kernel_of_adjoint = kernel_basis(adj);
    CokernelDecomposition cok = cokernel(adj);
    inv.cokernel = FgAbelianGroup::from_cokernel(cok);
    inv.torsion_of_cokernel = inv.cokernel.torsion_subgroup_as_group();
    inv.det_s = determinant(inv.symmetrized);
    if (a.epsilon() == 1) inv.signature = signature_of_symmetric(inv.symmetrized);
    return inv;
}

InducedForm induced_form(const BilinearForm& a) {
    IntMatrix s = symmetrize(a);
    Submodule ker = kernel_basis(adjoint_matrix(s));
    std::size_t m = a.rank(), k = ker.rank();
    zlattice::PureQuotient q = zlattice::pure_quotient(ker);
    InducedForm out;
    out.sbar = q.section.transpose() * s * q.section;
    out.projection = GroupHom(FgAbelianGroup::free(m), FgAbelianGroup::free(m - k), q.projection);
    return out;
}

BoundaryHomology boundary_homology(const BilinearForm& a) {
    FormInvariants inv = invariants(a);
    return BoundaryHomology{FgAbelianGroup::free(inv.kernel_of_adjoint.rank()), inv.cokernel};
}

BilinearForm assemble_difference(const BilinearForm& a0, const BilinearForm& a1) {
    if (a0.epsilon() != a1.epsilon())
        throw DomainError("assemble_difference: epsilon mismatch");
    return BilinearForm(IntMatrix::block_diag(-a0.gram(), a1.gram()), a0.epsilon());
}

}  // namespace linkcob::forms
