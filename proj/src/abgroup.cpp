#include "linkcob/abgroup.hpp"

#include "linkcob/errors.hpp"

#include <sstream>

namespace linkcob::abgroup {

using zlattice::hnf;
using zlattice::intersect;
using zlattice::kernel_basis;
using zlattice::solve;

FgAbelianGroup::FgAbelianGroup(std::size_t free_rank, std::vector<Int> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2) throw DomainError("FgAbelianGroup: invariant factors must be >= 2");
        if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
            throw DomainError("FgAbelianGroup: invariant factors must form a divisibility chain");
    }
}

FgAbelianGroup FgAbelianGroup::from_cokernel(const CokernelDecomposition& c) {
    return FgAbelianGroup(c.free_rank(), c.torsion());
}

Int FgAbelianGroup::torsion_order() const {
    Int o = 1;
    for (const Int& d : torsion_) o *= d;
    return o;
}

Int FgAbelianGroup::order() const {
    if (free_rank_ != 0) throw DomainError("order: group is infinite");
    return torsion_order();
}

IntMatrix FgAbelianGroup::relation_matrix() const {
    IntMatrix r(torsion_.size(), n_coords());
    for (std::size_t i = 0; i < torsion_.size(); ++i) r(i, free_rank_ + i) = torsion_[i];
    return r;
}

std::vector<Int> FgAbelianGroup::reduce(std::vector<Int> coords) const {
    if (coords.size() != n_coords()) throw DomainError("reduce: coordinate length mismatch");
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        Int& c = coords[free_rank_ + i];
        c %= torsion_[i];
        if (c < 0) c += torsion_[i];
    }
    return coords;
}

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
        os << "Z";
        if (free_rank_ > 1) os << "^" << free_rank_;
        first = false;
    }
    for (const Int& d : torsion_) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

FgAbelianGroup from_presentation(const IntMatrix& relations) {
    return FgAbelianGroup::from_cokernel(CokernelDecomposition(relations.transpose()));
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return from_presentation(IntMatrix::block_diag(a.relation_matrix(), b.relation_matrix()));
}

namespace {

IntMatrix canonical_hom_matrix(const FgAbelianGroup& target, IntMatrix m) {
    for (std::size_t i = 0; i < target.torsion().size(); ++i) {
        std::size_t row = target.free_rank() + i;
        const Int& d = target.torsion()[i];
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Int& c = m(row, j);
            c %= d;
            if (c < 0) c += d;
        }
    }
    return m;
}

}  // namespace

GroupHom::GroupHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)) {
    if (matrix.rows() != target_.n_coords() ||
        (matrix.rows() != 0 && matrix.cols() != source_.n_coords()))
        throw DomainError("GroupHom: matrix shape does not match the groups");
    if (matrix.rows() == 0) matrix = IntMatrix(0, source_.n_coords());
    // Well-definedness: each source relation d_j * e_j must land in the
    // target relation lattice.
    for (std::size_t j = 0; j < source_.torsion().size(); ++j) {
        const Int& dj = source_.torsion()[j];
        std::size_t col = source_.free_rank() + j;
        for (std::size_t i = 0; i < target_.n_coords(); ++i) {
            Int v = dj * matrix(i, col);
            if (i < target_.free_rank()) {
                if (v != 0) throw DomainError("GroupHom: torsion generator mapped to infinite order");
            } else if (v % target_.torsion()[i - target_.free_rank()] != 0) {
                throw DomainError("GroupHom: map does not respect the source relations");
            }
        }
    }
    matrix_ = canonical_hom_matrix(target_, std::move(matrix));
}

GroupHom GroupHom::identity(const FgAbelianGroup& g) {
    return GroupHom(g, g, IntMatrix::identity(g.n_coords()));
}

GroupHom GroupHom::zero(const FgAbelianGroup& source, const FgAbelianGroup& target) {
    return GroupHom(source, target, IntMatrix::zero(target.n_coords(), source.n_coords()));
}

std::vector<Int> GroupHom::apply(const std::vector<Int>& coords) const {
    return target_.reduce(matrix_.apply(coords));
}

GroupHom GroupHom::compose_after(const GroupHom& inner) const {
    if (inner.target_ != source_) throw DomainError("compose: homs are not composable");
    return GroupHom(inner.source_, target_, matrix_ * inner.matrix_);
}

bool GroupHom::is_identity() const {
    if (source_ != target_) return false;
    return *this == identity(source_);
}

Submodule GroupHom::kernel_lattice() const {
    // {x : M x lies in the target relation lattice}: kernel of [M | -R_t
    // columns] projected to the x block, then joined with the source relations.
    std::size_t ns = source_.n_coords(), tt = target_.torsion().size();
    IntMatrix sys(target_.n_coords(), ns + tt);
    for (std::size_t i = 0; i < target_.n_coords(); ++i)
        for (std::size_t j = 0; j < ns; ++j) sys(i, j) = matrix_(i, j);
    for (std::size_t k = 0; k < tt; ++k)
        sys(target_.free_rank() + k, ns + k) = -target_.torsion()[k];
    Submodule ker = kernel_basis(sys);
    IntMatrix gens(ker.rank(), ns);
    for (std::size_t r = 0; r < ker.rank(); ++r) {
        std::vector<Int> row = ker.basis().row(r);
        for (std::size_t j = 0; j < ns; ++j) gens(r, j) = row[j];
    }
    return Submodule::from_generators(ns, IntMatrix::vstack(gens, source_.relation_matrix()));
}

Submodule GroupHom::image_lattice() const {
    return Submodule::from_generators(
        target_.n_coords(), IntMatrix::vstack(matrix_.transpose(), target_.relation_matrix()));
}

bool GroupHom::is_injective() const {
    return kernel_lattice() ==
           Submodule::from_generators(source_.n_coords(), source_.relation_matrix());
}

bool GroupHom::is_surjective() const {
    return image_lattice() == Submodule::full(target_.n_coords());
}

std::string GroupHom::to_string() const {
    std::ostringstream os;
    os << source_.to_string() << " -> " << target_.to_string() << " by " << matrix_.to_string();
    return os.str();
}

bool is_exact_at(const GroupHom& f, const GroupHom& g) {
    if (f.target() != g.source()) throw DomainError("is_exact_at: target(f) != source(g)");
    return f.image_lattice() == g.kernel_lattice();
}

Submodule SubgroupInProduct::lattice() const {
    std::size_t n = g0.n_coords() + g1.n_coords();
    IntMatrix rel = IntMatrix::block_diag(g0.relation_matrix(), g1.relation_matrix());
    return Submodule::from_generators(n, IntMatrix::vstack(generators, rel));
}

Int SubgroupInProduct::order() const {
    if (!g0.is_finite() || !g1.is_finite())
        throw DomainError("SubgroupInProduct::order: ambient product is infinite");
    Submodule l = lattice();
    // The lattice contains the full-rank relation lattice, so its HNF basis is
    // square upper triangular; the subgroup order is the covolume ratio.
    Int det = 1;
    for (std::size_t i = 0; i < l.rank(); ++i) det *= l.basis()(i, i);
    Int total = g0.torsion_order() * g1.torsion_order();
    return total / abs_int(det);
}

namespace {

// Lift of the factor subgroup G0 x 0 (or 0 x G1) to the coordinate cover.
Submodule factor_lattice(const FgAbelianGroup& g0, const FgAbelianGroup& g1, bool first) {
    std::size_t n0 = g0.n_coords(), n1 = g1.n_coords();
    IntMatrix rel = IntMatrix::block_diag(g0.relation_matrix(), g1.relation_matrix());
    IntMatrix gens(first ? n0 : n1, n0 + n1);
    for (std::size_t i = 0; i < gens.rows(); ++i) gens(i, first ? i : n0 + i) = 1;
    return Submodule::from_generators(n0 + n1, IntMatrix::vstack(gens, rel));
}

bool contained_in(const Submodule& l, const Submodule& big) {
    for (std::size_t i = 0; i < l.rank(); ++i)
        if (!big.contains(l.basis().row(i))) return false;
    return true;
}

}  // namespace

std::optional<GroupHom> is_graph_of_isomorphism(const SubgroupInProduct& h) {
    const FgAbelianGroup& g0 = h.g0;
    const FgAbelianGroup& g1 = h.g1;
    bool both_free = g0.is_free() && g1.is_free();
    bool both_finite = g0.is_finite() && g1.is_finite();
    if (!both_free && !both_finite)
        throw DomainError("is_graph_of_isomorphism: factors must be both free or both finite");
    std::size_t n0 = g0.n_coords(), n1 = g1.n_coords();
    if (h.generators.rows() != 0 && h.generators.cols() != n0 + n1)
        throw DomainError("is_graph_of_isomorphism: generator length mismatch");

    Submodule l = h.lattice();

    IntMatrix xparts(l.rank(), n0), yparts(l.rank(), n1);
    for (std::size_t i = 0; i < l.rank(); ++i) {
        std::vector<Int> row = l.basis().row(i);
        for (std::size_t j = 0; j < n0; ++j) xparts(i, j) = row[j];
        for (std::size_t j = 0; j < n1; ++j) yparts(i, j) = row[n0 + j];
    }
    // Both projections must be onto...
    if (Submodule::from_generators(n0, IntMatrix::vstack(xparts, g0.relation_matrix())) !=
        Submodule::full(n0))
        return std::nullopt;
    if (Submodule::from_generators(n1, IntMatrix::vstack(yparts, g1.relation_matrix())) !=
        Submodule::full(n1))
        return std::nullopt;
    // ...and both must have trivial kernel: H meets 0 x G1 and G0 x 0 only in 0.
    Submodule rel = Submodule::from_generators(
        n0 + n1, IntMatrix::block_diag(g0.relation_matrix(), g1.relation_matrix()));
    if (!contained_in(intersect(l, factor_lattice(g0, g1, false)), rel)) return std::nullopt;
    if (!contained_in(intersect(l, factor_lattice(g0, g1, true)), rel)) return std::nullopt;

    // Extract phi generator by generator: find a lattice element whose first
    // block is e_j modulo the G0 relations; its second block is phi(e_j).
    IntMatrix phi(n1, n0);
    IntMatrix solver = IntMatrix::vstack(xparts, g0.relation_matrix()).transpose();
    for (std::size_t j = 0; j < n0; ++j) {
        std::vector<Int> ej(n0);
        ej[j] = 1;
        auto c = solve(solver, ej);
        if (!c) return std::nullopt;  // unreachable: surjectivity was checked
        std::vector<Int> lcomb(c->begin(), c->begin() + l.rank());
        std::vector<Int> y = g1.reduce(yparts.transpose().apply(lcomb));
        for (std::size_t i = 0; i < n1; ++i) phi(i, j) = y[i];
    }

    GroupHom hom(g0, g1, phi);
    // The graph of the extracted map must regenerate H exactly.
    if (graph_of(hom).lattice() != l) return std::nullopt;
    return hom;
}

SubgroupInProduct graph_of(const GroupHom& phi) {
    std::size_t n0 = phi.source().n_coords(), n1 = phi.target().n_coords();
    IntMatrix gens(n0, n0 + n1);
    for (std::size_t j = 0; j < n0; ++j) {
        gens(j, j) = 1;
        for (std::size_t i = 0; i < n1; ++i) gens(j, n0 + i) = phi.matrix()(i, j);
    }
    return SubgroupInProduct{phi.source(), phi.target(), gens};
}

std::vector<std::vector<Int>> torsion_elements(const FgAbelianGroup& g, const Int& budget) {
    Int order = g.torsion_order();
    if (order > budget)
        throw BudgetError("torsion_elements: torsion order " + order.str() + " exceeds budget " +
                          budget.str());
    std::vector<std::vector<Int>> out;
    std::size_t t = g.torsion().size();
    if (t == 0) return out;  // no torsion factors: nothing to walk
    std::vector<Int> coords(g.n_coords());
    while (true) {
        out.push_back(coords);
        std::size_t k = 0;
        for (; k < t; ++k) {
            Int& c = coords[g.free_rank() + k];
            ++c;
            if (c < g.torsion()[k]) break;
            c = 0;
        }
        if (k == t) break;
    }
    return out;
}

}  // namespace linkcob::abgroup
