#include "linkcob/zlattice.hpp"

#include "linkcob/errors.hpp"

#include <algorithm>
#include <limits>

namespace linkcob::zlattice {

namespace {

// Pivot choice shared by both normal forms: smallest nonzero absolute value,
// ties broken by lowest index, for reproducible decompositions and bounded
// entry growth.
template <typename Pred>
bool find_min_abs(const IntMatrix& m, std::size_t row0, std::size_t col0, Pred admit,
                  std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = row0; i < m.rows(); ++i)
        for (std::size_t j = col0; j < m.cols(); ++j) {
            if (!admit(i, j) || m(i, j) == 0) continue;
            Int a = abs_int(m(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
    HnfResult r{a, IntMatrix::identity(a.rows()), 0};
    IntMatrix& h = r.h;
    IntMatrix& u = r.u;
    std::size_t row = 0;
    for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
        // Euclid steps within the column until a single nonzero entry remains.
        while (true) {
            std::size_t pi = 0, pj = 0;
            if (!find_min_abs(h, row, col, [&](std::size_t, std::size_t j) { return j == col; }, pi, pj))
                break;
            h.swap_rows(row, pi);
            u.swap_rows(row, pi);
            bool clean = true;
            for (std::size_t i = row + 1; i < h.rows(); ++i) {
                if (h(i, col) == 0) continue;
                Int q = near_div(h(i, col), h(row, col));
                h.add_row_multiple(i, row, -q);
                u.add_row_multiple(i, row, -q);
                if (h(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(row, col) == 0) continue;
        if (h(row, col) < 0) {
            h.negate_row(row);
            u.negate_row(row);
        }
        // Reduce the entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < row; ++i) {
            Int q = floor_div(h(i, col), h(row, col));
            h.add_row_multiple(i, row, -q);
            u.add_row_multiple(i, row, -q);
        }
        ++row;
    }
    r.rank = row;
    return r;
}

SnfDecomposition snf(const IntMatrix& a) {
    SnfDecomposition r;
    r.d = a;
    r.u = IntMatrix::identity(a.rows());
    r.v = IntMatrix::identity(a.cols());
    IntMatrix& d = r.d;
    std::size_t n = std::min(a.rows(), a.cols());
    std::size_t t = 0;
    while (t < n) {
        std::size_t pi = 0, pj = 0;
        if (!find_min_abs(d, t, t, [](std::size_t, std::size_t) { return true; }, pi, pj)) break;
        d.swap_rows(t, pi);
        r.u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        r.v.swap_cols(t, pj);
        while (true) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0) continue;
                Int q = near_div(d(i, t), d(t, t));
                d.add_row_multiple(i, t, -q);
                r.u.add_row_multiple(i, t, -q);
                if (d(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0) continue;
                Int q = near_div(d(t, j), d(t, t));
                d.add_col_multiple(j, t, -q);
                r.v.add_col_multiple(j, t, -q);
                if (d(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // The pivot may no longer be minimal; re-select inside the
                // cross before the next sweep.
                std::size_t qi = 0, qj = 0;
                find_min_abs(d, t, t, [](std::size_t, std::size_t) { return true; }, qi, qj);
                d.swap_rows(t, qi);
                r.u.swap_rows(t, qi);
                d.swap_cols(t, qj);
                r.v.swap_cols(t, qj);
                continue;
            }
            // Cross is clear; enforce that the pivot divides the rest.
            bool fixed = false;
            for (std::size_t i = t + 1; i < d.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < d.cols() && !fixed; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        r.u.add_row_multiple(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            r.u.negate_row(t);
        }
        ++t;
    }
    r.rank = t;
    for (std::size_t i = 0; i < t; ++i) r.invariant_factors.push_back(d(i, i));
    return r;
}

Submodule Submodule::from_generators(std::size_t ambient_rank, const IntMatrix& generators) {
    if (generators.rows() != 0 && generators.cols() != ambient_rank)
        throw DomainError("Submodule: generator length differs from ambient rank");
    Submodule m(ambient_rank);
    if (generators.rows() == 0) return m;  // keep the 0 x ambient shape canonical
    HnfResult r = hnf(generators);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < r.rank; ++i) keep.push_back(i);
    m.basis_ = r.h.submatrix_rows(keep);
    if (m.basis_.rows() == 0) m.basis_ = IntMatrix(0, ambient_rank);
    return m;
}

Submodule Submodule::full(std::size_t ambient_rank) {
    Submodule m(ambient_rank);
    m.basis_ = IntMatrix::identity(ambient_rank);
    return m;
}

bool Submodule::contains(const std::vector<Int>& x) const {
    if (x.size() != ambient_) throw DomainError("Submodule::contains: length mismatch");
    return solve(basis_.transpose(), x).has_value();
}

bool Submodule::contains(const Submodule& other) const {
    if (other.ambient_ != ambient_) throw DomainError("Submodule::contains: ambient mismatch");
    for (std::size_t i = 0; i < other.rank(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Submodule kernel_basis(const IntMatrix& a) {
    SnfDecomposition s = snf(a);
    // A x = 0  <=>  D y = 0 with x = V y, so the kernel is spanned by the
    // columns of V past the rank.
    std::size_t m = a.cols();
    IntMatrix gens(m - s.rank, m);
    for (std::size_t k = s.rank; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i) gens(k - s.rank, i) = s.v(i, k);
    return Submodule::from_generators(m, gens);
}

Submodule saturate(const Submodule& m) {
    // Double orthogonal complement: the kernel of a matrix is always pure and
    // taking it twice lands on the rational span intersected with Z^m.
    Submodule perp = kernel_basis(m.basis());
    return kernel_basis(perp.basis());
}

bool is_pure(const Submodule& m) {
    if (m.rank() == 0) return true;
    SnfDecomposition s = snf(m.basis());
    for (const Int& d : s.invariant_factors)
        if (d != 1) return false;
    return true;
}

std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b) {
    if (b.size() != a.rows()) throw DomainError("solve: rhs length differs from row count");
    SnfDecomposition s = snf(a);
    std::vector<Int> c(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) c[i] = dot(s.u.row(i), b);
    std::vector<Int> y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < s.rank) {
            if (c[i] % s.d(i, i) != 0) return std::nullopt;
            y[i] = c[i] / s.d(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v.apply(y);
}

Submodule intersect(const Submodule& m, const Submodule& n) {
    if (m.ambient_rank() != n.ambient_rank()) throw DomainError("intersect: ambient mismatch");
    std::size_t amb = m.ambient_rank();
    if (m.rank() == 0 || n.rank() == 0) return Submodule(amb);
    // x = B_m^T u = B_n^T v; read the u-solutions off the kernel of [B_m^T | -B_n^T].
    IntMatrix t(amb, m.rank() + n.rank());
    for (std::size_t i = 0; i < amb; ++i) {
        for (std::size_t j = 0; j < m.rank(); ++j) t(i, j) = m.basis()(j, i);
        for (std::size_t j = 0; j < n.rank(); ++j) t(i, m.rank() + j) = -n.basis()(j, i);
    }
    Submodule ker = kernel_basis(t);
    IntMatrix gens(ker.rank(), amb);
    for (std::size_t k = 0; k < ker.rank(); ++k) {
        std::vector<Int> uv = ker.basis().row(k);
        std::vector<Int> u(uv.begin(), uv.begin() + m.rank());
        gens.set_row(k, m.basis().transpose().apply(u));
    }
    return Submodule::from_generators(amb, gens);
}

IntMatrix inverse_unimodular(const IntMatrix& p) {
    if (!p.is_square()) throw DomainError("inverse_unimodular: matrix not square");
    HnfResult r = hnf(p);
    if (!r.h.is_identity()) throw DomainError("inverse_unimodular: matrix is not unimodular");
    return r.u;
}

CokernelDecomposition::CokernelDecomposition(const IntMatrix& a) : ambient_(a.rows()) {
    SnfDecomposition s = snf(a);
    u_ = s.u;
    row_factors_.assign(a.rows(), Int(0));
    for (std::size_t i = 0; i < s.rank; ++i) row_factors_[i] = s.d(i, i);
    for (std::size_t i = s.rank; i < a.rows(); ++i) free_idx_.push_back(i);
    for (std::size_t i = 0; i < s.rank; ++i)
        if (row_factors_[i] >= 2) {
            torsion_idx_.push_back(i);
            torsion_.push_back(row_factors_[i]);
        }
}

Int CokernelDecomposition::torsion_order() const {
    Int o = 1;
    for (const Int& d : torsion_) o *= d;
    return o;
}

std::vector<Int> CokernelDecomposition::project(const std::vector<Int>& w) const {
    if (w.size() != ambient_) throw DomainError("cokernel project: length mismatch");
    std::vector<Int> uw = u_.apply(w);
    std::vector<Int> coords;
    coords.reserve(free_idx_.size() + torsion_idx_.size());
    for (std::size_t i : free_idx_) coords.push_back(uw[i]);
    for (std::size_t k = 0; k < torsion_idx_.size(); ++k) {
        Int c = uw[torsion_idx_[k]] % torsion_[k];
        if (c < 0) c += torsion_[k];
        coords.push_back(c);
    }
    return coords;
}

IntMatrix CokernelDecomposition::quotient_matrix() const {
    IntMatrix q(free_idx_.size() + torsion_idx_.size(), ambient_);
    std::size_t r = 0;
    for (std::size_t i : free_idx_) q.set_row(r++, u_.row(i));
    for (std::size_t i : torsion_idx_) q.set_row(r++, u_.row(i));
    return q;
}

CokernelDecomposition cokernel(const IntMatrix& a) { return CokernelDecomposition(a); }

PureQuotient pure_quotient(const Submodule& k) {
    std::size_t m = k.ambient_rank(), r = k.rank();
    // SNF of the inclusion as columns: U carries the submodule onto the span
    // of the first r coordinates, so the bottom rows of U present the
    // quotient and the matching columns of U^{-1} are a complement basis.
    SnfDecomposition dec = snf(k.basis().transpose());
    for (const Int& d : dec.invariant_factors)
        if (d != 1) throw DomainError("pure_quotient: submodule is not pure");
    IntMatrix uinv = inverse_unimodular(dec.u);
    PureQuotient out{IntMatrix(m - r, m), IntMatrix(m, m - r)};
    for (std::size_t i = 0; i < m - r; ++i)
        for (std::size_t j = 0; j < m; ++j) out.projection(i, j) = dec.u(r + i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m - r; ++j) out.section(i, j) = uinv(i, r + j);
    return out;
}

Int lattice_index(const Submodule& big, const Submodule& small) {
    if (big.rank() != small.rank()) throw DomainError("lattice_index: ranks differ");
    std::size_t r = big.rank();
    IntMatrix coords(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        auto c = solve(big.basis().transpose(), small.basis().row(i));
        if (!c) throw DomainError("lattice_index: inclusion fails");
        coords.set_row(i, *c);
    }
    return abs_int(determinant(coords));
}

}  // namespace linkcob::zlattice
