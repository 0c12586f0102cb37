#pragma once

// Shared helpers for the test suites: seeded generators and small independent
// oracles (rational elimination, exhaustive metabolizer enumeration) that
// deliberately avoid the library's search and normal-form code paths.

#include "linkcob/witt.hpp"

#include <cassert>
#include <numeric>
#include <random>
#include <vector>

namespace testutil {

using linkcob::Int;
using linkcob::IntMatrix;
using linkcob::Rat;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Int rand_entry(std::mt19937_64& g, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    return Int(d(g));
}

inline IntMatrix random_matrix(std::mt19937_64& g, std::size_t rows, std::size_t cols, int bound) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rand_entry(g, bound);
    return m;
}

// Product of random elementary row operations applied to the identity.
inline IntMatrix random_unimodular(std::mt19937_64& g, std::size_t n, int ops = 12) {
    IntMatrix m = IntMatrix::identity(n);
    if (n == 0) return m;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int k = 0; k < ops; ++k) {
        std::size_t i = pick(g), j = pick(g);
        switch (kind(g)) {
            case 0:
                if (i != j) m.add_row_multiple(i, j, Int(coef(g)));
                break;
            case 1:
                m.swap_rows(i, j);
                break;
            default:
                m.negate_row(i);
        }
    }
    return m;
}

// Rational row reduction; returns rank. Independent of the integer HNF/SNF code.
inline std::size_t rational_rank(const IntMatrix& a) {
    std::vector<std::vector<Rat>> m(a.rows(), std::vector<Rat>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = Rat(a(i, j));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < a.rows() && m[piv][col] == 0) ++piv;
        if (piv == a.rows()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rat f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < a.cols(); ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Does x lie in the rational row span of a? (Gaussian elimination over Q.)
inline bool in_rational_row_span(const IntMatrix& a, const std::vector<Int>& x) {
    IntMatrix stacked = IntMatrix::vstack(a, IntMatrix::row_vector(x));
    return rational_rank(stacked) == rational_rank(a);
}

// Is x an integral combination of the rows of a? Solved by rational
// elimination on the transposed system plus an integrality check of the
// unique coordinates when rows are independent; falls back to rank facts.
inline bool in_integral_row_span_independent_rows(const IntMatrix& a, const std::vector<Int>& x) {
    // a has independent rows r x m; solve c * a = x over Q.
    std::size_t r = a.rows(), mcols = a.cols();
    std::vector<std::vector<Rat>> m(mcols, std::vector<Rat>(r + 1));
    for (std::size_t i = 0; i < mcols; ++i) {
        for (std::size_t j = 0; j < r; ++j) m[i][j] = Rat(a(j, i));
        m[i][r] = Rat(x[i]);
    }
    std::size_t rank = 0;
    std::vector<std::size_t> pivcol(mcols, r + 1);
    for (std::size_t col = 0; col < r && rank < mcols; ++col) {
        std::size_t piv = rank;
        while (piv < mcols && m[piv][col] == 0) ++piv;
        if (piv == mcols) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = 0; i < mcols; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rat f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j <= r; ++j) m[i][j] -= f * m[rank][j];
        }
        pivcol[rank] = col;
        ++rank;
    }
    // Inconsistent rows mean x is outside even the rational span.
    for (std::size_t i = rank; i < mcols; ++i)
        if (m[i][r] != 0) return false;
    // Independent rows: solution unique; check integrality.
    for (std::size_t i = 0; i < rank; ++i) {
        Rat c = m[i][r] / m[i][pivcol[i]];
        if (boost::multiprecision::denominator(c) != 1) return false;
    }
    return true;
}

// ---- exhaustive metabolizer oracle -----------------------------------------

// All primitive vectors in [-h, h]^m with positive leading nonzero entry,
// enumerated by straight nested counting (no pruning, no lattice machinery).
inline std::vector<std::vector<long>> primitive_box(std::size_t m, long h) {
    std::vector<std::vector<long>> out;
    if (m == 0) return out;
    std::vector<long> v(m, -h);
    while (true) {
        std::size_t i = m;
        bool advanced = false;
        while (i-- > 0) {
            if (v[i] < h) {
                ++v[i];
                for (std::size_t j = i + 1; j < m; ++j) v[j] = -h;
                advanced = true;
                break;
            }
            if (i == 0) return out;
        }
        if (!advanced) return out;
        std::size_t p = 0;
        while (p < m && v[p] == 0) ++p;
        if (p == m || v[p] < 0) continue;
        long long g = 0;
        for (long x : v) g = std::gcd(g, static_cast<long long>(x < 0 ? -x : x));
        if (g != 1) continue;
        out.push_back(v);
    }
}

inline std::vector<Int> widen(const std::vector<long>& v) {
    std::vector<Int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

inline bool vanishes_on(const linkcob::forms::BilinearForm& a, const linkcob::zlattice::Submodule& m) {
    for (std::size_t i = 0; i < m.rank(); ++i)
        for (std::size_t j = 0; j < m.rank(); ++j)
            if (a.evaluate(m.basis().row(i), m.basis().row(j)) != 0) return false;
    return true;
}

// Exhaustive enumeration of pure half-rank submodules generated by primitive
// vectors of height <= h, rank 0/2/4 only.
inline bool brute_force_has_metabolizer(const linkcob::forms::BilinearForm& a, long h) {
    using linkcob::zlattice::Submodule;
    std::size_t m = a.rank();
    if (m % 2 != 0) return false;
    if (m == 0) return true;
    auto cands = primitive_box(m, h);
    if (m == 2) {
        for (const auto& v : cands) {
            Submodule s = linkcob::zlattice::saturate(
                Submodule::from_generators(2, IntMatrix::row_vector(widen(v))));
            if (vanishes_on(a, s)) return true;
        }
        return false;
    }
    assert(m == 4);
    for (std::size_t i = 0; i < cands.size(); ++i) {
        std::vector<Int> v = widen(cands[i]);
        if (a.evaluate(v, v) != 0) continue;
        for (std::size_t j = i + 1; j < cands.size(); ++j) {
            std::vector<Int> w = widen(cands[j]);
            if (a.evaluate(w, w) != 0) continue;
            if (a.evaluate(v, w) != 0 || a.evaluate(w, v) != 0) continue;
            IntMatrix gens = IntMatrix::vstack(IntMatrix::row_vector(v), IntMatrix::row_vector(w));
            Submodule span = Submodule::from_generators(4, gens);
            if (span.rank() != 2) continue;
            Submodule s = linkcob::zlattice::saturate(span);
            if (vanishes_on(a, s)) return true;
        }
    }
    return false;
}

}  // namespace testutil
