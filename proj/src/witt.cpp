#include "linkcob/witt.hpp"

#include "linkcob/errors.hpp"

#include <numeric>

namespace linkcob::witt {

using forms::signature_of_symmetric;
using forms::symmetrize;
using zlattice::is_pure;
using zlattice::saturate;

std::string to_string(MetabolizerClause c) {
    switch (c) {
        case MetabolizerClause::EvenRank: return "rank of the form is even";
        case MetabolizerClause::Pure: return "submodule is pure";
        case MetabolizerClause::HalfRank: return "submodule has half rank";
        case MetabolizerClause::Vanishing: return "form vanishes on the submodule";
    }
    return "?";
}

std::string to_string(Obstruction o) {
    switch (o) {
        case Obstruction::OddRank: return "OddRank";
        case Obstruction::NonzeroSignature: return "NonzeroSignature";
    }
    return "?";
}

std::string to_string(SearchVerdict v) {
    switch (v) {
        case SearchVerdict::Found: return "Found";
        case SearchVerdict::ImpossibleByObstruction: return "ImpossibleByObstruction";
        case SearchVerdict::NotFoundWithinBounds: return "NotFoundWithinBounds";
    }
    return "?";
}

MetabolizerCheck verify_metabolizer(const BilinearForm& a, const Submodule& m) {
    if (m.ambient_rank() != a.rank())
        throw DomainError("verify_metabolizer: submodule ambient rank differs from form rank");
    MetabolizerCheck out;
    if (a.rank() % 2 != 0) {
        out.first_failed = MetabolizerClause::EvenRank;
        out.detail = "form rank " + std::to_string(a.rank()) + " is odd";
        return out;
    }
    if (!is_pure(m)) {
        out.first_failed = MetabolizerClause::Pure;
        out.detail = "quotient by the submodule has torsion";
        return out;
    }
    if (m.rank() != a.rank() / 2) {
        out.first_failed = MetabolizerClause::HalfRank;
        out.detail = "submodule rank " + std::to_string(m.rank()) + ", need " +
                     std::to_string(a.rank() / 2);
        return out;
    }
    for (std::size_t i = 0; i < m.rank(); ++i)
        for (std::size_t j = 0; j < m.rank(); ++j)
            if (a.evaluate(m.basis().row(i), m.basis().row(j)) != 0) {
                out.first_failed = MetabolizerClause::Vanishing;
                out.detail = "A(b" + std::to_string(i) + ", b" + std::to_string(j) + ") != 0";
                return out;
            }
    out.ok = true;
    return out;
}

std::optional<Obstruction> obstructions(const BilinearForm& a) {
    if (a.rank() % 2 != 0) return Obstruction::OddRank;
    if (a.epsilon() == 1) {
        IntMatrix s = symmetrize(a);
        long sig = signature_of_symmetric(s);
        if (sig != 0) {
            // A metabolizer spans a half-rank totally isotropic subspace of
            // (R^m, S), and such a subspace exists only when the radical can
            // absorb the signature: |sig| <= dim Ker S*.  For nondegenerate S
            // this is the usual "signature must vanish".
            long radical = static_cast<long>(zlattice::kernel_basis(s).rank());
            if ((sig < 0 ? -sig : sig) > radical) return Obstruction::NonzeroSignature;
        }
    }
    return std::nullopt;
}

namespace {

// Lexicographically ascending odometer over [-h, h]^m; false on wrap-around.
bool next_raw(std::vector<long>& v, long h) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] < h) {
            ++v[i];
            for (std::size_t j = i + 1; j < v.size(); ++j) v[j] = -h;
            return true;
        }
    }
    return false;
}

bool is_primitive(const std::vector<long>& v) {
    long long g = 0;
    for (long x : v) g = std::gcd(g, static_cast<long long>(x < 0 ? -x : x));
    return g == 1;
}

// Advance to the next primitive vector whose first nonzero coordinate is
// positive.  Non-canonical prefixes are skipped in blocks: if the first
// nonzero entry is negative, everything until that entry reaches zero is
// non-canonical too.
bool next_candidate(std::vector<long>& v, long h) {
    while (true) {
        if (!next_raw(v, h)) return false;
        while (true) {
            std::size_t p = 0;
            while (p < v.size() && v[p] == 0) ++p;
            if (p == v.size()) break;  // all zero: advance again
            if (v[p] > 0) break;
            v[p] = 0;
            for (std::size_t j = p + 1; j < v.size(); ++j) v[j] = -h;
        }
        bool zero = true;
        for (long x : v) zero = zero && x == 0;
        if (zero) continue;
        if (is_primitive(v)) return true;
    }
}

std::vector<Int> widen(const std::vector<long>& v) {
    std::vector<Int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

struct Dfs {
    const BilinearForm& a;
    long height;
    long long budget;
    const SearchHooks& hooks;
    const std::atomic<bool>* cancel;
    SearchStats stats;
    bool stopped = false;  // budget exhausted or cancelled

    // Cached pairings of the current saturated basis rows with the form.
    struct Level {
        Submodule span;
        std::vector<std::vector<Int>> rows_t_a;  // w^T A per basis row
        std::vector<std::vector<Int>> a_cols;    // A w per basis row
    };

    Level make_level(const Submodule& span) const {
        Level l{span, {}, {}};
        for (std::size_t i = 0; i < span.rank(); ++i) {
            std::vector<Int> w = span.basis().row(i);
            l.rows_t_a.push_back(a.gram().transpose().apply(w));
            l.a_cols.push_back(a.gram().apply(w));
        }
        return l;
    }

    std::optional<Submodule> run(const Level& level, std::vector<long> from, std::size_t depth,
                                 std::size_t target) {
        std::vector<long> v = std::move(from);
        while (next_candidate(v, height)) {
            if (cancel && cancel->load()) {
                stats.interrupted = true;
                stopped = true;
                return std::nullopt;
            }
            if (stats.nodes >= budget) {
                stopped = true;
                return std::nullopt;
            }
            ++stats.nodes;
            std::vector<Int> vi = widen(v);
            std::vector<Int> av = a.gram().apply(vi);
            if (dot(vi, av) != 0) continue;  // A(v, v) != 0
            ++stats.isotropic_candidates;
            bool annihilates = true;
            for (std::size_t i = 0; i < level.span.rank() && annihilates; ++i)
                annihilates = dot(level.rows_t_a[i], vi) == 0 &&  // A(v, w)
                              dot(level.a_cols[i], vi) == 0;      // A(w, v)
            if (!annihilates) continue;
            if (level.span.contains(vi)) continue;
            Submodule extended =
                saturate(Submodule::from_generators(a.rank(), IntMatrix::vstack(level.span.basis(),
                                                                                IntMatrix::row_vector(vi))));
            // Purity cannot break annihilation (q^2 A(x,y) = A(qx,qy)), but the
            // saturated basis is what later levels pair against, so re-check.
            Level next = make_level(extended);
            bool still = true;
            for (std::size_t i = 0; i < extended.rank() && still; ++i)
                for (std::size_t j = 0; j < extended.rank() && still; ++j)
                    still = dot(next.a_cols[j], extended.basis().row(i)) == 0;
            if (!still) continue;
            if (hooks.admit_partial && !hooks.admit_partial(extended)) continue;
            if (depth + 1 == target) {
                if (verify_metabolizer(a, extended).ok && (!hooks.accept || hooks.accept(extended)))
                    return extended;
            } else {
                auto found = run(next, v, depth + 1, target);
                if (found) return found;
                if (stopped) return std::nullopt;
            }
        }
        return std::nullopt;
    }
};

}  // namespace

SearchOutcome find_metabolizer(const BilinearForm& a, long height, long long node_budget,
                               const SearchHooks& hooks, const std::atomic<bool>* cancel) {
    if (height < 1) throw DomainError("find_metabolizer: height must be >= 1");
    if (node_budget < 1) throw DomainError("find_metabolizer: node budget must be >= 1");
    SearchOutcome out;
    out.stats.height = height;
    if (auto obs = obstructions(a)) {
        out.verdict = SearchVerdict::ImpossibleByObstruction;
        out.obstruction = obs;
        return out;
    }
    std::size_t target = a.rank() / 2;
    if (target == 0) {
        Submodule empty(a.rank());
        if (!hooks.accept || hooks.accept(empty)) {
            out.verdict = SearchVerdict::Found;
            out.witness = empty;
        }
        return out;
    }
    Dfs dfs{a, height, node_budget, hooks, cancel, {}, false};
    dfs.stats.height = height;
    Dfs::Level root = dfs.make_level(Submodule(a.rank()));
    std::vector<long> start(a.rank(), -height);
    auto witness = dfs.run(root, start, 0, target);
    out.stats = dfs.stats;
    if (witness) {
        out.verdict = SearchVerdict::Found;
        out.witness = witness;
    }
    return out;
}

}  // namespace linkcob::witt
