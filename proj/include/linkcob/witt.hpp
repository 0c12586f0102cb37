#pragma once

#include "linkcob/forms.hpp"

#include <atomic>
#include <functional>
#include <optional>
#include <string>

namespace linkcob::witt {

using forms::BilinearForm;
using zlattice::Submodule;

// Clause order follows the definition of a metabolizer: even rank, purity,
// half rank, vanishing on basis pairs (both argument orders; bilinearity
// makes basis checks sufficient).
enum class MetabolizerClause { EvenRank, Pure, HalfRank, Vanishing };

std::string to_string(MetabolizerClause c);

struct MetabolizerCheck {
    bool ok = false;
    std::optional<MetabolizerClause> first_failed;
    std::string detail;
};

// Throws DomainError when M does not live in Z^rank(A).
MetabolizerCheck verify_metabolizer(const BilinearForm& a, const Submodule& m);

// Sound reasons why no metabolizer can exist at all.
enum class Obstruction { OddRank, NonzeroSignature };

std::string to_string(Obstruction o);

std::optional<Obstruction> obstructions(const BilinearForm& a);

enum class SearchVerdict { Found, ImpossibleByObstruction, NotFoundWithinBounds };

std::string to_string(SearchVerdict v);

struct SearchStats {
    long long nodes = 0;                 // candidate vectors examined
    long long isotropic_candidates = 0;  // examined candidates with A(v,v) = 0
    long height = 0;
    bool interrupted = false;
};

struct SearchOutcome {
    SearchVerdict verdict = SearchVerdict::NotFoundWithinBounds;
    std::optional<Submodule> witness;
    std::optional<Obstruction> obstruction;
    SearchStats stats;
};

// Extension points used by the cobordism search.
struct SearchHooks {
    // Saturated partial span after an extension; return false to prune.
    std::function<bool(const Submodule&)> admit_partial;
    // Completed half-rank candidate; return false to keep searching.
    std::function<bool(const Submodule&)> accept;
};

// Depth-first search for a metabolizer over primitive candidate vectors with
// coordinates bounded by `height`, in lexicographic order with the first
// nonzero coordinate positive.  The partial span is saturated after every
// extension and annihilation is re-checked on the saturated basis.
// Exhausting the node budget (or a cancel request) yields the honest
// NotFoundWithinBounds verdict, never an error.
SearchOutcome find_metabolizer(const BilinearForm& a, long height, long long node_budget,
                               const SearchHooks& hooks = {},
                               const std::atomic<bool>* cancel = nullptr);

}  // namespace linkcob::witt
