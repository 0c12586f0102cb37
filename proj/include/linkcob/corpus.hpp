#pragma once

#include "linkcob/cobordism.hpp"

#include <random>
#include <string>
#include <vector>

namespace linkcob::corpus {

using forms::BilinearForm;

struct InvariantSummary {
    std::size_t kernel_rank = 0;
    abgroup::FgAbelianGroup cokernel;
    Int det_s;
    std::optional<long> signature;

    bool operator==(const InvariantSummary& rhs) const = default;
};

// A named Seifert matrix with its stored invariants.  Every load re-derives
// the invariants and the normalized Alexander determinant and compares them
// against the stored values, so a corrupted table cannot go unnoticed.
struct CorpusEntry {
    std::string name;
    BilinearForm form;  // canonical epsilon = +1; see form_with_epsilon
    InvariantSummary expected;
    std::vector<Int> alexander;  // normalized det(A - t A^T), constant term first
    std::string notes;
};

std::vector<std::string> list();
CorpusEntry load(const std::string& name);

// Same Seifert matrix with the requested symmetrization sign; the table's
// algebra never consults the geometric dimension, so both signs are legal.
BilinearForm form_with_epsilon(const std::string& name, int epsilon);

// det(A - t A^T) with units stripped: powers of t removed and the leading
// coefficient made positive.  The zero polynomial stays zero ({}).
std::vector<Int> alexander_polynomial(const IntMatrix& a);

// Seeded generator shared by the test suites and the CLI: uniform rank in
// [0, max_rank], entries uniform in [-entry_bound, entry_bound].
BilinearForm random_form(std::mt19937_64& rng, std::size_t max_rank, int entry_bound);
BilinearForm random_form_with_epsilon(std::mt19937_64& rng, std::size_t max_rank, int entry_bound,
                                      int epsilon);

inline constexpr std::uint64_t kDefaultSeed = 1729;

}  // namespace linkcob::corpus
