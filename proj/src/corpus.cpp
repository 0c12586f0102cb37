#include "linkcob/corpus.hpp"

#include "linkcob/errors.hpp"

#include <algorithm>

namespace linkcob::corpus {

using abgroup::FgAbelianGroup;

namespace {

// Dense polynomials over Z, constant term first; just enough arithmetic for
// small cofactor expansions.
using Poly = std::vector<Int>;

Poly ptrim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Poly padd(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return ptrim(out);
}

Poly pneg(Poly a) {
    for (Int& c : a) c = -c;
    return a;
}

Poly pmul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return ptrim(out);
}

Poly pdet(std::vector<std::vector<Poly>>& m, std::vector<std::size_t> rows,
          std::vector<std::size_t> cols) {
    if (rows.empty()) return Poly{Int(1)};
    Poly acc;
    std::size_t r = rows[0];
    std::vector<std::size_t> subrows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (m[r][cols[k]].empty()) continue;
        std::vector<std::size_t> subcols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) subcols.push_back(cols[j]);
        Poly minor = pmul(m[r][cols[k]], pdet(m, subrows, subcols));
        acc = padd(acc, k % 2 == 0 ? minor : pneg(minor));
    }
    return acc;
}

}  // namespace

std::vector<Int> alexander_polynomial(const IntMatrix& a) {
    std::size_t n = a.rows();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly p{a(i, j), -a(j, i)};  // A - t A^T entrywise
            m[i][j] = ptrim(std::move(p));
        }
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    Poly det = pdet(m, idx, idx);
    if (det.empty()) return det;
    // Strip units: divide out t^v and normalize the sign of the top coefficient.
    std::size_t v = 0;
    while (det[v] == 0) ++v;
    det.erase(det.begin(), det.begin() + v);
    if (det.back() < 0) det = pneg(det);
    return det;
}

namespace {

struct TableRow {
    const char* name;
    IntMatrix matrix;
    InvariantSummary expected;
    std::vector<Int> alexander;
    const char* notes;
};

std::vector<TableRow> base_table() {
    std::vector<TableRow> t;
    t.push_back({"unknot", IntMatrix(0, 0),
                 {0, FgAbelianGroup::trivial(), Int(1), 0L},
                 {Int(1)},
                 "empty Seifert matrix; boundary is the standard sphere"});
    t.push_back({"zero-rank-1", IntMatrix{{0}},
                 {1, FgAbelianGroup::free(1), Int(0), 0L},
                 {},
                 "rank-one zero pairing; the S^{n-1} x S^n boundary model"});
    t.push_back({"hyperbolic", IntMatrix{{0, 1}, {0, 0}},
                 {0, FgAbelianGroup::trivial(), Int(-1), 0L},
                 {Int(1)},
                 "hyperbolic pairing; the basic Witt-trivial form"});
    t.push_back({"trefoil", IntMatrix{{-1, 1}, {0, -1}},
                 {0, FgAbelianGroup(0, {Int(3)}), Int(3), -2L},
                 {Int(1), Int(-1), Int(1)},
                 "genus-one Seifert matrix of the trefoil"});
    t.push_back({"figure-eight", IntMatrix{{1, 1}, {0, -1}},
                 {0, FgAbelianGroup(0, {Int(5)}), Int(-5), 0L},
                 {Int(1), Int(-3), Int(1)},
                 "genus-one Seifert matrix of the figure-eight knot"});
    return t;
}

std::optional<TableRow> find_row(const std::string& name) {
    for (TableRow& row : base_table())
        if (row.name == name) return row;
    // Stabilized variants are generated, not stored: same boundary data, two
    // extra generators, determinant negated by the new unimodular block.
    const std::string suffix = "-stab";
    if (name.size() > suffix.size() &&
        name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
        std::string base = name.substr(0, name.size() - suffix.size());
        for (TableRow& row : base_table())
            if (row.name == base) {
                BilinearForm f(row.matrix, 1);
                cobordism::Stabilization st = cobordism::stabilize_default(f);
                TableRow out = row;
                out.matrix = st.stabilized.gram();
                out.expected.det_s = -row.expected.det_s;
                return out;
            }
    }
    return std::nullopt;
}

}  // namespace

std::vector<std::string> list() {
    std::vector<std::string> names;
    for (const TableRow& row : base_table()) names.push_back(row.name);
    for (const TableRow& row : base_table()) names.push_back(std::string(row.name) + "-stab");
    return names;
}

CorpusEntry load(const std::string& name) {
    auto row = find_row(name);
    if (!row) throw DomainError("corpus: unknown entry '" + name + "'");
    CorpusEntry e{name, BilinearForm(row->matrix, 1), row->expected, row->alexander, row->notes};
    // Self-validation: the stored summary must regenerate bit-identically.
    forms::FormInvariants inv = forms::invariants(e.form);
    InvariantSummary recomputed{inv.kernel_of_adjoint.rank(), inv.cokernel, inv.det_s,
                                inv.signature};
    if (!(recomputed == e.expected))
        throw DomainError("corpus: stored summary for '" + name + "' failed self-validation");
    if (alexander_polynomial(e.form.gram()) != e.alexander)
        throw DomainError("corpus: stored Alexander determinant for '" + name +
                          "' failed self-validation");
    return e;
}

BilinearForm form_with_epsilon(const std::string& name, int epsilon) {
    auto row = find_row(name);
    if (!row) throw DomainError("corpus: unknown entry '" + name + "'");
    return BilinearForm(row->matrix, epsilon);
}

BilinearForm random_form(std::mt19937_64& rng, std::size_t max_rank, int entry_bound) {
    std::uniform_int_distribution<int> eps(0, 1);
    return random_form_with_epsilon(rng, max_rank, entry_bound, eps(rng) ? 1 : -1);
}

BilinearForm random_form_with_epsilon(std::mt19937_64& rng, std::size_t max_rank, int entry_bound,
                                      int epsilon) {
    std::uniform_int_distribution<std::size_t> rk(0, max_rank);
    std::uniform_int_distribution<int> entry(-entry_bound, entry_bound);
    std::size_t m = rk(rng);
    IntMatrix g(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g(i, j) = entry(rng);
    return BilinearForm(g, epsilon);
}

}  // namespace linkcob::corpus
