// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criterion 8 re-runs the whole battery under the flipped adjoint convention
// and demands identical verdicts.

#include "linkcob/cobordism.hpp"
#include "linkcob/corpus.hpp"
#include "linkcob/exactlink.hpp"
#include "linkcob/json_io.hpp"
#include "testutil.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace lc = linkcob;
using lc::Int;
using lc::IntMatrix;
using lc::cobordism::CobordismReport;
using lc::corpus::form_with_epsilon;
using lc::forms::BilinearForm;
using lc::witt::SearchVerdict;
using lc::zlattice::Submodule;

namespace {

struct Instance {
    BilinearForm a0;
    BilinearForm a1;
    Submodule witness;
    CobordismReport report;
};

struct Context {
    std::vector<Instance> verified;  // pool fed by criteria 2 and 5
    std::ostringstream log;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "    " << what << "\n";
        }
    }
};

const std::vector<std::string> kBaseNames = {"unknot", "zero-rank-1", "hyperbolic", "trefoil",
                                             "figure-eight"};

// 1. Exactness fixtures, routed through the same JSON layer the CLI uses.
void criterion1(Context& c) {
    auto roundtrip = [](const std::string& name) {
        return lc::jsonio::sequence_from_json(
            lc::jsonio::sequence_to_json(lc::exactlink::fixture(name)));
    };
    auto f0 = lc::exactlink::is_exact_surface(roundtrip("F0-product"));
    c.require(f0.exact, "F0-product must be exact");
    auto f1 = lc::exactlink::is_exact_surface(roundtrip("F1-product"));
    c.require(!f1.exact, "F1-product must be inexact");
    c.require(f1.first_failure == 1, "F1-product must fail at injectivity of the first map");
}

// 2. Reflexivity: diagonal witnesses verify with identity phi and the order
// lemma equality, over the corpus and 100 seeded random forms.
void criterion2(Context& c) {
    std::vector<BilinearForm> forms;
    for (const auto& name : kBaseNames)
        for (int eps : {1, -1}) forms.push_back(form_with_epsilon(name, eps));
    std::mt19937_64 rng(lc::corpus::kDefaultSeed);
    for (int i = 0; i < 100; ++i)
        forms.push_back(lc::corpus::random_form_with_epsilon(rng, 5, 3, i % 2 ? 1 : -1));

    for (const auto& a : forms) {
        Submodule diag = lc::cobordism::diagonal_witness(a);
        CobordismReport r = lc::cobordism::verify_witness(a, a, diag);
        c.require(r.verdict, "reflexivity verdict false at rank " + std::to_string(a.rank()));
        c.require(r.phi && r.phi->is_identity(), "phi is not the identity on a diagonal witness");
        c.require(r.order_check && r.order_check->first == r.order_check->second,
                  "order lemma equality fails on a diagonal witness");
        c.require(r.image_identity_check, "image identity cross-check fails");
        if (r.verdict) c.verified.push_back({a, a, diag, r});
    }
}

// 3. Symmetry: every verified instance swaps, with mutually inverse phi/theta.
void criterion3(Context& c) {
    c.require(!c.verified.empty(), "no verified instances were pooled");
    for (const Instance& inst : c.verified) {
        Submodule swapped =
            lc::cobordism::swap_witness(inst.witness, inst.a0.rank(), inst.a1.rank());
        CobordismReport back = lc::cobordism::verify_witness(inst.a1, inst.a0, swapped);
        c.require(back.verdict, "swapped witness fails to verify");
        if (!back.verdict) continue;
        c.require(back.phi->compose_after(*inst.report.phi).is_identity() &&
                      inst.report.phi->compose_after(*back.phi).is_identity(),
                  "phi' is not the inverse of phi");
        c.require(back.theta->compose_after(*inst.report.theta).is_identity() &&
                      inst.report.theta->compose_after(*back.theta).is_identity(),
                  "theta' is not the inverse of theta");
    }
}

// 4. Counterexample gate: the empty form relates to nothing with kernel or
// cokernel torsion.
void criterion4(Context& c) {
    auto zero1 = form_with_epsilon("zero-rank-1", 1);
    auto odd = lc::cobordism::search_witness(BilinearForm(IntMatrix(0, 0), 1), zero1, 5, 1000000);
    c.require(odd.verdict == SearchVerdict::ImpossibleByObstruction,
              "empty vs rank-1 zero form must be impossible (odd rank)");

    std::vector<std::string> all_names = lc::corpus::list();
    for (const auto& name : all_names) {
        for (int eps : {1, -1}) {
            BilinearForm a1 = form_with_epsilon(name, eps);
            lc::forms::FormInvariants inv = lc::forms::invariants(a1);
            bool gated = inv.kernel_of_adjoint.rank() > 0 ||
                         !inv.torsion_of_cokernel.is_trivial();
            if (!gated) continue;
            auto out = lc::cobordism::search_witness(BilinearForm(IntMatrix(0, 0), eps), a1, 5,
                                                     1000000);
            c.require(out.verdict != SearchVerdict::Found,
                      "empty form must not relate to corpus entry " + name);
        }
    }
}

// 5. Stabilization: three iterated default stabilizations per corpus entry,
// verified, rank +2 each, boundary homology preserved bit-exactly.
void criterion5(Context& c) {
    for (const auto& name : lc::corpus::list()) {
        for (int eps : {1, -1}) {
            BilinearForm current = form_with_epsilon(name, eps);
            lc::forms::BoundaryHomology bh = lc::forms::boundary_homology(current);
            for (int step = 0; step < 3; ++step) {
                lc::cobordism::Stabilization st = lc::cobordism::stabilize_default(current);
                c.require(st.stabilized.rank() == current.rank() + 2,
                          "stabilization must grow the rank by exactly 2");
                CobordismReport r = lc::cobordism::verify_witness(current, st.stabilized,
                                                                  st.witness);
                c.require(r.verdict, "stabilization witness fails on " + name);
                c.require(lc::forms::boundary_homology(st.stabilized) == bh,
                          "stabilization must preserve boundary homology on " + name);
                if (r.verdict) c.verified.push_back({current, st.stabilized, st.witness, r});
                current = st.stabilized;
            }
        }
    }
}

// 6. Witt obstruction vs brute force over every rank-2 form with entries in
// [-2,2], both epsilons; plus the trefoil special cases.
void criterion6(Context& c) {
    long mismatches = 0;
    std::vector<Int> entries;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long d = -2; d <= 2; ++d)
                for (long e = -2; e <= 2; ++e)
                    for (int eps : {1, -1}) {
                        BilinearForm f(IntMatrix{{Int(a), Int(b)}, {Int(d), Int(e)}}, eps);
                        bool expected = testutil::brute_force_has_metabolizer(f, 4);
                        auto out = lc::witt::find_metabolizer(f, 4, 1000000);
                        bool found = out.verdict == SearchVerdict::Found;
                        bool impossible = out.verdict == SearchVerdict::ImpossibleByObstruction;
                        if (impossible ? expected : (found != expected)) ++mismatches;
                    }
    c.require(mismatches == 0,
              std::to_string(mismatches) + " rank-2 forms disagree with brute force");

    auto pos = lc::witt::find_metabolizer(form_with_epsilon("trefoil", 1), 4, 1000000);
    c.require(pos.verdict == SearchVerdict::ImpossibleByObstruction &&
                  pos.obstruction == lc::witt::Obstruction::NonzeroSignature,
              "trefoil(+1) must be impossible by signature");
    auto neg = lc::witt::find_metabolizer(form_with_epsilon("trefoil", -1), 10, 1000000);
    c.require(neg.verdict == SearchVerdict::NotFoundWithinBounds,
              "trefoil(-1) must exhaust at height 10");
    c.require(neg.stats.isotropic_candidates == 0,
              "trefoil(-1) must encounter zero isotropic vectors");
}

// 7. SNF/HNF oracle over 1000 seeded random matrices.
void criterion7(Context& c) {
    std::mt19937_64 rng(lc::corpus::kDefaultSeed + 7);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    long bad = 0;
    for (int i = 0; i < 1000; ++i) {
        IntMatrix a = testutil::random_matrix(rng, dim(rng), dim(rng), 9);
        auto s = lc::zlattice::snf(a);
        bool ok = s.u * a * s.v == s.d;
        ok = ok && lc::abs_int(lc::determinant(s.u)) == 1;
        ok = ok && lc::abs_int(lc::determinant(s.v)) == 1;
        for (std::size_t k = 0; k + 1 < s.invariant_factors.size(); ++k)
            ok = ok && s.invariant_factors[k] > 0 &&
                 s.invariant_factors[k + 1] % s.invariant_factors[k] == 0;
        auto h = lc::zlattice::hnf(a);
        ok = ok && h.u * a == h.h;
        ok = ok && lc::abs_int(lc::determinant(h.u)) == 1;
        // Span preservation, idempotence of the canonical form.
        ok = ok && lc::zlattice::hnf(h.h).h == h.h;
        if (!ok) ++bad;
    }
    c.require(bad == 0, std::to_string(bad) + " of 1000 matrices failed the normal-form oracle");
}

struct CriterionResult {
    bool ok;
    double seconds;
    std::string detail;
};

std::vector<CriterionResult> run_battery() {
    std::vector<std::function<void(Context&)>> steps = {criterion1, criterion2, criterion3,
                                                        criterion4, criterion5, criterion6,
                                                        criterion7};
    // Criteria 3 consumes the pool from 2 and 5; run 5 before 3 so both feed it.
    std::vector<int> order = {0, 1, 4, 2, 3, 5, 6};
    std::vector<CriterionResult> results(7);
    Context ctx;
    for (int idx : order) {
        Context local;
        local.verified = ctx.verified;
        auto t0 = std::chrono::steady_clock::now();
        steps[idx](local);
        auto t1 = std::chrono::steady_clock::now();
        ctx.verified = local.verified;
        results[idx] = {local.ok, std::chrono::duration<double>(t1 - t0).count(),
                        local.log.str()};
    }
    return results;
}

}  // namespace

int main() {
    const char* names[7] = {
        "exactness fixtures (F0 exact, F1 inexact at injectivity)",
        "reflexivity suite (corpus + 100 random, phi = id, order lemma)",
        "symmetry suite (swapped witnesses, inverse phi/theta)",
        "counterexample gate (empty form vs kernel/torsion entries)",
        "stabilization suite (3 iterations, rank +2, boundary preserved)",
        "witt obstruction vs brute force (all rank-2 in [-2,2], trefoil)",
        "SNF/HNF oracle (1000 random matrices)",
    };
    const double budgets[7] = {1.0, 10.0, 10.0, 5.0, 10.0, 60.0, 10.0};

    bool all_ok = true;
    auto report = [&](int i, const CriterionResult& r, double budget) {
        bool within = r.seconds < budget;
        std::printf("[%s] criterion %d: %s (%.2fs, budget %.0fs)\n",
                    r.ok && within ? "PASS" : "FAIL", i + 1, names[i], r.seconds, budget);
        if (!r.detail.empty()) std::fputs(r.detail.c_str(), stdout);
        all_ok = all_ok && r.ok && within;
    };

    std::vector<CriterionResult> standard = run_battery();
    for (int i = 0; i < 7; ++i) report(i, standard[i], budgets[i]);

    // 8. Convention robustness: identical verdicts under the flipped adjoint.
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CriterionResult> flipped;
    {
        lc::forms::ScopedAdjointConvention guard(lc::forms::AdjointConvention::Transposed);
        flipped = run_battery();
    }
    auto t1 = std::chrono::steady_clock::now();
    bool same = true;
    for (int i = 0; i < 7; ++i) same = same && flipped[i].ok == standard[i].ok && flipped[i].ok;
    double secs = std::chrono::duration<double>(t1 - t0).count();
    double total_budget = 0;
    for (double b : budgets) total_budget += b;
    std::printf("[%s] criterion 8: convention robustness (full battery flipped) (%.2fs, budget %.0fs)\n",
                same && secs < total_budget ? "PASS" : "FAIL", secs, total_budget);
    for (int i = 0; i < 7; ++i)
        if (!flipped[i].ok) {
            std::printf("    flipped criterion %d failed:\n%s", i + 1, flipped[i].detail.c_str());
        }
    all_ok = all_ok && same && secs < total_budget;

    return all_ok ? 0 : 1;
}
