// linkcob: exact-arithmetic analysis of Seifert forms, Witt triviality,
// algebraic cobordism and exactness of Seifert-surface homology data.

#include "linkcob/cobordism.hpp"
#include "linkcob/corpus.hpp"
#include "linkcob/errors.hpp"
#include "linkcob/exactlink.hpp"
#include "linkcob/json_io.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <filesystem>
#include <iostream>

namespace lc = linkcob;
using lc::Int;
using lc::IntMatrix;
using nlohmann::json;

namespace {

std::atomic<bool> g_interrupted{false};

void on_sigint(int) { g_interrupted.store(true); }

// Exit codes: 0 verified/found/exact, 1 witness rejected, 2 bad input,
// 3 impossible by obstruction, 4 not found within bounds, 5 inexact.
constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kBadInput = 2;
constexpr int kImpossible = 3;
constexpr int kNotFound = 4;
constexpr int kInexact = 5;

json group_json(const lc::abgroup::FgAbelianGroup& g) { return lc::jsonio::group_to_json(g); }

json stats_json(const lc::witt::SearchStats& s) {
    json out;
    out["nodes"] = s.nodes;
    out["isotropic_candidates"] = s.isotropic_candidates;
    out["height"] = s.height;
    out["interrupted"] = s.interrupted;
    return out;
}

json hom_json(const lc::abgroup::GroupHom& h) {
    json out;
    out["source"] = group_json(h.source());
    out["target"] = group_json(h.target());
    out["matrix"] = lc::jsonio::matrix_to_json(h.matrix());
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string group_str(const lc::abgroup::FgAbelianGroup& g) { return g.to_string(); }

int run_analyze(const std::string& path, bool as_json) {
    std::string name;
    lc::forms::BilinearForm form = lc::jsonio::read_form_file(path, &name);
    lc::forms::FormInvariants inv = lc::forms::invariants(form);
    lc::forms::BoundaryHomology bh = lc::forms::boundary_homology(form);
    if (as_json) {
        json out;
        out["name"] = name;
        out["epsilon"] = form.epsilon();
        out["rank"] = form.rank();
        out["matrix"] = lc::jsonio::matrix_to_json(form.gram());
        out["symmetrized"] = lc::jsonio::matrix_to_json(inv.symmetrized);
        out["kernel_rank"] = inv.kernel_of_adjoint.rank();
        out["kernel_basis"] = lc::jsonio::matrix_to_json(inv.kernel_of_adjoint.basis());
        out["cokernel"] = group_json(inv.cokernel);
        out["torsion_of_cokernel"] = group_json(inv.torsion_of_cokernel);
        out["det_s"] = lc::jsonio::int_to_json(inv.det_s);
        if (inv.signature) out["signature"] = *inv.signature;
        out["boundary_homology"]["hn"] = group_json(bh.hn);
        out["boundary_homology"]["hn1"] = group_json(bh.hn1);
        emit(out);
    } else {
        if (!name.empty()) std::cout << "form:          " << name << "\n";
        std::cout << "rank:          " << form.rank() << "\n"
                  << "epsilon:       " << (form.epsilon() > 0 ? "+1" : "-1") << "\n"
                  << "S = A + eps A^T: " << inv.symmetrized.to_string() << "\n"
                  << "Ker S* rank:   " << inv.kernel_of_adjoint.rank() << "\n"
                  << "Coker S*:      " << group_str(inv.cokernel) << "\n"
                  << "Tors Coker S*: " << group_str(inv.torsion_of_cokernel) << "\n"
                  << "det S:         " << inv.det_s << "\n";
        if (inv.signature) std::cout << "signature:     " << *inv.signature << "\n";
        std::cout << "H_n(K):        " << group_str(bh.hn) << "\n"
                  << "H_{n-1}(K):    " << group_str(bh.hn1) << "\n";
    }
    return kOk;
}

int outcome_code(const lc::witt::SearchOutcome& out) {
    switch (out.verdict) {
        case lc::witt::SearchVerdict::Found: return kOk;
        case lc::witt::SearchVerdict::ImpossibleByObstruction: return kImpossible;
        case lc::witt::SearchVerdict::NotFoundWithinBounds: return kNotFound;
    }
    return kBadInput;
}

void print_outcome(const lc::witt::SearchOutcome& out, bool as_json, json extra = json()) {
    if (as_json) {
        json j;
        j["verdict"] = lc::witt::to_string(out.verdict);
        j["stats"] = stats_json(out.stats);
        if (out.witness) j["witness"] = lc::jsonio::submodule_to_json(*out.witness);
        if (out.obstruction) j["obstruction"] = lc::witt::to_string(*out.obstruction);
        if (!extra.is_null()) j.update(extra);
        emit(j);
        return;
    }
    std::cout << "verdict: " << lc::witt::to_string(out.verdict) << "\n";
    if (out.obstruction) std::cout << "obstruction: " << lc::witt::to_string(*out.obstruction) << "\n";
    if (out.witness)
        std::cout << "witness basis: " << out.witness->basis().to_string() << "\n";
    std::cout << "nodes explored: " << out.stats.nodes
              << ", isotropic candidates: " << out.stats.isotropic_candidates
              << ", height: " << out.stats.height << "\n";
    if (out.stats.interrupted) std::cout << "search interrupted; stats are partial\n";
}

int run_witt(const std::string& path, long height, long long nodes, bool as_json) {
    lc::forms::BilinearForm form = lc::jsonio::read_form_file(path);
    lc::witt::SearchOutcome out = lc::witt::find_metabolizer(form, height, nodes, {}, &g_interrupted);
    print_outcome(out, as_json);
    return outcome_code(out);
}

const char* clause_state(const lc::cobordism::CobordismReport& r, lc::cobordism::CobordismClause c) {
    using C = lc::cobordism::CobordismClause;
    auto rank_of = [](C x) {
        switch (x) {
            case C::NotMetabolizer: return 0;
            case C::MbarNotPure: return 1;
            case C::C1NotGraph: return 2;
            case C::C2NotGraph: return 3;
        }
        return 4;
    };
    if (!r.failed_clause) return "pass";
    int failed = rank_of(*r.failed_clause);
    int mine = rank_of(c);
    // Clauses 1 and 2 short-circuit; 3 and 4 are both evaluated.
    if (mine == failed) return "fail";
    if (failed <= 1 && mine > failed) return "skipped";
    if (mine == 3 && failed == 2) return r.theta ? "pass" : "fail";
    return mine < failed ? "pass" : (r.phi || mine < 2 ? "pass" : "skipped");
}

json report_json(const lc::cobordism::CobordismReport& r) {
    using C = lc::cobordism::CobordismClause;
    json j;
    j["verdict"] = r.verdict;
    j["clauses"]["metabolizer"] = clause_state(r, C::NotMetabolizer);
    j["clauses"]["mbar_pure"] = clause_state(r, C::MbarNotPure);
    j["clauses"]["c1_graph"] = clause_state(r, C::C1NotGraph);
    j["clauses"]["c2_graph"] = clause_state(r, C::C2NotGraph);
    if (r.failed_clause) j["failed_clause"] = lc::cobordism::to_string(*r.failed_clause);
    if (!r.metabolizer_check.ok) j["metabolizer_detail"] = r.metabolizer_check.detail;
    if (r.phi) j["phi"] = hom_json(*r.phi);
    if (r.theta) j["theta"] = hom_json(*r.theta);
    if (r.order_check)
        j["order_check"] = json::array({lc::jsonio::int_to_json(r.order_check->first),
                                        lc::jsonio::int_to_json(r.order_check->second)});
    j["image_identity_check"] = r.image_identity_check;
    j["witness"] = lc::jsonio::submodule_to_json(r.metabolizer);
    return j;
}

void print_report(const lc::cobordism::CobordismReport& r) {
    using C = lc::cobordism::CobordismClause;
    std::cout << "verdict: " << (r.verdict ? "algebraically cobordant (witness verified)"
                                           : "witness rejected")
              << "\n";
    std::cout << "  metabolizer:        " << clause_state(r, C::NotMetabolizer);
    if (!r.metabolizer_check.ok) std::cout << " (" << r.metabolizer_check.detail << ")";
    std::cout << "\n";
    std::cout << "  Mbar pure:          " << clause_state(r, C::MbarNotPure) << "\n";
    std::cout << "  (c1) kernel graph:  " << clause_state(r, C::C1NotGraph) << "\n";
    std::cout << "  (c2) torsion graph: " << clause_state(r, C::C2NotGraph) << "\n";
    if (r.phi)
        std::cout << "  phi:   " << r.phi->to_string() << "\n";
    if (r.theta)
        std::cout << "  theta: " << r.theta->to_string() << "\n";
    if (r.order_check)
        std::cout << "  order check: |d(S_B*(M)^)| = " << r.order_check->first
                  << ", |Tors Coker S0*| = " << r.order_check->second << "\n";
}

int run_cobordant(const std::string& path_a, const std::string& path_b,
                  const std::string& witness, long height, long long nodes, bool as_json) {
    lc::forms::BilinearForm a0 = lc::jsonio::read_form_file(path_a);
    lc::forms::BilinearForm a1 = lc::jsonio::read_form_file(path_b);
    if (a0.epsilon() != a1.epsilon())
        throw lc::ParseError("the two forms have different epsilon");
    if (!witness.empty()) {
        lc::zlattice::Submodule m =
            witness == "diagonal"
                ? lc::cobordism::diagonal_witness(a0)
                : lc::jsonio::read_witness_file(witness);
        if (witness == "diagonal" && a0.rank() != a1.rank())
            throw lc::ParseError("--witness diagonal needs forms of equal rank");
        lc::cobordism::CobordismReport r = lc::cobordism::verify_witness(a0, a1, m);
        if (as_json) {
            json j = report_json(r);
            j["mode"] = "verify";
            emit(j);
        } else {
            print_report(r);
        }
        return r.verdict ? kOk : kRejected;
    }
    lc::witt::SearchOutcome out =
        lc::cobordism::search_witness(a0, a1, height, nodes, &g_interrupted);
    json extra;
    extra["mode"] = "search";
    if (out.verdict == lc::witt::SearchVerdict::Found) {
        lc::cobordism::CobordismReport r = lc::cobordism::verify_witness(a0, a1, *out.witness);
        if (as_json) {
            extra["report"] = report_json(r);
        } else {
            print_outcome(out, false);
            print_report(r);
            return outcome_code(out);
        }
    }
    print_outcome(out, as_json, extra);
    return outcome_code(out);
}

int run_exact(const std::string& path, bool as_json) {
    lc::exactlink::SeifertHomologyData data = lc::jsonio::read_sequence_file(path);
    lc::exactlink::ExactnessReport r = lc::exactlink::is_exact_surface(data);
    static const char* kPositions[4] = {
        "injectivity of H_n(K) -> H_n(F)/Tors",
        "exactness at H_n(F)/Tors",
        "exactness at H_n(F,K)/Tors",
        "surjectivity of H_n(F,K)/Tors -> H_{n-1}(K)",
    };
    if (as_json) {
        json j;
        j["exact"] = r.exact;
        j["first_failure"] = r.first_failure;
        json pos = json::array();
        for (int i = 0; i < 4; ++i) pos.push_back(r.position_ok[i]);
        j["positions"] = pos;
        j["groups"]["HnK"] = group_json(data.hn_k());
        j["groups"]["HnF"] = group_json(data.hn_f());
        j["groups"]["HnFK"] = group_json(data.hn_fk());
        j["groups"]["Hn1K"] = group_json(data.hn1_k());
        emit(j);
    } else {
        std::cout << "sequence: 0 -> " << group_str(data.hn_k()) << " -> " << group_str(data.hn_f())
                  << " -> " << group_str(data.hn_fk()) << " -> " << group_str(data.hn1_k())
                  << " -> 0\n";
        for (int i = 0; i < 4; ++i)
            std::cout << "  position " << i + 1 << " (" << kPositions[i]
                      << "): " << (r.position_ok[i] ? "ok" : "FAILS") << "\n";
        std::cout << (r.exact ? "exact\n" : "not exact\n");
    }
    return r.exact ? kOk : kInexact;
}

int run_stabilize(const std::string& path, std::string out_prefix, bool as_json) {
    std::string name;
    lc::forms::BilinearForm form = lc::jsonio::read_form_file(path, &name);
    lc::cobordism::Stabilization st = lc::cobordism::stabilize_default(form);
    if (out_prefix.empty()) {
        std::filesystem::path p(path);
        out_prefix = (p.parent_path() / p.stem()).string() + "-stab";
    }
    std::string form_path = out_prefix + ".json";
    std::string witness_path = out_prefix + "-witness.json";
    std::string out_name = name.empty() ? "" : name + "-stab";
    lc::jsonio::write_json_file(form_path, lc::jsonio::form_to_json(st.stabilized, out_name));
    lc::jsonio::write_json_file(witness_path, lc::jsonio::submodule_to_json(st.witness));
    if (as_json) {
        json j;
        j["stabilized"] = form_path;
        j["witness"] = witness_path;
        j["rank"] = st.stabilized.rank();
        emit(j);
    } else {
        std::cout << "wrote " << form_path << " (rank " << st.stabilized.rank() << ")\n"
                  << "wrote " << witness_path << " (rank " << st.witness.rank() << ")\n";
    }
    return kOk;
}

json corpus_entry_json(const lc::corpus::CorpusEntry& e) {
    json j = lc::jsonio::form_to_json(e.form, e.name);
    j["notes"] = e.notes;
    j["expected"]["kernel_rank"] = e.expected.kernel_rank;
    j["expected"]["cokernel"] = group_json(e.expected.cokernel);
    j["expected"]["det_s"] = lc::jsonio::int_to_json(e.expected.det_s);
    if (e.expected.signature) j["expected"]["signature"] = *e.expected.signature;
    json alex = json::array();
    for (const Int& c : e.alexander) alex.push_back(lc::jsonio::int_to_json(c));
    j["expected"]["alexander"] = alex;
    return j;
}

int run_corpus(const std::string& action, const std::string& name, const std::string& out_dir,
               int count, int max_rank, int entry_bound, int epsilon, std::uint64_t seed,
               bool as_json) {
    if (action == "list") {
        if (as_json) {
            emit(json(lc::corpus::list()));
        } else {
            for (const auto& n : lc::corpus::list()) std::cout << n << "\n";
        }
        return kOk;
    }
    if (action == "show") {
        lc::corpus::CorpusEntry e = lc::corpus::load(name);
        if (as_json) {
            emit(corpus_entry_json(e));
        } else {
            std::cout << e.name << ": " << e.notes << "\n"
                      << "matrix: " << e.form.gram().to_string() << "\n"
                      << "Coker S*: " << group_str(e.expected.cokernel)
                      << ", det S: " << e.expected.det_s << "\n";
        }
        return kOk;
    }
    if (action == "dump") {
        if (out_dir.empty()) throw lc::ParseError("corpus dump needs --out DIR");
        std::filesystem::create_directories(out_dir);
        for (const auto& n : lc::corpus::list()) {
            lc::corpus::CorpusEntry e = lc::corpus::load(n);
            lc::jsonio::write_json_file(out_dir + "/" + n + ".json",
                                        lc::jsonio::form_to_json(e.form, e.name));
        }
        std::cout << "wrote " << lc::corpus::list().size() << " entries to " << out_dir << "\n";
        return kOk;
    }
    if (action == "random") {
        std::mt19937_64 rng(seed);
        json all = json::array();
        for (int i = 0; i < count; ++i) {
            lc::forms::BilinearForm f =
                epsilon == 0 ? lc::corpus::random_form(rng, max_rank, entry_bound)
                             : lc::corpus::random_form_with_epsilon(rng, max_rank, entry_bound,
                                                                    epsilon);
            std::string fname = "random-" + std::to_string(i);
            if (out_dir.empty()) {
                all.push_back(lc::jsonio::form_to_json(f, fname));
            } else {
                std::filesystem::create_directories(out_dir);
                lc::jsonio::write_json_file(out_dir + "/" + fname + ".json",
                                            lc::jsonio::form_to_json(f, fname));
            }
        }
        if (out_dir.empty()) emit(all);
        return kOk;
    }
    throw lc::ParseError("corpus: unknown action '" + action + "'");
}

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, on_sigint);
    CLI::App app{"exact algebra of Seifert forms: Witt triviality, algebraic cobordism, "
                 "and exactness of Seifert-surface homology data"};
    app.require_subcommand(1);

    std::string path_a, path_b, witness, out_prefix, corpus_action = "list", corpus_name;
    long height = 5;
    long long nodes = 1000000;
    bool as_json = false;
    int count = 10, max_rank = 5, entry_bound = 3, epsilon = 0;
    std::uint64_t seed = lc::corpus::kDefaultSeed;

    CLI::App* analyze = app.add_subcommand("analyze", "invariants of a Seifert form");
    analyze->add_option("form", path_a, "form JSON file")->required();
    analyze->add_flag("--json", as_json, "machine-readable output");

    CLI::App* wt = app.add_subcommand("witt", "decide or search Witt-triviality");
    wt->add_option("form", path_a, "form JSON file")->required();
    wt->add_option("--height", height, "coordinate bound for candidate vectors");
    wt->add_option("--nodes", nodes, "node budget for the search");
    wt->add_flag("--json", as_json, "machine-readable output");

    CLI::App* cob = app.add_subcommand("cobordant", "verify or search algebraic cobordism");
    cob->add_option("formA", path_a, "first form JSON file")->required();
    cob->add_option("formB", path_b, "second form JSON file")->required();
    cob->add_option("--witness", witness, "witness JSON file, or 'diagonal'");
    cob->add_option("--height", height, "coordinate bound for candidate vectors");
    cob->add_option("--nodes", nodes, "node budget for the search");
    cob->add_flag("--json", as_json, "machine-readable output");

    CLI::App* ex = app.add_subcommand("exact", "exactness of Seifert-surface homology data");
    ex->add_option("sequence", path_a, "sequence JSON file")->required();
    ex->add_flag("--json", as_json, "machine-readable output");

    CLI::App* stab = app.add_subcommand("stabilize", "emit the default stabilization and witness");
    stab->add_option("form", path_a, "form JSON file")->required();
    stab->add_option("--out", out_prefix, "output prefix (default: <form>-stab)");
    stab->add_flag("--json", as_json, "machine-readable output");

    CLI::App* corp = app.add_subcommand("corpus", "named Seifert matrices and generators");
    corp->add_option("action", corpus_action, "list | show | dump | random")->required();
    corp->add_option("name", corpus_name, "entry name (for show)");
    corp->add_option("--out", out_prefix, "output directory (dump/random)");
    corp->add_option("--count", count, "number of random forms");
    corp->add_option("--max-rank", max_rank, "maximum rank of random forms");
    corp->add_option("--entry-bound", entry_bound, "entry bound of random forms");
    corp->add_option("--epsilon", epsilon, "fix epsilon (+1/-1; 0 = random)");
    corp->add_option("--seed", seed, "seed for random generation");
    corp->add_flag("--json", as_json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return run_analyze(path_a, as_json);
        if (*wt) return run_witt(path_a, height, nodes, as_json);
        if (*cob) return run_cobordant(path_a, path_b, witness, height, nodes, as_json);
        if (*ex) return run_exact(path_a, as_json);
        if (*stab) return run_stabilize(path_a, out_prefix, as_json);
        if (*corp)
            return run_corpus(corpus_action, corpus_name, out_prefix, count, max_rank, entry_bound,
                              epsilon, seed, as_json);
    } catch (const lc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const lc::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
