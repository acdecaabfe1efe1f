#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bott/cohomology.hpp"
#include "bott/enumerate.hpp"
#include "bott/fan.hpp"
#include "bott/gbm.hpp"
#include "bott/iso.hpp"
#include "bott/polynomial.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNo = 3;

// A spec argument is either the grammar literal B(n1;a1,...) or a path to a
// JSON file describing a general tower.
bott::GeneralizedBottMatrix load_matrix(const std::string& arg) {
    std::string trimmed = arg;
    const size_t first = trimmed.find_first_not_of(" \t");
    if (first != std::string::npos && trimmed[first] == 'B')
        return bott::to_matrix(bott::parse_two_stage(trimmed));
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open spec file: " + arg);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return bott::gbm_from_json(buffer.str());
}

bott::TwoStageSpec load_two_stage(const std::string& arg) {
    return bott::as_two_stage(load_matrix(arg));
}

std::string lambda_line(const bott::PrimitiveRelation& rel,
                        const bott::GeneralizedBottMatrix& gbm) {
    std::ostringstream out;
    out << "collection R_" << rel.j << " (size "
        << gbm.fiber_dims[static_cast<size_t>(rel.j - 1)] + 1 << "):";
    if (rel.lambdas.empty()) {
        out << " sum of generators is 0;";
    } else {
        for (size_t t = 0; t < rel.lambdas.size(); ++t) {
            const int i = rel.j + 1 + static_cast<int>(t);
            out << (t ? ", " : " ") << "lambda_{" << i << "," << rel.j << "} = (";
            for (size_t k = 0; k < rel.lambdas[t].size(); ++k)
                out << (k ? "," : "") << rel.lambdas[t][k];
            out << ")";
        }
        out << ";";
    }
    out << " degree = " << rel.degree;
    return out.str();
}

int run_fano(const std::string& spec_arg, bool quiet) {
    const auto gbm = load_matrix(spec_arg);
    bott::validate(gbm);
    const auto report = bott::is_fano(gbm);
    if (!quiet) {
        for (const auto& rel : report.relations) std::cout << lambda_line(rel, gbm) << '\n';
        std::cout << "Fano: " << (report.fano ? "yes" : "no") << '\n';
    }
    return quiet && !report.fano ? kExitNo : kExitOk;
}

int run_relations(const std::string& spec_arg, std::optional<int> only_j) {
    const auto gbm = load_matrix(spec_arg);
    bott::validate(gbm);
    if (only_j) {
        std::cout << lambda_line(bott::primitive_relation(gbm, *only_j), gbm) << '\n';
        return kExitOk;
    }
    for (int j = 1; j <= gbm.stages(); ++j)
        std::cout << lambda_line(bott::primitive_relation(gbm, j), gbm) << '\n';
    return kExitOk;
}

int run_coh(const std::string& spec_arg, std::optional<int> degree, bool show_c1) {
    const auto gbm = load_matrix(spec_arg);
    const bott::CohomologyRing ring(gbm);
    const bool default_view = !degree && !show_c1;
    if (default_view) {
        std::cout << "ring Z[";
        for (int i = 1; i <= ring.nvars(); ++i) std::cout << (i > 1 ? "," : "") << 'x' << i;
        std::cout << "] modulo:\n";
        for (size_t i = 0; i < ring.relations().size(); ++i)
            std::cout << "  r" << (i + 1) << " = " << ring.relations()[i].str() << '\n';
    }
    if (degree) {
        const auto basis = ring.additive_basis(*degree);
        std::vector<std::string> monos;
        for (const auto& exps : basis) {
            const std::string mono = bott::Polynomial::monomial_str(exps);
            monos.push_back(mono.empty() ? "1" : mono);
        }
        std::sort(monos.begin(), monos.end());  // same order as polynomial terms
        std::cout << "basis in degree " << *degree << " (" << monos.size() << "):";
        for (const auto& mono : monos) std::cout << ' ' << mono;
        std::cout << '\n';
    }
    if (show_c1) std::cout << "c1 = " << ring.c1().str() << '\n';
    return kExitOk;
}

int run_chern(const std::string& spec_arg) {
    const bott::CohomologyRing ring(load_matrix(spec_arg));
    std::cout << ring.total_chern().str() << '\n';
    return kExitOk;
}

void print_verdict_text(const bott::Verdict& verdict) {
    std::cout << "verdict: " << bott::to_string(verdict.answer);
    if (!verdict.certificate.empty()) std::cout << " (" << verdict.certificate << ")";
    std::cout << '\n';
    if (verdict.witness) {
        const auto& m = verdict.witness->matrix;
        std::cout << "witness: [[" << m[0][0] << "," << m[0][1] << "],[" << m[1][0] << ","
                  << m[1][1] << "]] c1-preserving: "
                  << (verdict.witness->c1_preserving ? "yes" : "no") << '\n';
    }
}

int run_iso(const std::string& lhs_arg, const std::string& rhs_arg, bool require_c1, bool variety,
            std::optional<std::int64_t> bound, bool json, bool quiet) {
    const auto lhs = load_two_stage(lhs_arg);
    const auto rhs = load_two_stage(rhs_arg);

    bott::Verdict verdict;
    if (variety) {
        verdict = bott::decide_variety_iso(lhs, rhs);
    } else if (require_c1 && bott::is_fano(lhs) && bott::is_fano(rhs)) {
        verdict = bott::decide_c1_iso(lhs, rhs);
    } else {
        const std::int64_t b = bound.value_or(bott::default_search_bound(lhs, rhs));
        const auto witness = bott::ring_iso_search(lhs, rhs, b, require_c1);
        if (witness) {
            verdict.answer = bott::Answer::Yes;
            verdict.witness = witness;
            if (!require_c1)
                verdict.certificate =
                    "rings isomorphic; the varieties are diffeomorphic (two-stage "
                    "cohomological rigidity)";
        } else {
            verdict.answer = bott::Answer::No;
            std::ostringstream msg;
            msg << "no witness with entries in [-" << b << "," << b << "]";
            verdict.certificate = msg.str();
        }
    }

    if (!quiet) {
        if (json)
            std::cout << bott::verdict_to_json(verdict) << '\n';
        else
            print_verdict_text(verdict);
    }
    if (quiet) return verdict.answer == bott::Answer::Yes ? kExitOk : kExitNo;
    return kExitOk;
}

int run_enumerate(int dim, const std::string& format) {
    bott::EmitFormat fmt;
    if (format == "plain")
        fmt = bott::EmitFormat::Plain;
    else if (format == "json")
        fmt = bott::EmitFormat::Json;
    else if (format == "csv")
        fmt = bott::EmitFormat::Csv;
    else
        throw std::invalid_argument("unknown format: " + format);
    std::cout << bott::classification_emit(bott::enumerate_fano(dim), fmt);
    return kExitOk;
}

int run_verify_rigidity(int max_dim, const std::string& bound_policy, bool serial) {
    bott::BoundPolicy policy = bott::BoundPolicy::automatic();
    if (bound_policy != "auto") {
        if (bound_policy.rfind("fixed:", 0) != 0)
            throw std::invalid_argument("bound policy must be 'auto' or 'fixed:<B>'");
        policy = bott::BoundPolicy::fixed(std::stoll(bound_policy.substr(6)));
    }
    const auto reports = bott::verify_rigidity(
        max_dim, policy, serial ? bott::Execution::Serial : bott::Execution::Parallel);
    long long total_mismatches = 0;
    for (const auto& report : reports) {
        std::cout << bott::report_to_text(report) << '\n';
        total_mismatches += static_cast<long long>(report.counterexamples.size());
    }
    std::cout << (total_mismatches == 0 ? "rigidity verified: no counterexamples"
                                        : "RIGIDITY VIOLATED")
              << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for generalized Bott manifolds"};
    app.require_subcommand(1);

    std::string spec_a, spec_b, format = "plain", bound_policy = "auto";
    std::optional<int> rel_j, coh_degree;
    std::optional<std::int64_t> iso_bound;
    bool quiet = false, show_c1 = false, require_c1 = false, variety = false, json_out = false,
         serial = false;
    int dim = 2, max_dim = 4;

    auto* fano = app.add_subcommand("fano", "Fano test via primitive-relation degrees");
    fano->add_option("spec", spec_a, "grammar literal or JSON file")->required();
    fano->add_flag("--quiet", quiet, "suppress output; exit 0 iff Fano");

    auto* relations = app.add_subcommand("relations", "print primitive relations");
    relations->add_option("spec", spec_a)->required();
    relations->add_option("--j", rel_j, "only the collection of stage j");

    auto* coh = app.add_subcommand("coh", "cohomology ring: relations, basis, c1");
    coh->add_option("spec", spec_a)->required();
    coh->add_option("--degree", coh_degree, "print the additive basis of this degree");
    coh->add_flag("--c1", show_c1, "print the first Chern class");

    auto* chern = app.add_subcommand("chern", "total Chern class in normal form");
    chern->add_option("spec", spec_a)->required();

    auto* iso = app.add_subcommand("iso", "graded ring / c1 / variety isomorphism test");
    iso->add_option("specA", spec_a)->required();
    iso->add_option("specB", spec_b)->required();
    iso->add_flag("--c1", require_c1, "require the isomorphism to preserve c1");
    iso->add_flag("--variety", variety, "decide variety isomorphism (canonical forms)");
    iso->add_option("--bound", iso_bound, "search box for witness entries");
    iso->add_flag("--json", json_out, "emit the verdict as JSON");
    iso->add_flag("--quiet", quiet, "suppress output; exit 0 iff verdict is yes");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate Fano towers of a dimension");
    enumerate->add_option("--dim", dim, "complex dimension")->required();
    enumerate->add_option("--format", format, "plain|json|csv");

    auto* rigidity = app.add_subcommand("verify-rigidity", "exhaustive rigidity sweep");
    rigidity->add_option("--max-dim", max_dim, "largest dimension to sweep")->required();
    rigidity->add_option("--bound-policy", bound_policy, "auto or fixed:<B>");
    rigidity->add_flag("--serial", serial, "use the serial reference sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (fano->parsed()) return run_fano(spec_a, quiet);
        if (relations->parsed()) return run_relations(spec_a, rel_j);
        if (coh->parsed()) return run_coh(spec_a, coh_degree, show_c1);
        if (chern->parsed()) return run_chern(spec_a);
        if (iso->parsed())
            return run_iso(spec_a, spec_b, require_c1, variety, iso_bound, json_out, quiet);
        if (enumerate->parsed()) return run_enumerate(dim, format);
        if (rigidity->parsed()) return run_verify_rigidity(max_dim, bound_policy, serial);
    } catch (const bott::ParseError& e) {
        std::cerr << "error: " << e.what() << " at line " << e.line << ", column " << e.column
                  << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
