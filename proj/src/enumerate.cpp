#include "bott/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bott/cohomology.hpp"
#include "bott/fan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bott {

namespace {

// Weakly increasing nonnegative vectors of the given length with sum <= cap,
// in ascending lexicographic order.
void bounded_partitions(int length, int cap, std::vector<std::int64_t>& current,
                        std::int64_t min_value, std::int64_t used,
                        std::vector<std::vector<std::int64_t>>& out) {
    if (static_cast<int>(current.size()) == length) {
        out.push_back(current);
        return;
    }
    for (std::int64_t v = min_value; used + v <= cap; ++v) {
        current.push_back(v);
        bounded_partitions(length, cap, current, v, used + v, out);
        current.pop_back();
    }
}

std::string render_c1(const TwoStageSpec& spec) {
    return CohomologyRing(to_matrix(spec)).c1().str();
}

}  // namespace

ClassificationTable enumerate_fano(int dimension) {
    if (dimension < 2) throw std::invalid_argument("enumerate_fano: dimension must be >= 2");

    std::set<CanonicalForm> forms;
    for (int n1 = 1; n1 < dimension; ++n1) {
        const int n2 = dimension - n1;
        std::vector<std::vector<std::int64_t>> vectors;
        std::vector<std::int64_t> scratch;
        bounded_partitions(n2, n1, scratch, 0, 0, vectors);
        for (auto& a : vectors) forms.insert(canonical_form(TwoStageSpec{n1, std::move(a)}));
    }

    ClassificationTable table;
    table.dimension = dimension;
    for (const CanonicalForm& form : forms) {
        const TwoStageSpec spec = form.to_spec();
        if (!is_fano_two_stage(spec))
            throw std::logic_error("enumerate_fano produced a non-Fano spec");
        table.entries.push_back({form, true, render_c1(spec)});
    }
    // std::set already orders by (type, exponents); keep it explicit.
    std::sort(table.entries.begin(), table.entries.end(),
              [](const ClassificationEntry& l, const ClassificationEntry& r) {
                  return l.form < r.form;
              });
    return table;
}

std::string classification_emit(const ClassificationTable& table, EmitFormat format) {
    std::ostringstream out;
    switch (format) {
        case EmitFormat::Plain:
            for (const auto& entry : table.entries) out << to_string(entry.form.to_spec()) << '\n';
            break;
        case EmitFormat::Csv: {
            out << "n1,n2,exponents,is_product,c1\n";
            for (const auto& entry : table.entries) {
                out << entry.form.type_pair.first << ',' << entry.form.type_pair.second << ',';
                for (size_t k = 0; k < entry.form.sorted_a.size(); ++k) {
                    if (k) out << ' ';
                    out << entry.form.sorted_a[k];
                }
                out << ',' << (entry.form.is_product ? "true" : "false") << ',' << entry.c1 << '\n';
            }
            break;
        }
        case EmitFormat::Json: {
            nlohmann::json doc;
            doc["dimension"] = table.dimension;
            doc["count"] = table.count();
            doc["entries"] = nlohmann::json::array();
            for (const auto& entry : table.entries) {
                nlohmann::json e;
                e["n1"] = entry.form.type_pair.first;
                e["n2"] = entry.form.type_pair.second;
                e["exponents"] = entry.form.sorted_a;
                e["is_product"] = entry.form.is_product;
                e["fano"] = entry.fano;
                e["c1"] = entry.c1;
                e["spec"] = to_string(entry.form.to_spec());
                doc["entries"].push_back(std::move(e));
            }
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return out.str();
}

namespace {

struct PairTask {
    int left;
    int right;
};

struct PairOutcome {
    bool agreement = true;
    std::optional<Witness> witness;
    std::int64_t bound = 0;
};

PairOutcome check_pair(const TwoStageSpec& lhs, const TwoStageSpec& rhs, bool self_pair,
                       const BoundPolicy& policy) {
    PairOutcome outcome;
    outcome.bound = policy.bound_for(lhs, rhs);
    outcome.witness = ring_iso_search(lhs, rhs, outcome.bound, /*require_c1=*/true);
    outcome.agreement = outcome.witness.has_value() == self_pair;
    return outcome;
}

RigidityReport sweep_dimension(int dimension, const BoundPolicy& policy, bool parallel) {
    const auto start = std::chrono::steady_clock::now();

    const ClassificationTable table = enumerate_fano(dimension);
    std::vector<TwoStageSpec> specs;
    specs.reserve(table.entries.size());
    for (const auto& entry : table.entries) specs.push_back(entry.form.to_spec());

    std::vector<PairTask> tasks;
    for (int i = 0; i < static_cast<int>(specs.size()); ++i)
        for (int j = i; j < static_cast<int>(specs.size()); ++j) tasks.push_back({i, j});

    std::vector<PairOutcome> outcomes(tasks.size());

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long t = 0; t < static_cast<long long>(tasks.size()); ++t) {
            const PairTask& task = tasks[static_cast<size_t>(t)];
            outcomes[static_cast<size_t>(t)] =
                check_pair(specs[static_cast<size_t>(task.left)],
                           specs[static_cast<size_t>(task.right)], task.left == task.right, policy);
        }
    } else {
        for (size_t t = 0; t < tasks.size(); ++t)
            outcomes[t] = check_pair(specs[static_cast<size_t>(tasks[t].left)],
                                     specs[static_cast<size_t>(tasks[t].right)],
                                     tasks[t].left == tasks[t].right, policy);
    }

    RigidityReport report;
    report.dimension = dimension;
    report.pairs_checked = static_cast<long long>(tasks.size());
    for (size_t t = 0; t < tasks.size(); ++t) {
        const PairOutcome& outcome = outcomes[t];
        report.oracle_bound_used = std::max(report.oracle_bound_used, outcome.bound);
        if (outcome.agreement) {
            ++report.agreements;
        } else {
            report.counterexamples.push_back({specs[static_cast<size_t>(tasks[t].left)],
                                              specs[static_cast<size_t>(tasks[t].right)],
                                              tasks[t].left == tasks[t].right, outcome.witness});
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

std::vector<RigidityReport> verify_rigidity(int max_dimension, BoundPolicy policy,
                                            Execution execution) {
    if (max_dimension < 2)
        throw std::invalid_argument("verify_rigidity: max dimension must be >= 2");
    std::vector<RigidityReport> reports;
    for (int d = 2; d <= max_dimension; ++d)
        reports.push_back(sweep_dimension(d, policy, execution == Execution::Parallel));
    return reports;
}

std::string report_to_text(const RigidityReport& report) {
    std::ostringstream out;
    out << "dimension " << report.dimension << ": pairs " << report.pairs_checked
        << ", agreements " << report.agreements << ", counterexamples "
        << report.counterexamples.size() << ", bound " << report.oracle_bound_used << ", "
        << report.elapsed_seconds << " s";
    for (const auto& cex : report.counterexamples) {
        out << "\n  MISMATCH " << to_string(cex.left) << " vs " << to_string(cex.right)
            << ": canonical " << (cex.canonical_equal ? "equal" : "distinct") << ", witness "
            << (cex.witness ? "found" : "absent");
        if (cex.witness) {
            const auto& m = cex.witness->matrix;
            out << " [[" << m[0][0] << "," << m[0][1] << "],[" << m[1][0] << "," << m[1][1]
                << "]]";
        }
    }
    return out.str();
}

}  // namespace bott
