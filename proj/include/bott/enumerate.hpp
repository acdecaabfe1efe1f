#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bott/gbm.hpp"
#include "bott/iso.hpp"

namespace bott {

struct ClassificationEntry {
    CanonicalForm form;
    bool fano = true;
    std::string c1;  // rendered first Chern class of the canonical spec
};

struct ClassificationTable {
    int dimension = 0;
    std::vector<ClassificationEntry> entries;  // pairwise distinct canonical forms

    int count() const { return static_cast<int>(entries.size()); }
};

/// All two-stage Fano towers of the given complex dimension up to canonical
/// form: for every type (n1, n2) with n1+n2 = d, every weakly increasing
/// nonnegative exponent vector with sum <= n1, deduplicated (products are
/// counted once across (n1,n2) and (n2,n1)). Entries are sorted by type,
/// then exponents. Requires d >= 2.
ClassificationTable enumerate_fano(int dimension);

enum class EmitFormat { Plain, Json, Csv };

/// Deterministic rendering of a table. Plain emits one grammar line per
/// entry; Csv has columns n1,n2,exponents,is_product,c1; Json mirrors the
/// table fields.
std::string classification_emit(const ClassificationTable& table, EmitFormat format);

/// Oracle bound selection for the rigidity sweep.
struct BoundPolicy {
    static BoundPolicy automatic() { return BoundPolicy{}; }
    static BoundPolicy fixed(std::int64_t bound) { return BoundPolicy{bound}; }

    std::optional<std::int64_t> fixed_bound;

    std::int64_t bound_for(const TwoStageSpec& lhs, const TwoStageSpec& rhs) const {
        return fixed_bound ? *fixed_bound : default_search_bound(lhs, rhs);
    }
};

struct RigidityCounterexample {
    TwoStageSpec left;
    TwoStageSpec right;
    bool canonical_equal = false;
    std::optional<Witness> witness;  // the c1-preserving witness found, if any
};

struct RigidityReport {
    int dimension = 0;
    long long pairs_checked = 0;
    long long agreements = 0;
    std::vector<RigidityCounterexample> counterexamples;  // expected empty
    std::int64_t oracle_bound_used = 0;                   // largest bound used
    double elapsed_seconds = 0.0;
};

enum class Execution { Serial, Parallel };

/// For every unordered pair (self-pairs included) of enumerated Fano specs
/// of each dimension d <= max_dimension, checks that the c1-preserving
/// witness search succeeds exactly when the canonical forms are equal.
/// Counterexamples are reported, not thrown: a nonempty list would falsify
/// the rigidity statement or the configured bound. The parallel execution
/// sweeps pairs with OpenMP and aggregates in pair order, so both modes
/// produce identical reports (up to elapsed time).
std::vector<RigidityReport> verify_rigidity(int max_dimension, BoundPolicy policy,
                                            Execution execution = Execution::Parallel);

std::string report_to_text(const RigidityReport& report);

}  // namespace bott
