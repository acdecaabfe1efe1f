#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "bott/gbm.hpp"

namespace bott {

/// A degree-2 substitution candidate for a graded ring isomorphism between
/// two-stage towers: row k holds the image of the k-th source generator in
/// the target basis, so phi(x1) = m[0][0]*y1 + m[0][1]*y2 and
/// phi(x2) = m[1][0]*y1 + m[1][1]*y2.
struct Witness {
    std::array<std::array<std::int64_t, 2>, 2> matrix{{{1, 0}, {0, 1}}};
    bool c1_preserving = false;

    std::int64_t det() const {
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
    }
    friend bool operator==(const Witness&, const Witness&) = default;
};

enum class Answer { Yes, No, Unknown };

struct Verdict {
    Answer answer = Answer::Unknown;
    std::optional<Witness> witness;
    std::string certificate;  // for "no": the differing invariant; may annotate "yes"
};

const char* to_string(Answer answer);

/// Serializes {"answer":"yes|no|unknown","witness":[[..]]|null,"certificate":"..."}.
std::string verdict_to_json(const Verdict& verdict);

/// True iff the matrix is unimodular, both source relations map into the
/// target ideal, and (when the witness is flagged c1-preserving) the image
/// of the source c1 equals the target c1 exactly.
bool verify_witness(const Witness& witness, const TwoStageSpec& source,
                    const TwoStageSpec& target);

/// Sum |a| + sum |a~| + 2, the search box used by the rigidity sweep.
std::int64_t default_search_bound(const TwoStageSpec& source, const TwoStageSpec& target);

/// Exhaustive witness search over all unimodular 2x2 matrices with entries
/// in [-bound, bound], scanned in row-major lexicographic order; returns the
/// first valid witness. Requires equal total dimension and equal fiber
/// dimension multisets, else returns nothing immediately. Absence of a
/// witness beyond the bound is not certified.
std::optional<Witness> ring_iso_search(const TwoStageSpec& source, const TwoStageSpec& target,
                                       std::int64_t bound, bool require_c1);

/// Structured decision for c1-preserving ring isomorphism between Fano
/// specs (throws std::invalid_argument if either input is not Fano):
/// yes iff the canonical forms agree, with a verified witness; no with the
/// differing invariant (type mismatch, or the largest k with
/// e_k(a) != e_k(a~)) otherwise.
Verdict decide_c1_iso(const TwoStageSpec& source, const TwoStageSpec& target);

/// Variety isomorphism = equality of canonical forms. Exact for Fano
/// inputs. For non-Fano inputs, equality still suffices ("yes" with a
/// note) but inequality is reported Unknown, never No.
Verdict decide_variety_iso(const TwoStageSpec& source, const TwoStageSpec& target);

/// Returns b iff prod_k (1 + a_k x) = (1 + b x)^{n2+1} mod x^{n1+1}; b is
/// solved from the linear coefficient sum(a) = (n2+1) b and then every
/// coefficient up to degree n1 is verified. Requires a normalized spec.
std::optional<std::int64_t> product_cohomology_test(const TwoStageSpec& spec);

/// Closed-form ring-isomorphism verdict for type (n1, 1): parity of the
/// exponents when n1 == 1, equality when n1 > 1. Inputs must be >= 0.
bool hirzebruch_class(std::int64_t a, std::int64_t a_tilde, int n1);

}  // namespace bott
