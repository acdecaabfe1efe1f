#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bott/bigint.hpp"

namespace bott {

/// Integer data of an m-stage generalized Bott manifold: fiber dimensions
/// (n_1,...,n_m) and, for every 1 <= j < i <= m, the exponent vector
/// a_{i,j} = (a_{i,j}^1,...,a_{i,j}^{n_i}) of the line bundles twisting
/// stage i over stage j.
struct GeneralizedBottMatrix {
    std::vector<int> fiber_dims;
    // coeffs[i-1][j-1] holds a_{i,j}; coeffs[0] is always empty.
    std::vector<std::vector<std::vector<std::int64_t>>> coeffs;

    int stages() const { return static_cast<int>(fiber_dims.size()); }
    int dimension() const;

    // a_{i,j}, 1-based, j < i. Bounds are the caller's responsibility.
    const std::vector<std::int64_t>& coeff(int i, int j) const {
        return coeffs[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    }
};

/// Throws std::invalid_argument naming the offending block if the matrix
/// data is inconsistent (empty tower, nonpositive fiber dimension, missing
/// or mis-sized coefficient vector).
void validate(const GeneralizedBottMatrix& gbm);

/// Two-stage tower P(C + gamma^{a_1} + ... + gamma^{a_{n_2}}) over CP^{n_1}.
struct TwoStageSpec {
    int n1 = 1;
    std::vector<std::int64_t> a;  // length n2 >= 1

    int n2() const { return static_cast<int>(a.size()); }
    int dimension() const { return n1 + n2(); }

    friend bool operator==(const TwoStageSpec&, const TwoStageSpec&) = default;
};

/// The type-(n1,n2) generalized Bott matrix of a two-stage spec.
GeneralizedBottMatrix to_matrix(const TwoStageSpec& spec);

/// Shifts the full exponent multiset {0, a_1,...,a_{n_2}} so its minimum is
/// 0 and removes one 0, yielding a spec of the same variety-isomorphism
/// class with all exponents nonnegative. Identity on already-normalized
/// input; otherwise the result is sorted ascending.
TwoStageSpec normalize(const TwoStageSpec& spec);

/// True iff all exponents are nonnegative (the multiset {0, a} has min 0).
bool is_normalized(const TwoStageSpec& spec);

/// The normalization shift: min(0, a_1,...,a_{n_2}) <= 0. The witness of
/// the ring isomorphism between spec and normalize(spec) is the shear
/// x2 -> x2 - shift*x1.
std::int64_t normalization_shift(const TwoStageSpec& spec);

struct CanonicalForm {
    std::pair<int, int> type_pair;
    std::vector<std::int64_t> sorted_a;  // weakly increasing, nonnegative
    bool is_product = false;             // true iff sorted_a is all zeros

    TwoStageSpec to_spec() const { return TwoStageSpec{type_pair.first, sorted_a}; }

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Normalize, sort exponents ascending; a product CP^{n1} x CP^{n2} is
/// reported with n1 <= n2 (the only type ambiguity, products being
/// type-symmetric).
CanonicalForm canonical_form(const TwoStageSpec& spec);

/// e_r(values), the sum over r-subsets of products. 1 <= r <= values.size(),
/// otherwise std::out_of_range.
Int elementary_symmetric(const std::vector<std::int64_t>& values, int r);

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what), line(line), column(column) {}
    int line;
    int column;
};

/// Parses the two-stage grammar B(<n1>;<a1>,...,<an2>), e.g. "B(2;1,1)".
/// Whitespace between tokens is allowed. Throws ParseError.
TwoStageSpec parse_two_stage(std::string_view text);

/// Renders a spec in the grammar, e.g. "B(2;1,1)". Round-trips with
/// parse_two_stage.
std::string to_string(const TwoStageSpec& spec);

/// JSON I/O for general towers:
///   {"fiber_dims":[n1,...,nm],"coeffs":[{"i":i,"j":j,"vec":[...]},...]}
/// Every pair 1 <= j < i <= m must appear exactly once. Throws ParseError
/// on malformed JSON and std::invalid_argument on schema violations.
GeneralizedBottMatrix gbm_from_json(const std::string& text);
std::string gbm_to_json(const GeneralizedBottMatrix& gbm);

/// The two-stage view of a type-(n1,n2) matrix, if m == 2.
bool is_two_stage(const GeneralizedBottMatrix& gbm);
TwoStageSpec as_two_stage(const GeneralizedBottMatrix& gbm);

}  // namespace bott
