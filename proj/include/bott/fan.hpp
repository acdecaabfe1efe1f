#pragma once

#include <cstdint>
#include <vector>

#include "bott/bigint.hpp"
#include "bott/gbm.hpp"

namespace bott {

/// Ray generators of the fan, as columns: the standard basis vectors
/// e_1^1..e_1^{n_1},...,e_m^1..e_m^{n_m} followed by v_1,...,v_m, where v_j
/// carries -1 on block j, a_{i,j} on block i > j and 0 before block j.
struct RayMatrix {
    int n = 0;  // ambient dimension, sum of fiber_dims
    int m = 0;
    std::vector<std::vector<std::int64_t>> columns;  // n+m columns of length n

    // v_j, 1-based; the basis vector e_j^k sits at column index
    // (n_1 + ... + n_{j-1}) + (k-1).
    const std::vector<std::int64_t>& v(int j) const {
        return columns[static_cast<size_t>(n + j - 1)];
    }
};

RayMatrix ray_matrix(const GeneralizedBottMatrix& gbm);

/// A maximal cone as a sorted list of column indices into the ray matrix.
using Cone = std::vector<int>;

/// All prod_j (n_j+1) maximal cones, obtained by dropping one generator from
/// each primitive collection. Every generator matrix is checked to be
/// unimodular; a failure would be a bug and throws std::logic_error.
std::vector<Cone> maximal_cones(const GeneralizedBottMatrix& gbm);

/// The primitive collections R_j = {e_j^1,...,e_j^{n_j}, v_j} as column
/// index sets, j = 1..m.
std::vector<std::vector<int>> primitive_collections(const GeneralizedBottMatrix& gbm);

/// The unique expression of v_j + e_j^1 + ... + e_j^{n_j} in the generators
/// of the cone containing it.
struct PrimitiveRelation {
    int j = 0;  // 1-based stage of the collection
    // lambdas[i - j - 1] belongs to stage i, entries (lambda^0,...,lambda^{n_i})
    // with index 0 the coefficient of v_i.
    std::vector<std::vector<Int>> lambdas;
    Int degree;  // (n_j + 1) - sum of all lambda entries
};

/// Solves the primitive relation for R_j by an ascending block sweep:
/// eliminate block i = j+1..m in turn, choosing lambda^0 minimal so all
/// entries are nonnegative, then propagate lambda^0 * a_{l,i} into later
/// blocks. Always succeeds on valid input.
PrimitiveRelation primitive_relation(const GeneralizedBottMatrix& gbm, int j);

struct FanoReport {
    bool fano = false;
    std::vector<PrimitiveRelation> relations;
};

/// Batyrev's criterion: Fano iff every primitive collection has positive
/// degree, i.e. the lambda entries of R_j sum to at most n_j for all j.
FanoReport is_fano(const GeneralizedBottMatrix& gbm);

/// Closed form for a normalized two-stage spec: Fano iff sum(a) <= n1.
/// Throws std::invalid_argument on non-normalized input.
bool is_fano_two_stage(const TwoStageSpec& spec);

/// Fano-ness of the variety class: normalizes first, then applies the
/// closed form.
bool is_fano(const TwoStageSpec& spec);

}  // namespace bott
