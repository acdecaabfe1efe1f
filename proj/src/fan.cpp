#include "bott/fan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bott {

namespace {

std::vector<int> block_offsets(const GeneralizedBottMatrix& gbm) {
    std::vector<int> offsets(gbm.fiber_dims.size() + 1, 0);
    for (size_t i = 0; i < gbm.fiber_dims.size(); ++i)
        offsets[i + 1] = offsets[i] + gbm.fiber_dims[i];
    return offsets;
}

// Bareiss fraction-free elimination; exact for integer matrices.
Int determinant(std::vector<std::vector<Int>> mat) {
    const size_t n = mat.size();
    Int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (mat[k][k] == 0) {
            size_t pivot = k + 1;
            while (pivot < n && mat[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(mat[k], mat[pivot]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev;
        prev = mat[k][k];
    }
    return n == 0 ? sign : sign * mat[n - 1][n - 1];
}

}  // namespace

RayMatrix ray_matrix(const GeneralizedBottMatrix& gbm) {
    validate(gbm);
    const int m = gbm.stages();
    const int n = gbm.dimension();
    const auto offsets = block_offsets(gbm);

    RayMatrix rays;
    rays.n = n;
    rays.m = m;
    rays.columns.assign(static_cast<size_t>(n + m), std::vector<std::int64_t>(static_cast<size_t>(n), 0));
    for (int c = 0; c < n; ++c) rays.columns[static_cast<size_t>(c)][static_cast<size_t>(c)] = 1;
    for (int j = 1; j <= m; ++j) {
        auto& vj = rays.columns[static_cast<size_t>(n + j - 1)];
        for (int k = 0; k < gbm.fiber_dims[static_cast<size_t>(j - 1)]; ++k)
            vj[static_cast<size_t>(offsets[static_cast<size_t>(j - 1)] + k)] = -1;
        for (int i = j + 1; i <= m; ++i) {
            const auto& aij = gbm.coeff(i, j);
            for (int k = 0; k < gbm.fiber_dims[static_cast<size_t>(i - 1)]; ++k)
                vj[static_cast<size_t>(offsets[static_cast<size_t>(i - 1)] + k)] = aij[static_cast<size_t>(k)];
        }
    }
    return rays;
}

std::vector<std::vector<int>> primitive_collections(const GeneralizedBottMatrix& gbm) {
    validate(gbm);
    const int m = gbm.stages();
    const int n = gbm.dimension();
    const auto offsets = block_offsets(gbm);
    std::vector<std::vector<int>> collections;
    collections.reserve(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j) {
        std::vector<int> rj;
        for (int k = 0; k < gbm.fiber_dims[static_cast<size_t>(j - 1)]; ++k)
            rj.push_back(offsets[static_cast<size_t>(j - 1)] + k);
        rj.push_back(n + j - 1);
        collections.push_back(std::move(rj));
    }
    return collections;
}

std::vector<Cone> maximal_cones(const GeneralizedBottMatrix& gbm) {
    const RayMatrix rays = ray_matrix(gbm);
    const auto collections = primitive_collections(gbm);
    const int m = gbm.stages();

    // Mixed-radix enumeration of one dropped generator per collection.
    std::vector<int> drop(static_cast<size_t>(m), 0);
    std::vector<Cone> cones;
    for (;;) {
        Cone cone;
        cone.reserve(static_cast<size_t>(rays.n));
        for (int j = 0; j < m; ++j)
            for (size_t t = 0; t < collections[static_cast<size_t>(j)].size(); ++t)
                if (static_cast<int>(t) != drop[static_cast<size_t>(j)])
                    cone.push_back(collections[static_cast<size_t>(j)][t]);
        std::sort(cone.begin(), cone.end());

        std::vector<std::vector<Int>> gens(static_cast<size_t>(rays.n),
                                           std::vector<Int>(static_cast<size_t>(rays.n)));
        for (size_t c = 0; c < cone.size(); ++c)
            for (int r = 0; r < rays.n; ++r)
                gens[static_cast<size_t>(r)][c] =
                    rays.columns[static_cast<size_t>(cone[c])][static_cast<size_t>(r)];
        const Int det = determinant(std::move(gens));
        if (det != 1 && det != -1) {
            std::ostringstream msg;
            msg << "maximal cone is not unimodular (det = " << det << ")";
            throw std::logic_error(msg.str());
        }
        cones.push_back(std::move(cone));

        int j = m - 1;
        while (j >= 0) {
            if (++drop[static_cast<size_t>(j)] <=
                gbm.fiber_dims[static_cast<size_t>(j)]) break;
            drop[static_cast<size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return cones;
}

PrimitiveRelation primitive_relation(const GeneralizedBottMatrix& gbm, int j) {
    validate(gbm);
    const int m = gbm.stages();
    if (j < 1 || j > m) throw std::invalid_argument("primitive_relation: stage out of range");
    const auto offsets = block_offsets(gbm);

    // w = v_j + e_j^1 + ... + e_j^{n_j}: zero through block j, a_{i,j} beyond.
    std::vector<Int> w(static_cast<size_t>(gbm.dimension()), 0);
    for (int i = j + 1; i <= m; ++i) {
        const auto& aij = gbm.coeff(i, j);
        for (int k = 0; k < gbm.fiber_dims[static_cast<size_t>(i - 1)]; ++k)
            w[static_cast<size_t>(offsets[static_cast<size_t>(i - 1)] + k)] = aij[static_cast<size_t>(k)];
    }

    PrimitiveRelation rel;
    rel.j = j;
    Int lambda_sum = 0;
    for (int i = j + 1; i <= m; ++i) {
        const int ni = gbm.fiber_dims[static_cast<size_t>(i - 1)];
        const int base = offsets[static_cast<size_t>(i - 1)];
        Int min_entry = w[static_cast<size_t>(base)];
        for (int k = 1; k < ni; ++k)
            min_entry = std::min(min_entry, w[static_cast<size_t>(base + k)]);
        Int lambda0 = min_entry < 0 ? Int(-min_entry) : Int(0);

        std::vector<Int> lam(static_cast<size_t>(ni) + 1);
        lam[0] = lambda0;
        lambda_sum += lambda0;
        for (int k = 0; k < ni; ++k) {
            lam[static_cast<size_t>(k) + 1] = w[static_cast<size_t>(base + k)] + lambda0;
            lambda_sum += lam[static_cast<size_t>(k) + 1];
        }
        rel.lambdas.push_back(std::move(lam));

        // lambda0 copies of v_i consume -lambda0 per block-i slot and feed
        // lambda0 * a_{l,i} into every later block.
        if (lambda0 != 0)
            for (int l = i + 1; l <= m; ++l) {
                const auto& ali = gbm.coeff(l, i);
                const int lbase = offsets[static_cast<size_t>(l - 1)];
                for (int k = 0; k < gbm.fiber_dims[static_cast<size_t>(l - 1)]; ++k)
                    w[static_cast<size_t>(lbase + k)] -= lambda0 * ali[static_cast<size_t>(k)];
            }
    }
    rel.degree = Int(gbm.fiber_dims[static_cast<size_t>(j - 1)] + 1) - lambda_sum;
    return rel;
}

FanoReport is_fano(const GeneralizedBottMatrix& gbm) {
    FanoReport report;
    report.fano = true;
    for (int j = 1; j <= gbm.stages(); ++j) {
        report.relations.push_back(primitive_relation(gbm, j));
        if (report.relations.back().degree <= 0) report.fano = false;
    }
    return report;
}

bool is_fano_two_stage(const TwoStageSpec& spec) {
    if (!is_normalized(spec))
        throw std::invalid_argument("is_fano_two_stage requires a normalized spec");
    Int sum = 0;
    for (std::int64_t ak : spec.a) sum += ak;
    return sum <= spec.n1;
}

bool is_fano(const TwoStageSpec& spec) { return is_fano_two_stage(normalize(spec)); }

}  // namespace bott
