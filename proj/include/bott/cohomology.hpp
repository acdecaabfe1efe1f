#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bott/gbm.hpp"
#include "bott/polynomial.hpp"

namespace bott {

/// Variable picked when a term is reducible in several variables. The two
/// strategies must agree on every input (the relation leading monomials
/// x_i^{n_i+1} are pairwise coprime, so reduction is confluent); tests
/// exercise both.
enum class ReduceStrategy { LowestIndex, HighestIndex };

/// H^*(B;Z) = Z[x_1..x_m] / <x_1^{n_1+1}, x_i prod_k (x_i - alpha_i^k)>
/// with alpha_i^k = sum_{j<i} a_{i,j}^k x_j. Generators sit in degree 2;
/// the reduced monomials x^e with e_i <= n_i form an additive basis.
class CohomologyRing {
 public:
    explicit CohomologyRing(GeneralizedBottMatrix gbm);

    const GeneralizedBottMatrix& matrix() const { return gbm_; }
    int nvars() const { return gbm_.stages(); }

    /// The m expanded relation polynomials r_1 = x_1^{n_1+1},
    /// r_i = x_i * prod_k (x_i - alpha_i^k).
    const std::vector<Polynomial>& relations() const { return relations_; }

    /// alpha_i^k as a polynomial; i is 1-based and >= 2, k is 1-based.
    Polynomial alpha(int i, int k) const;

    /// The unique representative supported on reduced monomials
    /// (all exponents e_i <= n_i).
    Polynomial normal_form(const Polynomial& p,
                           ReduceStrategy strategy = ReduceStrategy::LowestIndex) const;

    /// normal_form(p * q).
    Polynomial multiply(const Polynomial& p, const Polynomial& q) const;

    /// First Chern class: sum_i (n_i+1) x_i - sum_{i>=2} sum_k alpha_i^k.
    Polynomial c1() const;

    /// Normal form of (1+x_1)^{n_1+1} prod_{i>=2} [(1+x_i) prod_k (1+x_i-alpha_i^k)].
    Polynomial total_chern() const;

    /// Reduced monomials of the given even cohomological degree (= twice the
    /// exponent sum), in increasing exponent order. Throws on odd or
    /// out-of-range degree.
    std::vector<Polynomial::Exponents> additive_basis(int cohomological_degree) const;

    /// prod (n_i + 1), the rank of the full cohomology group.
    long long basis_size() const;

 private:
    GeneralizedBottMatrix gbm_;
    std::vector<Polynomial> relations_;
};

/// All nonzero y = p*x1 + q*x2 with |p|,|q| <= bound and y^power = 0 in the
/// two-stage ring, scanned in row-major (p, q) order.
std::vector<std::pair<std::int64_t, std::int64_t>> nilpotent_degree2(const TwoStageSpec& spec,
                                                                     int power, int bound);

}  // namespace bott
