#include "bott/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace bott {

CohomologyRing::CohomologyRing(GeneralizedBottMatrix gbm) : gbm_(std::move(gbm)) {
    validate(gbm_);
    const int m = gbm_.stages();
    relations_.reserve(static_cast<size_t>(m));

    // r_1 = x_1^{n_1+1}
    Polynomial::Exponents e(static_cast<size_t>(m), 0);
    e[0] = gbm_.fiber_dims[0] + 1;
    relations_.push_back(Polynomial::monomial(m, e, 1));

    // r_i = x_i * prod_k (x_i - alpha_i^k)
    for (int i = 2; i <= m; ++i) {
        Polynomial r = Polynomial::variable(m, i - 1);
        for (int k = 1; k <= gbm_.fiber_dims[static_cast<size_t>(i - 1)]; ++k)
            r *= Polynomial::variable(m, i - 1) - alpha(i, k);
        relations_.push_back(std::move(r));
    }
}

Polynomial CohomologyRing::alpha(int i, int k) const {
    const int m = gbm_.stages();
    if (i < 2 || i > m) throw std::invalid_argument("alpha: stage out of range");
    Polynomial out(m);
    for (int j = 1; j < i; ++j) {
        const Int coeff = gbm_.coeff(i, j)[static_cast<size_t>(k - 1)];
        if (coeff != 0) {
            Polynomial::Exponents e(static_cast<size_t>(m), 0);
            e[static_cast<size_t>(j - 1)] = 1;
            out.add_term(e, coeff);
        }
    }
    return out;
}

Polynomial CohomologyRing::normal_form(const Polynomial& p, ReduceStrategy strategy) const {
    if (p.nvars() != nvars()) throw std::invalid_argument("normal_form: arity mismatch");
    const int m = nvars();
    Polynomial work = p;
    for (;;) {
        // First reducible term in map order; variable choice per strategy.
        const Polynomial::Exponents* exps = nullptr;
        Int coeff;
        int var = -1;
        for (const auto& [e, c] : work.terms()) {
            if (strategy == ReduceStrategy::LowestIndex) {
                for (int i = 0; i < m; ++i)
                    if (e[static_cast<size_t>(i)] > gbm_.fiber_dims[static_cast<size_t>(i)]) {
                        var = i;
                        break;
                    }
            } else {
                for (int i = m - 1; i >= 0; --i)
                    if (e[static_cast<size_t>(i)] > gbm_.fiber_dims[static_cast<size_t>(i)]) {
                        var = i;
                        break;
                    }
            }
            if (var >= 0) {
                exps = &e;
                coeff = c;
                break;
            }
        }
        if (!exps) return work;

        // Cancel coeff * x^e against coeff * x^{e'} * r_var, where the
        // relation's leading monomial x_var^{n_var+1} has coefficient 1.
        Polynomial::Exponents quot = *exps;
        quot[static_cast<size_t>(var)] -= gbm_.fiber_dims[static_cast<size_t>(var)] + 1;
        work -= Polynomial::monomial(m, std::move(quot), coeff) * relations_[static_cast<size_t>(var)];
    }
}

Polynomial CohomologyRing::multiply(const Polynomial& p, const Polynomial& q) const {
    return normal_form(p * q);
}

Polynomial CohomologyRing::c1() const {
    const int m = gbm_.stages();
    Polynomial out(m);
    for (int i = 1; i <= m; ++i) {
        Polynomial::Exponents e(static_cast<size_t>(m), 0);
        e[static_cast<size_t>(i - 1)] = 1;
        out.add_term(e, gbm_.fiber_dims[static_cast<size_t>(i - 1)] + 1);
    }
    for (int i = 2; i <= m; ++i)
        for (int k = 1; k <= gbm_.fiber_dims[static_cast<size_t>(i - 1)]; ++k)
            out -= alpha(i, k);
    return out;
}

Polynomial CohomologyRing::total_chern() const {
    const int m = gbm_.stages();
    const Polynomial one = Polynomial::constant(m, 1);
    Polynomial total = normal_form(pow(one + Polynomial::variable(m, 0), gbm_.fiber_dims[0] + 1));
    for (int i = 2; i <= m; ++i) {
        const Polynomial xi = Polynomial::variable(m, i - 1);
        total = multiply(total, one + xi);
        for (int k = 1; k <= gbm_.fiber_dims[static_cast<size_t>(i - 1)]; ++k)
            total = multiply(total, one + xi - alpha(i, k));
    }
    return total;
}

std::vector<Polynomial::Exponents> CohomologyRing::additive_basis(int cohomological_degree) const {
    const int n = gbm_.dimension();
    if (cohomological_degree < 0 || cohomological_degree > 2 * n)
        throw std::invalid_argument("additive_basis: degree out of range");
    if (cohomological_degree % 2 != 0)
        throw std::invalid_argument("additive_basis: cohomological degree must be even");
    const int target = cohomological_degree / 2;
    const int m = gbm_.stages();

    std::vector<Polynomial::Exponents> basis;
    Polynomial::Exponents e(static_cast<size_t>(m), 0);
    // Enumerate reduced monomials in ascending lexicographic order.
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == m) {
            if (remaining == 0) basis.push_back(e);
            return;
        }
        const int cap = std::min(remaining, gbm_.fiber_dims[static_cast<size_t>(var)]);
        for (int d = 0; d <= cap; ++d) {
            e[static_cast<size_t>(var)] = d;
            self(self, var + 1, remaining - d);
        }
        e[static_cast<size_t>(var)] = 0;
    };
    rec(rec, 0, target);
    return basis;
}

long long CohomologyRing::basis_size() const {
    long long total = 1;
    for (int ni : gbm_.fiber_dims) total *= ni + 1;
    return total;
}

std::vector<std::pair<std::int64_t, std::int64_t>> nilpotent_degree2(const TwoStageSpec& spec,
                                                                     int power, int bound) {
    if (power < 1) throw std::invalid_argument("nilpotent_degree2: power must be >= 1");
    if (bound < 1) throw std::invalid_argument("nilpotent_degree2: bound must be >= 1");
    const CohomologyRing ring(to_matrix(spec));

    std::vector<std::pair<std::int64_t, std::int64_t>> classes;
    for (std::int64_t p = -bound; p <= bound; ++p)
        for (std::int64_t q = -bound; q <= bound; ++q) {
            if (p == 0 && q == 0) continue;
            const std::array<Int, 2> coeffs{Int(p), Int(q)};
            const Polynomial y = Polynomial::linear(coeffs);
            Polynomial acc = Polynomial::constant(2, 1);
            for (int t = 0; t < power; ++t) acc = ring.multiply(acc, y);
            if (acc.is_zero()) classes.emplace_back(p, q);
        }
    return classes;
}

}  // namespace bott
