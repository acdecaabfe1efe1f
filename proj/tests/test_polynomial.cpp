#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bott/gbm.hpp"
#include "bott/polynomial.hpp"

using namespace bott;

namespace {

Polynomial random_poly(std::mt19937& rng, int nvars, int max_terms, int max_exp, int coeff_bound) {
    Polynomial p(nvars);
    const int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int t = 0; t < terms; ++t) {
        Polynomial::Exponents e(static_cast<size_t>(nvars));
        for (auto& v : e) v = static_cast<int>(rng() % static_cast<unsigned>(max_exp + 1));
        const std::int64_t c =
            static_cast<std::int64_t>(rng() % static_cast<unsigned>(2 * coeff_bound + 1)) -
            coeff_bound;
        p.add_term(e, c);
    }
    return p;
}

}  // namespace

TEST_CASE("basic arithmetic") {
    const Polynomial x = Polynomial::variable(2, 0);
    const Polynomial y = Polynomial::variable(2, 1);
    const Polynomial p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK((p - p).is_zero());
    CHECK(pow(x + y, 2) == x * x + Polynomial::constant(2, 2) * x * y + y * y);
    CHECK(p.total_degree() == 2);
    CHECK(p.coefficient({2, 0}) == 1);
    CHECK(p.coefficient({0, 2}) == -1);
    CHECK(p.coefficient({1, 1}) == 0);
}

TEST_CASE("rendering follows the (degree, monomial) format") {
    const Polynomial x = Polynomial::variable(2, 0);
    const Polynomial y = Polynomial::variable(2, 1);

    CHECK((x + Polynomial::constant(2, 3) * y).str() == "x1 + 3*x2");
    const Polynomial mixed =
        Polynomial::constant(2, 2) * x * y * y - x * x * y;
    CHECK(mixed.str() == "2*x1*x2^2 - x1^2*x2");
    CHECK(Polynomial(2).str() == "0");
    CHECK(Polynomial::constant(3, -7).str() == "-7");
    CHECK((Polynomial::constant(2, 1) + Polynomial::constant(2, 2) * x).str() == "1 + 2*x1");
    CHECK((-x).str() == "-x1");
}

TEST_CASE("parse inverts str") {
    CHECK(parse_polynomial("x1 + 3*x2", 2).str() == "x1 + 3*x2");
    CHECK(parse_polynomial("2*x1*x2^2 - x1^2*x2", 2) ==
          Polynomial::constant(2, 2) * Polynomial::variable(2, 0) * Polynomial::variable(2, 1) *
                  Polynomial::variable(2, 1) -
              pow(Polynomial::variable(2, 0), 2) * Polynomial::variable(2, 1));
    CHECK(parse_polynomial("0", 2).is_zero());
    CHECK(parse_polynomial("-x1^2", 1) == -pow(Polynomial::variable(1, 0), 2));

    CHECK_THROWS_AS(parse_polynomial("x3", 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial("2*", 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x1 + + x2", 2), ParseError);

    std::mt19937 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        const int nvars = 1 + static_cast<int>(rng() % 3);
        const Polynomial p = random_poly(rng, nvars, 6, 4, 9);
        CHECK(parse_polynomial(p.str(), nvars) == p);
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(60601);
    for (int trial = 0; trial < 120; ++trial) {
        const int nvars = 1 + static_cast<int>(rng() % 3);
        const Polynomial p = random_poly(rng, nvars, 5, 3, 6);
        const Polynomial q = random_poly(rng, nvars, 5, 3, 6);
        const Polynomial r = random_poly(rng, nvars, 5, 3, 6);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("substitution") {
    const Polynomial x = Polynomial::variable(2, 0);
    const Polynomial y = Polynomial::variable(2, 1);
    // x -> y, y -> x swaps the variables.
    const std::vector<Polynomial> swap{y, x};
    const Polynomial p = x * x + Polynomial::constant(2, 5) * y;
    CHECK(p.substitute(swap) == y * y + Polynomial::constant(2, 5) * x);

    // Substitution is a ring homomorphism on random pairs.
    std::mt19937 rng(171717);
    for (int trial = 0; trial < 60; ++trial) {
        const Polynomial a = random_poly(rng, 2, 4, 3, 5);
        const Polynomial b = random_poly(rng, 2, 4, 3, 5);
        const std::vector<Polynomial> images{random_poly(rng, 2, 3, 2, 3),
                                             random_poly(rng, 2, 3, 2, 3)};
        CHECK((a * b).substitute(images) == a.substitute(images) * b.substitute(images));
        CHECK((a + b).substitute(images) == a.substitute(images) + b.substitute(images));
    }
}

TEST_CASE("homogeneous parts decompose the polynomial") {
    std::mt19937 rng(888);
    const Polynomial p = random_poly(rng, 3, 8, 4, 7);
    Polynomial sum(3);
    for (int d = 0; d <= p.total_degree(); ++d) sum += p.homogeneous_part(d);
    CHECK(sum == p);
}

TEST_CASE("arity mismatches are rejected") {
    CHECK_THROWS_AS(Polynomial::variable(2, 0) + Polynomial::variable(3, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(Polynomial::variable(2, 2), std::invalid_argument);
    const std::vector<Polynomial> too_few{Polynomial::variable(2, 0)};
    CHECK_THROWS_AS(Polynomial::variable(2, 0).substitute(too_few), std::invalid_argument);
}
