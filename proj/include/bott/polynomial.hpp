#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bott/bigint.hpp"

namespace bott {

/// Multivariate polynomial with arbitrary-precision integer coefficients.
/// Terms map exponent vectors (fixed length = nvars) to nonzero
/// coefficients; zero coefficients are never stored.
class Polynomial {
 public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Int>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, Int value);
    /// x_{index+1}; index is 0-based.
    static Polynomial variable(int nvars, int index);
    static Polynomial monomial(int nvars, Exponents exps, Int coeff);
    /// c1*x1 + ... + cn*xn.
    static Polynomial linear(std::span<const Int> coeffs);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // 0 for the zero polynomial
    const TermMap& terms() const { return terms_; }

    Int coefficient(const Exponents& exps) const;
    Polynomial homogeneous_part(int degree) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }
    Polynomial& operator*=(const Int& scalar);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Substitutes images[i] for x_{i+1}; images.size() must equal nvars()
    /// and all images must share one variable count.
    Polynomial substitute(std::span<const Polynomial> images) const;

    /// Terms ordered by (total degree, monomial text), e.g. "x1 + 3*x2",
    /// "2*x1*x2^2 - x1^2*x2". The zero polynomial prints "0".
    std::string str() const;

    static std::string monomial_str(const Exponents& exps);

    void add_term(const Exponents& exps, const Int& coeff);

 private:
    int nvars_ = 0;
    TermMap terms_;
};

Polynomial pow(const Polynomial& base, int exponent);

/// Parses the output of Polynomial::str (integer coefficients, x<k> factors,
/// ^ powers, * separators, + and - term joins). Throws ParseError.
Polynomial parse_polynomial(std::string_view text, int nvars);

}  // namespace bott
