#include "bott/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "bott/gbm.hpp"

namespace bott {

namespace {

void check_same_vars(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("polynomial arity mismatch");
}

}  // namespace

Polynomial Polynomial::constant(int nvars, Int value) {
    Polynomial p(nvars);
    p.add_term(Exponents(static_cast<size_t>(nvars), 0), value);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars)
        throw std::invalid_argument("variable index out of range");
    Exponents e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(index)] = 1;
    return monomial(nvars, std::move(e), 1);
}

Polynomial Polynomial::monomial(int nvars, Exponents exps, Int coeff) {
    if (static_cast<int>(exps.size()) != nvars)
        throw std::invalid_argument("exponent vector length mismatch");
    Polynomial p(nvars);
    p.add_term(exps, coeff);
    return p;
}

Polynomial Polynomial::linear(std::span<const Int> coeffs) {
    Polynomial p(static_cast<int>(coeffs.size()));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

int Polynomial::total_degree() const {
    int deg = 0;
    for (const auto& [exps, coeff] : terms_) {
        int d = 0;
        for (int e : exps) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

Int Polynomial::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Int(0) : it->second;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
    Polynomial out(nvars_);
    for (const auto& [exps, coeff] : terms_) {
        int d = 0;
        for (int e : exps) d += e;
        if (d == degree) out.add_term(exps, coeff);
    }
    return out;
}

void Polynomial::add_term(const Exponents& exps, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(nvars_);
    for (const auto& [exps, coeff] : terms_) out.terms_.emplace(exps, -coeff);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_same_vars(*this, rhs);
    for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, coeff);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check_same_vars(*this, rhs);
    for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, -coeff);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    check_same_vars(lhs, rhs);
    Polynomial out(lhs.nvars());
    Polynomial::Exponents e(static_cast<size_t>(lhs.nvars()), 0);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [exps, coeff] : terms_) coeff *= scalar;
    return *this;
}

Polynomial pow(const Polynomial& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial out = Polynomial::constant(base.nvars(), 1);
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("substitute: expected one image per variable");
    int target_vars = images.empty() ? 0 : images[0].nvars();
    for (const Polynomial& img : images)
        if (img.nvars() != target_vars)
            throw std::invalid_argument("substitute: images disagree on arity");

    // Power tables keep repeated exponents cheap.
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (size_t i = 0; i < images.size(); ++i)
        powers[i].push_back(Polynomial::constant(target_vars, 1));

    Polynomial out(target_vars);
    for (const auto& [exps, coeff] : terms_) {
        Polynomial term = Polynomial::constant(target_vars, coeff);
        for (size_t i = 0; i < images.size(); ++i) {
            while (static_cast<int>(powers[i].size()) <= exps[i])
                powers[i].push_back(powers[i].back() * images[i]);
            if (exps[i] > 0) term *= powers[i][static_cast<size_t>(exps[i])];
        }
        out += term;
    }
    return out;
}

std::string Polynomial::monomial_str(const Exponents& exps) {
    std::string out;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i + 1);
        if (exps[i] > 1) {
            out += '^';
            out += std::to_string(exps[i]);
        }
    }
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";

    struct Rendered {
        int degree;
        std::string mono;
        Int coeff;
    };
    std::vector<Rendered> parts;
    parts.reserve(terms_.size());
    for (const auto& [exps, coeff] : terms_) {
        int d = 0;
        for (int e : exps) d += e;
        parts.push_back({d, monomial_str(exps), coeff});
    }
    std::sort(parts.begin(), parts.end(), [](const Rendered& a, const Rendered& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.mono < b.mono;
    });

    std::ostringstream out;
    bool first = true;
    for (const Rendered& part : parts) {
        Int mag = part.coeff < 0 ? Int(-part.coeff) : part.coeff;
        if (first) {
            if (part.coeff < 0) out << '-';
            first = false;
        } else {
            out << (part.coeff < 0 ? " - " : " + ");
        }
        if (part.mono.empty()) {
            out << mag;
        } else {
            if (mag != 1) out << mag << '*';
            out << part.mono;
        }
    }
    return out.str();
}

namespace {

// Recursive-descent parser for the str() grammar.
class PolyParser {
 public:
    PolyParser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

    Polynomial parse() {
        Polynomial out(nvars_);
        skip_space();
        bool negative = false;
        if (consume('-'))
            negative = true;
        else
            consume('+');
        out += term(negative);
        for (;;) {
            skip_space();
            if (eof()) break;
            if (consume('+'))
                out += term(false);
            else if (consume('-'))
                out += term(true);
            else
                fail("expected '+' or '-'");
        }
        return out;
    }

 private:
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("polynomial: " + what, 1, static_cast<int>(pos_) + 1);
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_space();
        if (!eof() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Int integer() {
        skip_space();
        size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    int small_integer() {
        Int v = integer();
        if (v > 1000000) fail("index or exponent too large");
        return static_cast<int>(v);
    }

    Polynomial term(bool negative) {
        skip_space();
        if (eof()) fail("expected term");
        Int coeff = 1;
        Polynomial::Exponents exps(static_cast<size_t>(nvars_), 0);
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = integer();
            saw_factor = true;
            if (!consume('*')) {
                if (negative) coeff = -coeff;
                return Polynomial::monomial(nvars_, exps, coeff);
            }
        }
        for (;;) {
            skip_space();
            if (peek() != 'x') {
                if (saw_factor) fail("expected variable");
                fail("expected term");
            }
            ++pos_;
            int index = small_integer();
            if (index < 1 || index > nvars_) fail("variable index out of range");
            int exponent = 1;
            if (consume('^')) exponent = small_integer();
            exps[static_cast<size_t>(index - 1)] += exponent;
            saw_factor = true;
            if (!consume('*')) break;
        }
        if (negative) coeff = -coeff;
        return Polynomial::monomial(nvars_, exps, coeff);
    }

    std::string_view text_;
    int nvars_;
    size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int nvars) {
    return PolyParser(text, nvars).parse();
}

}  // namespace bott
