#include "bott/gbm.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bott {

int GeneralizedBottMatrix::dimension() const {
    return std::accumulate(fiber_dims.begin(), fiber_dims.end(), 0);
}

void validate(const GeneralizedBottMatrix& gbm) {
    const int m = gbm.stages();
    if (m < 1) throw std::invalid_argument("tower must have at least one stage");
    for (int i = 0; i < m; ++i) {
        if (gbm.fiber_dims[static_cast<size_t>(i)] < 1) {
            std::ostringstream msg;
            msg << "fiber dimension n_" << (i + 1) << " must be positive";
            throw std::invalid_argument(msg.str());
        }
    }
    if (static_cast<int>(gbm.coeffs.size()) != m)
        throw std::invalid_argument("coefficient table must have one row per stage");
    for (int i = 1; i <= m; ++i) {
        const auto& row = gbm.coeffs[static_cast<size_t>(i - 1)];
        if (static_cast<int>(row.size()) != i - 1) {
            std::ostringstream msg;
            msg << "stage " << i << " must carry exactly " << (i - 1)
                << " coefficient vectors, got " << row.size();
            throw std::invalid_argument(msg.str());
        }
        for (int j = 1; j < i; ++j) {
            const auto& vec = row[static_cast<size_t>(j - 1)];
            const int ni = gbm.fiber_dims[static_cast<size_t>(i - 1)];
            if (static_cast<int>(vec.size()) != ni) {
                std::ostringstream msg;
                msg << "dimension mismatch in block (" << i << "," << j << "): expected length "
                    << ni << ", got " << vec.size();
                throw std::invalid_argument(msg.str());
            }
        }
    }
}

GeneralizedBottMatrix to_matrix(const TwoStageSpec& spec) {
    if (spec.n1 < 1) throw std::invalid_argument("n1 must be positive");
    if (spec.a.empty()) throw std::invalid_argument("two-stage spec needs at least one exponent");
    GeneralizedBottMatrix gbm;
    gbm.fiber_dims = {spec.n1, spec.n2()};
    gbm.coeffs = {{}, {spec.a}};
    return gbm;
}

bool is_two_stage(const GeneralizedBottMatrix& gbm) { return gbm.stages() == 2; }

TwoStageSpec as_two_stage(const GeneralizedBottMatrix& gbm) {
    if (!is_two_stage(gbm))
        throw std::invalid_argument("expected a two-stage tower");
    return TwoStageSpec{gbm.fiber_dims[0], gbm.coeff(2, 1)};
}

std::int64_t normalization_shift(const TwoStageSpec& spec) {
    std::int64_t shift = 0;
    for (std::int64_t ak : spec.a) shift = std::min(shift, ak);
    return shift;
}

bool is_normalized(const TwoStageSpec& spec) { return normalization_shift(spec) == 0; }

TwoStageSpec normalize(const TwoStageSpec& spec) {
    const std::int64_t shift = normalization_shift(spec);
    if (shift == 0) return spec;
    // Shift the full multiset {0, a_1,...,a_{n_2}} by -shift and drop one of
    // the zeros produced at the old minimum.
    std::vector<std::int64_t> shifted;
    shifted.reserve(spec.a.size() + 1);
    shifted.push_back(-shift);
    for (std::int64_t ak : spec.a) shifted.push_back(ak - shift);
    std::sort(shifted.begin(), shifted.end());
    shifted.erase(shifted.begin());  // the minimum is the freshly created 0
    return TwoStageSpec{spec.n1, std::move(shifted)};
}

CanonicalForm canonical_form(const TwoStageSpec& spec) {
    TwoStageSpec norm = normalize(spec);
    std::sort(norm.a.begin(), norm.a.end());
    CanonicalForm form;
    form.sorted_a = norm.a;
    form.is_product = std::all_of(norm.a.begin(), norm.a.end(),
                                  [](std::int64_t ak) { return ak == 0; });
    if (form.is_product) {
        const int lo = std::min(norm.n1, norm.n2());
        const int hi = std::max(norm.n1, norm.n2());
        form.type_pair = {lo, hi};
        form.sorted_a.assign(static_cast<size_t>(hi), 0);
    } else {
        form.type_pair = {norm.n1, norm.n2()};
    }
    return form;
}

Int elementary_symmetric(const std::vector<std::int64_t>& values, int r) {
    const int n = static_cast<int>(values.size());
    if (r < 1 || r > n) throw std::out_of_range("elementary_symmetric: r out of range");
    // Coefficients of prod (1 + v_k t), built one factor at a time.
    std::vector<Int> coeffs(static_cast<size_t>(r) + 1, 0);
    coeffs[0] = 1;
    for (std::int64_t v : values)
        for (int d = std::min(r, n); d >= 1; --d)
            coeffs[static_cast<size_t>(d)] += coeffs[static_cast<size_t>(d - 1)] * v;
    return coeffs[static_cast<size_t>(r)];
}

namespace {

class SpecParser {
 public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    TwoStageSpec parse() {
        expect('B');
        expect('(');
        TwoStageSpec spec;
        spec.n1 = checked_int(integer(), "n1");
        if (spec.n1 < 1) fail("n1 must be positive");
        expect(';');
        spec.a.push_back(integer());
        while (consume(',')) spec.a.push_back(integer());
        expect(')');
        skip_space();
        if (!eof()) fail("trailing input after spec");
        return spec;
    }

 private:
    [[noreturn]] void fail(const std::string& what) {
        int line = 1, column = 1;
        for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("spec: " + what, line, column);
    }

    bool eof() const { return pos_ >= text_.size(); }

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

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    int checked_int(std::int64_t v, const char* what) {
        if (v > std::numeric_limits<int>::max()) fail(std::string(what) + " too large");
        return static_cast<int>(v);
    }

    std::int64_t integer() {
        skip_space();
        bool negative = consume('-');
        skip_space();
        size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        std::int64_t value = 0;
        for (size_t i = start; i < pos_; ++i) {
            if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
                fail("integer out of range");
            value = value * 10 + (text_[i] - '0');
        }
        return negative ? -value : value;
    }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

TwoStageSpec parse_two_stage(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const TwoStageSpec& spec) {
    std::ostringstream out;
    out << "B(" << spec.n1 << ';';
    for (size_t k = 0; k < spec.a.size(); ++k) {
        if (k) out << ',';
        out << spec.a[k];
    }
    out << ')';
    return out.str();
}

GeneralizedBottMatrix gbm_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        // Recover line/column from the byte offset for uniform reporting.
        int line = 1, column = 1;
        for (size_t i = 0; i < err.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(std::string("json: ") + err.what(), line, column);
    }

    if (!doc.is_object() || !doc.contains("fiber_dims") || !doc["fiber_dims"].is_array())
        throw std::invalid_argument("json: expected object with \"fiber_dims\" array");

    GeneralizedBottMatrix gbm;
    for (const auto& nd : doc["fiber_dims"]) {
        if (!nd.is_number_integer()) throw std::invalid_argument("json: fiber_dims must be integers");
        gbm.fiber_dims.push_back(nd.get<int>());
    }
    const int m = gbm.stages();
    gbm.coeffs.resize(static_cast<size_t>(m));
    for (int i = 2; i <= m; ++i)
        gbm.coeffs[static_cast<size_t>(i - 1)].resize(static_cast<size_t>(i - 1));

    std::set<std::pair<int, int>> seen;
    if (doc.contains("coeffs")) {
        if (!doc["coeffs"].is_array()) throw std::invalid_argument("json: coeffs must be an array");
        for (const auto& entry : doc["coeffs"]) {
            if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
                !entry.contains("vec"))
                throw std::invalid_argument("json: each coeff needs i, j and vec");
            const int i = entry["i"].get<int>();
            const int j = entry["j"].get<int>();
            if (j < 1 || i <= j || i > m) {
                std::ostringstream msg;
                msg << "json: coefficient block (" << i << "," << j
                    << ") out of range for " << m << " stages";
                throw std::invalid_argument(msg.str());
            }
            if (!seen.insert({i, j}).second) {
                std::ostringstream msg;
                msg << "json: duplicate coefficient block (" << i << "," << j << ")";
                throw std::invalid_argument(msg.str());
            }
            std::vector<std::int64_t> vec;
            for (const auto& v : entry["vec"]) vec.push_back(v.get<std::int64_t>());
            gbm.coeffs[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = std::move(vec);
        }
    }
    for (int i = 2; i <= m; ++i)
        for (int j = 1; j < i; ++j)
            if (!seen.count({i, j})) {
                std::ostringstream msg;
                msg << "json: missing coefficient block (" << i << "," << j << ")";
                throw std::invalid_argument(msg.str());
            }
    validate(gbm);
    return gbm;
}

std::string gbm_to_json(const GeneralizedBottMatrix& gbm) {
    nlohmann::json doc;
    doc["fiber_dims"] = gbm.fiber_dims;
    doc["coeffs"] = nlohmann::json::array();
    for (int i = 2; i <= gbm.stages(); ++i)
        for (int j = 1; j < i; ++j)
            doc["coeffs"].push_back({{"i", i}, {"j", j}, {"vec", gbm.coeff(i, j)}});
    return doc.dump();
}

}  // namespace bott
