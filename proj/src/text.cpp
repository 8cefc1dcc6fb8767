#include "apolar/text.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace apolar {

std::string VariableNames::name(std::size_t var) const {
    if (var < num_x) return std::string(dual ? "X" : "x") + std::to_string(var + 1);
    if (var < num_x + num_u) return std::string(dual ? "U" : "u") + std::to_string(var - num_x + 1);
    throw std::out_of_range("VariableNames: variable index out of range");
}

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::invalid_argument(message + " at offset " + std::to_string(offset)), offset_(offset), detail_(message) {}

std::string format_rational(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_monomial(const ExponentVector& m, const VariableNames& names) {
    if (m.size() != names.total()) throw std::invalid_argument("format_monomial: variable count mismatch");
    std::string out;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        if (!out.empty()) out += '*';
        out += names.name(k);
        if (m[k] > 1) out += '^' + std::to_string(m[k]);
    }
    return out.empty() ? "1" : out;
}

std::string format_polynomial(const GradedPolynomial& f, const VariableNames& names) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const bool constant = m.degree() == 0;
        if (constant) {
            out += format_rational(mag);
        } else {
            if (mag != 1) out += format_rational(mag) + '*';
            out += format_monomial(m, names);
        }
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t num_x, std::size_t num_u)
        : text_(text), num_x_(num_x), num_u_(num_u) {}

    GradedPolynomial polynomial() {
        if (num_x_ + num_u_ == 0) throw ParseError("no variables declared", 0);
        std::optional<GradedPolynomial> result;
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        while (true) {
            skip_ws();
            const std::size_t term_start = pos_;
            auto [coeff, mono] = term();
            if (negative) coeff = -coeff;
            if (!result) result.emplace(mono.size(), mono.degree());
            if (mono.degree() != result->degree())
                throw ParseError("inhomogeneous polynomial: term of degree " + std::to_string(mono.degree()) +
                                     " in a form of degree " + std::to_string(result->degree()),
                                 term_start);
            result->add_term(mono, coeff);
            skip_ws();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') throw ParseError("expected '+' or '-'", pos_);
            negative = peek() == '-';
            ++pos_;
        }
        if (result->is_zero()) throw ParseError("zero polynomial", 0);
        return *result;
    }

    ExponentVector monomial_only() {
        skip_ws();
        const std::size_t start = pos_;
        auto [coeff, mono] = term();
        skip_ws();
        if (!at_end()) throw ParseError("unexpected trailing input", pos_);
        if (coeff != 1) throw ParseError("coefficient not allowed in a monomial", start);
        return mono;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    mpz_class integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected an integer", start);
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    std::size_t small_integer() {
        const std::size_t start = pos_;
        const mpz_class z = integer();
        if (!z.fits_uint_p() || z > 1000000) throw ParseError("integer out of range", start);
        return z.get_ui();
    }

    bool at_variable() const {
        const char c = peek();
        return c == 'x' || c == 'X' || c == 'u' || c == 'U';
    }

    std::pair<Rational, ExponentVector> term() {
        Rational coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const mpz_class num = integer();
            mpz_class den = 1;
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t at = pos_;
                den = integer();
                if (den == 0) throw ParseError("division by zero", at);
            }
            coeff = Rational(num, den);
            coeff.canonicalize();
            have_coeff = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (!at_variable()) throw ParseError("expected a variable after '*'", pos_);
            }
        }
        ExponentVector mono(num_x_ + num_u_);
        bool have_factor = false;
        while (at_variable()) {
            factor(mono);
            have_factor = true;
            const std::size_t save = pos_;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (!at_variable()) throw ParseError("expected a variable after '*'", pos_);
            } else if (!at_variable()) {
                pos_ = save;
                break;
            }
        }
        if (!have_coeff && !have_factor) throw ParseError("expected a term", pos_);
        return {coeff, mono};
    }

    void factor(ExponentVector& mono) {
        const std::size_t start = pos_;
        const char letter = peek();
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a variable index", pos_);
        const std::size_t index = small_integer();
        const bool is_x = letter == 'x' || letter == 'X';
        const std::size_t limit = is_x ? num_x_ : num_u_;
        if (index == 0 || index > limit)
            throw ParseError("unknown variable '" + std::string(text_.substr(start, pos_ - start)) + "'", start);
        std::size_t power = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            power = small_integer();
        }
        const std::size_t var = is_x ? index - 1 : num_x_ + index - 1;
        mono.increment(var, static_cast<ExponentVector::value_type>(power));
    }

    std::string_view text_;
    std::size_t num_x_;
    std::size_t num_u_;
    std::size_t pos_ = 0;
};

}  // namespace

GradedPolynomial parse_polynomial(std::string_view text, std::size_t num_x, std::size_t num_u) {
    return Parser(text, num_x, num_u).polynomial();
}

ExponentVector parse_monomial(std::string_view text, std::size_t num_x, std::size_t num_u) {
    return Parser(text, num_x, num_u).monomial_only();
}

std::vector<ExponentVector> parse_support(std::string_view text, std::size_t num_x, std::size_t num_u) {
    std::vector<ExponentVector> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        try {
            out.push_back(parse_monomial(piece, num_x, num_u));
        } catch (const ParseError& e) {
            throw ParseError("in support list: " + e.detail(), start + e.offset());
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace apolar
