#pragma once

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <string>

#include "kweyl/laurent.hpp"

namespace kweyl {

/// Plain-text rendering: `x^k` monomials in rank 1, `e[a,b,...]` otherwise,
/// terms in descending lexicographic order, e.g. `x^3 + x^1 + x^-1 + x^-3`.
template <class S>
std::string render_laurent(const LaurentPoly<S>& u) {
    if (u.is_zero()) return "0";
    const bool rank1 = u.datum()->rank() == 1;
    std::ostringstream out;
    bool first = true;
    for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
        const IVector& e = it->first;
        S c = it->second;
        bool negative = c < 0;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (negative) c = -c;
        const bool constant = e.isZero();
        if (constant) {
            out << scalar_to_string(c);
            continue;
        }
        if (c != 1) out << scalar_to_string(c) << "*";
        if (rank1) {
            out << "x^" << e[0];
        } else {
            out << "e[";
            for (int i = 0; i < e.size(); ++i) {
                if (i) out << ",";
                out << e[i];
            }
            out << "]";
        }
    }
    return out.str();
}

namespace detail {

class LaurentLexer {
public:
    explicit LaurentLexer(const std::string& text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c))
            throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(pos_) +
                             " in '" + text_ + "'");
    }

    long parse_int() {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start]))))
            throw ParseError("expected an integer at position " + std::to_string(start) + " in '" + text_ + "'");
        return std::stol(text_.substr(start, pos_ - start));
    }

    /// Unsigned numeric literal, possibly "p/q" in a rational ring.
    std::string parse_number_token() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
            ++pos_;
        if (pos_ == start) throw ParseError("expected a number at position " + std::to_string(start));
        return text_.substr(start, pos_ - start);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses the textual form produced by render_laurent (also accepts a bare
/// `x` for `x^1`). Exponents are validated against the datum's lattice.
template <class S>
LaurentPoly<S> parse_laurent(const DatumPtr& datum, const std::string& text) {
    detail::LaurentLexer lex(text);
    LaurentPoly<S> out(datum);
    bool first = true;
    while (!lex.at_end()) {
        S sign(1);
        if (lex.consume('-')) {
            sign = -1;
        } else if (lex.consume('+')) {
            // explicit plus
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms in '" + text + "'");
        }
        first = false;

        S coeff(1);
        bool have_coeff = false;
        char c = lex.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = scalar_from_string<S>(lex.parse_number_token());
            have_coeff = true;
        }
        IVector exp = IVector::Zero(datum->rank());
        if (!have_coeff || lex.consume('*')) {
            char m = lex.peek();
            if (m == 'x') {
                if (datum->rank() != 1) throw ParseError("'x^k' monomials require rank 1");
                lex.expect('x');
                exp[0] = static_cast<int>(lex.consume('^') ? lex.parse_int() : 1);
            } else if (m == 'e') {
                lex.expect('e');
                lex.expect('[');
                for (int i = 0; i < datum->rank(); ++i) {
                    if (i) lex.expect(',');
                    exp[i] = static_cast<int>(lex.parse_int());
                }
                lex.expect(']');
            } else if (!have_coeff) {
                throw ParseError("expected a term in '" + text + "'");
            } else {
                throw ParseError("expected a monomial after '*' in '" + text + "'");
            }
        }
        out += LaurentPoly<S>::monomial(datum, exp, sign * coeff);
    }
    if (first) throw ParseError("empty element literal");
    return out;
}

template <class S>
nlohmann::json laurent_to_json(const LaurentPoly<S>& u) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
        nlohmann::json term;
        term["coeff"] = scalar_to_string(it->second);
        term["exp"] = std::vector<int>(it->first.data(), it->first.data() + it->first.size());
        terms.push_back(std::move(term));
    }
    return nlohmann::json{{"terms", std::move(terms)}};
}

template <class S>
LaurentPoly<S> laurent_from_json(const DatumPtr& datum, const nlohmann::json& j) {
    if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("element JSON must carry a 'terms' array");
    LaurentPoly<S> out(datum);
    for (const auto& term : j["terms"]) {
        S coeff = scalar_from_string<S>(term.at("coeff").get<std::string>());
        auto exps = term.at("exp").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != datum->rank()) throw ParseError("exponent array has the wrong rank");
        IVector e(datum->rank());
        for (int i = 0; i < datum->rank(); ++i) e[i] = exps[i];
        out += LaurentPoly<S>::monomial(datum, e, coeff);
    }
    return out;
}

} // namespace kweyl
