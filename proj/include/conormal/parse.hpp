#pragma once

// Polynomial text grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' integer)?
//   base   := integer | identifier | '(' expr ')'
// Division is only allowed by nonzero scalars. An identifier that is not a
// variable name is accepted when it splits into variable names ("uw" = u*w).

#include "conormal/polynomial.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace conormal {

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at offset " + std::to_string(pos) + ")"), offset(pos) {}
    std::size_t offset;
};

namespace detail {

/// Splits `word` into a concatenation of ring variable names, preferring longer names.
inline std::optional<std::vector<int>> split_identifier(const PolyRing& R, std::string_view word) {
    std::size_t n = word.size();
    std::vector<std::optional<std::vector<int>>> best(n + 1);
    best[n] = std::vector<int>{};
    for (std::size_t i = n; i-- > 0;) {
        for (int v = 0; v < R.nvars(); ++v) {
            const std::string& name = R.name(v);
            if (word.substr(i, name.size()) != name || !best[i + name.size()]) continue;
            if (!best[i] || best[i]->size() > best[i + name.size()]->size() + 1) {
                std::vector<int> seq{v};
                seq.insert(seq.end(), best[i + name.size()]->begin(), best[i + name.size()]->end());
                best[i] = std::move(seq);
            }
        }
    }
    return best[0];
}

class PolyParser {
public:
    PolyParser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), s_(text) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            if (eat('*')) acc *= factor();
            else if (eat('/')) {
                std::size_t at = pos_;
                Polynomial d = factor();
                if (!d.is_constant() || d.is_zero()) throw ParseError("division only by nonzero scalars", at);
                acc = acc.scaled(d.constant_term().inverse());
            } else break;
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) throw ParseError("expected exponent after '^'", start);
            b = b.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
        }
        return b;
    }

    Polynomial base() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpq_class v(std::string(s_.substr(start, pos_ - start)));
            return Polynomial::constant(ring_, Scalar(ring_->field(), v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
                ++pos_;
            std::string word(s_.substr(start, pos_ - start));
            int idx = ring_->index_of(word);
            if (idx >= 0) return Polynomial::variable(ring_, idx);
            auto parts = split_identifier(*ring_, word);
            if (!parts) throw ParseError("unknown variable '" + word + "'", start);
            Polynomial prod = Polynomial::constant(ring_, 1);
            for (int v : *parts) prod *= Polynomial::variable(ring_, v);
            return prod;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    RingPtr ring_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// poly_parse: text -> canonical polynomial over `ring`.
inline Polynomial poly_parse(const RingPtr& ring, std::string_view text) {
    return detail::PolyParser(ring, text).parse();
}

inline std::vector<Polynomial> parse_list(const RingPtr& ring, const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(poly_parse(ring, t));
    return out;
}

}  // namespace conormal
