// Symbolic term language: lambda/mu central-binomial sums with power-sum
// weights, and zeta targets. Grammar: lambda(M,[R,...]) | mu(M,[R,...]) |
// zeta(W); the canonical rendering sorts parts descending with no spaces.
#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zetaforge {

struct TermParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TermInvariantError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class TermKind { Lambda, Mu, Zeta };

struct SumTerm {
    TermKind kind = TermKind::Zeta;
    int m = 2;                // central exponent, or the zeta argument
    std::vector<int> parts;   // power-sum exponents, sorted descending

    static SumTerm lambda(int m, std::vector<int> parts) {
        SumTerm t{TermKind::Lambda, m, std::move(parts)};
        t.normalize_and_check();
        return t;
    }

    static SumTerm mu(int m, std::vector<int> parts) {
        SumTerm t{TermKind::Mu, m, std::move(parts)};
        t.normalize_and_check();
        return t;
    }

    static SumTerm zeta(int w) {
        SumTerm t{TermKind::Zeta, w, {}};
        t.normalize_and_check();
        return t;
    }

    int weight() const {
        return std::accumulate(parts.begin(), parts.end(), m);
    }

    void normalize_and_check() {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        switch (kind) {
        case TermKind::Zeta:
            if (!parts.empty())
                throw TermInvariantError("zeta term takes no power-sum parts");
            if (m < 2)
                throw TermInvariantError("zeta requires argument >= 2");
            break;
        case TermKind::Lambda:
            if (m < 3 || m % 2 == 0)
                throw TermInvariantError("lambda requires odd m >= 3");
            break;
        case TermKind::Mu:
            if (m < 2 || m % 2 != 0)
                throw TermInvariantError("mu requires even m >= 2");
            break;
        }
        for (int r : parts)
            if (r < 2 || r % 2 != 0)
                throw TermInvariantError("power-sum parts must be even and >= 2");
    }

    std::string str() const {
        std::string s;
        switch (kind) {
        case TermKind::Lambda: s = "lambda("; break;
        case TermKind::Mu: s = "mu("; break;
        case TermKind::Zeta: return "zeta(" + std::to_string(m) + ")";
        }
        s += std::to_string(m) + ",[";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        s += "])";
        return s;
    }

    friend bool operator==(const SumTerm& a, const SumTerm& b) {
        return a.kind == b.kind && a.m == b.m && a.parts == b.parts;
    }
    friend bool operator!=(const SumTerm& a, const SumTerm& b) { return !(a == b); }
    friend bool operator<(const SumTerm& a, const SumTerm& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.m != b.m) return a.m < b.m;
        return a.parts < b.parts;
    }
};

namespace detail {

class TermParser {
  public:
    explicit TermParser(std::string_view text) : text_(text) {}

    SumTerm parse() {
        std::string head = ident();
        SumTerm t;
        if (head == "zeta") {
            expect('(');
            int w = integer();
            expect(')');
            end();
            t = SumTerm{TermKind::Zeta, w, {}};
        } else if (head == "lambda" || head == "mu") {
            expect('(');
            int m = integer();
            expect(',');
            expect('[');
            std::vector<int> parts;
            skip_ws();
            if (peek() != ']') {
                parts.push_back(integer());
                while (peek() == ',') {
                    ++pos_;
                    parts.push_back(integer());
                }
            }
            expect(']');
            expect(')');
            end();
            t = SumTerm{head == "lambda" ? TermKind::Lambda : TermKind::Mu, m,
                        std::move(parts)};
        } else {
            throw TermParseError("unknown term head '" + head +
                                 "' (expected lambda, mu or zeta)");
        }
        t.normalize_and_check();
        return t;
    }

  private:
    std::string_view text_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c)
            throw TermParseError(std::string("expected '") + c + "' at position " +
                                 std::to_string(pos_) + " in '" + std::string(text_) + "'");
        ++pos_;
    }

    std::string ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw TermParseError("expected term name in '" + std::string(text_) + "'");
        return std::string(text_.substr(start, pos_ - start));
    }

    int integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw TermParseError("expected integer at position " + std::to_string(pos_) +
                                 " in '" + std::string(text_) + "'");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    void end() {
        skip_ws();
        if (pos_ != text_.size())
            throw TermParseError("trailing input '" + std::string(text_.substr(pos_)) +
                                 "' after term");
    }
};

}  // namespace detail

inline SumTerm parse_term(std::string_view text) {
    return detail::TermParser(text).parse();
}

}  // namespace zetaforge
