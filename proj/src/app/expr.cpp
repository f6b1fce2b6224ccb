#include "sperp/app/expr.hpp"

#include <cctype>
#include <limits>
#include <optional>

namespace sperp::app {
namespace {

class Parser {
public:
    Parser(std::string_view text, PlethysmEngine* engine, Method method)
        : text_(text), engine_(engine), method_(method) {}

    SymFunc parse() {
        SymFunc f = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
    [[noreturn]] void fail_at(const std::string& message, std::size_t at) const { throw ParseError(message, at); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but reached end of input");
            fail(std::string("expected '") + c + "'");
        }
    }

    long long integer() {
        skip();
        const std::size_t start = pos_;
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const int digit = text_[pos_] - '0';
            if (value > (std::numeric_limits<long long>::max() - digit) / 10) fail_at("integer too large", start);
            value = value * 10 + digit;
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer");
        return value;
    }

    SymFunc expr() {
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        SymFunc f = term();
        if (negate) f = -f;
        while (true) {
            if (accept('+')) f = f + term();
            else if (accept('-')) f = f - term();
            else return f;
        }
    }

    static std::optional<Rational> as_scalar(const SymFunc& f) {
        if (f.is_zero()) return Rational(0);
        if (f.size() == 1 && f.terms().front().first.empty()) return f.terms().front().second;
        return std::nullopt;
    }

    SymFunc term() {
        SymFunc f = factor();
        while (accept('*')) {
            SymFunc g = factor();
            if (const auto c = as_scalar(f)) f = scale(*c, g);
            else if (const auto d = as_scalar(g)) f = scale(*d, f);
            else f = f * g;
        }
        return f;
    }

    SymFunc factor() {
        skip();
        if (pos_ >= text_.size()) fail("expected a term but reached end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            const long long num = integer();
            long long den = 1;
            if (accept('/')) {
                den = integer();
                if (den == 0) fail_at("division by zero", start);
            }
            return SymFunc::from_terms(Basis::schur, {{Partition{}, Rational(num, den)}});
        }
        if (accept('(')) {
            SymFunc f = expr();
            expect(')');
            return applications(std::move(f));
        }
        if (const auto basis = basis_from_letter(c)) {
            ++pos_;
            return applications(SymFunc::term(*basis, partition_literal()));
        }
        fail("expected a coefficient, a basis letter (s, m, h, e, p) or '('");
    }

    Partition partition_literal() {
        skip();
        const std::size_t start = pos_;
        expect('[');
        std::vector<int> parts;
        if (!accept(']')) {
            do {
                const long long v = integer();
                if (v > std::numeric_limits<int>::max()) fail_at("part too large", start);
                parts.push_back(static_cast<int>(v));
            } while (accept(','));
            expect(']');
        }
        for (std::size_t i = 1; i < parts.size(); ++i) {
            if (parts[i] > parts[i - 1]) fail_at("not a partition: parts must be weakly decreasing", start);
        }
        return Partition(std::move(parts));
    }

    SymFunc applications(SymFunc f) {
        while (peek('[')) {
            const std::size_t start = pos_;
            ++pos_;
            SymFunc g = expr();
            expect(']');
            if (engine_ == nullptr) fail_at("plethysm is not available here", start);
            f = engine_->plethysm(f, g, method_);
        }
        return f;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    PlethysmEngine* engine_;
    Method method_;
};

}  // namespace

SymFunc parse_expr(std::string_view text, PlethysmEngine& engine, Method method) {
    return Parser(text, &engine, method).parse();
}

SymFunc parse_expr(std::string_view text) { return Parser(text, nullptr, Method::auto_select).parse(); }

}  // namespace sperp::app
