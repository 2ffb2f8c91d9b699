#include <cctype>
#include <string>

#include "shimura/errors.hpp"
#include "shimura/multipoly.hpp"

namespace shimura {
namespace {

class Parser {
public:
    Parser(std::string_view text, const std::optional<std::vector<std::string>>& declared)
        : s_(text), declared_(declared) {}

    RationalFunction run() {
        RationalFunction r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

    std::vector<std::string> variable_order() const {
        return declared_ ? *declared_ : seen_;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw DomainError("parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(std::string_view tok) {
        skip();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    static RationalFunction lift(MultiPoly p) { return {std::move(p), MultiPoly::constant(1)}; }

    // Keeps the denominator 1 whenever it is a constant.
    static RationalFunction tidy(RationalFunction r) {
        if (auto c = r.den.constant_value()) {
            r.num *= c->inverse();
            r.den = MultiPoly::constant(1);
        }
        return r;
    }

    static RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool subtract) {
        const MultiPoly nb = subtract ? -b.num : b.num;
        if (a.den == b.den) return tidy({a.num + nb, a.den});
        return tidy({a.num * b.den + nb * a.den, a.den * b.den});
    }

    static RationalFunction mul(const RationalFunction& a, const RationalFunction& b) {
        return tidy({a.num * b.num, a.den * b.den});
    }

    static RationalFunction invert(const RationalFunction& a) {
        if (a.num.is_zero()) throw DomainError("division by zero in expression");
        return tidy({a.den, a.num});
    }

    RationalFunction expr() {
        RationalFunction acc = term();
        for (;;) {
            if (accept("+")) acc = add(acc, term(), false);
            else if (accept("-")) acc = add(acc, term(), true);
            else return acc;
        }
    }

    RationalFunction term() {
        RationalFunction acc = unary();
        for (;;) {
            skip();
            if (s_.substr(pos_, 2) == "**") return acc;  // handled by power()
            if (accept("*")) acc = mul(acc, unary());
            else if (accept("/")) acc = mul(acc, invert(unary()));
            else return acc;
        }
    }

    RationalFunction unary() {
        if (accept("-")) {
            RationalFunction r = unary();
            r.num = -r.num;
            return r;
        }
        if (accept("+")) return unary();
        return power();
    }

    long exponent() {
        bool paren = accept("(");
        bool neg = false;
        if (accept("-")) neg = true;
        else accept("+");
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        if (pos_ - start > 6) fail("exponent too large");
        long e = std::stol(std::string(s_.substr(start, pos_ - start)));
        if (paren && !accept(")")) fail("expected ')'");
        return neg ? -e : e;
    }

    RationalFunction power() {
        RationalFunction base = atom();
        skip();
        if (accept("^") || accept("**")) {
            const long e = exponent();
            if (e < 0) base = invert(base);
            const auto k = static_cast<unsigned>(e < 0 ? -e : e);
            return tidy({base.num.pow(k), base.den.pow(k)});
        }
        return base;
    }

    RationalFunction atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            RationalFunction r = expr();
            if (!accept(")")) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return lift(MultiPoly::constant(Rational(Integer(std::string(s_.substr(start, pos_ - start))))));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (declared_) {
                bool known = false;
                for (const auto& v : *declared_) known = known || v == name;
                if (!known) fail("undeclared variable '" + name + "'");
            } else {
                bool known = false;
                for (const auto& v : seen_) known = known || v == name;
                if (!known) seen_.push_back(name);
            }
            return lift(MultiPoly::variable(name));
        }
        fail("unexpected character '" + std::string(1, ch) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::optional<std::vector<std::string>> declared_;
    std::vector<std::string> seen_;
};

} // namespace

RationalFunction RationalFunction::parse(std::string_view text) {
    Parser p(text, std::nullopt);
    RationalFunction r = p.run();
    const auto order = p.variable_order();
    return {r.num.with_vars(merge_vars(order, r.num.vars())),
            r.den.with_vars(merge_vars(order, r.den.vars()))};
}

MultiPoly MultiPoly::parse(std::string_view text, const std::optional<std::vector<std::string>>& vars) {
    Parser p(text, vars);
    const RationalFunction r = p.run();
    auto q = try_divide(r.num, r.den);
    if (!q) throw DomainError("expression is not a polynomial: " + std::string(text));
    return q->with_vars(p.variable_order());
}

} // namespace shimura
