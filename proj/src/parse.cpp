#include "pogcl/parse.hpp"

#include "pogcl/errors.hpp"

#include <cctype>
#include <map>
#include <string>

namespace pogcl {
namespace {

struct ExponentLess {
    bool operator()(const Exponent& l, const Exponent& r) const noexcept {
        if (l.a != r.a) return l.a < r.a;
        if (l.b != r.b) return l.b < r.b;
        return l.c < r.c;
    }
};

// Not necessarily homogeneous; only lives during parsing.
using Sparse = std::map<Exponent, Rational, ExponentLess>;

void accumulate(Sparse& into, const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = into.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) into.erase(it);
    }
}

Sparse add(const Sparse& l, const Sparse& r, int sign) {
    Sparse out = l;
    for (const auto& [e, c] : r) accumulate(out, e, sign > 0 ? c : Rational(-c));
    return out;
}

Sparse mul(const Sparse& l, const Sparse& r) {
    Sparse out;
    for (const auto& [el, cl] : l)
        for (const auto& [er, cr] : r) accumulate(out, {el.a + er.a, el.b + er.b, el.c + er.c}, cl * cr);
    return out;
}

Sparse constant(const Rational& c) {
    Sparse s;
    accumulate(s, {0, 0, 0}, c);
    return s;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Sparse parse() {
        Sparse result = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return result;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char ch) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an unsigned integer");
        return std::string(text_.substr(start, pos_ - start));
    }

    Sparse expr() {
        const bool negate = accept('-');
        Sparse acc = term();
        if (negate) acc = mul(acc, constant(-1));
        for (;;) {
            if (accept('+'))
                acc = add(acc, term(), +1);
            else if (accept('-'))
                acc = add(acc, term(), -1);
            else
                return acc;
        }
    }

    Sparse term() {
        Sparse acc = factor();
        while (accept('*')) acc = mul(acc, factor());
        return acc;
    }

    Sparse factor() {
        Sparse base = primary();
        while (accept('^')) {
            const std::string e = digits();
            if (e.size() > 4) fail("exponent too large");
            Sparse p = constant(1);
            for (int i = std::stoi(e); i > 0; --i) p = mul(p, base);
            base = std::move(p);
        }
        return base;
    }

    Sparse primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            Sparse inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (ch == 'x' || ch == 'y' || ch == 'z') {
            ++pos_;
            Sparse s;
            accumulate(s, {ch == 'x' ? 1 : 0, ch == 'y' ? 1 : 0, ch == 'z' ? 1 : 0}, 1);
            return s;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::string num = digits();
            std::string den = "1";
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                den = digits();
                if (Integer(den) == 0) fail("zero denominator");
            }
            Rational q{Integer(num), Integer(den)};
            q.canonicalize();
            skip_ws();
            if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '('))
                fail("implicit multiplication is not allowed; use '*'");
            return constant(q);
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }
};

}  // namespace

HomPoly parse_poly(std::string_view text) {
    Sparse s = Parser(text).parse();
    if (s.empty()) return HomPoly(0);
    const int deg = s.begin()->first.degree();
    for (const auto& [e, c] : s)
        if (e.degree() != deg) throw NotHomogeneous(std::max(deg, e.degree()), std::min(deg, e.degree()));
    HomPoly out(deg);
    for (const auto& [e, c] : s) out.add_term(e, c);
    return out;
}

}  // namespace pogcl
