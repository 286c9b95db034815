#include "pogcl/hom_poly.hpp"

#include "pogcl/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace pogcl {

std::vector<Exponent> monomials(int k) {
    std::vector<Exponent> out;
    if (k < 0) return out;
    out.reserve(monomial_count(k));
    for (int a = k; a >= 0; --a)
        for (int b = k - a; b >= 0; --b) out.push_back({a, b, k - a - b});
    return out;
}

HomPoly::HomPoly(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative polynomial degree");
}

HomPoly HomPoly::constant(const Rational& c) {
    HomPoly p(0);
    p.add_term({0, 0, 0}, c);
    return p;
}

HomPoly HomPoly::variable(Var v) {
    Exponent e;
    if (v == Var::x) e.a = 1;
    if (v == Var::y) e.b = 1;
    if (v == Var::z) e.c = 1;
    return monomial(e);
}

HomPoly HomPoly::monomial(const Exponent& e, const Rational& c) {
    HomPoly p(e.degree());
    p.add_term(e, c);
    return p;
}

Rational HomPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HomPoly::add_term(const Exponent& e, const Rational& c) {
    if (e.degree() != degree_) throw std::invalid_argument("term degree differs from polynomial degree");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int HomPoly::degree_in(Var v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
}

HomPoly HomPoly::primitive_part() const {
    if (is_zero()) return *this;
    Integer den_lcm = 1;
    for (const auto& [e, c] : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer num_gcd = 0;
    for (const auto& [e, c] : terms_) {
        Integer n = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (terms_.begin()->second < 0) scale = -scale;
    return *this * scale;
}

Rational HomPoly::leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational HomPoly::evaluate(const Rational& x, const Rational& y, const Rational& z) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < e.a; ++i) t *= x;
        for (int i = 0; i < e.b; ++i) t *= y;
        for (int i = 0; i < e.c; ++i) t *= z;
        sum += t;
    }
    return sum;
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    if (o.degree_ != degree_) throw NotHomogeneous(degree_, o.degree_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    if (o.degree_ != degree_) throw NotHomogeneous(degree_, o.degree_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

HomPoly& HomPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

HomPoly operator*(const HomPoly& l, const HomPoly& r) {
    HomPoly out(l.degree_ + r.degree_);
    for (const auto& [el, cl] : l.terms_)
        for (const auto& [er, cr] : r.terms_) out.add_term({el.a + er.a, el.b + er.b, el.c + er.c}, cl * cr);
    return out;
}

bool operator==(const HomPoly& l, const HomPoly& r) {
    if (l.is_zero() && r.is_zero()) return true;
    return l.degree_ == r.degree_ && l.terms_ == r.terms_;
}

HomPoly HomPoly::pow(unsigned e) const {
    HomPoly result = constant(1);
    HomPoly base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string HomPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        Rational mag = abs(c);
        std::vector<std::string> parts;
        const char* names[3] = {"x", "y", "z"};
        const int powers[3] = {e.a, e.b, e.c};
        for (int i = 0; i < 3; ++i) {
            if (powers[i] == 0) continue;
            parts.push_back(powers[i] == 1 ? std::string(names[i])
                                           : std::string(names[i]) + "^" + std::to_string(powers[i]));
        }
        bool wrote = false;
        if (mag != 1 || parts.empty()) {
            os << pogcl::to_string(mag);
            wrote = true;
        }
        for (const auto& p : parts) {
            if (wrote) os << "*";
            os << p;
            wrote = true;
        }
    }
    return os.str();
}

HomPoly partial(const HomPoly& f, Var v) {
    HomPoly out(f.degree() > 0 ? f.degree() - 1 : 0);
    if (f.degree() == 0) return out;
    for (const auto& [e, c] : f.terms()) {
        const int p = e[v];
        if (p == 0) continue;
        Exponent d = e;
        if (v == Var::x) --d.a;
        if (v == Var::y) --d.b;
        if (v == Var::z) --d.c;
        out.add_term(d, c * p);
    }
    return out;
}

HomPoly product(const std::vector<HomPoly>& factors) {
    HomPoly out = HomPoly::constant(1);
    for (const auto& f : factors) out = out * f;
    return out;
}

LinearChange::LinearChange(const Matrix& matrix) : m_(matrix) {
    if (determinant() == 0) throw SingularChange();
}

LinearChange LinearChange::identity() {
    Matrix m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
    return LinearChange(m);
}

LinearChange LinearChange::swap(Var u, Var v) {
    Matrix m = identity().matrix();
    std::swap(m[static_cast<int>(u)], m[static_cast<int>(v)]);
    return LinearChange(m);
}

LinearChange LinearChange::random(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    for (;;) {
        Matrix m;
        for (auto& row : m)
            for (auto& x : row) x = dist(rng);
        Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (det != 0) return LinearChange(m);
    }
}

Rational LinearChange::determinant() const {
    const auto& m = m_;
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

LinearChange LinearChange::inverse() const {
    const auto& m = m_;
    const Rational det = determinant();
    Matrix inv;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // cofactor of (j, i)
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
        }
    return LinearChange(inv);
}

HomPoly apply_change(const HomPoly& f, const LinearChange& t) {
    const auto& m = t.matrix();
    std::array<HomPoly, 3> forms = {HomPoly(1), HomPoly(1), HomPoly(1)};
    for (int i = 0; i < 3; ++i) {
        forms[i].add_term({1, 0, 0}, m[i][0]);
        forms[i].add_term({0, 1, 0}, m[i][1]);
        forms[i].add_term({0, 0, 1}, m[i][2]);
    }
    const int n = f.degree();
    std::array<std::vector<HomPoly>, 3> powers;
    for (int i = 0; i < 3; ++i) {
        powers[i].push_back(HomPoly::constant(1));
        for (int k = 1; k <= n; ++k) powers[i].push_back(powers[i].back() * forms[i]);
    }
    HomPoly out(n);
    for (const auto& [e, c] : f.terms()) out += c * (powers[0][e.a] * powers[1][e.b] * powers[2][e.c]);
    return out;
}

}  // namespace pogcl
