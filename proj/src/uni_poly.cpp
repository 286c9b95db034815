#include "pogcl/uni_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace pogcl {

UniPoly::UniPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::monomial(int k, const Rational& c) {
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v[k] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * Rational(1 / leading());
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

Rational UniPoly::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& l, const UniPoly& r) {
    if (l.is_zero() || r.is_zero()) return {};
    std::vector<Rational> out(l.c_.size() + r.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < l.c_.size(); ++i) {
        if (l.c_[i] == 0) continue;
        for (std::size_t j = 0; j < r.c_.size(); ++j) out[i + j] += l.c_[i] * r.c_[j];
    }
    return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < divisor.degree()) return {UniPoly{}, *this};
    std::vector<Rational> rem = c_;
    std::vector<Rational> quot(c_.size() - divisor.c_.size() + 1, Rational(0));
    const Rational inv_lead = 1 / divisor.leading();
    const int dd = divisor.degree();
    for (int k = degree(); k >= dd; --k) {
        if (rem[k] == 0) continue;
        Rational q = rem[k] * inv_lead;
        quot[k - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.c_[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

std::string UniPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k] == 0) continue;
        if (!first) os << (c_[k] < 0 ? " - " : " + ");
        else if (c_[k] < 0) os << "-";
        first = false;
        Rational mag = abs(c_[k]);
        if (k == 0 || mag != 1) os << pogcl::to_string(mag) << (k ? "*" : "");
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        UniPoly r2 = r0.divmod(r1).second;
        r0 = std::move(r1);
        r1 = r2.monic();
    }
    return r0.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("square-free decomposition of zero");
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() == 0) return out;
    const UniPoly a = p.monic();
    const UniPoly da = a.derivative();
    const UniPoly c = gcd(a, da);
    UniPoly w = a.exact_div(c);
    UniPoly y = da.exact_div(c);
    UniPoly z = y - w.derivative();
    for (int i = 1; w.degree() > 0; ++i) {
        UniPoly g = gcd(w, z);
        if (g.degree() > 0) out.emplace_back(g, i);
        w = w.exact_div(g);
        y = z.exact_div(g);
        z = y - w.derivative();
    }
    return out;
}

}  // namespace pogcl
