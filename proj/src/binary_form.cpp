#include "pogcl/binary_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace pogcl {

BinaryForm::BinaryForm(int degree, UniPoly dehomogenized) : degree_(degree), p_(std::move(dehomogenized)) {
    if (p_.degree() > degree_) throw std::invalid_argument("binary form degree below polynomial degree");
}

BinaryForm BinaryForm::from_hompoly(const HomPoly& p) {
    std::vector<Rational> c(static_cast<std::size_t>(p.degree()) + 1, Rational(0));
    for (const auto& [e, coef] : p.terms()) {
        if (e.c != 0) throw std::invalid_argument("binary form may not involve z");
        c[e.a] = coef;
    }
    return BinaryForm(p.degree(), UniPoly(std::move(c)));
}

BinaryForm BinaryForm::normalized() const {
    if (is_zero()) return *this;
    return BinaryForm(degree_, p_.monic());
}

HomPoly BinaryForm::to_hompoly() const {
    HomPoly out(degree_);
    for (int i = 0; i <= p_.degree(); ++i) out.add_term({i, degree_ - i, 0}, p_.coefficient(i));
    return out;
}

BinaryForm operator+(const BinaryForm& l, const BinaryForm& r) {
    if (l.is_zero()) return r;
    if (r.is_zero()) return l;
    if (l.degree_ != r.degree_) throw std::invalid_argument("adding binary forms of different degree");
    return BinaryForm(l.degree_, l.p_ + r.p_);
}

BinaryForm operator-(const BinaryForm& l, const BinaryForm& r) {
    if (r.is_zero()) return l;
    if (l.is_zero()) return BinaryForm(r.degree_, r.p_ * Rational(-1));
    if (l.degree_ != r.degree_) throw std::invalid_argument("subtracting binary forms of different degree");
    return BinaryForm(l.degree_, l.p_ - r.p_);
}

BinaryForm BinaryForm::exact_div(const BinaryForm& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by the zero form");
    if (is_zero()) return zero(std::max(0, degree_ - divisor.degree_));
    if (divisor.degree_ > degree_ || divisor.y_valuation() > y_valuation())
        throw std::domain_error("inexact binary form division");
    return BinaryForm(degree_ - divisor.degree_, p_.exact_div(divisor.p_));
}

bool BinaryForm::divisible_by(const BinaryForm& divisor) const {
    if (divisor.is_zero()) return is_zero();
    if (is_zero()) return true;
    if (divisor.degree_ > degree_ || divisor.y_valuation() > y_valuation()) return false;
    return p_.divmod(divisor.p_).second.is_zero();
}

namespace {

// Coefficients of f as a polynomial in z: result[i] multiplies z^i.
std::vector<BinaryForm> z_coefficients(const HomPoly& f) {
    const int n = f.degree();
    std::vector<std::vector<Rational>> coeffs(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) coeffs[i].assign(static_cast<std::size_t>(n - i) + 1, Rational(0));
    for (const auto& [e, c] : f.terms()) coeffs[e.c][e.a] = c;
    std::vector<BinaryForm> out;
    for (int i = 0; i <= n; ++i) out.emplace_back(n - i, UniPoly(coeffs[i]));
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

}  // namespace

BinaryForm resultant_in_z(const HomPoly& f, const HomPoly& g) {
    const auto a = z_coefficients(f);
    const auto b = z_coefficients(g);
    const int m = static_cast<int>(a.size()) - 1;  // degree of f in z
    const int n = static_cast<int>(b.size()) - 1;
    if (m <= 0 || n <= 0) throw std::invalid_argument("resultant_in_z needs positive z-degree");
    const int size = m + n;
    DenseMatrix<BinaryForm> s(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
    // Rows 0..n-1 hold shifted copies of f, rows n..n+m-1 of g; columns run from z^(size-1) down.
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s(r, r + (m - i)) = a[i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s(n + r, r + (n - i)) = b[i];
    return bareiss_determinant(std::move(s), BinaryForm(0, UniPoly::constant(1)));
}

BinaryForm gcd_forms(const BinaryForm& p, const BinaryForm& q) {
    if (p.is_zero()) return q.normalized();
    if (q.is_zero()) return p.normalized();
    const int v = std::min(p.y_valuation(), q.y_valuation());
    UniPoly g = gcd(p.dehomogenized(), q.dehomogenized());
    const int d = g.degree() + v;
    return BinaryForm(d, std::move(g));
}

std::vector<std::pair<BinaryForm, int>> squarefree_decompose(const BinaryForm& p) {
    if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero form");
    std::vector<std::pair<BinaryForm, int>> out;
    if (p.y_valuation() > 0) out.emplace_back(BinaryForm::y(), p.y_valuation());
    for (auto& [g, e] : squarefree_decompose(p.dehomogenized())) {
        const int d = g.degree();
        out.emplace_back(BinaryForm(d, std::move(g)), e);
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.second > r.second; });
    return out;
}

}  // namespace pogcl
