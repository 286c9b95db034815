// Binary forms in (x, y), Sylvester resultants eliminating z, and the
// gcd / square-free tools used to read intersection multiplicities.
//
// A form of degree n, sum c_i x^i y^(n-i), is stored as the dehomogenized
// polynomial p(t) = sum c_i t^i together with n. Roots at (1:0) show up as a
// degree drop: y^(n - deg p) divides the form.
#ifndef POGCL_BINARY_FORM_HPP
#define POGCL_BINARY_FORM_HPP

#include "pogcl/bareiss.hpp"
#include "pogcl/hom_poly.hpp"
#include "pogcl/uni_poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pogcl {

class BinaryForm {
public:
    BinaryForm() = default;
    /// Form of the given degree; `dehomogenized.degree()` must not exceed it.
    BinaryForm(int degree, UniPoly dehomogenized);

    static BinaryForm zero(int degree = 0) { return BinaryForm(degree, UniPoly{}); }
    static BinaryForm x() { return BinaryForm(1, UniPoly::monomial(1)); }
    static BinaryForm y() { return BinaryForm(1, UniPoly::constant(1)); }
    /// Throws std::invalid_argument if z occurs in p.
    static BinaryForm from_hompoly(const HomPoly& p);

    int degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return p_.is_zero(); }
    const UniPoly& dehomogenized() const noexcept { return p_; }
    /// Coefficient of x^i y^(degree - i).
    Rational coefficient(int i) const { return p_.coefficient(i); }
    /// Multiplicity of the root (1:0), i.e. the power of y dividing the form.
    int y_valuation() const { return degree_ - p_.degree(); }

    /// Scaled so that the grlex-leading coefficient (highest power of x) is 1.
    BinaryForm normalized() const;
    HomPoly to_hompoly() const;
    std::string to_string() const { return to_hompoly().to_string(); }

    friend BinaryForm operator*(const BinaryForm& l, const BinaryForm& r) {
        return BinaryForm(l.degree_ + r.degree_, l.p_ * r.p_);
    }
    friend BinaryForm operator+(const BinaryForm& l, const BinaryForm& r);
    friend BinaryForm operator-(const BinaryForm& l, const BinaryForm& r);
    friend BinaryForm operator*(const BinaryForm& l, const Rational& s) { return BinaryForm(l.degree_, l.p_ * s); }
    friend bool operator==(const BinaryForm& l, const BinaryForm& r) {
        return (l.is_zero() && r.is_zero()) || (l.degree_ == r.degree_ && l.p_ == r.p_);
    }
    /// Quotient of an exact division; throws std::domain_error otherwise.
    BinaryForm exact_div(const BinaryForm& divisor) const;
    /// True when `divisor` divides this form.
    bool divisible_by(const BinaryForm& divisor) const;

private:
    int degree_ = 0;
    UniPoly p_;
};

template <>
struct RingTraits<BinaryForm> {
    static bool is_zero(const BinaryForm& a) { return a.is_zero(); }
    static BinaryForm exact_div(const BinaryForm& a, const BinaryForm& b) { return a.exact_div(b); }
    static BinaryForm negate(const BinaryForm& a) { return a * Rational(-1); }
};

/// Sylvester resultant of f and g with respect to z, by fraction-free determinant.
/// When both have full degree in z the result has degree deg(f) * deg(g).
BinaryForm resultant_in_z(const HomPoly& f, const HomPoly& g);

/// Normalized gcd; gcd_forms(p, 0) == normalized p and coprime forms give the constant 1.
BinaryForm gcd_forms(const BinaryForm& p, const BinaryForm& q);

/// Pairwise coprime normalized square-free factors with multiplicities,
/// highest multiplicity first. Throws std::domain_error on the zero form.
std::vector<std::pair<BinaryForm, int>> squarefree_decompose(const BinaryForm& p);

}  // namespace pogcl

#endif
