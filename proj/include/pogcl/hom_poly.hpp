// Homogeneous polynomials in x, y, z with exact rational coefficients.
//
// Terms are kept in graded lexicographic order with x > y > z. Since every
// stored term has the same total degree this is plain lex order on (a, b),
// which is also the column order used by the graded linear algebra in
// syzygy.cpp (see monomial_index).
#ifndef POGCL_HOM_POLY_HPP
#define POGCL_HOM_POLY_HPP

#include "pogcl/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace pogcl {

enum class Var { x = 0, y = 1, z = 2 };

struct Exponent {
    int a = 0;  ///< power of x
    int b = 0;  ///< power of y
    int c = 0;  ///< power of z

    int degree() const noexcept { return a + b + c; }
    int operator[](Var v) const noexcept { return v == Var::x ? a : (v == Var::y ? b : c); }
    friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Strict "comes first" relation of graded lex order (x > y > z).
struct GrlexFirst {
    bool operator()(const Exponent& l, const Exponent& r) const noexcept {
        if (l.degree() != r.degree()) return l.degree() > r.degree();
        if (l.a != r.a) return l.a > r.a;
        return l.b > r.b;
    }
};

/// dim S_k = (k+2)(k+1)/2, zero for negative k.
constexpr std::size_t monomial_count(int k) noexcept {
    return k < 0 ? 0 : static_cast<std::size_t>(k + 2) * static_cast<std::size_t>(k + 1) / 2;
}

/// Position of x^a y^b z^c among the degree a+b+c monomials in grlex order.
constexpr std::size_t monomial_index(const Exponent& e) noexcept {
    const auto j = static_cast<std::size_t>(e.b + e.c);
    return j * (j + 1) / 2 + static_cast<std::size_t>(e.c);
}

/// All monomials of degree k, in grlex order (so monomials(k)[monomial_index(e)] == e).
std::vector<Exponent> monomials(int k);

class HomPoly {
public:
    using TermMap = std::map<Exponent, Rational, GrlexFirst>;

    /// The zero polynomial, declared to have the given degree.
    explicit HomPoly(int degree = 0);

    static HomPoly constant(const Rational& c);
    static HomPoly variable(Var v);
    static HomPoly monomial(const Exponent& e, const Rational& c = 1);

    int degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    Rational coefficient(const Exponent& e) const;
    /// Adds c to the coefficient of e; the exponent must have the declared degree.
    void add_term(const Exponent& e, const Rational& c);

    /// Highest power of v that occurs.
    int degree_in(Var v) const;

    /// Rational multiple with coprime integer coefficients and positive leading coefficient.
    HomPoly primitive_part() const;
    /// Leading coefficient in grlex order (zero for the zero polynomial).
    Rational leading_coefficient() const;

    Rational evaluate(const Rational& x, const Rational& y, const Rational& z) const;

    HomPoly& operator+=(const HomPoly& o);
    HomPoly& operator-=(const HomPoly& o);
    HomPoly& operator*=(const Rational& s);

    friend HomPoly operator+(HomPoly l, const HomPoly& r) { return l += r; }
    friend HomPoly operator-(HomPoly l, const HomPoly& r) { return l -= r; }
    friend HomPoly operator-(HomPoly p) { return p *= Rational(-1); }
    friend HomPoly operator*(HomPoly p, const Rational& s) { return p *= s; }
    friend HomPoly operator*(const Rational& s, HomPoly p) { return p *= s; }
    friend HomPoly operator*(const HomPoly& l, const HomPoly& r);
    friend bool operator==(const HomPoly& l, const HomPoly& r);

    HomPoly pow(unsigned e) const;

    /// Text in the input grammar accepted by parse_poly, e.g. "x^2 + y^2 - z^2".
    std::string to_string() const;

private:
    int degree_;
    TermMap terms_;
};

HomPoly partial(const HomPoly& f, Var v);

/// Product of a list of polynomials (the constant 1 for an empty list).
HomPoly product(const std::vector<HomPoly>& factors);

/// Invertible 3x3 rational substitution acting as f(v) -> f(M v).
class LinearChange {
public:
    using Matrix = std::array<std::array<Rational, 3>, 3>;

    /// Throws SingularChange when det(matrix) == 0.
    explicit LinearChange(const Matrix& matrix);

    static LinearChange identity();
    static LinearChange swap(Var u, Var v);
    /// Integer entries drawn uniformly from [-bound, bound], redrawn until invertible.
    static LinearChange random(std::mt19937_64& rng, int bound = 12);

    const Matrix& matrix() const noexcept { return m_; }
    Rational determinant() const;
    LinearChange inverse() const;

private:
    Matrix m_;
};

HomPoly apply_change(const HomPoly& f, const LinearChange& t);

}  // namespace pogcl

#endif
