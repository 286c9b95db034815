#ifndef POGCL_UNI_POLY_HPP
#define POGCL_UNI_POLY_HPP

#include "pogcl/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pogcl {

/// Dense univariate polynomial over the rationals, lowest degree first.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coefficients);

    static UniPoly constant(const Rational& c) { return UniPoly({c}); }
    /// The monomial c * t^k.
    static UniPoly monomial(int k, const Rational& c = 1);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    Rational coefficient(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    UniPoly monic() const;
    UniPoly derivative() const;
    Rational evaluate(const Rational& t) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Rational& s);
    friend UniPoly operator+(UniPoly l, const UniPoly& r) { return l += r; }
    friend UniPoly operator-(UniPoly l, const UniPoly& r) { return l -= r; }
    friend UniPoly operator*(UniPoly p, const Rational& s) { return p *= s; }
    friend UniPoly operator*(const UniPoly& l, const UniPoly& r);
    friend bool operator==(const UniPoly& l, const UniPoly& r) { return l.c_ == r.c_; }

    /// Euclidean division; throws std::domain_error on a zero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    /// Quotient of an exact division; throws std::domain_error if the remainder is nonzero.
    UniPoly exact_div(const UniPoly& divisor) const;

    std::string to_string(char var = 't') const;

private:
    std::vector<Rational> c_;
    void trim();
};

/// Monic gcd; gcd(0, 0) == 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Yun's square-free decomposition of a nonzero polynomial: monic, pairwise coprime,
/// square-free factors of positive degree with multiplicities (increasing multiplicity).
std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& p);

}  // namespace pogcl

#endif
