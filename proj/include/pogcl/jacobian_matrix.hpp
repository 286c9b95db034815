// The graded pieces J_k : S_k^3 -> S_{k+m-1}, (a,b,c) -> a f_x + b f_y + c f_z.
//
// Column comp * s(k) + monomial_index(u) is the image of u placed in component comp;
// rows are indexed by monomial_index in degree k+m-1. f is first scaled to its
// primitive integer multiple, which leaves every kernel unchanged.
#ifndef POGCL_JACOBIAN_MATRIX_HPP
#define POGCL_JACOBIAN_MATRIX_HPP

#include "pogcl/dense_matrix.hpp"
#include "pogcl/hom_poly.hpp"
#include "pogcl/modular.hpp"

#include <array>
#include <vector>

namespace pogcl {

class JacobianMatrix {
public:
    explicit JacobianMatrix(const HomPoly& f);

    int curve_degree() const noexcept { return m_; }
    std::size_t rows(int k) const noexcept { return monomial_count(k + m_ - 1); }
    std::size_t cols(int k) const noexcept { return 3 * monomial_count(k); }

    DenseMatrix<Integer> integer(int k) const;
    DenseMatrix<std::uint32_t> modular(int k, const PrimeField& field) const;
    /// Exact test J_k v == 0 for a rational vector of length cols(k).
    bool annihilates(int k, const std::vector<Rational>& v) const;

private:
    struct Term {
        Exponent e;
        Integer c;
    };
    int m_;
    std::array<std::vector<Term>, 3> partials_;
};

}  // namespace pogcl

#endif
