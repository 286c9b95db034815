#include "pogcl/jacobian_matrix.hpp"

#include <stdexcept>

namespace pogcl {

JacobianMatrix::JacobianMatrix(const HomPoly& f) : m_(f.degree()) {
    const HomPoly g = f.primitive_part();
    const Var vars[3] = {Var::x, Var::y, Var::z};
    for (int i = 0; i < 3; ++i) {
        const HomPoly d = partial(g, vars[i]);
        for (const auto& [e, c] : d.terms()) {
            if (c.get_den() != 1) throw std::logic_error("primitive part has a non-integral partial");
            partials_[i].push_back({e, c.get_num()});
        }
    }
}

DenseMatrix<Integer> JacobianMatrix::integer(int k) const {
    DenseMatrix<Integer> out(rows(k), cols(k));
    const auto us = monomials(k);
    for (std::size_t comp = 0; comp < 3; ++comp)
        for (std::size_t j = 0; j < us.size(); ++j)
            for (const auto& t : partials_[comp]) {
                const Exponent e{us[j].a + t.e.a, us[j].b + t.e.b, us[j].c + t.e.c};
                out(monomial_index(e), comp * us.size() + j) = t.c;
            }
    return out;
}

DenseMatrix<std::uint32_t> JacobianMatrix::modular(int k, const PrimeField& field) const {
    DenseMatrix<std::uint32_t> out(rows(k), cols(k));
    const auto us = monomials(k);
    for (std::size_t comp = 0; comp < 3; ++comp) {
        std::vector<std::uint32_t> images;
        for (const auto& t : partials_[comp]) images.push_back(field.from_integer(t.c));
        for (std::size_t j = 0; j < us.size(); ++j)
            for (std::size_t i = 0; i < images.size(); ++i) {
                const Exponent& te = partials_[comp][i].e;
                const Exponent e{us[j].a + te.a, us[j].b + te.b, us[j].c + te.c};
                out(monomial_index(e), comp * us.size() + j) = images[i];
            }
    }
    return out;
}

bool JacobianMatrix::annihilates(int k, const std::vector<Rational>& v) const {
    if (v.size() != cols(k)) throw std::invalid_argument("vector length differs from the column count");
    // Clear denominators so the accumulation runs over the integers.
    Integer den = 1;
    for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> acc(rows(k), 0);
    const auto us = monomials(k);
    for (std::size_t comp = 0; comp < 3; ++comp)
        for (std::size_t j = 0; j < us.size(); ++j) {
            const Rational& q = v[comp * us.size() + j];
            if (sgn(q) == 0) continue;
            const Integer scaled = q.get_num() * (den / q.get_den());
            for (const auto& t : partials_[comp]) {
                const Exponent e{us[j].a + t.e.a, us[j].b + t.e.b, us[j].c + t.e.c};
                acc[monomial_index(e)] += scaled * t.c;
            }
        }
    for (const auto& a : acc)
        if (sgn(a) != 0) return false;
    return true;
}

}  // namespace pogcl
