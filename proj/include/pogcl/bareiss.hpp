// Fraction-free (Bareiss) elimination over an integral domain.
//
// The ring is described by RingTraits<T>, which must provide
// static bool is_zero(const T&);
// static T exact_div(const T& a, const T& b);   // b divides a
// static T negate(const T& a);
// plus the usual +, -, * operators on T. Every intermediate entry is a minor of
// the input, so the exact divisions never leave the ring.
#ifndef POGCL_BAREISS_HPP
#define POGCL_BAREISS_HPP

#include "pogcl/dense_matrix.hpp"
#include "pogcl/rational.hpp"

#include <cstddef>

namespace pogcl {

template <class T>
struct RingTraits;

template <>
struct RingTraits<Integer> {
    static bool is_zero(const Integer& a) { return sgn(a) == 0; }
    static Integer exact_div(const Integer& a, const Integer& b) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static Integer negate(const Integer& a) { return -a; }
};

/// Determinant of a square matrix; `one` is the ring's unit.
template <class T>
T bareiss_determinant(DenseMatrix<T> a, const T& one) {
    using R = RingTraits<T>;
    const std::size_t n = a.rows();
    if (n == 0) return one;
    bool negate = false;
    T prev = one;
    for (std::size_t k = 0; k < n; ++k) {
        if (R::is_zero(a(k, k))) {
            std::size_t r = k + 1;
            while (r < n && R::is_zero(a(r, k))) ++r;
            if (r == n) return a(k, k);  // zero
            a.swap_rows(k, r);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = R::exact_div(t, prev);
            }
        }
        prev = a(k, k);
    }
    T det = a(n - 1, n - 1);
    return negate ? R::negate(det) : det;
}

/// Rank of a rectangular matrix by fraction-free row echelon reduction.
template <class T>
std::size_t bareiss_rank(DenseMatrix<T> a, const T& one) {
    using R = RingTraits<T>;
    std::size_t rank = 0;
    T prev = one;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t r = rank;
        while (r < a.rows() && R::is_zero(a(r, col))) ++r;
        if (r == a.rows()) continue;
        a.swap_rows(rank, r);
        for (std::size_t i = rank + 1; i < a.rows(); ++i) {
            const bool lead_zero = R::is_zero(a(i, col));
            for (std::size_t j = col + 1; j < a.cols(); ++j) {
                T t = lead_zero ? T(a(i, j) * a(rank, col)) : T(a(i, j) * a(rank, col) - a(i, col) * a(rank, j));
                a(i, j) = R::exact_div(t, prev);
            }
        }
        prev = a(rank, col);
        ++rank;
    }
    return rank;
}

}  // namespace pogcl

#endif
