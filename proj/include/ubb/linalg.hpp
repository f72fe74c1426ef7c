#pragma once

#include "ubb/matrix.hpp"

#include <vector>

namespace ubb {

// Exact rank by fraction-free (Bareiss) elimination after clearing each row
// to integers. No tolerances anywhere.
int rank(const RationalMatrix& m);

// Basis of the right null space; size equals cols - rank.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

// Gram-Schmidt over the rationals with denominators cleared: every output is
// a primitive integer vector. The first output keeps the orientation of the
// first input; later outputs are normalized so their first nonzero entry is
// positive. Throws on linearly dependent input.
std::vector<RationalVector> orthogonalize(const std::vector<RationalVector>& vs);

// Coefficients of det(xI - M) in ascending degree order, c[0]..c[n], with
// c[n] = 1. Exact for any square rational matrix.
std::vector<Rational> char_poly(const RationalMatrix& m);

// True iff all eigenvalues of the symmetric matrix are >= 0, decided by the
// sign-alternation rule on the exact characteristic polynomial. Throws on
// asymmetric input.
bool is_psd(const RationalMatrix& m);

struct EigInterval {
    Rational lo;
    Rational hi;
};

// Rigorous enclosure of the minimum eigenvalue of a symmetric matrix with
// width at most `width`. The PSD predicate used for the bisection is exact,
// so the interval endpoints are certified bounds.
EigInterval min_eig_bound(const RationalMatrix& m, const Rational& width = Rational(1, 1000000000));

namespace detail {

// Reference implementations used as cross-checking oracles in the test suite.
std::vector<Rational> char_poly_faddeev_leverrier(const RationalMatrix& m);
std::vector<Rational> char_poly_modular(const RationalMatrix& m);

// PSD test for a polynomial already known to have only real roots:
// p(x) = sum c_k x^k monic of degree n has all roots >= 0 iff
// (-1)^k c_{n-k} >= 0 for every k.
bool nonnegative_roots(const std::vector<Rational>& coeffs);

}  // namespace detail

}  // namespace ubb
