#pragma once

#include <array>
#include <optional>

#include "sl3ext/ring.hpp"

namespace sl3ext {

/// Immutable 2x2 matrix [[a, b], [c, d]] over a ring.
struct Mat2 {
    RingPtr R;
    Elem a, b, c, d;
    bool operator==(const Mat2& o) const {
        return R->same_descriptor(*o.R) && a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

/// Immutable 3x3 matrix, row major.
struct Mat3 {
    RingPtr R;
    std::array<Elem, 9> m;
    const Elem& at(int i, int j) const { return m[size_t(3 * i + j)]; }
    Elem& at(int i, int j) { return m[size_t(3 * i + j)]; }
    bool operator==(const Mat3& o) const { return R->same_descriptor(*o.R) && m == o.m; }
};

Mat2 make_mat2(const RingPtr& R, const Elem& a, const Elem& b, const Elem& c, const Elem& d);
Mat3 make_mat3(const RingPtr& R, const std::array<Elem, 9>& entries);
Mat2 identity2(const RingPtr& R);
Mat3 identity3(const RingPtr& R);
Mat2 diag2(const RingPtr& R, const Elem& x, const Elem& y);

Elem det2(const Mat2& A);
Elem trace2(const Mat2& A);
Mat2 mul2(const Mat2& A, const Mat2& B);
Mat2 transpose2(const Mat2& A);
/// Adjugate-based inverse; requires det2(A) to be a unit.
std::optional<Mat2> inverse2(const Mat2& A);

Elem det3(const Mat3& Q);  // cofactor expansion, division free
Mat3 mul3(const Mat3& A, const Mat3& B);
Mat3 transpose3(const Mat3& A);

/// Characteristic polynomial coefficients of a 3x3 matrix:
/// x^3 - tr*x^2 + nu*x - det, with nu the sum of principal 2x2 minors.
struct CharPoly3 {
    Elem tr, nu, det;
};
CharPoly3 char_poly3(const Mat3& Q);

/// Drops the third row and column.
Mat2 theta(const Mat3& Q);

/// Embeds an invertible 2x2 block as [[M, 0], [0, det(M)^-1]].
/// Rejects inputs where det2(M) * det_inverse != 1.
Mat3 sigma(const Mat2& M, const Elem& det_inverse);

/// Matrix unimodularity: the four entries generate the unit ideal.
bool is_unimodular_mat2(const Mat2& A);

/// Entrywise reduction modulo (a); optionally exposes the quotient map used.
Mat2 reduce_mod(const Mat2& A, const Elem& a, QuotientMap* map_out = nullptr);

}  // namespace sl3ext
