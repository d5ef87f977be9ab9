#include "sl3ext/matrix.hpp"

namespace sl3ext {

namespace {
void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!a->same_descriptor(*b)) throw error("matrix operands live in different rings");
}
}  // namespace

Mat2 make_mat2(const RingPtr& R, const Elem& a, const Elem& b, const Elem& c, const Elem& d) {
    return Mat2{R, R->canonicalize(a), R->canonicalize(b), R->canonicalize(c), R->canonicalize(d)};
}

Mat3 make_mat3(const RingPtr& R, const std::array<Elem, 9>& entries) {
    Mat3 out{R, entries};
    for (Elem& e : out.m) e = R->canonicalize(e);
    return out;
}

Mat2 identity2(const RingPtr& R) { return Mat2{R, R->one(), R->zero(), R->zero(), R->one()}; }

Mat3 identity3(const RingPtr& R) {
    const Elem z = R->zero(), o = R->one();
    return Mat3{R, {o, z, z, z, o, z, z, z, o}};
}

Mat2 diag2(const RingPtr& R, const Elem& x, const Elem& y) {
    return Mat2{R, R->canonicalize(x), R->zero(), R->zero(), R->canonicalize(y)};
}

Elem det2(const Mat2& A) {
    auto& R = *A.R;
    return R.sub(R.mul(A.a, A.d), R.mul(A.b, A.c));
}

Elem trace2(const Mat2& A) { return A.R->add(A.a, A.d); }

Mat2 mul2(const Mat2& A, const Mat2& B) {
    require_same_ring(A.R, B.R);
    auto& R = *A.R;
    return Mat2{A.R,
                R.add(R.mul(A.a, B.a), R.mul(A.b, B.c)),
                R.add(R.mul(A.a, B.b), R.mul(A.b, B.d)),
                R.add(R.mul(A.c, B.a), R.mul(A.d, B.c)),
                R.add(R.mul(A.c, B.b), R.mul(A.d, B.d))};
}

Mat2 transpose2(const Mat2& A) { return Mat2{A.R, A.a, A.c, A.b, A.d}; }

std::optional<Mat2> inverse2(const Mat2& A) {
    auto& R = *A.R;
    auto inv = R.inverse(det2(A));
    if (!inv) return std::nullopt;
    return Mat2{A.R, R.mul(*inv, A.d), R.mul(*inv, R.neg(A.b)), R.mul(*inv, R.neg(A.c)),
                R.mul(*inv, A.a)};
}

Elem det3(const Mat3& Q) {
    auto& R = *Q.R;
    auto minor = [&](int r1, int r2, int c1, int c2) {
        return R.sub(R.mul(Q.at(r1, c1), Q.at(r2, c2)), R.mul(Q.at(r1, c2), Q.at(r2, c1)));
    };
    Elem t0 = R.mul(Q.at(0, 0), minor(1, 2, 1, 2));
    Elem t1 = R.mul(Q.at(0, 1), minor(1, 2, 0, 2));
    Elem t2 = R.mul(Q.at(0, 2), minor(1, 2, 0, 1));
    return R.add(R.sub(t0, t1), t2);
}

Mat3 mul3(const Mat3& A, const Mat3& B) {
    require_same_ring(A.R, B.R);
    auto& R = *A.R;
    Mat3 out{A.R, {}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Elem acc = R.zero();
            for (int k = 0; k < 3; ++k) acc = R.add(acc, R.mul(A.at(i, k), B.at(k, j)));
            out.at(i, j) = acc;
        }
    return out;
}

Mat3 transpose3(const Mat3& A) {
    Mat3 out{A.R, {}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.at(i, j) = A.at(j, i);
    return out;
}

CharPoly3 char_poly3(const Mat3& Q) {
    auto& R = *Q.R;
    auto minor = [&](int r1, int r2, int c1, int c2) {
        return R.sub(R.mul(Q.at(r1, c1), Q.at(r2, c2)), R.mul(Q.at(r1, c2), Q.at(r2, c1)));
    };
    Elem tr = R.add(R.add(Q.at(0, 0), Q.at(1, 1)), Q.at(2, 2));
    Elem nu = R.add(R.add(minor(1, 2, 1, 2), minor(0, 2, 0, 2)), minor(0, 1, 0, 1));
    return CharPoly3{tr, nu, det3(Q)};
}

Mat2 theta(const Mat3& Q) { return Mat2{Q.R, Q.at(0, 0), Q.at(0, 1), Q.at(1, 0), Q.at(1, 1)}; }

Mat3 sigma(const Mat2& M, const Elem& det_inverse) {
    auto& R = *M.R;
    if (!R.is_one(R.mul(det2(M), det_inverse)))
        throw error("sigma: det_inverse is not an inverse of det(M)");
    const Elem z = R.zero();
    return Mat3{M.R, {M.a, M.b, z, M.c, M.d, z, z, z, R.canonicalize(det_inverse)}};
}

bool is_unimodular_mat2(const Mat2& A) {
    return A.R->is_unimodular({A.a, A.b, A.c, A.d});
}

Mat2 reduce_mod(const Mat2& A, const Elem& a, QuotientMap* map_out) {
    QuotientMap qm = A.R->quotient(a);
    Mat2 out{qm.target, qm.reduce(A.a), qm.reduce(A.b), qm.reduce(A.c), qm.reduce(A.d)};
    if (map_out) *map_out = qm;
    return out;
}

}  // namespace sl3ext
