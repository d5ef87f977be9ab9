#pragma once

#include <doctest.h>

#include <random>

#include "sl3ext/extension.hpp"

namespace sl3ext::testutil {

inline Mat2 mat2i(const RingPtr& R, long a, long b, long c, long d) {
    return make_mat2(R, R->from_int(a), R->from_int(b), R->from_int(c), R->from_int(d));
}

inline Mat3 mat3i(const RingPtr& R, std::array<long, 9> e) {
    std::array<Elem, 9> entries;
    for (size_t i = 0; i < 9; ++i) entries[i] = R->from_int(e[i]);
    return make_mat3(R, entries);
}

inline long rnd_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + long(rng() % static_cast<unsigned long>(hi - lo + 1));
}

/// Random unimodular 2x2 over Z with entries in [lo, hi], by rejection.
inline Mat2 random_unimodular_z(std::mt19937_64& rng, const RingPtr& Z, long lo, long hi) {
    for (;;) {
        Mat2 A = mat2i(Z, rnd_range(rng, lo, hi), rnd_range(rng, lo, hi), rnd_range(rng, lo, hi),
                       rnd_range(rng, lo, hi));
        if (is_unimodular_mat2(A)) return A;
    }
}

/// Random GL2 element: over Z a product of shears (and a possible flip),
/// over finite rings rejection sampling on the determinant.
inline Mat2 random_gl2(std::mt19937_64& rng, const RingPtr& R, int shears = 4) {
    if (R->finite()) {
        auto els = R->elements();
        for (;;) {
            Mat2 M{R, els[rng() % els.size()], els[rng() % els.size()], els[rng() % els.size()],
                   els[rng() % els.size()]};
            if (R->is_unit(det2(M))) return M;
        }
    }
    Mat2 M = identity2(R);
    for (int i = 0; i < shears; ++i) {
        Elem r = R->from_int(rnd_range(rng, -3, 3));
        Mat2 S = rng() % 2 ? Mat2{R, R->one(), r, R->zero(), R->one()}
                           : Mat2{R, R->one(), R->zero(), r, R->one()};
        M = mul2(M, S);
    }
    if (rng() % 2) M = mul2(M, Mat2{R, R->one(), R->zero(), R->zero(), R->from_int(-1)});
    return M;
}

/// Random SL3 element as a product of elementary shears.
inline Mat3 random_sl3(std::mt19937_64& rng, const RingPtr& R, int shears = 6) {
    Mat3 Q = identity3(R);
    for (int k = 0; k < shears; ++k) {
        int i = int(rng() % 3), j = int(rng() % 3);
        if (i == j) continue;
        Mat3 E = identity3(R);
        E.at(i, j) = R->from_int(rnd_range(rng, -3, 3));
        Q = mul3(Q, E);
    }
    return Q;
}

}  // namespace sl3ext::testutil
