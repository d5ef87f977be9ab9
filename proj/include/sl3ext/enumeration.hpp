#pragma once

#include "sl3ext/extension.hpp"

namespace sl3ext {

/// Bounded sample of the invariant set nu(A) = {det(A) + es + ft} over the
/// certificate quadruples of A.
struct NuSample {
    Mat2 matrix;
    long bound;
    std::vector<Certificate> gamma;
    std::vector<Int> values;  // sorted, deduplicated
};

/// All integer quadruples (e, f, s, t) with max |coordinate| <= bound and
/// a(es) + b(et) + c(fs) + d(ft) = 1, in lexicographic order. The scan fixes
/// (e, f, s) and solves the remaining linear constraint for t.
std::vector<Certificate> gamma_enumerate(const Mat2& A, long bound);

NuSample nu_enumerate(const Mat2& A, long bound);

/// The class 2 + (d-1)Z that nu(Diag(1, d)) fills over the integers.
struct ResidueClass {
    Int base, modulus;
    bool contains(const Int& v) const;
    std::string to_string() const;
};
ResidueClass nu_diag_closed_form(const Int& d);

}  // namespace sl3ext
