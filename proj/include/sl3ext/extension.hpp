#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sl3ext/matrix.hpp"

namespace sl3ext {

/// Witness (e, f, s, t) for a simple extension of [[a,b],[c,d]]:
/// a(es) + b(et) + c(fs) + d(ft) = 1, which is exactly the determinant of
/// [[a, b, f], [c, d, -e], [-t, s, 0]].
struct Certificate {
    Elem e, f, s, t;
};

bool certificate_valid(const Mat2& A, const Certificate& cert);

/// [[a, b, f], [c, d, -e], [-t, s, 0]]; rejects invalid certificates.
Mat3 assemble_simple_extension(const Mat2& A, const Certificate& cert);

/// Tries to complete (e, f) to a certificate: first via the pair
/// (ae+cf, be+df), then via the transposed pair (ae+bf, ce+df) whose
/// certificate converts back through (e,f,s,t) -> (s,t,e,f).
std::optional<Certificate> complete_pair(const Mat2& A, const Elem& e, const Elem& f);

/// Cheap (e, f) candidates: unit entries, unimodular rows/columns, entries in
/// the radical, the a|b & a|c divisibility pattern, and the two zero-corner
/// templates a=0, d=1+b+c and c=0, d=1-a+b with (e,f) = (1,-1).
/// Returns the first candidate accepted by complete_pair.
std::optional<std::pair<Elem, Elem>> heuristic_pair(const Mat2& A);

/// Column/row content split of A: a = g a', c = g c', b = h b', d = h d',
/// a'e' + c'f' = 1, l = b'c' - a'd', m = b'e' + d'f'. det(A) = -ghl.
struct FactoredForm {
    Elem g, h, a1, b1, c1, d1, e1, f1, l, m;
};
std::optional<FactoredForm> factored_form(const Mat2& A);

/// From a factored form, a pair (w, v) with (g, wm+vl) and (w, hvl)
/// unimodular, found through the four coprimality cases on
/// {(g,m), (g,l), (h,l), (h,m)} in that order. Absent when no case applies.
std::optional<std::pair<Elem, Elem>> factored_pair(const RingPtr& R, const FactoredForm& ff);

/// (e, f) = (w e' + c' v, w f' - a' v).
std::pair<Elem, Elem> factored_to_ef(const RingPtr& R, const FactoredForm& ff, const Elem& w,
                                     const Elem& v);

/// Exhaustive (e, f) search by increasing height (all pairs on finite rings).
std::optional<std::pair<Elem, Elem>> search_pair(const Mat2& A, long bound);

/// A = column (l, m) * row (o, q).
struct NonfullFactorization {
    Elem l, m, o, q;
};

struct SplitRejection {
    Elem divisor, cofactor;
    std::string reason;
};

/// Exhaustive divisor case analysis on a pivot entry proving fullness.
struct FullnessProof {
    Elem pivot;
    std::vector<Elem> divisors;
    std::vector<SplitRejection> rejected;
};

struct FullnessWitness {
    std::optional<NonfullFactorization> factorization;
    std::optional<FullnessProof> proof;
};

/// Decides fullness of a unimodular determinant-zero matrix. Always returns
/// a factorization over Z, Z[1/m] and finite rings; over quadratic orders it
/// returns either a factorization or a fullness proof.
FullnessWitness nonfull_factorize(const Mat2& A);

Mat3 extension_from_factorization(const Mat2& A, const NonfullFactorization& nf);
/// Same, also exposing the certificate read off the two Bezout witnesses.
std::pair<Mat3, Certificate> extension_from_factorization_with_cert(
    const Mat2& A, const NonfullFactorization& nf);

/// SL2 pair (M, N) with M A N = Diag(1, det2(A)), built from a certificate.
std::pair<Mat2, Mat2> diagonal_reduce(const Mat2& A, const Certificate& cert);

/// sigma(M^-1) * [[1,0,0],[0,d,1],[0,-1,0]] * sigma(N^-1); a simple extension
/// of A whenever M A N = Diag(1, d).
Mat3 extension_from_diagonal(const Mat2& M, const Mat2& N, const Elem& d);

/// (r1, r2) with (e1 + b r1, f1 + b r2) unimodular, given (e1, f1, b)
/// unimodular. CRT construction over Z and Z[1/m], exhaustive scan on finite
/// rings, capped height search on quadratic orders (throws on cap
/// exhaustion).
std::pair<Elem, Elem> stable_range2_reduce(const RingPtr& R, const Elem& e1, const Elem& f1,
                                           const Elem& b, long cap = 8);

/// r with (a + br, c) unimodular for (a, b, c) unimodular, c != 0;
/// Z and Z[1/m] only.
Elem fsr_reduce(const RingPtr& R, const Elem& a, const Elem& b, const Elem& c);

/// Certificate upgrade: from (e1, f1) with (ae1+cf1, be1+df1, det) unimodular
/// to a full certificate, through stable_range2_reduce. Absent only when the
/// quadratic-order search cap is hit.
std::optional<Certificate> upgrade_to_simple(const Mat2& A, const Elem& e1, const Elem& f1,
                                             long cap = 8);

/// Simple extension of an upper triangular unimodular matrix with nonzero
/// (1,1) entry whose (2,3) entry is -1; Z and Z[1/m] only.
Mat3 triangular_simple_extension(const Mat2& A);

enum class OutcomeStatus { Simple, ExtendableOnly, NotExtendable, Undecided };

struct ExtensionOutcome {
    OutcomeStatus status;
    std::optional<Mat3> extension;
    std::optional<Certificate> certificate;
    std::optional<FullnessWitness> witness;
    std::optional<long> bound;
};

/// Decision pipeline for simple extendability: determinant-zero fullness
/// analysis, heuristics, factored form on A and its transpose, bounded
/// search, then the stable-range-2 upgrade where applicable. Every Simple
/// result is re-validated (det 1, theta, zero corner) before returning.
ExtensionOutcome simply_extend(const Mat2& A, long bound = 64);

/// Extendability via reduction modulo the determinant: unit determinant
/// short-circuits to an invertible-case simple extension, determinant zero
/// reuses the fullness analysis, and otherwise the finite quotient decides,
/// with the solution lifted by correcting the (3,3) entry.
ExtensionOutcome extend(const Mat2& A, long bound = 64);

}  // namespace sl3ext
