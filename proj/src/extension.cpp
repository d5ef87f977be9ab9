#include "sl3ext/extension.hpp"

#include <algorithm>

namespace sl3ext {

namespace {

// chinese remainder over pairwise coprime prime moduli, least nonnegative
Int crt(const std::vector<std::pair<Int, Int>>& congruences) {
    Int x = 0, mod = 1;
    for (const auto& [r, p] : congruences) {
        Int k = mod_floor((r - x) * *mod_inverse(mod_floor(mod, p), p), p);
        x += mod * k;
        mod *= p;
    }
    return x;
}

// avoid the single forbidden residue rho mod p
Int allowed_residue(const Int& rho) { return rho == 0 ? Int(1) : Int(0); }

// r' with gcd-type condition: na + nb*r' avoids every prime of nc outside m
Int fsr_core(const Int& na, const Int& nb, const Int& nc, const Int& m) {
    Int target = m == 0 ? abs(nc) : strip_factors_of(nc, m);
    if (target <= 1) return Int(0);
    std::vector<std::pair<Int, Int>> congs;
    for (const Int& p : prime_factors(target)) {
        if (divides(p, nb)) continue;  // then p cannot divide na
        Int rho = mod_floor(-na * *mod_inverse(mod_floor(nb, p), p), p);
        congs.push_back({allowed_residue(rho), p});
    }
    return congs.empty() ? Int(0) : crt(congs);
}

std::pair<Int, Int> sr2_core(const Int& ne, const Int& nf, const Int& nb, const Int& m) {
    if (nb == 0) return {Int(0), Int(0)};
    Int r1 = ne == 0 ? 1 : 0;
    Int E = ne + nb * r1;
    std::vector<std::pair<Int, Int>> congs;
    Int target = m == 0 ? abs(E) : strip_factors_of(E, m);
    if (target > 1) {
        for (const Int& p : prime_factors(target)) {
            if (divides(p, nb)) continue;  // unimodularity forces p away from nf
            Int rho = mod_floor(-nf * *mod_inverse(mod_floor(nb, p), p), p);
            congs.push_back({allowed_residue(rho), p});
        }
    }
    Int r2 = congs.empty() ? Int(0) : crt(congs);
    return {r1, r2};
}

// integer r' -> element r with x + b*r having numerator n_x + n_b*r'
Elem loc_scale(const RingPtr& R, const Int& rp, const Int& xv, const Int& bv) {
    const Int& m = R->loc_m();
    if (bv >= xv) {
        Int diff = bv - xv;
        return R->make(rp * pow_ui(m, mpz_get_ui(diff.get_mpz_t())), Int(0));
    }
    Int diff = xv - bv;
    return R->make(rp, diff);
}

std::optional<std::pair<Elem, Elem>> sr2_impl(const RingPtr& R, const Elem& e1, const Elem& f1,
                                              const Elem& b, long cap) {
    if (!R->is_unimodular({e1, f1, b}))
        throw error("stable_range2_reduce: (e', f', b) is not unimodular");
    switch (R->kind()) {
        case RingKind::Integers: {
            auto [r1, r2] = sr2_core(e1.u, f1.u, b.u, Int(0));
            return std::make_pair(R->from_int(r1), R->from_int(r2));
        }
        case RingKind::LocalizedIntegers: {
            auto [r1, r2] = sr2_core(e1.u, f1.u, b.u, R->loc_m());
            return std::make_pair(loc_scale(R, r1, e1.v, b.v), loc_scale(R, r2, f1.v, b.v));
        }
        case RingKind::IntegersModN:
        case RingKind::QuotientRing: {
            auto els = R->elements();
            for (const Elem& r1 : els)
                for (const Elem& r2 : els) {
                    Elem x = R->add(e1, R->mul(b, r1));
                    Elem y = R->add(f1, R->mul(b, r2));
                    if (R->is_unimodular({x, y})) return std::make_pair(r1, r2);
                }
            throw internal_error("stable range 1 scan failed on a finite ring");
        }
        case RingKind::QuadraticOrder: {
            for (long h1 = 0; h1 <= cap; ++h1)
                for (long h2 = 0; h2 <= cap; ++h2)
                    for (const Elem& r1 : R->elements_of_height(h1))
                        for (const Elem& r2 : R->elements_of_height(h2)) {
                            Elem x = R->add(e1, R->mul(b, r1));
                            Elem y = R->add(f1, R->mul(b, r2));
                            if (R->is_unimodular({x, y})) return std::make_pair(r1, r2);
                        }
            return std::nullopt;
        }
    }
    throw internal_error("bad kind");
}

void check_simple(const Mat2& A, const Mat3& ext, const Certificate& cert) {
    auto& R = *A.R;
    if (!R.is_one(det3(ext))) throw internal_error("simple extension has determinant != 1");
    if (!(theta(ext) == A)) throw internal_error("simple extension does not restrict to A");
    if (!R.is_zero(ext.at(2, 2))) throw internal_error("simple extension has nonzero corner");
    if (!certificate_valid(A, cert)) throw internal_error("certificate failed validation");
}

ExtensionOutcome simple_outcome(const Mat2& A, const Mat3& ext, const Certificate& cert,
                                std::optional<FullnessWitness> w = std::nullopt) {
    check_simple(A, ext, cert);
    ExtensionOutcome out;
    out.status = OutcomeStatus::Simple;
    out.extension = ext;
    out.certificate = cert;
    out.witness = std::move(w);
    return out;
}

void require_unimodular(const Mat2& A) {
    if (!is_unimodular_mat2(A)) {
        auto& R = *A.R;
        throw error("matrix is not unimodular: the entries {" + R.to_string(A.a) + ", " +
                    R.to_string(A.b) + ", " + R.to_string(A.c) + ", " + R.to_string(A.d) +
                    "} generate a proper ideal of " + R.describe());
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// certificates
// ---------------------------------------------------------------------------

bool certificate_valid(const Mat2& A, const Certificate& cert) {
    auto& R = *A.R;
    Elem total = R.add(R.add(R.mul(A.a, R.mul(cert.e, cert.s)), R.mul(A.b, R.mul(cert.e, cert.t))),
                       R.add(R.mul(A.c, R.mul(cert.f, cert.s)), R.mul(A.d, R.mul(cert.f, cert.t))));
    return R.is_one(total);
}

Mat3 assemble_simple_extension(const Mat2& A, const Certificate& cert) {
    auto& R = *A.R;
    if (!certificate_valid(A, cert))
        throw error("assemble_simple_extension: certificate violates the determinant identity");
    Mat3 ext{A.R,
             {A.a, A.b, cert.f, A.c, A.d, R.neg(cert.e), R.neg(cert.t), cert.s, R.zero()}};
    if (!R.is_one(det3(ext))) throw internal_error("assembled extension has determinant != 1");
    return ext;
}

std::optional<Certificate> complete_pair(const Mat2& A, const Elem& e, const Elem& f) {
    auto& R = *A.R;
    Elem u = R.add(R.mul(A.a, e), R.mul(A.c, f));
    Elem w = R.add(R.mul(A.b, e), R.mul(A.d, f));
    if (auto bz = R.bezout({u, w})) return Certificate{e, f, (*bz)[0], (*bz)[1]};
    // transposed variant, converted back to a certificate for A itself
    Elem u2 = R.add(R.mul(A.a, e), R.mul(A.b, f));
    Elem w2 = R.add(R.mul(A.c, e), R.mul(A.d, f));
    if (auto bz = R.bezout({u2, w2})) return Certificate{(*bz)[0], (*bz)[1], e, f};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// heuristics
// ---------------------------------------------------------------------------

std::optional<std::pair<Elem, Elem>> heuristic_pair(const Mat2& A) {
    auto& R = *A.R;
    const Elem one = R.one(), zero = R.zero();
    std::vector<std::pair<Elem, Elem>> cands;
    auto push = [&](const Elem& e, const Elem& f) {
        for (auto& c : cands)
            if (c.first == e && c.second == f) return;
        cands.push_back({e, f});
    };

    // unit entries
    if (R.is_unit(A.a) || R.is_unit(A.b)) push(one, zero);
    if (R.is_unit(A.c) || R.is_unit(A.d)) push(zero, one);
    // unimodular rows / columns
    if (R.is_unimodular({A.a, A.b}) || R.is_unimodular({A.a, A.c})) push(one, zero);
    if (R.is_unimodular({A.c, A.d}) || R.is_unimodular({A.b, A.d})) push(zero, one);
    // two entries in the radical
    if (R.jacobson_contains(A.b) && R.jacobson_contains(A.c)) {
        if (auto bz = R.bezout({A.a, A.d})) push((*bz)[0], (*bz)[1]);
    }
    if (R.jacobson_contains(A.a) && R.jacobson_contains(A.d)) {
        if (auto bz = R.bezout({A.b, A.c})) push((*bz)[0], (*bz)[1]);
    }
    // divisibility pattern a | b, a | c
    if (!R.is_zero(A.a)) {
        auto B = R.exact_div(A.b, A.a);
        auto C = R.exact_div(A.c, A.a);
        if (B && C) {
            if (auto bz = R.bezout({A.a, A.d})) {
                const Elem& q0 = (*bz)[0];
                const Elem& f0 = (*bz)[1];
                Elem e = R.sub(q0, R.mul(R.mul(*C, f0), R.sub(one, *B)));
                push(e, f0);
            }
        }
    }
    // zero-corner templates with a fixed (1, -1)
    if (R.is_zero(A.a) && A.d == R.add(one, R.add(A.b, A.c))) push(one, R.neg(one));
    if (R.is_zero(A.c) && A.d == R.add(one, R.sub(A.b, A.a))) push(one, R.neg(one));

    for (const auto& [e, f] : cands)
        if (complete_pair(A, e, f)) return std::make_pair(e, f);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// factored form
// ---------------------------------------------------------------------------

namespace {

// content split of a column (x, y) = g * (x', y') with (x', y') unimodular;
// integer-level division so the primed pair stays unimodular in the ring
bool content_split(const RingPtr& R, const Elem& x, const Elem& y, Elem& g, Elem& x1, Elem& y1) {
    switch (R->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersModN: {
            Int g0 = gcd(x.u, y.u);
            if (g0 == 0) return false;
            g = R->make(g0, Int(0));
            x1 = R->make(x.u / g0, Int(0));
            y1 = R->make(y.u / g0, Int(0));
            return true;
        }
        case RingKind::LocalizedIntegers: {
            Int g0 = strip_factors_of(gcd(x.u, y.u), R->loc_m());
            if (g0 == 0) return false;
            g = R->make(g0, Int(0));
            x1 = R->make(x.u / g0, x.v);
            y1 = R->make(y.u / g0, y.v);
            return true;
        }
        default:
            return false;
    }
}

}  // namespace

std::optional<FactoredForm> factored_form(const Mat2& A) {
    auto R = A.R;
    if (!R->capabilities().gcd) throw error("factored_form: ring has no gcd capability");
    require_unimodular(A);
    FactoredForm ff;
    if (!content_split(R, A.a, A.c, ff.g, ff.a1, ff.c1)) return std::nullopt;  // g = 0
    if (R->is_zero(A.b) && R->is_zero(A.d)) {
        ff.h = R->zero();
        ff.b1 = R->zero();
        ff.d1 = R->one();
    } else {
        if (!content_split(R, A.b, A.d, ff.h, ff.b1, ff.d1))
            throw internal_error("content split failed on a nonzero column");
    }
    auto bz = R->bezout({ff.a1, ff.c1});
    if (!bz) throw internal_error("primed column is not unimodular");
    ff.e1 = (*bz)[0];
    ff.f1 = (*bz)[1];
    ff.l = R->sub(R->mul(ff.b1, ff.c1), R->mul(ff.a1, ff.d1));
    ff.m = R->add(R->mul(ff.b1, ff.e1), R->mul(ff.d1, ff.f1));
    // det(A) = -g*h*l
    if (!(det2(A) == R->neg(R->mul(ff.g, R->mul(ff.h, ff.l)))))
        throw internal_error("factored form determinant identity failed");
    return ff;
}

std::optional<std::pair<Elem, Elem>> factored_pair(const RingPtr& R, const FactoredForm& ff) {
    std::optional<std::pair<Elem, Elem>> wv;
    if (R->is_unimodular({ff.g, ff.m})) {
        wv = std::make_pair(R->one(), R->zero());
    } else if (R->is_unimodular({ff.g, ff.l})) {
        wv = std::make_pair(ff.g, R->one());
    } else if (R->is_unimodular({ff.h, ff.l})) {
        auto bz = R->bezout({ff.l, ff.m});
        if (!bz) throw internal_error("(l, m) is not unimodular");
        const Elem& p = (*bz)[0];
        const Elem& q = (*bz)[1];
        wv = std::make_pair(R->add(R->mul(ff.h, q), ff.l), R->sub(R->mul(ff.h, p), ff.m));
    } else if (R->is_unimodular({ff.h, ff.m})) {
        auto bz = R->bezout({ff.m, R->mul(ff.h, ff.l)});
        if (!bz) throw internal_error("(m, hl) is not unimodular");
        wv = std::make_pair((*bz)[0], R->mul(ff.h, (*bz)[1]));
    } else {
        return std::nullopt;
    }
    // (g, wm + vl) and (w, hvl) must be unimodular by construction
    Elem wm_vl = R->add(R->mul(wv->first, ff.m), R->mul(wv->second, ff.l));
    Elem hvl = R->mul(ff.h, R->mul(wv->second, ff.l));
    if (!R->is_unimodular({ff.g, wm_vl}) || !R->is_unimodular({wv->first, hvl}))
        throw internal_error("factored pair failed its postcondition");
    return wv;
}

std::pair<Elem, Elem> factored_to_ef(const RingPtr& R, const FactoredForm& ff, const Elem& w,
                                     const Elem& v) {
    return {R->add(R->mul(w, ff.e1), R->mul(ff.c1, v)),
            R->sub(R->mul(w, ff.f1), R->mul(ff.a1, v))};
}

// ---------------------------------------------------------------------------
// bounded search
// ---------------------------------------------------------------------------

std::optional<std::pair<Elem, Elem>> search_pair(const Mat2& A, long bound) {
    auto R = A.R;
    require_unimodular(A);
    if (R->finite()) {
        auto els = R->elements();
        for (const Elem& e : els)
            for (const Elem& f : els)
                if (complete_pair(A, e, f)) return std::make_pair(e, f);
        return std::nullopt;
    }
    // four coefficient dimensions on a quadratic order; keep the scan tight
    long effective = R->kind() == RingKind::QuadraticOrder ? std::min(bound, 8L) : bound;
    std::vector<Elem> pool;
    std::vector<Int> hts;
    for (long h = 0; h <= effective; ++h) {
        for (const Elem& x : R->elements_of_height(h)) {
            pool.push_back(x);
            hts.push_back(Int(h));
        }
        Int H(h);
        for (size_t i = 0; i < pool.size(); ++i)
            for (size_t j = 0; j < pool.size(); ++j) {
                if (std::max(hts[i], hts[j]) != H) continue;
                if (complete_pair(A, pool[i], pool[j]))
                    return std::make_pair(pool[i], pool[j]);
            }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// fullness analysis for determinant zero
// ---------------------------------------------------------------------------

namespace {

std::optional<NonfullFactorization> zero_line_factorization(const Mat2& A) {
    auto& R = *A.R;
    const Elem one = R.one(), zero = R.zero();
    if (R.is_zero(A.a) && R.is_zero(A.c)) return NonfullFactorization{A.b, A.d, zero, one};
    if (R.is_zero(A.b) && R.is_zero(A.d)) return NonfullFactorization{A.a, A.c, one, zero};
    if (R.is_zero(A.a) && R.is_zero(A.b)) return NonfullFactorization{zero, one, A.c, A.d};
    if (R.is_zero(A.c) && R.is_zero(A.d)) return NonfullFactorization{one, zero, A.a, A.b};
    return std::nullopt;
}

FullnessWitness quad_fullness(const Mat2& A) {
    auto R = A.R;
    // all four entries are nonzero here (a zero entry forces a zero line
    // when the determinant vanishes over a domain)
    int pivot = 0;
    const Elem* entries[4] = {&A.a, &A.b, &A.c, &A.d};
    for (int i = 1; i < 4; ++i)
        if (R->quad_norm(*entries[i]) < R->quad_norm(*entries[pivot])) pivot = i;

    FullnessProof proof;
    proof.pivot = *entries[pivot];
    proof.divisors = R->divisors_up_to_units(proof.pivot);

    for (const Elem& d0 : proof.divisors) {
        Elem cof = *R->exact_div(proof.pivot, d0);
        std::optional<NonfullFactorization> nf;
        std::string why;
        auto need = [&](const Elem& x, const Elem& by, const char* what) -> std::optional<Elem> {
            auto r = R->exact_div(x, by);
            if (!r) why = std::string(what) + " is not divisible by " + R->to_string(by);
            return r;
        };
        switch (pivot) {
            case 0: {  // a = l*o
                Elem l = d0, o = cof;
                auto q = need(A.b, l, "the (1,2) entry");
                if (!q) break;
                auto m = need(A.c, o, "the (2,1) entry");
                if (!m) break;
                if (A.d == R->mul(*m, *q)) nf = NonfullFactorization{l, *m, o, *q};
                else why = "the (2,2) entry is not the product of the cofactors";
                break;
            }
            case 1: {  // b = l*q
                Elem l = d0, q = cof;
                auto o = need(A.a, l, "the (1,1) entry");
                if (!o) break;
                auto m = need(A.d, q, "the (2,2) entry");
                if (!m) break;
                if (A.c == R->mul(*m, *o)) nf = NonfullFactorization{l, *m, *o, q};
                else why = "the (2,1) entry is not the product of the cofactors";
                break;
            }
            case 2: {  // c = m*o
                Elem m = d0, o = cof;
                auto q = need(A.d, m, "the (2,2) entry");
                if (!q) break;
                auto l = need(A.a, o, "the (1,1) entry");
                if (!l) break;
                if (A.b == R->mul(*l, *q)) nf = NonfullFactorization{*l, m, o, *q};
                else why = "the (1,2) entry is not the product of the cofactors";
                break;
            }
            case 3: {  // d = m*q
                Elem m = d0, q = cof;
                auto o = need(A.c, m, "the (2,1) entry");
                if (!o) break;
                auto l = need(A.b, q, "the (1,2) entry");
                if (!l) break;
                if (A.a == R->mul(*l, *o)) nf = NonfullFactorization{*l, m, *o, q};
                else why = "the (1,1) entry is not the product of the cofactors";
                break;
            }
        }
        if (nf) return FullnessWitness{nf, std::nullopt};
        proof.rejected.push_back(SplitRejection{d0, cof, why});
    }
    return FullnessWitness{std::nullopt, proof};
}

}  // namespace

FullnessWitness nonfull_factorize(const Mat2& A) {
    auto R = A.R;
    require_unimodular(A);
    if (!R->is_zero(det2(A))) throw error("nonfull_factorize: determinant is not zero");

    switch (R->kind()) {
        case RingKind::Integers:
        case RingKind::LocalizedIntegers: {
            if (auto nf = zero_line_factorization(A)) return FullnessWitness{*nf, std::nullopt};
            Elem g, a1, c1;
            if (!content_split(R, A.a, A.c, g, a1, c1))
                throw internal_error("zero column escaped the zero-line cases");
            auto h = R->exact_div(A.b, a1);
            if (!h) throw internal_error("primal split failed over a pre-Schreier domain");
            if (!(A.d == R->mul(c1, *h)))
                throw internal_error("primal split residual mismatch");
            return FullnessWitness{NonfullFactorization{a1, c1, g, *h}, std::nullopt};
        }
        case RingKind::IntegersModN:
        case RingKind::QuotientRing: {
            auto ef = search_pair(A, 0);
            if (!ef) throw internal_error("finite ring matrix without a certificate");
            auto cert = complete_pair(A, ef->first, ef->second);
            auto [M, N] = diagonal_reduce(A, *cert);
            auto Minv = inverse2(M);
            auto Ninv = inverse2(N);
            if (!Minv || !Ninv) throw internal_error("reduction transform is not invertible");
            NonfullFactorization nf{Minv->a, Minv->c, Ninv->a, Ninv->b};
            if (!(A.a == R->mul(nf.l, nf.o)) || !(A.b == R->mul(nf.l, nf.q)) ||
                !(A.c == R->mul(nf.m, nf.o)) || !(A.d == R->mul(nf.m, nf.q)))
                throw internal_error("column-row readoff does not reproduce the matrix");
            return FullnessWitness{nf, std::nullopt};
        }
        case RingKind::QuadraticOrder: {
            if (auto nf = zero_line_factorization(A)) return FullnessWitness{*nf, std::nullopt};
            return quad_fullness(A);
        }
    }
    throw internal_error("bad kind");
}

std::pair<Mat3, Certificate> extension_from_factorization_with_cert(const Mat2& A,
                                                                    const NonfullFactorization& nf) {
    auto R = A.R;
    if (!(A.a == R->mul(nf.l, nf.o)) || !(A.b == R->mul(nf.l, nf.q)) ||
        !(A.c == R->mul(nf.m, nf.o)) || !(A.d == R->mul(nf.m, nf.q)))
        throw error("extension_from_factorization: witness does not reproduce the matrix");
    auto bz1 = R->bezout({nf.l, nf.m});
    if (!bz1) throw error("extension_from_factorization: column is not unimodular");
    auto bz2 = R->bezout({nf.o, nf.q});
    if (!bz2) throw error("extension_from_factorization: row is not unimodular");
    Certificate cert{(*bz1)[0], (*bz1)[1], (*bz2)[0], (*bz2)[1]};
    Mat3 ext = assemble_simple_extension(A, cert);
    return {ext, cert};
}

Mat3 extension_from_factorization(const Mat2& A, const NonfullFactorization& nf) {
    return extension_from_factorization_with_cert(A, nf).first;
}

// ---------------------------------------------------------------------------
// diagonal reduction
// ---------------------------------------------------------------------------

std::pair<Mat2, Mat2> diagonal_reduce(const Mat2& A, const Certificate& cert) {
    auto R = A.R;
    if (!certificate_valid(A, cert)) throw error("diagonal_reduce: invalid certificate");
    // explicit completions: e(as+bt) + f(cs+dt) = 1 = s(ea+fc) + t(eb+fd)
    Elem x = R->add(R->mul(A.a, cert.s), R->mul(A.b, cert.t));
    Elem y = R->add(R->mul(A.c, cert.s), R->mul(A.d, cert.t));
    Mat2 M{R, cert.e, cert.f, R->neg(y), x};
    Elem z = R->add(R->mul(cert.e, A.a), R->mul(cert.f, A.c));
    Elem w = R->add(R->mul(cert.e, A.b), R->mul(cert.f, A.d));
    Mat2 N{R, cert.s, R->neg(w), cert.t, z};

    Mat2 B = mul2(mul2(M, A), N);
    if (!R->is_one(B.a)) throw internal_error("pivot of the reduced matrix is not 1");
    // clear the first row and column
    Mat2 colop{R, R->one(), R->neg(B.b), R->zero(), R->one()};
    Mat2 rowop{R, R->one(), R->zero(), R->neg(B.c), R->one()};
    Mat2 M2 = mul2(rowop, M);
    Mat2 N2 = mul2(N, colop);
    Mat2 D = mul2(mul2(M2, A), N2);
    if (!(D == diag2(R, R->one(), det2(A))))
        throw internal_error("diagonal reduction did not reach Diag(1, det)");
    return {M2, N2};
}

Mat3 extension_from_diagonal(const Mat2& M, const Mat2& N, const Elem& d) {
    auto R = M.R;
    auto Minv = inverse2(M);
    auto Ninv = inverse2(N);
    if (!Minv || !Ninv) throw error("extension_from_diagonal: transform is not invertible");
    const Elem z = R->zero(), o = R->one();
    Mat3 mid{R, {o, z, z, z, R->canonicalize(d), o, z, R->neg(o), z}};
    Mat3 out = mul3(mul3(sigma(*Minv, det2(M)), mid), sigma(*Ninv, det2(N)));
    if (!R->is_one(det3(out))) throw internal_error("diagonal route produced determinant != 1");
    if (!R->is_zero(out.at(2, 2))) throw internal_error("diagonal route corner is nonzero");
    return out;
}

// ---------------------------------------------------------------------------
// stable range constructions
// ---------------------------------------------------------------------------

std::pair<Elem, Elem> stable_range2_reduce(const RingPtr& R, const Elem& e1, const Elem& f1,
                                           const Elem& b, long cap) {
    auto r = sr2_impl(R, e1, f1, b, cap);
    if (!r) throw error("stable_range2_reduce: search cap exhausted");
    Elem x = R->add(e1, R->mul(b, r->first));
    Elem y = R->add(f1, R->mul(b, r->second));
    if (!R->is_unimodular({x, y}))
        throw internal_error("stable range reduction output is not unimodular");
    return *r;
}

Elem fsr_reduce(const RingPtr& R, const Elem& a, const Elem& b, const Elem& c) {
    if (R->kind() != RingKind::Integers && R->kind() != RingKind::LocalizedIntegers)
        throw error("fsr_reduce: supported over Z and Z[1/m] only");
    if (R->is_zero(c)) throw error("fsr_reduce: c must be nonzero");
    if (!R->is_unimodular({a, b, c})) throw error("fsr_reduce: (a, b, c) is not unimodular");
    Elem r;
    if (R->kind() == RingKind::Integers) {
        r = R->from_int(fsr_core(a.u, b.u, c.u, Int(0)));
    } else {
        Int rp = fsr_core(a.u, b.u, c.u, R->loc_m());
        r = loc_scale(R, rp, a.v, b.v);
    }
    Elem x = R->add(a, R->mul(b, r));
    if (!R->is_unimodular({x, c}))
        throw internal_error("fsr reduction output is not unimodular");
    return r;
}

std::optional<Certificate> upgrade_to_simple(const Mat2& A, const Elem& e1, const Elem& f1,
                                             long cap) {
    auto R = A.R;
    Elem det = det2(A);
    Elem u1 = R->add(R->mul(A.a, e1), R->mul(A.c, f1));
    Elem w1 = R->add(R->mul(A.b, e1), R->mul(A.d, f1));
    if (!R->is_unimodular({u1, w1, det}))
        throw error("upgrade_to_simple: (ae'+cf', be'+df', det) is not unimodular");
    auto r = sr2_impl(R, e1, f1, det, cap);
    if (!r) return std::nullopt;
    Elem e = R->add(e1, R->mul(det, r->first));
    Elem f = R->add(f1, R->mul(det, r->second));
    auto cert = complete_pair(A, e, f);
    if (!cert) throw internal_error("upgraded pair did not complete to a certificate");
    return cert;
}

Mat3 triangular_simple_extension(const Mat2& A) {
    auto R = A.R;
    if (R->kind() != RingKind::Integers && R->kind() != RingKind::LocalizedIntegers)
        throw error("triangular_simple_extension: supported over Z and Z[1/m] only");
    if (!R->is_zero(A.c)) throw error("triangular_simple_extension: matrix is not upper triangular");
    if (R->is_zero(A.a))
        throw error("triangular_simple_extension: zero (1,1) entry, use the heuristic route");
    require_unimodular(A);
    Elem f = fsr_reduce(R, A.b, A.d, A.a);
    Elem bf = R->add(A.b, R->mul(A.d, f));
    auto bz = R->bezout({A.a, bf});
    if (!bz) throw internal_error("(a, b + df) is not unimodular after fsr reduction");
    Certificate cert{R->one(), f, (*bz)[0], (*bz)[1]};
    Mat3 ext = assemble_simple_extension(A, cert);
    if (!(ext.at(1, 2) == R->neg(R->one())))
        throw internal_error("triangular extension (2,3) entry is not -1");
    return ext;
}

// ---------------------------------------------------------------------------
// decision pipelines
// ---------------------------------------------------------------------------

ExtensionOutcome simply_extend(const Mat2& A, long bound) {
    auto R = A.R;
    if (bound < 1) throw error("simply_extend: bound must be >= 1");
    require_unimodular(A);
    Elem det = det2(A);

    if (R->is_zero(det)) {
        FullnessWitness w = nonfull_factorize(A);
        if (w.factorization) {
            auto [ext, cert] = extension_from_factorization_with_cert(A, *w.factorization);
            return simple_outcome(A, ext, cert, w);
        }
        ExtensionOutcome out;
        out.status = OutcomeStatus::NotExtendable;
        out.witness = std::move(w);
        return out;
    }

    if (auto ef = heuristic_pair(A)) {
        auto cert = complete_pair(A, ef->first, ef->second);
        return simple_outcome(A, assemble_simple_extension(A, *cert), *cert);
    }

    if (R->capabilities().gcd) {
        for (bool tr : {false, true}) {
            Mat2 B = tr ? transpose2(A) : A;
            auto ff = factored_form(B);
            if (!ff) continue;
            auto wv = factored_pair(R, *ff);
            if (!wv) continue;
            auto [e, f] = factored_to_ef(R, *ff, wv->first, wv->second);
            auto cert = complete_pair(B, e, f);
            if (!cert) continue;
            Certificate cA = tr ? Certificate{cert->s, cert->t, cert->e, cert->f} : *cert;
            return simple_outcome(A, assemble_simple_extension(A, cA), cA);
        }
    }

    if (auto ef = search_pair(A, bound)) {
        auto cert = complete_pair(A, ef->first, ef->second);
        return simple_outcome(A, assemble_simple_extension(A, *cert), *cert);
    }

    switch (R->kind()) {
        case RingKind::Integers:
        case RingKind::LocalizedIntegers: {
            // an elementary divisor ring: a certificate must exist, and the
            // stable-range-2 upgrade is constructive here
            long reach = std::max(bound, 64L);
            for (long h = 0; h <= reach; ++h)
                for (const Elem& e1 : R->elements_of_height(h))
                    for (long h2 = 0; h2 <= reach; ++h2)
                        for (const Elem& f1 : R->elements_of_height(h2)) {
                            Elem u = R->add(R->mul(A.a, e1), R->mul(A.c, f1));
                            Elem w = R->add(R->mul(A.b, e1), R->mul(A.d, f1));
                            if (!R->is_unimodular({u, w, det})) continue;
                            auto cert = upgrade_to_simple(A, e1, f1, bound);
                            if (!cert) continue;
                            return simple_outcome(A, assemble_simple_extension(A, *cert), *cert);
                        }
            throw internal_error("no certificate over an elementary divisor ring");
        }
        case RingKind::IntegersModN:
        case RingKind::QuotientRing:
            throw internal_error("exhaustive search failed over a finite ring");
        case RingKind::QuadraticOrder: {
            // decidable extendability through the finite quotient, then the
            // stable-range-2 upgrade with a capped witness search
            QuotientMap qm = R->quotient(det);
            Mat2 Abar = reduce_mod(A, det);
            ExtensionOutcome sub = simply_extend(Abar, bound);
            if (sub.status != OutcomeStatus::Simple)
                throw internal_error("finite quotient refused a simple extension");
            Elem e1 = qm.lift(sub.certificate->e);
            Elem f1 = qm.lift(sub.certificate->f);
            if (auto cert = upgrade_to_simple(A, e1, f1, std::min(bound, 8L)))
                return simple_outcome(A, assemble_simple_extension(A, *cert), *cert);
            ExtensionOutcome out;
            out.status = OutcomeStatus::Undecided;
            out.bound = bound;
            return out;
        }
    }
    throw internal_error("bad kind");
}

ExtensionOutcome extend(const Mat2& A, long bound) {
    auto R = A.R;
    if (bound < 1) throw error("extend: bound must be >= 1");
    require_unimodular(A);
    Elem det = det2(A);

    // finite rings decide by exhaustion; unit determinants embed through
    // GL2, and determinant zero is exactly the fullness analysis
    if (R->finite() || R->is_unit(det) || R->is_zero(det)) return simply_extend(A, bound);

    QuotientMap qm = R->quotient(det);
    Mat2 Abar{qm.target, qm.reduce(A.a), qm.reduce(A.b), qm.reduce(A.c), qm.reduce(A.d)};
    ExtensionOutcome sub = simply_extend(Abar, bound);
    if (sub.status != OutcomeStatus::Simple)
        throw internal_error("finite quotient refused a simple extension");

    const Mat3& S = *sub.extension;
    Mat3 B{A.R, {A.a, A.b, qm.lift(S.at(0, 2)), A.c, A.d, qm.lift(S.at(1, 2)),
                 qm.lift(S.at(2, 0)), qm.lift(S.at(2, 1)), qm.lift(S.at(2, 2))}};
    Elem w = [&] {
        auto r = R->exact_div(R->sub(det3(B), R->one()), det);
        if (!r) throw internal_error("det(B) - 1 is not a multiple of det(A)");
        return *r;
    }();
    B.at(2, 2) = R->sub(B.at(2, 2), w);
    if (!R->is_one(det3(B))) throw internal_error("lifted extension has determinant != 1");
    if (!(theta(B) == A)) throw internal_error("lifted extension does not restrict to A");

    ExtensionOutcome out;
    if (R->is_zero(B.at(2, 2))) {
        Certificate cert{R->neg(B.at(1, 2)), B.at(0, 2), B.at(2, 1), R->neg(B.at(2, 0))};
        return simple_outcome(A, B, cert);
    }
    out.status = OutcomeStatus::ExtendableOnly;
    out.extension = B;
    return out;
}

}  // namespace sl3ext
