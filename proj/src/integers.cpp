#include "sl3ext/integers.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl3ext {

Int mod_floor(const Int& a, const Int& n) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

ExtGcd ext_gcd(const Int& x, const Int& y) {
    if (x == 0 && y == 0) return {Int(0), Int(0), Int(0)};
    if (y == 0) return {Int(abs(x)), Int(sgn(x)), Int(0)};
    if (x == 0) return {Int(abs(y)), Int(0), Int(sgn(y))};
    Int g, s0, t0;
    mpz_gcdext(g.get_mpz_t(), s0.get_mpz_t(), t0.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    Int yg = abs(y) / g;
    Int s = mod_floor(s0, yg);
    if (2 * s > yg) s -= yg;
    Int t = (g - s * x) / y;
    return {g, s, t};
}

Int bezout_fold(const std::vector<Int>& xs, std::vector<Int>& coeffs) {
    coeffs.clear();
    Int g = 0;
    for (const Int& x : xs) {
        ExtGcd e = ext_gcd(g, x);
        for (Int& c : coeffs) c *= e.s;
        coeffs.push_back(e.t);
        g = e.g;
    }
    return g;
}

bool divides(const Int& d, const Int& x) {
    if (d == 0) return x == 0;
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

std::optional<Int> exact_div(const Int& x, const Int& d) {
    if (!divides(d, x)) return std::nullopt;
    if (d == 0) return Int(0);
    return Int(x / d);
}

namespace {

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int pollard_rho(const Int& n) {
    // n odd composite
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_rec(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<Int, unsigned> factorize(Int n) {
    if (n == 0) throw std::invalid_argument("factorize: zero");
    n = abs(n);
    std::map<Int, unsigned> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[Int(p)] += 1;
            n /= p;
        }
    }
    factor_rec(n, out);
    return out;
}

std::vector<Int> prime_factors(const Int& n) {
    std::vector<Int> ps;
    for (auto& [p, e] : factorize(n)) ps.push_back(p);
    return ps;
}

std::vector<Int> divisors_of(const Int& n) {
    std::vector<Int> ds{Int(1)};
    for (auto& [p, e] : factorize(n)) {
        size_t sz = ds.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) ds.push_back(Int(ds[i] * pk));
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

Int radical(const Int& n) {
    Int r = 1;
    for (auto& [p, e] : factorize(n)) r *= p;
    return r;
}

Int strip_factors_of(Int n, const Int& m) {
    if (n == 0) return Int(0);
    n = abs(n);
    Int d = gcd(n, m);
    while (d > 1) {
        n /= d;
        d = gcd(n, m);
    }
    return n;
}

unsigned smooth_exponent(const Int& d, const Int& m) {
    Int acc = 1;
    unsigned e = 0;
    Int ad = abs(d);
    while (!divides(ad, acc)) {
        acc *= m;
        ++e;
        if (e > 4096) throw std::invalid_argument("smooth_exponent: d is not m-smooth");
    }
    return e;
}

std::optional<Int> mod_inverse(const Int& a, const Int& n) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0) return std::nullopt;
    return r;
}

std::optional<Int> solve_linear_congruence(const Int& a, const Int& b, const Int& n) {
    // a*w == b (mod n): solvable iff gcd(a, n) | b.
    Int g = gcd(a, n);
    if (g == 0) return b == 0 ? std::optional<Int>(Int(0)) : std::nullopt;
    if (!divides(g, b)) return std::nullopt;
    Int n1 = n / g;
    if (n1 == 1) return Int(0);
    Int inv = *mod_inverse(mod_floor(a / g, n1), n1);
    return mod_floor((b / g) * inv, n1);
}

bool is_perfect_square(const Int& n, Int* root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (root) {
        mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    }
    return true;
}

Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace sl3ext
