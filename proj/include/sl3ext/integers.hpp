#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

namespace sl3ext {

using Int = mpz_class;

/// Residue of a modulo n in [0, n); requires n > 0.
Int mod_floor(const Int& a, const Int& n);

Int gcd(const Int& a, const Int& b);

/// Extended gcd with a canonical witness: g = s*x + t*y, g >= 0, and for
/// y != 0 the coefficient s is the unique representative of its residue
/// class modulo |y|/g lying in (-|y|/2g, |y|/2g].
struct ExtGcd {
    Int g, s, t;
};
ExtGcd ext_gcd(const Int& x, const Int& y);

/// Folding ext_gcd left to right over the tuple. Returns the gcd (>= 0) and
/// fills coeffs with Sum coeffs[i]*xs[i] = gcd.
Int bezout_fold(const std::vector<Int>& xs, std::vector<Int>& coeffs);

/// d | x; by convention 0 | x only for x = 0.
bool divides(const Int& d, const Int& x);

std::optional<Int> exact_div(const Int& x, const Int& d);

/// Prime factorization of |n|, n != 0. Trial division plus Pollard rho.
std::map<Int, unsigned> factorize(Int n);

/// Distinct primes of |n|.
std::vector<Int> prime_factors(const Int& n);

/// Positive divisors of |n| in increasing order; n != 0.
std::vector<Int> divisors_of(const Int& n);

/// Product of the distinct primes of |n|; radical(±1) = 1.
Int radical(const Int& n);

/// Removes from |n| every prime factor it shares with m. strip(0, m) = 0.
Int strip_factors_of(Int n, const Int& m);

/// Smallest e >= 0 with d | m^e, assuming every prime of d divides m.
unsigned smooth_exponent(const Int& d, const Int& m);

std::optional<Int> mod_inverse(const Int& a, const Int& n);

/// Least nonnegative w with a*w == b (mod n); n > 0.
std::optional<Int> solve_linear_congruence(const Int& a, const Int& b, const Int& n);

bool is_perfect_square(const Int& n, Int* root = nullptr);

Int pow_ui(const Int& base, unsigned long e);

}  // namespace sl3ext
