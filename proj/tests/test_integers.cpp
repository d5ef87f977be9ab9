#include <doctest.h>

#include "sl3ext/integers.hpp"

using namespace sl3ext;

TEST_CASE("extended gcd produces the canonical minimal witness") {
    auto check = [](long x, long y, long g, long s, long t) {
        ExtGcd e = ext_gcd(Int(x), Int(y));
        CHECK(e.g == g);
        CHECK(e.s == s);
        CHECK(e.t == t);
        CHECK(e.s * x + e.t * y == e.g);
    };
    check(2, 3, 1, -1, 1);
    check(1, 2, 1, 1, 0);
    check(-2, -3, 1, 1, -1);
    check(-35, -34, 1, -1, 1);
    check(15, 6, 3, 1, -2);
    check(5, -8, 1, -3, -2);
    check(0, 0, 0, 0, 0);
    check(7, 0, 7, 1, 0);
    check(0, -7, 7, 0, -1);
}

TEST_CASE("bezout fold over tuples") {
    std::vector<Int> cs;
    CHECK(bezout_fold({Int(15), Int(6), Int(10), Int(14)}, cs) == 1);
    Int acc = 0;
    std::vector<Int> xs{15, 6, 10, 14};
    for (size_t i = 0; i < xs.size(); ++i) acc += cs[i] * xs[i];
    CHECK(acc == 1);
    CHECK(bezout_fold({Int(2), Int(4)}, cs) == 2);
}

TEST_CASE("factorization and divisors") {
    auto f = factorize(Int(360));
    CHECK(f[Int(2)] == 3);
    CHECK(f[Int(3)] == 2);
    CHECK(f[Int(5)] == 1);
    CHECK(divisors_of(Int(6)) == std::vector<Int>{Int(1), Int(2), Int(3), Int(6)});
    CHECK(radical(Int(12)) == 6);
    CHECK(radical(Int(1)) == 1);
    CHECK(prime_factors(Int(-30)).size() == 3);
}

TEST_CASE("stripping shared prime factors") {
    CHECK(strip_factors_of(Int(90), Int(21)) == 10);
    CHECK(strip_factors_of(Int(8), Int(6)) == 1);
    CHECK(strip_factors_of(Int(35), Int(6)) == 35);
    CHECK(strip_factors_of(Int(0), Int(6)) == 0);
    CHECK(smooth_exponent(Int(9), Int(21)) == 2);
    CHECK(smooth_exponent(Int(1), Int(21)) == 0);
}

TEST_CASE("linear congruences") {
    CHECK(*solve_linear_congruence(Int(2), Int(4), Int(12)) == 2);
    CHECK(!solve_linear_congruence(Int(2), Int(3), Int(12)));
    CHECK(*solve_linear_congruence(Int(5), Int(1), Int(6)) == 5);
    CHECK(*mod_inverse(Int(5), Int(6)) == 5);
    CHECK(!mod_inverse(Int(4), Int(6)));
}
