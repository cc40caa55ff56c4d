#include <doctest.h>

#include <numeric>
#include <vector>

#include "zmlat/numtheory.hpp"

using namespace zmlat;

namespace {

// Independent totient for the order-divides-phi property.
i64 totient(i64 m) {
    i64 count = 0;
    for (i64 k = 1; k <= m; ++k)
        if (std::gcd(k, m) == 1) ++count;
    return count;
}

}  // namespace

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<i64>{1});
    CHECK(divisors(12) == std::vector<i64>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(9) == std::vector<i64>{1, 3, 9});
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("tau") {
    CHECK(tau(1) == 1);
    CHECK(tau(9) == 3);
    CHECK(tau(12) == 6);
    CHECK_THROWS_AS(tau(0), std::invalid_argument);
}

TEST_CASE("divisors: sorted, complementary, counted by tau") {
    for (i64 n = 1; n <= 10000; ++n) {
        const auto ds = divisors(n);
        CHECK(tau(n) == static_cast<i64>(ds.size()));
        CHECK(ds.front() == 1);
        CHECK(ds.back() == n);
        for (std::size_t i = 0; i < ds.size(); ++i) {
            CHECK(n % ds[i] == 0);
            if (i > 0) CHECK(ds[i - 1] < ds[i]);
            // closed under d -> n/d
            CHECK(std::binary_search(ds.begin(), ds.end(), n / ds[i]));
        }
    }
}

TEST_CASE("pow_mod") {
    CHECK(pow_mod(2, 3, 7) == 1);
    CHECK(pow_mod(8, 2, 9) == 1);
    CHECK(pow_mod(5, 0, 11) == 1);   // empty product
    CHECK(pow_mod(5, 0, 1) == 0);    // ... is 0 mod 1
    CHECK_THROWS_AS(pow_mod(2, 3, 0), std::invalid_argument);
}

TEST_CASE("mult_order") {
    CHECK(mult_order(2, 7) == 3);
    CHECK(mult_order(3, 7) == 6);
    for (i64 m = 1; m <= 20; ++m) CHECK(mult_order(1, m) == 1);
    CHECK_THROWS_AS(mult_order(2, 4), std::invalid_argument);
}

TEST_CASE("mult_order: minimality and divides totient, all coprime pairs m <= 500") {
    for (i64 m = 1; m <= 500; ++m) {
        const i64 phi = totient(m);
        for (i64 r = 0; r < std::max<i64>(m, 1); ++r) {
            if (std::gcd(r, m) != 1 && m > 1) continue;
            const i64 d = mult_order(r, m);
            CHECK(pow_mod(r, d, m) == 1 % m);
            for (i64 k = 1; k < d; ++k) CHECK(pow_mod(r, k, m) != 1 % m);
            CHECK(phi % d == 0);
        }
    }
}

TEST_CASE("geometric_sum_mod") {
    CHECK(geometric_sum_mod(2, 1, 3, 7) == 0);  // 1+2+4
    CHECK(geometric_sum_mod(2, 1, 4, 5) == 0);  // 1+2+4+8 = 15
    CHECK(geometric_sum_mod(3, 2, 0, 11) == 0); // empty sum
    CHECK_THROWS_AS(geometric_sum_mod(2, 1, 3, 0), std::invalid_argument);
}

TEST_CASE("geometric_sum_mod: telescoping identity on a grid") {
    // (r^x - 1) * sum == r^kx - 1 (mod M)
    for (i64 M : {1, 2, 3, 5, 7, 9, 12, 30, 97}) {
        for (i64 r = 0; r < 8; ++r)
            for (i64 x = 0; x < 6; ++x)
                for (i64 k = 0; k < 8; ++k) {
                    const i64 sum = geometric_sum_mod(r, x, k, M);
                    const i64 lhs = (pow_mod(r, x, M) + M - 1) % M * sum % M;
                    const i64 rhs = (pow_mod(r, k * x, M) + M - 1) % M;
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("is_prime_power") {
    CHECK(is_prime_power(8) == PrimePower{2, 3});
    CHECK(!is_prime_power(1));
    CHECK(!is_prime_power(12));
    CHECK(is_prime_power(97) == PrimePower{97, 1});
    CHECK_THROWS_AS(is_prime_power(0), std::invalid_argument);
}

TEST_CASE("is_prime_power: all prime powers up to 1e6, primes <= 100") {
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
                  67, 71, 73, 79, 83, 89, 97}) {
        for (i64 v = p, e = 1; v <= 1000000; v *= p, ++e) {
            CHECK(is_prime_power(v) == PrimePower{p, e});
        }
    }
    // a few composite radicals
    for (i64 n : {6, 10, 12, 36, 100, 999966}) CHECK(!is_prime_power(n));
}
