#include <doctest.h>

#include "schur.hpp"

#include <random>

using namespace fva;

namespace {

Weight w(std::vector<long long> v) {
    std::vector<Int> c(v.begin(), v.end());
    return Weight(std::move(c));
}

// The degree-6 closed form of chi on SL(4); an independent route used as an
// oracle for euler_char at n = 4.
Int chi_sl4(long long a1, long long a2, long long a3) {
    const Int num = Int(a1 + 1) * Int(a2 + 1) * Int(a3 + 1) * Int(a1 + a2 + 2) *
                    Int(a2 + a3 + 2) * Int(a1 + a2 + a3 + 3);
    return num / 12;
}

}  // namespace

TEST_CASE("weyl_dim matches the pinned Schur dimensions") {
    const RootSystemA rs5(5);
    CHECK(weyl_dim(rs5, w({3, 1, 0, 0})) == 224);
    CHECK(weyl_dim(rs5, w({1, 2, 0, 0})) == 175);
    CHECK(weyl_dim(rs5, w({0, 0, 0, 0})) == 1);
    for (int n = 2; n <= 9; ++n) {
        std::vector<Int> c(static_cast<size_t>(n - 1), 0);
        c[0] = 1;
        CHECK(weyl_dim(RootSystemA(n), Weight(std::move(c))) == n);  // standard rep
    }
    // S^p of the standard rep of SL(p+1) has dimension C(2p, p).
    CHECK(weyl_dim(RootSystemA(4), w({3, 0, 0})) == 20);
    CHECK(weyl_dim(RootSystemA(6), w({5, 0, 0, 0, 0})) == 252);
}

TEST_CASE("weyl_dim rejects non-dominant weights") {
    CHECK_THROWS_AS(weyl_dim(RootSystemA(4), w({2, -1, 0})), std::invalid_argument);
}

TEST_CASE("euler_char: pinned values and wall vanishing") {
    const RootSystemA rs4(4);
    CHECK(euler_char(rs4, w({2, -1, 0})) == 0);
    CHECK(euler_char(rs4, w({-2, 1, 0})) == -1);
    // Any coefficient -1 puts mu + rho on a wall.
    CHECK(euler_char(rs4, w({5, -1, 3})) == 0);
    CHECK(euler_char(rs4, w({-1, 0, 7})) == 0);
}

TEST_CASE("euler_char equals weyl_dim on dominant weights") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);  // n <= 6
        std::uniform_int_distribution<int> d(0, 20);
        std::vector<Int> c(static_cast<size_t>(n - 1));
        for (auto& x : c) x = d(rng);
        const Weight mu(std::move(c));
        const RootSystemA rs(n);
        CHECK(euler_char(rs, mu) == weyl_dim(rs, mu));
    }
}

TEST_CASE("euler_char agrees with the SL(4) sextic closed form") {
    std::mt19937_64 rng(456);
    std::uniform_int_distribution<long long> d(-10, 10);
    const RootSystemA rs(4);
    for (int trial = 0; trial < 3000; ++trial) {
        const long long a1 = d(rng), a2 = d(rng), a3 = d(rng);
        CHECK(euler_char(rs, w({a1, a2, a3})) == chi_sl4(a1, a2, a3));
    }
}

TEST_CASE("euler_char is antisymmetric under the dot action") {
    std::mt19937_64 rng(789);
    std::uniform_int_distribution<long long> d(-12, 12);
    const RootSystemA rs(5);
    for (int trial = 0; trial < 1500; ++trial) {
        const Weight mu = w({d(rng), d(rng), d(rng), d(rng)});
        const int k = 1 + static_cast<int>(trial % 4);
        CHECK(euler_char(rs, dot_reflection(rs, mu, simple_root(k))) == -euler_char(rs, mu));
    }
}

TEST_CASE("euler_char vanishes exactly on singular weights") {
    std::mt19937_64 rng(1011);
    std::uniform_int_distribution<long long> d(-9, 9);
    const RootSystemA rs(4);
    for (int trial = 0; trial < 2000; ++trial) {
        const Weight mu = w({d(rng), d(rng), d(rng)});
        bool singular = false;
        for (const PositiveRoot& beta : positive_roots(rs))
            if (pairing(mu + rho(rs), beta) == 0) singular = true;
        if (singular)
            CHECK(euler_char(rs, mu) == 0);
        else
            CHECK(euler_char(rs, mu) != 0);
    }
}

TEST_CASE("Gelfand-Tsetlin counts: classical values") {
    CHECK(gt_pattern_count(RootSystemA(2), w({7})) == 8);
    CHECK(gt_pattern_count(RootSystemA(3), w({1, 1})) == 8);   // adjoint of SL(3)
    CHECK(gt_pattern_count(RootSystemA(4), w({0, 1, 0})) == 6);  // Lambda^2 of SL(4)
    CHECK_THROWS_AS(gt_pattern_count(RootSystemA(3), w({-1, 2})), std::invalid_argument);
}

TEST_CASE("gt_pattern_count agrees with weyl_dim exhaustively (n <= 4, coeffs <= 3)") {
    for (int n = 2; n <= 4; ++n) {
        const RootSystemA rs(n);
        std::vector<long long> coeffs(static_cast<size_t>(n - 1), 0);
        while (true) {
            std::vector<Int> c(coeffs.begin(), coeffs.end());
            const Weight mu{std::move(c)};
            CHECK(gt_pattern_count(rs, mu) == weyl_dim(rs, mu));
            size_t k = 0;
            while (k < coeffs.size() && coeffs[k] == 3) coeffs[k++] = 0;
            if (k == coeffs.size()) break;
            ++coeffs[k];
        }
    }
}

TEST_CASE("closed forms of the divisible family hold for all primes up to 50") {
    for (unsigned long long p = 2; p <= 50; ++p) {
        if (!is_prime_u64(p)) continue;
        const int n = static_cast<int>(p) + 2;
        const RootSystemA rs(n);
        std::vector<Int> lam(static_cast<size_t>(n - 1), 0);
        lam[0] = Int(p);
        lam[1] = 1;
        const Weight lambda{std::vector<Int>(lam)};
        const Weight lambda_alpha = lambda - simple_root_weight(rs, 1);

        const Int h0l = weyl_dim(rs, lambda);
        const Int h0la = weyl_dim(rs, lambda_alpha);
        CHECK(h0l == binomial(Int(2 * p + 2), static_cast<unsigned>(p)) * Int(p + 1));
        CHECK(h0la ==
              binomial(Int(2 * p + 1), static_cast<unsigned>(p)) * Int(p + 2) * Int(p - 1) / 2);
        // Exact rational ratio identity.
        CHECK(Rat(h0la) / Rat(h0l) ==
              Rat(Int(p - 1) * Int(p + 2) * Int(p + 2)) / Rat(4 * Int(p + 1) * Int(p + 1)));
    }
}
