#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhs/bernoulli.hpp"
#include "mhs/eval.hpp"
#include "oracles.hpp"

using namespace mhs;

TEST_CASE("H_exact frozen values") {
    CHECK(H_exact(Composition({3}), 4) ==
          Rational(Integer(2035), Integer(1728)));
    CHECK(H_exact(Composition({1, 1}), 3) == Rational(1));
    CHECK(H_exact(Composition({2, 1}), 1) == Rational(0));
    CHECK(H_exact(Composition({2, 1}), 0) == Rational(0));
    CHECK(H_exact(Composition{}, 0) == Rational(1));
    CHECK(H_exact(Composition{}, 9) == Rational(1));

    Rational big = H_exact(Composition({1, 2, 1}), 36);
    CHECK(big == Rational(Integer("2234416196881673576349577192603"),
                          Integer("1151149136943530805554073600000")));
    CHECK(vp(big, 37).v == 2);
}

TEST_CASE("S_exact frozen values") {
    CHECK(S_exact(Composition({1, 1}), 3) == Rational(Integer(85), Integer(36)));
    for (std::int64_t s = 1; s <= 5; ++s)
        for (std::uint64_t n = 0; n <= 8; ++n)
            CHECK(S_exact(Composition({s}), n) == H_exact(Composition({s}), n));
    CHECK(S_exact(Composition({1, 2}), 4) ==
          H_exact(Composition({1, 2}), 4) + H_exact(Composition({3}), 4));
}

TEST_CASE("DP evaluators match brute-force enumeration") {
    for (const Composition& s : all_compositions(6)) {
        for (std::uint64_t n = 0; n <= 12; ++n) {
            CHECK(H_exact(s, n) == testing::H_brute(s, n));
            CHECK(S_exact(s, n) == testing::S_brute(s, n));
        }
    }
}

TEST_CASE("S equals the coarsening sum of H") {
    for (const Composition& s : all_compositions(7)) {
        if (s.length() > 5) continue;
        for (std::uint64_t n : {1ULL, 4ULL, 10ULL}) {
            Rational acc(0);
            for (const Composition& c : coarsenings(s)) acc += H_exact(c, n);
            CHECK(S_exact(s, n) == acc);
        }
    }
}

TEST_CASE("exact work bound") {
    CHECK_THROWS_AS(H_exact(Composition({1, 1}), 600'000), WorkBoundError);
    CHECK_THROWS_AS(S_exact(Composition({1}), 2'000'000), WorkBoundError);
    // the bound is configurable
    CHECK_THROWS_AS(H_exact(Composition({1}), 40, 10), WorkBoundError);
    CHECK_NOTHROW(H_exact(Composition({1}), 40, 100));
}

TEST_CASE("H_mod frozen residues") {
    CHECK(H_mod(Composition({1, 1, 1}), 36, PrimePowerRing::make(37, 3)).value == 0);
    CHECK(H_mod(Composition({2, 3}), 36, PrimePowerRing::make(37, 1)).value == 0);
    CHECK(H_mod(Composition({3, 3, 4}), 12, PrimePowerRing::make(13, 1)).value == 8);
    CHECK(H_mod(parse_composition("{2,4}^3"), 22, PrimePowerRing::make(23, 1)).value ==
          21);
    CHECK_THROWS_AS(H_mod(Composition({1}), 7, PrimePowerRing::make(7, 1)),
                    std::domain_error);
}

TEST_CASE("S_mod consistency") {
    PrimePowerRing r13 = PrimePowerRing::make(13, 1);
    ModEvaluator ev(r13);
    std::uint64_t lhs = ev.S(Composition({3, 3, 4}), 12);
    std::uint64_t rhs = 0;
    for (const Composition& c : coarsenings(Composition({3, 3, 4})))
        rhs = r13.add(rhs, ev.H(c, 12));
    CHECK(lhs == rhs);

    // S(2,2;p-1) = H(2,2) + H(4) = (2/5) p B_{p-5} mod p^2 at p = 11
    PrimePowerRing r121 = PrimePowerRing::make(11, 2);
    std::uint64_t s22 = S_mod(Composition({2, 2}), 10, r121).value;
    std::uint64_t pb =
        r121.mul(11, to_residue(bernoulli_exact(6) * Rational(Integer(2), Integer(5)),
                                r121)
                         .value);
    CHECK(s22 == pb);

    CHECK(S_mod(Composition({1}), 4, PrimePowerRing::make(5, 2)).value == 0);
    CHECK_THROWS_AS(S_mod(Composition({1}), 25, PrimePowerRing::make(5, 2)),
                    std::domain_error);
}

TEST_CASE("modular evaluation matches exact reduction") {
    std::uniform_int_distribution<int> kd(1, 3);
    auto ps = primes_in(5, 97);
    std::uniform_int_distribution<std::size_t> pd(0, ps.size() - 1);
    int done = 0;
    while (done < 500) {
        Composition s = testing::random_composition(8);
        std::uint64_t p = ps[pd(testing::rng())];
        unsigned k = static_cast<unsigned>(kd(testing::rng()));
        std::uniform_int_distribution<std::uint64_t> nd(0, p - 1);
        std::uint64_t n = nd(testing::rng());
        // keep the exact side tame: denominators grow like lcm(1..n)^l
        if (static_cast<std::uint64_t>(s.length()) * n > 300) continue;
        ++done;
        PrimePowerRing ring = PrimePowerRing::make(p, k);
        Rational exact = H_exact(s, n);
        CHECK(H_mod(s, n, ring).value == to_residue(exact, ring).value);
        Rational sexact = S_exact(s, n);
        CHECK(S_mod(s, n, ring).value == to_residue(sexact, ring).value);
    }
}

TEST_CASE("Stirling numbers of the first kind") {
    CHECK(stirling1(5, 2) == Integer(50));
    CHECK(stirling1(6, 5) == Integer(15)); // n(n-1)/2
    CHECK(stirling1(5, 5) == Integer(1));
    CHECK(stirling1(5, 1) == Integer::factorial(4));
    CHECK_THROWS_AS(stirling1(4, 5), std::domain_error);
    CHECK_THROWS_AS(stirling1(4, 0), std::domain_error);

    // St(n, j) = (n-1)! H(1^(j-1); n-1)
    for (std::uint64_t n = 1; n <= 12; ++n) {
        for (std::uint64_t j = 1; j <= n; ++j) {
            std::vector<std::int64_t> ones(j - 1, 1);
            Rational rhs = Rational(Integer::factorial(n - 1)) *
                           H_exact(Composition(ones), n - 1);
            CHECK(Rational(stirling1(n, j)) == rhs);
        }
    }

    // modular route agrees
    PrimePowerRing r = PrimePowerRing::make(101, 2);
    for (std::uint64_t j = 1; j <= 6; ++j)
        CHECK(stirling1_mod(9, j, r) == to_residue(Rational(stirling1(9, j)), r).value);
}

TEST_CASE("Wolstenholme: p^2 divides St(p, 2)") {
    for (std::uint64_t p : primes_in(5, 293)) {
        PrimePowerRing ring = PrimePowerRing::make(p, 2);
        CHECK(stirling1_mod(p, 2, ring) == 0);
        // and through the harmonic route
        CHECK(H_mod(Composition({1}), p - 1, ring).value == 0);
    }
}

TEST_CASE("nested-ones divisibility ladder") {
    // H(1^l; p-1) = 0 mod p^2 for even l+1 .. mod p otherwise, l = 1..p-3
    for (std::uint64_t p : primes_in(5, 97)) {
        ModEvaluator ev1(PrimePowerRing::make(p, 1));
        ModEvaluator ev2(PrimePowerRing::make(p, 2));
        for (std::uint64_t l = 1; l + 3 <= p; ++l) {
            std::vector<std::int64_t> ones(l, 1);
            Composition s{ones};
            if ((l + 1) % 2 == 0)
                CHECK(ev2.H(s, p - 1) == 0);
            else
                CHECK(ev1.H(s, p - 1) == 0);
        }
    }
}

TEST_CASE("valuation probes") {
    CHECK(valuation_H(Composition({1}), 5, 4) == ValuationResult::exact(2));
    CHECK(valuation_H(Composition({1048}), 37, 5) == ValuationResult::exact(3));
    auto v111 = valuation_H(Composition({1, 1, 1}), 37, 5);
    CHECK(!v111.at_least);
    CHECK(v111.v == 3);
    auto capped = valuation_H(Composition({1, 1, 1}), 37, 2);
    CHECK(capped == ValuationResult::lower_bound(2));
    CHECK_THROWS_AS(valuation_H(Composition({1, 1}), 2, 3), std::invalid_argument);
}

TEST_CASE("single sums never reach valuation s for s >= 4") {
    for (std::uint64_t p : primes_in(5, 97)) {
        BernoulliModTable table(p);
        if (!table.zero_indices().empty()) continue; // regular primes only
        for (std::int64_t s = 4; s <= 8; ++s) {
            auto v = valuation_H(Composition({s}), p, static_cast<unsigned>(s));
            CHECK(!v.at_least); // some nonzero digit below p^s
        }
    }
}
