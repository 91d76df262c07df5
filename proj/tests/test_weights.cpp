#include "doctest.h"

#include <complex>
#include <numbers>
#include <random>

#include "alcove/weights.hpp"

using namespace alcove;

namespace {

RootSystem make(const char* t) { return build_root_system(LieType::parse(t)); }

Weight random_dominant(std::mt19937_64& rng, int rank, Int hi) {
    std::uniform_int_distribution<Int> d(0, hi);
    Weight w(rank);
    for (auto& v : w) v = d(rng);
    return w;
}

// Direct exponential sum over the weight system; the oracle the character
// formula must match.
std::complex<double> weight_sum_value(const RootSystem& rs, const Weight& mu,
                                      const std::vector<Rational>& xi) {
    std::complex<double> acc = 0.0;
    for (const auto& [eta, m] : freudenthal_multiplicities(rs, mu).entries) {
        std::vector<Rational> eq(eta.begin(), eta.end());
        Rational q = inner_product(rs, eq, xi);
        acc += double(m) * std::polar(1.0, 2.0 * std::numbers::pi * q.convert_to<double>());
    }
    return acc;
}

}  // namespace

TEST_CASE("alcove weight enumeration") {
    CHECK(alcove_weights(make("A1"), 2) ==
          std::vector<Weight>{{0}, {1}, {2}});
    CHECK(alcove_weights(make("A2"), 1) ==
          std::vector<Weight>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(alcove_weights(make("G2"), 0) == std::vector<Weight>{{0, 0}});
    CHECK(alcove_weights(make("B3"), 0) == std::vector<Weight>{{0, 0, 0}});
}

TEST_CASE("freudenthal examples") {
    RootSystem a1 = make("A1");
    auto v2 = freudenthal_multiplicities(a1, Weight{2});
    CHECK(v2.entries == std::map<Weight, Int>{{{-2}, 1}, {{0}, 1}, {{2}, 1}});

    RootSystem a2 = make("A2");
    auto adj = freudenthal_multiplicities(a2, Weight{1, 1});
    CHECK(adj.entries.at(Weight{0, 0}) == 2);
    CHECK(adj.total_mass() == 8);
    CHECK(weyl_dimension(a2, Weight{1, 1}) == 8);

    auto triv = freudenthal_multiplicities(a2, Weight{0, 0});
    CHECK(triv.entries == std::map<Weight, Int>{{{0, 0}, 1}});

    CHECK_THROWS_AS(freudenthal_multiplicities(a1, Weight{-1}), std::invalid_argument);
}

TEST_CASE("freudenthal mass equals the Weyl dimension formula") {
    std::mt19937_64 rng(17);
    for (const char* t : {"A2", "B2", "C3", "G2"}) {
        RootSystem rs = make(t);
        for (int rep = 0; rep < 5; ++rep) {
            Weight mu = random_dominant(rng, rs.rank, 2);
            CAPTURE(t);
            CAPTURE(weight_to_string(mu));
            CHECK(BigInt(freudenthal_multiplicities(rs, mu).total_mass()) ==
                  weyl_dimension(rs, mu));
        }
    }
}

TEST_CASE("tensor decomposition") {
    RootSystem a1 = make("A1");
    CHECK(tensor_decompose(a1, Weight{1}, Weight{1}) ==
          std::map<Weight, Int>{{{0}, 1}, {{2}, 1}});

    RootSystem a2 = make("A2");
    CHECK(tensor_decompose(a2, Weight{2, 1}, Weight{0, 0}) ==
          std::map<Weight, Int>{{{2, 1}, 1}});
    CHECK(tensor_decompose(a2, Weight{1, 0}, Weight{0, 1}) ==
          std::map<Weight, Int>{{{0, 0}, 1}, {{1, 1}, 1}});
}

TEST_CASE("tensor symmetry and dimension bookkeeping") {
    std::mt19937_64 rng(23);
    for (const char* t : {"A2", "B2", "G2"}) {
        RootSystem rs = make(t);
        for (int rep = 0; rep < 4; ++rep) {
            Weight a = random_dominant(rng, rs.rank, 2);
            Weight b = random_dominant(rng, rs.rank, 1);
            auto ab = tensor_decompose(rs, a, b);
            CHECK(ab == tensor_decompose(rs, b, a));
            BigInt mass = 0;
            for (const auto& [nu, n] : ab) mass += BigInt(n) * weyl_dimension(rs, nu);
            CHECK(mass == weyl_dimension(rs, a) * weyl_dimension(rs, b));
        }
    }
}

TEST_CASE("character values at rational points") {
    RootSystem a1 = make("A1");
    std::vector<Rational> third{Rational(1, 3)};
    CHECK(std::abs(character_value(a1, Weight{0}, third) - 1.0) < 1e-12);
    CHECK(std::abs(character_value(a1, Weight{1}, third) - 1.0) < 1e-12);
    // sin(3 theta)/sin(theta) at theta = pi/3: the level-1 ideal generator
    CHECK(std::abs(character_value(a1, Weight{2}, third)) < 1e-9);

    CHECK_THROWS_AS(character_value(a1, Weight{1}, std::vector<Rational>{Rational(1)}),
                    std::domain_error);
}

TEST_CASE("character formula agrees with the weight-system sum") {
    std::mt19937_64 rng(31);
    for (const char* t : {"A1", "A2", "B2", "G2"}) {
        RootSystem rs = make(t);
        std::uniform_int_distribution<Int> num(1, 4);
        for (int rep = 0; rep < 8; ++rep) {
            std::vector<Rational> xi(rs.rank);
            for (auto& v : xi) v = Rational(num(rng), 7 + 2 * num(rng));
            Weight mu = random_dominant(rng, rs.rank, 3);
            bool regular = true;
            for (const auto& alpha : positive_roots(rs)) {
                std::vector<Rational> aq(alpha.begin(), alpha.end());
                if (denominator(inner_product(rs, aq, xi)) == 1) regular = false;
            }
            if (!regular) continue;
            auto lhs = character_value(rs, mu, xi);
            auto rhs = weight_sum_value(rs, mu, xi);
            CHECK(std::abs(lhs - rhs) < 1e-9);
        }
    }
}
