#include "doctest.h"

#include <deque>
#include <random>
#include <set>

#include "alcove/affine_weyl.hpp"

using namespace alcove;

namespace {

StarContext make(const char* type, Int k) {
    return StarContext(build_root_system(LieType::parse(type)), k);
}

// Independent BFS length oracle over star words.
Int bfs_length(const StarContext& ctx, const Weight& lambda, Int cap) {
    auto in_closed = [&](const Weight& w) {
        for (int i = 0; i <= ctx.rs.rank; ++i) {
            Int v = i == 0 ? ctx.shifted_level - coroot_pairing(ctx.rs, w, 0) -
                                 (ctx.rs.dual_coxeter - 1)
                           : w[i - 1] + 1;
            if (v < 0) return false;
        }
        return true;
    };
    if (in_closed(lambda)) return 0;
    std::set<Weight> seen{lambda};
    std::deque<std::pair<Weight, Int>> q{{lambda, 0}};
    while (!q.empty()) {
        auto [cur, d] = q.front();
        q.pop_front();
        if (d >= cap) continue;
        for (int g = 0; g <= ctx.rs.rank; ++g) {
            Weight n = star_reflect(ctx, g, cur);
            if (!seen.insert(n).second) continue;
            if (in_closed(n)) return d + 1;
            q.emplace_back(n, d + 1);
        }
    }
    return -1;
}

std::vector<Weight> weight_box(int rank, Int radius) {
    std::vector<Weight> out;
    Weight w(rank, -radius);
    while (true) {
        out.push_back(w);
        int i = 0;
        while (i < rank && w[i] == radius) w[i++] = -radius;
        if (i == rank) break;
        ++w[i];
    }
    return out;
}

}  // namespace

TEST_CASE("star reflection examples") {
    StarContext a1 = make("A1", 1);
    CHECK(a1.shifted_level == 3);
    CHECK(star_reflect(a1, 0, Weight{3}) == Weight{1});
    CHECK(star_reflect(a1, 1, Weight{-1}) == Weight{-1});
    StarContext a2 = make("A2", 0);
    CHECK(star_reflect(a2, 1, Weight{0, 0}) == Weight{-2, 1});
}

TEST_CASE("star reflection is an involution") {
    std::mt19937_64 rng(7);
    for (const char* t : {"A2", "B2", "G2"}) {
        StarContext ctx = make(t, 1);
        std::uniform_int_distribution<Int> coef(-6, 6);
        for (int rep = 0; rep < 50; ++rep) {
            Weight w(ctx.rs.rank);
            for (auto& v : w) v = coef(rng);
            for (int g = 0; g <= ctx.rs.rank; ++g)
                CHECK(star_reflect(ctx, g, star_reflect(ctx, g, w)) == w);
        }
    }
}

TEST_CASE("reduction to the alcove") {
    StarContext ctx = make("A1", 1);
    ReductionResult r1 = reduce_to_alcove(ctx, Weight{1});
    CHECK(r1.sign == 1);
    CHECK(r1.rep == Weight{1});
    CHECK(r1.word.empty());
    CHECK(r1.length == 0);

    ReductionResult r2 = reduce_to_alcove(ctx, Weight{2});
    CHECK(r2.sign == 0);
    CHECK(r2.rep == Weight{2});

    ReductionResult r3 = reduce_to_alcove(ctx, Weight{3});
    CHECK(r3.sign == -1);
    CHECK(r3.rep == Weight{1});
    CHECK(r3.word == AffineWord{0});
    CHECK(r3.length == 1);
}

TEST_CASE("reduction word maps input to representative") {
    std::mt19937_64 rng(11);
    for (const char* t : {"A1", "A2", "B2"}) {
        StarContext ctx = make(t, 2);
        std::uniform_int_distribution<Int> coef(-8, 8);
        for (int rep = 0; rep < 40; ++rep) {
            Weight w(ctx.rs.rank);
            for (auto& v : w) v = coef(rng);
            ReductionResult r = reduce_to_alcove(ctx, w);
            CHECK(apply_word(ctx, r.word, w) == r.rep);
            if (r.sign != 0) CHECK(r.sign == (r.length % 2 ? -1 : 1));
        }
    }
}

TEST_CASE("rho-shift consistency: alcove membership equals trivial reduction") {
    for (const char* t : {"A1", "A2"}) {
        for (Int k = 0; k <= 3; ++k) {
            StarContext ctx = make(t, k);
            for (const auto& w : weight_box(ctx.rs.rank, 2 * k + 4)) {
                bool in_alcove = true;
                for (Int v : w)
                    if (v < 0) in_alcove = false;
                if (coroot_pairing(ctx.rs, w, 0) > k) in_alcove = false;
                ReductionResult r = reduce_to_alcove(ctx, w);
                CHECK(in_alcove == (r.sign == 1 && r.word.empty()));
            }
        }
    }
}

TEST_CASE("greedy length is the BFS minimum") {
    for (const char* t : {"A1", "A2"}) {
        for (Int k = 0; k <= 2; ++k) {
            StarContext ctx = make(t, k);
            for (const auto& w : weight_box(ctx.rs.rank, 6)) {
                Int greedy = length_of_weight(ctx, w);
                CHECK(greedy == bfs_length(ctx, w, greedy + 2));
            }
        }
    }
}

TEST_CASE("length examples") {
    StarContext ctx = make("A1", 1);
    CHECK(length_of_weight(ctx, Weight{0}) == 0);
    CHECK(length_of_weight(ctx, Weight{3}) == 1);
    CHECK(length_of_weight(ctx, Weight{3}) == bfs_length(ctx, Weight{3}, 4));
    // lambda = (-4): lambda+rho = -3 reflects to the wall point 3 in one step
    CHECK(bfs_length(ctx, Weight{-4}, 4) == 1);
    CHECK(length_of_weight(ctx, Weight{-4}) == 1);
}

TEST_CASE("length between two weights") {
    StarContext ctx = make("A1", 1);
    CHECK(length_between(ctx, Weight{5}, Weight{5}, 3).kind == LengthBetween::Kind::Finite);
    CHECK(length_between(ctx, Weight{5}, Weight{5}, 3).value == 0);

    auto r = length_between(ctx, Weight{3}, Weight{1}, 3);
    CHECK(r.kind == LengthBetween::Kind::Finite);
    CHECK(r.value == 1);

    CHECK(length_between(ctx, Weight{0}, Weight{1}, 5).kind == LengthBetween::Kind::Infinite);

    auto u = length_between(ctx, Weight{-6}, Weight{0}, 1);
    CHECK(u.kind == LengthBetween::Kind::Undetermined);
    CHECK(u.value == 1);
    auto f = length_between(ctx, Weight{-6}, Weight{0}, 6);
    CHECK(f.kind == LengthBetween::Kind::Finite);
    CHECK(f.value == 2);
}

TEST_CASE("subgroup enumeration") {
    StarContext a1 = make("A1", 1);
    CHECK(enumerate_subgroup(a1, face_from({0, 1})).size() == 1);
    auto two = enumerate_subgroup(a1, face_from({0}));
    CHECK(two.size() == 2);
    CHECK(two[0].word.empty());
    CHECK(two[1].word == AffineWord{1});
    CHECK(two[1].sign == -1);
    StarContext a2 = make("A2", 1);
    CHECK(enumerate_subgroup(a2, face_from({0})).size() == 6);
    CHECK_THROWS_AS(enumerate_subgroup(a2, FaceIndex{0}), std::invalid_argument);
}

TEST_CASE("the vertex-0 parabolic recovers the full finite Weyl group") {
    for (const char* t : {"A2", "A3", "B2", "B3", "G2"}) {
        StarContext ctx = make(t, 1);
        CHECK(static_cast<Int>(enumerate_subgroup(ctx, face_from({0})).size()) ==
              ctx.rs.weyl_order);
    }
}

TEST_CASE("skew symmetrization examples") {
    StarContext ctx = make("A1", 1);
    auto trivial = skew_symmetrize(ctx, face_from({0, 1}), Weight{5});
    CHECK(trivial == std::map<Weight, Int>{{Weight{5}, 1}});

    auto sk0 = skew_symmetrize(ctx, face_from({0}), Weight{0});
    CHECK(sk0 == std::map<Weight, Int>{{Weight{0}, 1}, {Weight{-2}, -1}});

    CHECK(skew_symmetrize(ctx, face_from({1}), Weight{2}).empty());
}

TEST_CASE("skew sums are anti-invariant") {
    std::mt19937_64 rng(3);
    StarContext ctx = make("A2", 1);
    std::uniform_int_distribution<Int> coef(-4, 4);
    for (std::uint32_t bits = 1; bits < 8; ++bits) {
        FaceIndex face{bits};
        auto elements = enumerate_subgroup(ctx, face);
        for (int rep = 0; rep < 10; ++rep) {
            Weight w{coef(rng), coef(rng)};
            auto sk = skew_symmetrize(ctx, face, w);
            for (const auto& e : elements) {
                std::map<Weight, Int> moved;
                for (const auto& [key, c] : sk)
                    moved[apply_word(ctx, e.word, key)] = e.sign * c;
                CHECK(moved == sk);
            }
        }
    }
}

TEST_CASE("skew vanishes exactly on parabolic walls") {
    for (const char* t : {"A1", "A2"}) {
        StarContext ctx = make(t, 1);
        for (std::uint32_t bits = 1; bits < (1u << (ctx.rs.rank + 1)); ++bits) {
            FaceIndex face{bits};
            auto elements = enumerate_subgroup(ctx, face);
            for (const auto& w : weight_box(ctx.rs.rank, 4)) {
                bool fixed = false;
                for (const auto& e : elements)
                    if (!e.word.empty() && apply_word(ctx, e.word, w) == w) fixed = true;
                CHECK(skew_symmetrize(ctx, face, w).empty() == fixed);
            }
        }
    }
}

// The star action implemented by rho-shifted reflection agrees with the
// level-m action through the face centers nu_I = (rho - rho_I) / h_vee,
// where rho_I is the half sum of the positive roots of the wall subsystem
// (simple roots alpha_j for j outside the face, alpha_0 = -theta).
TEST_CASE("center formulation of the level action agrees on SU(2) and SU(3)") {
    for (const char* t : {"A1", "A2"}) {
        StarContext ctx = make(t, 1);
        const int l = ctx.rs.rank;
        auto to_q = [&](const Weight& w) { return std::vector<Rational>(w.begin(), w.end()); };

        auto pair_with = [&](const std::vector<Rational>& x, const Weight& beta) {
            std::vector<Rational> bq(beta.begin(), beta.end());
            return 2 * inner_product(ctx.rs, x, bq) / inner_product(ctx.rs, bq, bq);
        };
        auto reflect_in = [&](std::vector<Rational> x, const Weight& beta) {
            Rational c = pair_with(x, beta);
            for (int i = 0; i < l; ++i) x[i] -= c * beta[i];
            return x;
        };

        for (std::uint32_t bits = 1; bits < (1u << (l + 1)); ++bits) {
            FaceIndex face{bits};
            // simple roots of the wall subsystem
            std::vector<Weight> simples;
            for (int j = 1; j <= l; ++j)
                if (!face.contains(j)) simples.push_back(ctx.rs.simple_roots[j - 1]);
            if (!face.contains(0)) simples.push_back(weight_scaled(ctx.rs.highest_root, -1));

            // subsystem closure and its positive part
            std::set<Weight> roots(simples.begin(), simples.end());
            bool grew = true;
            while (grew) {
                grew = false;
                std::vector<Weight> cur(roots.begin(), roots.end());
                for (const auto& r : cur)
                    for (const auto& s : simples) {
                        std::vector<Rational> rq(r.begin(), r.end());
                        Rational c = pair_with(rq, s);
                        CHECK(denominator(c) == 1);
                        Weight img = weight_sub(r, weight_scaled(s, numerator(c).convert_to<Int>()));
                        if (roots.insert(img).second) grew = true;
                    }
            }
            std::vector<Rational> rho_sub(l, 0);
            for (const auto& r : roots) {
                // positive iff expressible with non-negative coords in `simples`
                bool found = false;
                auto rec = [&](auto&& self, std::size_t idx, Weight acc) -> void {
                    if (found) return;
                    if (acc == r) {
                        found = true;
                        return;
                    }
                    if (idx == simples.size()) return;
                    Weight cur = acc;
                    for (Int c = 0; c <= 6 && !found; ++c) {
                        self(self, idx + 1, cur);
                        cur = weight_add(cur, simples[idx]);
                    }
                };
                rec(rec, 0, Weight(l, 0));
                if (found)
                    for (int i = 0; i < l; ++i) rho_sub[i] += Rational(r[i], 2);
            }
            std::vector<Rational> center(l);
            for (int i = 0; i < l; ++i)
                center[i] = (Rational(1) - rho_sub[i]) / ctx.rs.dual_coxeter;

            for (const auto& e : enumerate_subgroup(ctx, face)) {
                for (const auto& lam : weight_box(l, 2)) {
                    // rho-shifted star action on the mu side
                    Weight lhs = weight_add(apply_word(ctx, e.word, lam), ctx.rs.rho);
                    // linear action through the shifted center m * nu_I
                    std::vector<Rational> x = to_q(weight_add(lam, ctx.rs.rho));
                    for (int i = 0; i < l; ++i) x[i] -= ctx.shifted_level * center[i];
                    for (int g : e.word) {
                        Weight beta = g == 0 ? weight_scaled(ctx.rs.highest_root, -1)
                                             : ctx.rs.simple_roots[g - 1];
                        x = reflect_in(x, beta);
                    }
                    for (int i = 0; i < l; ++i) x[i] += ctx.shifted_level * center[i];
                    for (int i = 0; i < l; ++i) CHECK(Rational(lhs[i]) == x[i]);
                }
            }
        }
    }
}

TEST_CASE("window weights carry exact lengths") {
    for (const char* t : {"A1", "A2"}) {
        StarContext ctx = make(t, 1);
        for (const auto& [w, len] : window_weights(ctx, 3))
            CHECK(len == length_of_weight(ctx, w));
    }
}
