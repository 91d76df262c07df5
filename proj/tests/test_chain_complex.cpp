#include "doctest.h"

#include <random>
#include <sstream>

#include "alcove/chain_complex.hpp"

using namespace alcove;

namespace {

StarContext make(const char* type, Int k) {
    return StarContext(build_root_system(LieType::parse(type)), k);
}

ChainElement single(FaceIndex f, const Weight& w, Int c = 1) {
    ChainElement x;
    x.add({f, w}, c);
    return x;
}

// random chain on canonical keys of the given face size
ChainElement random_chain(std::mt19937_64& rng, const StarContext& ctx, int face_size,
                          const Truncation& trunc, int terms) {
    std::vector<ChainKey> pool;
    std::uint32_t full = (1u << (ctx.rs.rank + 1)) - 1;
    for (std::uint32_t b = 1; b <= full; ++b) {
        FaceIndex f{b};
        if (f.size() != face_size) continue;
        for (const auto& w : canonical_basis(ctx, f, trunc)) pool.push_back({f, w});
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<Int> coef(-3, 3);
    ChainElement x;
    for (int i = 0; i < terms; ++i) x.add(pool[pick(rng)], coef(rng));
    return x;
}

}  // namespace

TEST_CASE("differential examples") {
    StarContext ctx = make("A1", 1);
    CHECK(differential(ctx, ChainElement{}).is_zero());
    // vertex faces map to zero
    CHECK(differential(ctx, single(face_from({0}), Weight{3})).is_zero());

    ChainElement d0 = differential(ctx, single(face_from({0, 1}), Weight{0}));
    ChainElement expect0;
    expect0.add({face_from({1}), Weight{0}}, 1);
    expect0.add({face_from({0}), Weight{0}}, -1);
    CHECK(d0 == expect0);

    ChainElement d3 = differential(ctx, single(face_from({0, 1}), Weight{3}));
    ChainElement expect3;
    expect3.add({face_from({1}), Weight{1}}, -1);
    expect3.add({face_from({0}), Weight{3}}, -1);
    CHECK(d3 == expect3);

    // lambda+rho on the affine wall: that component is dropped
    ChainElement d2 = differential(ctx, single(face_from({0, 1}), Weight{2}));
    ChainElement expect2;
    expect2.add({face_from({0}), Weight{2}}, -1);
    CHECK(d2 == expect2);
}

TEST_CASE("canonical basis examples") {
    StarContext ctx = make("A1", 1);
    Truncation t0{0, 1};
    CHECK(canonical_basis(ctx, face_from({0, 1}), t0) ==
          std::vector<Weight>{{-1}, {0}, {1}, {2}});
    CHECK(canonical_basis(ctx, face_from({0}), t0) == std::vector<Weight>{{0}, {1}, {2}});
    CHECK(canonical_basis(ctx, face_from({1}), t0) == std::vector<Weight>{{-1}, {0}, {1}});
    // the s_1-wall representative (-1) is excluded for faces whose group sees it
    CHECK_FALSE(is_canonical_key(ctx, face_from({0}), Weight{-1}));
}

TEST_CASE("the differential squares to zero on every truncated basis element") {
    for (auto [type, k, len] : {std::tuple{"A1", Int(1), Int(4)}, {"A2", Int(1), Int(3)},
                                {"B2", Int(1), Int(3)}, {"G2", Int(1), Int(2)}}) {
        StarContext ctx = make(type, k);
        Truncation trunc = make_truncation(ctx, len);
        std::uint32_t full = (1u << (ctx.rs.rank + 1)) - 1;
        for (std::uint32_t b = 1; b <= full; ++b) {
            FaceIndex f{b};
            if (f.size() < 2) continue;
            for (const auto& w : canonical_basis(ctx, f, trunc))
                CHECK(differential(ctx, differential(ctx, single(f, w))).is_zero());
        }
    }
}

TEST_CASE("skew composition: Sk_J after Sk_I is |W_I| Sk_J for J inside I") {
    std::mt19937_64 rng(13);
    StarContext ctx = make("A2", 1);
    std::uniform_int_distribution<Int> coef(-4, 4);
    std::uint32_t full = (1u << (ctx.rs.rank + 1)) - 1;
    for (std::uint32_t ib = 1; ib <= full; ++ib) {
        FaceIndex I{ib};
        for (std::uint32_t jb = 1; jb <= full; ++jb) {
            FaceIndex J{jb};
            if (J == I || (J.bits & I.bits) != J.bits) continue;  // need J subset of I
            Int order = static_cast<Int>(enumerate_subgroup(ctx, I).size());
            for (int rep = 0; rep < 5; ++rep) {
                Weight nu{coef(rng), coef(rng)};
                std::map<Weight, Int> lhs;
                for (const auto& [w, c] : skew_symmetrize(ctx, I, nu))
                    for (const auto& [w2, c2] : skew_symmetrize(ctx, J, w)) {
                        lhs[w2] += c * c2;
                        if (lhs[w2] == 0) lhs.erase(w2);
                    }
                std::map<Weight, Int> rhs;
                for (const auto& [w, c] : skew_symmetrize(ctx, J, nu)) rhs[w] = order * c;
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("homology of the truncated complex, SU(2) level 1") {
    StarContext ctx = make("A1", 1);
    auto h = homology_snf(ctx, make_truncation(ctx, 4));
    REQUIRE(h.size() == 2);
    CHECK(h[0].free_rank == 2);
    CHECK(h[0].torsion.empty());
    CHECK(h[1].free_rank == 0);
    CHECK(h[1].torsion.empty());
}

TEST_CASE("homology window guard") {
    StarContext ctx = make("A2", 1);
    CHECK_THROWS_AS(homology_snf(ctx, Truncation{1, 3}), ResourceError);
    HomologyOptions tiny;
    tiny.max_basis = 2;
    CHECK_THROWS_AS(homology_snf(ctx, make_truncation(ctx, 3), tiny), ResourceError);
}

TEST_CASE("reduce_cycle on an already-canonical chain") {
    StarContext ctx = make("A1", 1);
    ChainElement x = single(face_from({0}), Weight{0});
    ReduceOutcome out = reduce_cycle(ctx, x);
    CHECK(out.canonical == x);
    CHECK(out.witness.z.is_zero());
    CHECK(verify_witness(ctx, out.witness));
}

TEST_CASE("reduce_cycle single peel step") {
    StarContext ctx = make("A1", 1);
    std::ostringstream trace;
    ReduceOutcome out = reduce_cycle(ctx, single(face_from({0}), Weight{3}), {}, &trace);
    CHECK(out.witness.z.entries.size() == 1);
    CHECK(verify_witness(ctx, out.witness));
    REQUIRE(out.canonical.entries.size() == 1);
    const auto& [key, coeff] = *out.canonical.entries.begin();
    CHECK((key.weight == Weight{0} || key.weight == Weight{1}));
    CHECK(trace.str().find("peel") != std::string::npos);
}

TEST_CASE("non-cycles are rejected with their boundary") {
    StarContext ctx = make("A1", 1);
    ChainElement x = single(face_from({0, 1}), Weight{3});
    CHECK_THROWS_WITH_AS(reduce_cycle(ctx, x), doctest::Contains("not a cycle"),
                         std::invalid_argument);
}

TEST_CASE("random boundaries reduce to canonical zero with verified witnesses") {
    std::mt19937_64 rng(29);
    for (auto [type, k] : {std::pair{"A1", Int(1)}, {"A2", Int(1)}}) {
        StarContext ctx = make(type, k);
        Truncation trunc = make_truncation(ctx, 2);
        for (int p1 = 2; p1 <= ctx.rs.rank + 1; ++p1) {
            for (int rep = 0; rep < 5; ++rep) {
                ChainElement y = random_chain(rng, ctx, p1, trunc, 3);
                ChainElement x = differential(ctx, y);
                if (x.is_zero()) continue;
                ReduceOutcome out = reduce_cycle(ctx, x);
                CHECK(out.canonical.is_zero());
                CHECK(verify_witness(ctx, out.witness));
            }
        }
    }
}

TEST_CASE("reduce_cycle moves a far vertex-face class onto the alcove") {
    StarContext ctx = make("A2", 1);
    Weight far = apply_word(ctx, {0, 1, 2, 0, 1, 0}, Weight{1, 0});
    ReductionResult red = reduce_parabolic(ctx, face_from({0}), far);
    REQUIRE(red.sign != 0);
    ChainElement x = single(face_from({0}), red.rep);
    ReduceOutcome out = reduce_cycle(ctx, x);
    CHECK(verify_witness(ctx, out.witness));
    REQUIRE(out.canonical.entries.size() == 1);
    const auto& [key, coeff] = *out.canonical.entries.begin();
    CHECK(length_of_weight(ctx, key.weight) == 0);
    CHECK((coeff == 1 || coeff == -1));
    CHECK(reduce_to_alcove(ctx, key.weight).rep == reduce_to_alcove(ctx, far).rep);
}

TEST_CASE("far boundaries at middle degree reduce to zero") {
    StarContext ctx = make("A2", 1);
    ChainElement y;
    for (const auto& base : {Weight{0, 0}, Weight{1, 0}})
        y.add({face_from({0, 1, 2}), apply_word(ctx, {0, 1, 2, 0, 1}, base)}, 2);
    ChainElement x = differential(ctx, y);
    REQUIRE(!x.is_zero());
    ReduceOutcome out = reduce_cycle(ctx, x);
    CHECK(out.canonical.is_zero());
    CHECK(verify_witness(ctx, out.witness));
}

TEST_CASE("witness verification catches corruption") {
    StarContext ctx = make("A1", 1);
    BoundaryWitness w;  // zero witness with x == y
    w.x = single(face_from({0}), Weight{1});
    w.y = w.x;
    CHECK(verify_witness(ctx, w));

    ReduceOutcome out = reduce_cycle(ctx, single(face_from({0}), Weight{3}));
    CHECK(verify_witness(ctx, out.witness));
    BoundaryWitness bad = out.witness;
    bad.z.add(bad.z.entries.begin()->first, 1);  // bump one coefficient
    CHECK_FALSE(verify_witness(ctx, bad));
}
