#ifndef ALCOVE_AFFINE_WEYL_HPP
#define ALCOVE_AFFINE_WEYL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "alcove/root_system.hpp"

namespace alcove {

/// Level-k context for the shifted (star) affine Weyl action.  The action
/// reflects lambda+rho across the walls <alpha_i^vee,.> = 0 (i >= 1) and
/// <theta^vee,.> = m with m = k + h^vee.
struct StarContext {
    RootSystem rs;
    Int level = 0;
    Int shifted_level = 0;  // m = level + dual Coxeter number

    StarContext() = default;
    StarContext(RootSystem r, Int k);
};

/// Word in the affine generators 0..l, applied first letter first.
using AffineWord = std::vector<int>;

/// Non-empty subset of the alcove vertex set {0..l}, stored as a bitmask.
/// The parabolic W_I attached to a face is generated by the s_i with i NOT
/// in the face (the walls through the face).
struct FaceIndex {
    std::uint32_t bits = 0;

    bool contains(int i) const { return (bits >> i) & 1u; }
    int size() const;
    std::vector<int> members() const;
    FaceIndex with(int i) const { return FaceIndex{bits | (1u << i)}; }
    FaceIndex without(int i) const { return FaceIndex{bits & ~(1u << i)}; }
    auto operator<=>(const FaceIndex&) const = default;
};

FaceIndex face_from(std::initializer_list<int> members);
FaceIndex face_from(const std::vector<int>& members);
std::string face_to_string(const FaceIndex& f);

/// Bitmask of generator indices 0..l.
using GenMask = std::uint32_t;
GenMask all_generators(const RootSystem& rs);
GenMask finite_generators(const RootSystem& rs);
/// Generators of W_I: the complement of the face in {0..l}.
GenMask subgroup_generators(const RootSystem& rs, FaceIndex face);

struct ReductionResult {
    int sign = 0;          // -1, 0 (wall), +1
    Weight rep;            // representative in the closed target chamber
    AffineWord word;       // maps the input to rep under the star action
    Int length = 0;        // word length, minimal
};

Weight star_reflect(const StarContext& ctx, int i, const Weight& lambda);
Weight apply_word(const StarContext& ctx, const AffineWord& word, const Weight& lambda);

/// Greedy wall repair restricted to the generators in `allowed`: repeatedly
/// reflects across the smallest violated wall.  Each step lowers the number
/// of separating affine hyperplanes by one, so the word is minimal.
ReductionResult reduce_weight(const StarContext& ctx, const Weight& lambda, GenMask allowed);

ReductionResult reduce_to_alcove(const StarContext& ctx, const Weight& lambda);
/// Reduction to the W_I-dominant representative (generators not in the face).
ReductionResult reduce_parabolic(const StarContext& ctx, FaceIndex face, const Weight& lambda);

Int length_of_weight(const StarContext& ctx, const Weight& lambda);

struct LengthBetween {
    enum class Kind { Finite, Infinite, Undetermined } kind;
    Int value = 0;  // distance when Finite, the cap when Undetermined
};

/// Minimal word length moving lambda to mu, BFS up to `cap` generator
/// applications.  Distinct closed-alcove representatives mean distinct
/// orbits, reported as Infinite; same orbit but not found within the cap is
/// reported as Undetermined, never silently infinite.
LengthBetween length_between(const StarContext& ctx, const Weight& lambda, const Weight& mu,
                             Int cap);

struct SubgroupElement {
    AffineWord word;  // reduced
    int sign = 0;     // (-1)^length
};

/// All elements of the finite parabolic W_I as reduced words with signs.
/// Throws std::invalid_argument for an empty face.
std::vector<SubgroupElement> enumerate_subgroup(const StarContext& ctx, FaceIndex face);

/// Length of the longest element of W_I.
Int longest_element_length(const StarContext& ctx, FaceIndex face);
/// max over faces of the longest-element length (attained at vertex faces).
Int default_margin(const StarContext& ctx);

/// Sk_I(lambda): the signed W_I-orbit sum.  Zero exactly when some
/// reflection of W_I fixes lambda.
std::map<Weight, Int> skew_symmetrize(const StarContext& ctx, FaceIndex face,
                                      const Weight& lambda);

/// Weights lambda with lambda+rho in the closed alcove of level m.
std::vector<Weight> closed_alcove_weights(const StarContext& ctx);

/// All weights of affine length <= max_length, with exact lengths
/// (BFS from the closed-alcove layer).
std::map<Weight, Int> window_weights(const StarContext& ctx, Int max_length);

}  // namespace alcove

#endif
