#ifndef ALCOVE_ROOT_SYSTEM_HPP
#define ALCOVE_ROOT_SYSTEM_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace alcove {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A weight in the fundamental-weight basis: entry i is the pairing with
/// the i-th simple coroot (Dynkin labels).
using Weight = std::vector<Int>;

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_scaled(const Weight& a, Int c);
std::string weight_to_string(const Weight& w);

/// Cartan series and rank of a compact simple simply connected group.
/// Valid combinations: A (l>=1), B (l>=2), C (l>=2), D (l>=3),
/// E (l in {6,7,8}), F (l=4), G (l=2).
struct LieType {
    char series = 'A';
    int rank = 1;

    std::string to_string() const;
    static LieType parse(std::string_view text);  // throws std::invalid_argument
};

bool valid_lie_type(char series, int rank);

/// Static Cartan data in the basic inner product normalization
/// (highest root has squared length 2).  Everything is exact: integers for
/// lattice data, rationals for the quadratic form.
struct RootSystem {
    LieType type;
    int rank = 0;

    /// cartan[i][j] = <alpha_j, alpha_i^vee>; column j holds the Dynkin
    /// labels of the j-th simple root.
    std::vector<std::vector<Int>> cartan;
    std::vector<Weight> simple_roots;          // labels, column j of cartan
    std::vector<std::vector<Int>> positive_root_coords;  // in simple-root basis
    std::vector<Weight> positive_roots;        // labels
    Weight highest_root;                       // theta, labels
    std::vector<Int> marks;                    // theta = sum marks[i] * alpha_i
    std::vector<Int> comarks;                  // theta^vee = sum comarks[i] * alpha_i^vee
    Int dual_coxeter = 0;                      // 1 + sum of comarks
    Weight rho;                                // all ones
    std::vector<Rational> half_norms;          // d_i = (alpha_i, alpha_i)/2
    std::vector<std::vector<Rational>> qform;  // F_ij = <omega_i, omega_j>
    Int weyl_order = 0;
};

/// Builds the full root system record for a valid type.  Throws
/// std::invalid_argument for invalid series/rank combinations.
RootSystem build_root_system(LieType type);

/// Pairing of a weight with the i-th coroot of the extended system:
/// i >= 1 reads label i, i = 0 pairs with theta^vee (comark-weighted sum).
Int coroot_pairing(const RootSystem& rs, const Weight& lambda, int i);

/// Basic inner product of two weights, exact.
Rational inner_product(const RootSystem& rs, const Weight& a, const Weight& b);
Rational inner_product(const RootSystem& rs, const std::vector<Rational>& a,
                       const std::vector<Rational>& b);

/// The complete list of positive roots as weights.
const std::vector<Weight>& positive_roots(const RootSystem& rs);

}  // namespace alcove

#endif
