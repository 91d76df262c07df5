#ifndef ALCOVE_FUSION_HPP
#define ALCOVE_FUSION_HPP

#include <complex>
#include <map>
#include <vector>

#include "alcove/affine_weyl.hpp"
#include "alcove/weights.hpp"

namespace alcove {

/// A fusion label is a weight in the level-k alcove.
bool is_fusion_label(const StarContext& ctx, const Weight& lambda);
void require_fusion_label(const StarContext& ctx, const Weight& lambda);

/// Level-k fusion product: decompose classically, then fold every summand
/// into the alcove with signs, dropping wall hits.
std::map<Weight, Int> fusion_product(const StarContext& ctx, const Weight& lambda,
                                     const Weight& mu);

/// chi_mu evaluated at the special element t_lambda = exp((lambda+rho)/m).
std::complex<double> character_at_special_point(const StarContext& ctx, const Weight& mu,
                                                const Weight& lambda);

/// True when the combination vanishes (below tol) at every special point of
/// the level-k alcove.
bool fusion_ideal_member(const StarContext& ctx, const CharacterCombination& chi,
                         double tol = 1e-8);

struct FusionTable {
    LieType type;
    Int level = 0;
    std::vector<Weight> labels;  // lexicographic
    /// products[{i,j}] (i <= j) maps label index -> structure constant
    std::map<std::pair<int, int>, std::map<int, Int>> products;

    int label_index(const Weight& w) const;  // -1 when absent
    Int coefficient(int i, int j, int k) const;
};

FusionTable build_fusion_table(const StarContext& ctx);

}  // namespace alcove

#endif
