#ifndef ALCOVE_WEIGHTS_HPP
#define ALCOVE_WEIGHTS_HPP

#include <complex>
#include <map>
#include <vector>

#include "alcove/root_system.hpp"

namespace alcove {

/// Finite weight system with strictly positive multiplicities.
struct WeightMultiset {
    std::map<Weight, Int> entries;

    Int total_mass() const;
};

/// Integer combination of irreducible characters, keyed by highest weight.
using CharacterCombination = std::map<Weight, Int>;

/// All weights in the level-k alcove (labels >= 0, comark-weighted sum <= k)
/// in lexicographic order.
std::vector<Weight> alcove_weights(const RootSystem& rs, Int k);

bool is_dominant(const Weight& lambda);
/// Plain (unshifted) dominant representative of the W-orbit.
Weight dominant_rep(const RootSystem& rs, const Weight& lambda);

BigInt weyl_dimension(const RootSystem& rs, const Weight& mu);

/// Full weight system of the irreducible V_mu by the Freudenthal recursion.
WeightMultiset freudenthal_multiplicities(const RootSystem& rs, const Weight& mu);

/// Tensor product multiplicities via the rho-shifted reflection of
/// lambda + eta over the weight system of V_mu (signed, walls dropped).
std::map<Weight, Int> tensor_decompose(const RootSystem& rs, const Weight& lambda,
                                       const Weight& mu);

/// Weyl character formula at exp(xi), xi given in rational fundamental-weight
/// coordinates.  Exponents are exact rationals; only the final complex sum is
/// floating point.  Throws std::domain_error when xi is singular
/// (<alpha, xi> integral for some positive root).
std::complex<double> character_value(const RootSystem& rs, const Weight& mu,
                                     const std::vector<Rational>& xi);

}  // namespace alcove

#endif
