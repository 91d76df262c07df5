#ifndef ALCOVE_FORMAL_MODULE_HPP
#define ALCOVE_FORMAL_MODULE_HPP

#include <map>

#include "alcove/chain_complex.hpp"
#include "alcove/weights.hpp"

namespace alcove {

/// Window restriction of an integral functional on the weight lattice.
/// When `complete` is set the entries are understood as the restriction of a
/// vector defined on whole star-orbits, constant along orbits (Invariant,
/// full affine action) or alternating (AntiInvariant, finite Weyl action).
struct WindowVector {
    enum class Pattern { None, Invariant, AntiInvariant };

    Int max_length = 0;
    Pattern pattern = Pattern::None;
    bool complete = false;
    std::map<Weight, Int> entries;

    Int get(const Weight& w) const;
    bool is_zero() const { return entries.empty(); }
};

/// Indicator of the star-orbit of lambda0 inside the window.  Rejects wall
/// orbits.
WindowVector invariant_extension(const StarContext& ctx, const Weight& lambda0,
                                 Int max_length);

/// True when the vector, read as a top-degree chain, has vanishing boundary
/// on the inner window (boundary ring excluded).
bool top_degree_cycle_check(const StarContext& ctx, const WindowVector& v);

struct FormalReduction {
    std::map<Weight, Int> classes;  // level-k alcove label -> coefficient
    BoundaryWitness witness;
};

/// Degree-0 reduction of a window-restricted anti-invariant vector: each
/// star-orbit is folded onto its alcove label, wall orbits are certified to
/// vanish, and the whole move is returned as one exact boundary witness.
FormalReduction formal_reduce(const StarContext& ctx, const WindowVector& v);

/// Multiplication by a virtual character (integer combination of
/// irreducibles given by highest weight): convolution with its full weight
/// system, restricted to the shrunk window on which it is exact.
WindowVector module_action(const StarContext& ctx, const CharacterCombination& chi,
                           const WindowVector& v);

}  // namespace alcove

#endif
