#ifndef ALCOVE_CHAIN_COMPLEX_HPP
#define ALCOVE_CHAIN_COMPLEX_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "alcove/affine_weyl.hpp"
#include "alcove/intmat.hpp"

namespace alcove {

/// Basis element Sk_I(lambda) of the face complex.  The stored weight is
/// always the canonical W_I-orbit representative: strictly dominant for the
/// wall generators of the face, in particular W_I-regular.
struct ChainKey {
    FaceIndex face;
    Weight weight;
    auto operator<=>(const ChainKey&) const = default;
};

/// Finite integer chain in the Sk-basis.  Zero coefficients are never stored.
struct ChainElement {
    std::map<ChainKey, Int> entries;

    bool is_zero() const { return entries.empty(); }
    void add(const ChainKey& k, Int c);
    void add_scaled(const ChainElement& other, Int c);
    bool operator==(const ChainElement&) const = default;
};

ChainElement chain_sub(const ChainElement& a, const ChainElement& b);
std::string chain_to_string(const ChainElement& x);

/// Truncation window: basis keys carry affine length <= max_length; the
/// degree-0 homology readout is restricted to length <= max_length - margin.
struct Truncation {
    Int max_length = 0;
    Int margin = 0;
};

Truncation make_truncation(const StarContext& ctx, Int max_length);

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// True when lambda is the stored representative for the face.
bool is_canonical_key(const StarContext& ctx, FaceIndex face, const Weight& lambda);

/// Canonical representatives of length <= trunc.max_length for one face,
/// lexicographic.
std::vector<Weight> canonical_basis(const StarContext& ctx, FaceIndex face,
                                    const Truncation& trunc);

/// The boundary map: dSk_I(lambda) = sum_r (-1)^r Sk_{I minus r-th vertex}(lambda),
/// each term folded onto its canonical representative with its sign (wall
/// hits vanish).  Faces with one vertex map to zero.
ChainElement differential(const StarContext& ctx, const ChainElement& x);

struct DegreeHomology {
    Int free_rank = 0;
    std::vector<BigInt> torsion;
};

struct HomologyOptions {
    std::size_t max_basis = 200000;
};

/// Homology of the truncated complex by Smith normal form, degree by degree
/// (index p of the result). Degree 0 is read off the inner window.
std::vector<DegreeHomology> homology_snf(const StarContext& ctx, const Truncation& trunc,
                                         const HomologyOptions& opts = {});

/// Certificate for a chain-level identity: dz = x - y, re-checkable exactly.
struct BoundaryWitness {
    ChainElement z;
    ChainElement x;
    ChainElement y;
};

bool verify_witness(const StarContext& ctx, const BoundaryWitness& w);

struct ReduceOutcome {
    ChainElement canonical;
    BoundaryWitness witness;
};

/// Moves a cycle onto the targeted alcoves (identity word = fundamental
/// alcove), one orbit at a time, and certifies the move with a boundary
/// witness.  Boundaries come back as canonical zero.  Throws
/// std::invalid_argument for non-cycles and ResourceError when the working
/// window would have to grow past its limits.
ReduceOutcome reduce_cycle(const StarContext& ctx, const ChainElement& x,
                           const std::vector<AffineWord>& targets = {},
                           std::ostream* trace = nullptr);

}  // namespace alcove

#endif
