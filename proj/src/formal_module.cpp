#include "alcove/formal_module.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <stdexcept>

namespace alcove {

Int WindowVector::get(const Weight& w) const {
    auto it = entries.find(w);
    return it == entries.end() ? 0 : it->second;
}

WindowVector invariant_extension(const StarContext& ctx, const Weight& lambda0,
                                 Int max_length) {
    ReductionResult red = reduce_to_alcove(ctx, lambda0);
    if (red.sign == 0)
        throw std::invalid_argument("wall orbit: " + weight_to_string(lambda0) +
                                    " is fixed by a reflection");
    WindowVector v;
    v.max_length = max_length;
    v.pattern = WindowVector::Pattern::Invariant;
    v.complete = true;
    if (max_length < 0) return v;
    auto window = window_weights(ctx, max_length);
    // orbit members connect to the representative through monotone reductions,
    // so a BFS restricted to the window sees the whole orbit-window overlap
    if (!window.count(red.rep)) return v;
    std::deque<Weight> queue{red.rep};
    v.entries.emplace(red.rep, 1);
    while (!queue.empty()) {
        Weight cur = queue.front();
        queue.pop_front();
        for (int g = 0; g <= ctx.rs.rank; ++g) {
            Weight n = star_reflect(ctx, g, cur);
            if (!window.count(n)) continue;
            if (v.entries.emplace(n, 1).second) queue.push_back(n);
        }
    }
    return v;
}

bool top_degree_cycle_check(const StarContext& ctx, const WindowVector& v) {
    FaceIndex top{(1u << (ctx.rs.rank + 1)) - 1};
    ChainElement x;
    for (const auto& [w, c] : v.entries) x.add({top, w}, c);
    ChainElement d = differential(ctx, x);
    Int inner = v.max_length - default_margin(ctx);
    for (const auto& [k, c] : d.entries)
        if (length_of_weight(ctx, k.weight) <= inner) return false;
    return true;
}

FormalReduction formal_reduce(const StarContext& ctx, const WindowVector& v) {
    if (v.pattern != WindowVector::Pattern::AntiInvariant)
        throw std::invalid_argument("formal_reduce needs an anti-invariant window vector");
    GenMask finite = finite_generators(ctx.rs);
    auto window = window_weights(ctx, v.max_length);
    for (const auto& [w, c] : v.entries)
        if (c != 0 && !window.count(w))
            throw std::invalid_argument("entry " + weight_to_string(w) +
                                        " lies outside the window");
    ChainElement x;
    const FaceIndex face0{1u};  // vertex 0 carries the finite Weyl group
    for (const auto& [w, len] : window) {
        ReductionResult fin = reduce_weight(ctx, w, finite);
        Int expected = fin.sign == 0 ? 0 : fin.sign * v.get(fin.rep);
        if (v.get(w) != expected)
            throw std::invalid_argument("not anti-invariant at " + weight_to_string(w));
        if (fin.sign != 0 && fin.word.empty() && v.get(w) != 0) x.add({face0, w}, v.get(w));
    }

    FormalReduction out;
    out.witness.x = x;
    if (x.is_zero()) return out;

    ReduceOutcome moved = reduce_cycle(ctx, x, {AffineWord{}});
    ChainElement chain = moved.canonical;
    ChainElement z = moved.witness.z;

    // Every remaining key sits at its orbit's alcove representative.  Fold
    // faces onto vertex 0 and certify that wall orbits vanish.
    while (!chain.is_zero()) {
        auto [key, coeff] = *chain.entries.begin();
        const int i = key.face.members()[0];
        ReductionResult orb = reduce_to_alcove(ctx, key.weight);
        if (orb.word.size() != 0 || key.weight != orb.rep)
            throw std::logic_error("reduced chain left the alcove");
        int other = -1;
        if (orb.sign != 0 && i != 0) other = 0;          // move to vertex 0
        if (orb.sign == 0) {
            for (int g = 0; g <= ctx.rs.rank && other < 0; ++g)
                if (g != i) other = g;                   // kill against the wall
        }
        if (other < 0) {  // free orbit already at vertex 0
            out.classes[key.weight] += coeff;
            chain.add(key, -coeff);
            continue;
        }
        ChainKey zkey{key.face.with(other), key.weight};
        assert(is_canonical_key(ctx, zkey.face, zkey.weight));
        ChainElement unit;
        unit.add(zkey, 1);
        ChainElement dz = differential(ctx, unit);
        Int a = 0;
        if (auto it = dz.entries.find(key); it != dz.entries.end()) a = it->second;
        assert(a == 1 || a == -1);
        chain.add_scaled(dz, -coeff * a);
        z.add(zkey, coeff * a);
    }
    for (auto it = out.classes.begin(); it != out.classes.end();)
        it = it->second == 0 ? out.classes.erase(it) : std::next(it);

    out.witness.z = z;
    for (const auto& [w, c] : out.classes) out.witness.y.add({face0, w}, c);
    if (!verify_witness(ctx, out.witness))
        throw std::logic_error("formal reduction witness failed verification");
    return out;
}

WindowVector module_action(const StarContext& ctx, const CharacterCombination& chi,
                           const WindowVector& v) {
    std::map<Weight, Int> system;
    for (const auto& [mu, c] : chi) {
        if (c == 0) continue;
        for (const auto& [eta, m] : freudenthal_multiplicities(ctx.rs, mu).entries) {
            system[eta] += c * m;
            if (system[eta] == 0) system.erase(eta);
        }
    }
    WindowVector out;
    out.pattern = v.pattern == WindowVector::Pattern::AntiInvariant
                      ? WindowVector::Pattern::AntiInvariant
                      : WindowVector::Pattern::None;
    out.complete = v.complete;
    if (system.empty()) {
        out.max_length = v.max_length;
        return out;
    }

    auto window = window_weights(ctx, v.max_length);
    std::map<Weight, Int> lengths;  // beyond-window lookups
    auto length_of = [&](const Weight& w) {
        if (auto it = window.find(w); it != window.end()) return it->second;
        auto [it, fresh] = lengths.try_emplace(w, 0);
        if (fresh) it->second = length_of_weight(ctx, w);
        return it->second;
    };

    Int shrunk = v.max_length;
    std::map<Weight, Int> values;
    for (const auto& [lam, len] : window) {
        bool valid = true;
        Int acc = 0;
        for (const auto& [eta, m] : system) {
            Weight src = weight_sub(lam, eta);
            if (length_of(src) > v.max_length) {
                valid = false;
                break;
            }
            acc += m * v.get(src);
        }
        if (!valid)
            shrunk = std::min(shrunk, len - 1);
        else if (acc != 0)
            values.emplace(lam, acc);
    }
    if (shrunk < 0)
        throw ResourceError("window margin overflow: the character support exceeds the window");
    out.max_length = shrunk;
    for (const auto& [lam, val] : values)
        if (window.at(lam) <= shrunk) out.entries.emplace(lam, val);
    return out;
}

}  // namespace alcove
