#include "alcove/chain_complex.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace alcove {

void ChainElement::add(const ChainKey& k, Int c) {
    if (c == 0) return;
    auto it = entries.find(k);
    if (it == entries.end())
        entries.emplace(k, c);
    else {
        it->second += c;
        if (it->second == 0) entries.erase(it);
    }
}

void ChainElement::add_scaled(const ChainElement& other, Int c) {
    for (const auto& [k, v] : other.entries) add(k, c * v);
}

ChainElement chain_sub(const ChainElement& a, const ChainElement& b) {
    ChainElement r = a;
    r.add_scaled(b, -1);
    return r;
}

std::string chain_to_string(const ChainElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : x.entries) {
        if (!first) os << " ";
        if (c >= 0 && !first) os << "+";
        os << c << "*Sk" << face_to_string(k.face) << weight_to_string(k.weight);
        first = false;
    }
    return os.str();
}

Truncation make_truncation(const StarContext& ctx, Int max_length) {
    return Truncation{max_length, default_margin(ctx)};
}

bool is_canonical_key(const StarContext& ctx, FaceIndex face, const Weight& lambda) {
    ReductionResult red = reduce_parabolic(ctx, face, lambda);
    return red.sign == 1 && red.word.empty();
}

std::vector<Weight> canonical_basis(const StarContext& ctx, FaceIndex face,
                                    const Truncation& trunc) {
    std::vector<Weight> out;
    for (const auto& [w, len] : window_weights(ctx, trunc.max_length))
        if (is_canonical_key(ctx, face, w)) out.push_back(w);
    return out;
}

ChainElement differential(const StarContext& ctx, const ChainElement& x) {
    ChainElement out;
    for (const auto& [key, c] : x.entries) {
        auto members = key.face.members();
        if (members.size() <= 1) continue;
        Int sgn = 1;
        for (int r = 0; r < static_cast<int>(members.size()); ++r, sgn = -sgn) {
            FaceIndex sub = key.face.without(members[r]);
            ReductionResult red = reduce_parabolic(ctx, sub, key.weight);
            if (red.sign == 0) continue;
            out.add({sub, red.rep}, c * sgn * red.sign);
        }
    }
    return out;
}

bool verify_witness(const StarContext& ctx, const BoundaryWitness& w) {
    return differential(ctx, w.z) == chain_sub(w.x, w.y);
}

namespace {

std::vector<FaceIndex> faces_of_size(int rank, int size) {
    std::vector<FaceIndex> out;
    std::uint32_t full = (1u << (rank + 1)) - 1;
    for (std::uint32_t b = 1; b <= full; ++b) {
        FaceIndex f{b};
        if (f.size() == size) out.push_back(f);
    }
    return out;
}

struct KeyBasis {
    std::vector<ChainKey> keys;
    std::map<ChainKey, int> index;

    void push(const ChainKey& k) {
        index.emplace(k, static_cast<int>(keys.size()));
        keys.push_back(k);
    }
};

}  // namespace

std::vector<DegreeHomology> homology_snf(const StarContext& ctx, const Truncation& trunc,
                                         const HomologyOptions& opts) {
    const int l = ctx.rs.rank;
    if (trunc.max_length < trunc.margin)
        throw ResourceError("insufficient window: need truncation >= margin (" +
                            std::to_string(trunc.margin) + ")");
    auto window = window_weights(ctx, trunc.max_length);

    std::vector<KeyBasis> basis(l + 1);
    std::size_t total = 0;
    for (int p = 0; p <= l; ++p) {
        for (const auto& face : faces_of_size(l, p + 1))
            for (const auto& [w, len] : window)
                if (is_canonical_key(ctx, face, w)) basis[p].push({face, w});
        total += basis[p].keys.size();
        if (total > opts.max_basis)
            throw ResourceError("truncated basis exceeds limit of " +
                                std::to_string(opts.max_basis) + " keys");
    }

    // boundary matrices D_p : C_p -> C_{p-1}; reduction never increases the
    // affine length, so every image key is present in the row basis.
    std::vector<IntMat> d(l + 1);
    for (int p = 1; p <= l; ++p) {
        d[p] = IntMat(static_cast<int>(basis[p - 1].keys.size()),
                      static_cast<int>(basis[p].keys.size()));
        for (int j = 0; j < static_cast<int>(basis[p].keys.size()); ++j) {
            ChainElement e;
            e.add(basis[p].keys[j], 1);
            for (const auto& [k, c] : differential(ctx, e).entries)
                d[p].at(basis[p - 1].index.at(k), j) = c;
        }
    }

    std::vector<DegreeHomology> out(l + 1);
    for (int p = l; p >= 1; --p) {
        IntMat ker = kernel_basis(d[p]);
        if (ker.cols() == 0) {
            out[p] = DegreeHomology{0, {}};
            continue;
        }
        // relations: boundary columns from one degree up, in kernel coordinates
        ColumnEchelon ek = column_echelon(ker);
        std::vector<std::vector<BigInt>> rels;
        if (p < l) {
            for (int j = 0; j < d[p + 1].cols(); ++j) {
                auto u = solve(ek, d[p + 1].col[j]);
                if (!u)
                    throw std::logic_error("boundary is not a cycle in the window");
                rels.push_back(std::move(*u));
            }
        }
        IntMat r(ker.cols(), static_cast<int>(rels.size()));
        for (int j = 0; j < static_cast<int>(rels.size()); ++j) r.col[j] = rels[j];
        auto div = smith_divisors(std::move(r));
        DegreeHomology h;
        h.free_rank = ker.cols() - static_cast<Int>(div.size());
        for (const auto& dv : div)
            if (dv > 1) h.torsion.push_back(dv);
        out[p] = std::move(h);
    }

    // degree 0: subgroup of coker(D_1) generated by the inner-window keys
    {
        Int inner_len = trunc.max_length - trunc.margin;
        std::vector<int> inner;
        for (int i = 0; i < static_cast<int>(basis[0].keys.size()); ++i)
            if (window.at(basis[0].keys[i].weight) <= inner_len) inner.push_back(i);
        const int rows = static_cast<int>(basis[0].keys.size());
        IntMat m(rows, static_cast<int>(inner.size()) + d[1].cols());
        for (int j = 0; j < static_cast<int>(inner.size()); ++j) m.at(inner[j], j) = 1;
        for (int j = 0; j < d[1].cols(); ++j) {
            for (int r2 = 0; r2 < rows; ++r2)
                m.at(r2, static_cast<int>(inner.size()) + j) = -d[1].at(r2, j);
        }
        IntMat ker = kernel_basis(m);
        // the first |inner| coordinates of the kernel span the inner slice of Im(D_1)
        IntMat rel(static_cast<int>(inner.size()), ker.cols());
        for (int j = 0; j < ker.cols(); ++j)
            for (int i = 0; i < static_cast<int>(inner.size()); ++i)
                rel.at(i, j) = ker.at(i, j);
        auto div = smith_divisors(std::move(rel));
        DegreeHomology h;
        h.free_rank = static_cast<Int>(inner.size()) - static_cast<Int>(div.size());
        for (const auto& dv : div)
            if (dv > 1) h.torsion.push_back(dv);
        out[0] = std::move(h);
    }
    return out;
}

namespace {

// Distances from the orbit's intersection with the target alcoves, over the
// orbit graph.  Grows on demand.
struct OrbitDistances {
    const StarContext* ctx;
    Int longest_target = 0;
    std::map<Weight, Int> dist;
    std::deque<Weight> frontier;
    Int depth = 0;

    OrbitDistances(const StarContext& c, const Weight& orbit_rep,
                   const std::vector<AffineWord>& targets)
        : ctx(&c) {
        for (const auto& t : targets) {
            longest_target = std::max<Int>(longest_target, static_cast<Int>(t.size()));
            Weight seed = apply_word(c, t, orbit_rep);
            if (dist.emplace(seed, 0).second) frontier.push_back(seed);
        }
    }

    void extend(Int to_depth) {
        constexpr std::size_t kLimit = 4000000;
        while (depth < to_depth && !frontier.empty()) {
            std::deque<Weight> next;
            ++depth;
            for (const auto& cur : frontier)
                for (int g = 0; g <= ctx->rs.rank; ++g) {
                    Weight n = star_reflect(*ctx, g, cur);
                    if (dist.emplace(n, depth).second) next.push_back(n);
                }
            frontier = std::move(next);
            if (dist.size() > kLimit)
                throw ResourceError("orbit window exceeded its size limit");
        }
    }

    Int at(const Weight& w) {
        auto it = dist.find(w);
        if (it != dist.end()) return it->second;
        // any orbit member reaches a target through the alcove representative
        Int safe = length_of_weight(*ctx, w) + longest_target + 1;
        while (true) {
            extend(depth + 8);
            it = dist.find(w);
            if (it != dist.end()) return it->second;
            if (depth > safe)
                throw std::logic_error("weight is not in the orbit under reduction");
        }
    }
};

std::vector<Weight> parabolic_orbit(const StarContext& ctx, FaceIndex face, const Weight& w) {
    GenMask gens = subgroup_generators(ctx.rs, face);
    std::set<Weight> seen{w};
    std::deque<Weight> queue{w};
    while (!queue.empty()) {
        Weight cur = queue.front();
        queue.pop_front();
        for (int g = 0; g <= ctx.rs.rank; ++g) {
            if (!((gens >> g) & 1u)) continue;
            Weight n = star_reflect(ctx, g, cur);
            if (seen.insert(n).second) queue.push_back(n);
        }
    }
    return {seen.begin(), seen.end()};
}

struct OrbitPartReducer {
    const StarContext& ctx;
    const Weight orbit_rep;
    const int degree;
    const std::vector<AffineWord>& targets;
    std::ostream* trace;
    OrbitDistances distances;

    OrbitPartReducer(const StarContext& c, Weight rep, int p,
                     const std::vector<AffineWord>& t, std::ostream* tr)
        : ctx(c), orbit_rep(std::move(rep)), degree(p), targets(t), trace(tr),
          distances(c, orbit_rep, t) {}

    Int key_distance(const ChainKey& k) {
        Int best = -1;
        for (const auto& w : parabolic_orbit(ctx, k.face, k.weight)) {
            Int d = distances.at(w);
            if (best < 0 || d < best) best = d;
        }
        return best;
    }

    // Orbit member of minimal distance within the W_I-orbit, lex-smallest.
    Weight orbit_min_element(const ChainKey& k) {
        Weight best;
        Int bd = -1;
        for (const auto& w : parabolic_orbit(ctx, k.face, k.weight)) {
            Int d = distances.at(w);
            if (bd < 0 || d < bd || (d == bd && w < best)) {
                bd = d;
                best = w;
            }
        }
        return best;
    }

    // One witnessed move of a vertex-face term toward the targets.
    void peel_step(ChainElement& chain, ChainElement& z, const ChainKey& key, Int coeff,
                   Int dist) {
        const int i = key.face.members()[0];
        Weight xi = orbit_min_element(key);
        // the only distance-lowering first letter at an orbit-minimal element
        int s = -1;
        for (int g = 0; g <= ctx.rs.rank; ++g)
            if (distances.at(star_reflect(ctx, g, xi)) == dist - 1) {
                s = g;
                break;
            }
        if (s != i)
            throw std::logic_error("peel generator escaped the face");
        int v = -1;
        for (int g = 0; g <= ctx.rs.rank; ++g)
            if (g != i) {
                v = g;
                break;
            }
        FaceIndex big = key.face.with(v);
        ReductionResult red = reduce_parabolic(ctx, big, xi);
        assert(red.sign != 0);
        ChainKey zkey{big, red.rep};
        ChainElement unit;
        unit.add(zkey, 1);
        ChainElement dz = differential(ctx, unit);
        auto it = dz.entries.find(key);
        assert(it != dz.entries.end() && (it->second == 1 || it->second == -1));
        Int t = coeff * it->second;  // so that t * dz cancels coeff at key
        chain.add_scaled(dz, -t);
        z.add(zkey, t);
        if (trace)
            *trace << "peel: face " << face_to_string(key.face) << " weight "
                   << weight_to_string(key.weight) << " gen " << s << " via face "
                   << face_to_string(big) << " sign " << (t > 0 ? "+" : "-")
                   << " dist " << dist << "->" << dist - 1 << "\n";
    }

    // Assemble the boundary matrix of all degree+1 keys within the ball.
    struct SolveSystem {
        std::vector<ChainKey> unknowns;
        std::vector<ChainElement> columns;
        KeyBasis rows;
    };

    SolveSystem build_system(const ChainElement& part, Int radius) {
        distances.extend(radius);
        SolveSystem sys;
        std::set<Weight> ball;
        for (const auto& [w, d] : distances.dist)
            if (d <= radius) ball.insert(w);
        for (const auto& face : faces_of_size(ctx.rs.rank, degree + 2)) {
            for (const auto& w : ball) {
                if (!is_canonical_key(ctx, face, w)) continue;
                ChainKey k{face, w};
                ChainElement unit;
                unit.add(k, 1);
                ChainElement dz = differential(ctx, unit);
                if (dz.is_zero()) continue;
                sys.unknowns.push_back(k);
                sys.columns.push_back(std::move(dz));
            }
        }
        for (const auto& c : sys.columns)
            for (const auto& [k, v] : c.entries)
                if (!sys.rows.index.count(k)) sys.rows.push(k);
        for (const auto& [k, v] : part.entries)
            if (!sys.rows.index.count(k)) sys.rows.push(k);
        return sys;
    }

    // Solve sum_j z_j * columns[j] = part restricted to `keep` rows.
    std::optional<ChainElement> solve_rows(const SolveSystem& sys, const ChainElement& part,
                                           const std::vector<int>& keep) {
        IntMat m(static_cast<int>(keep.size()), static_cast<int>(sys.columns.size()));
        std::vector<int> rowpos(sys.rows.keys.size(), -1);
        for (int r = 0; r < static_cast<int>(keep.size()); ++r) rowpos[keep[r]] = r;
        for (int j = 0; j < static_cast<int>(sys.columns.size()); ++j)
            for (const auto& [k, v] : sys.columns[j].entries) {
                int rp = rowpos[sys.rows.index.at(k)];
                if (rp >= 0) m.at(rp, j) = v;
            }
        std::vector<BigInt> b(keep.size(), 0);
        for (const auto& [k, v] : part.entries) {
            int rp = rowpos[sys.rows.index.at(k)];
            if (rp >= 0) b[rp] = v;
        }
        auto sol = solve(column_echelon(std::move(m)), b);
        if (!sol) return std::nullopt;
        ChainElement z;
        for (int j = 0; j < static_cast<int>(sys.unknowns.size()); ++j) {
            const BigInt& c = (*sol)[j];
            if (c == 0) continue;
            if (c > std::numeric_limits<Int>::max() || c < std::numeric_limits<Int>::min())
                throw ResourceError("witness coefficient overflow");
            z.add(sys.unknowns[j], c.convert_to<Int>());
        }
        return z;
    }

    std::pair<ChainElement, ChainElement> run(const ChainElement& part) {
        ChainElement chain = part;
        ChainElement z;
        Int dmax = 0;
        for (const auto& [k, c] : chain.entries) dmax = std::max(dmax, key_distance(k));
        if (degree == 0) {
            while (true) {
                ChainKey pick;
                Int pick_dist = 0, pick_coeff = 0;
                bool found = false;
                for (const auto& [k, c] : chain.entries) {
                    Int d = key_distance(k);
                    if (d > pick_dist) {
                        pick_dist = d;
                        pick = k;
                        pick_coeff = c;
                        found = true;
                    }
                }
                if (!found) break;
                peel_step(chain, z, pick, pick_coeff, pick_dist);
            }
            // boundaries cancel entirely; genuine classes survive the attempt
            if (!chain.is_zero()) {
                SolveSystem sys = build_system(chain, default_margin(ctx) + 2);
                std::vector<int> all(sys.rows.keys.size());
                for (int i = 0; i < static_cast<int>(all.size()); ++i) all[i] = i;
                if (auto zf = solve_rows(sys, chain, all)) {
                    chain.add_scaled(differential(ctx, *zf), -1);
                    z.add_scaled(*zf, 1);
                    if (trace)
                        *trace << "kill: degree 0 remainder cleared via witness with "
                               << zf->entries.size() << " keys\n";
                }
            }
        } else {
            bool done = false;
            for (int attempt = 0; attempt < 3 && !done; ++attempt) {
                Int radius = dmax + (attempt + 1) * (default_margin(ctx) + 2);
                SolveSystem sys = build_system(chain, radius);
                // try to cancel the whole part first; boundaries vanish here
                std::vector<int> all(sys.rows.keys.size());
                for (int i = 0; i < static_cast<int>(all.size()); ++i) all[i] = i;
                if (auto zf = solve_rows(sys, chain, all)) {
                    chain.add_scaled(differential(ctx, *zf), -1);
                    z.add_scaled(*zf, 1);
                    assert(chain.is_zero());
                    if (trace)
                        *trace << "shell: degree " << degree << " cleared via witness with "
                               << zf->entries.size() << " keys\n";
                    done = true;
                    break;
                }
                std::vector<int> outer;
                for (int i = 0; i < static_cast<int>(sys.rows.keys.size()); ++i)
                    if (key_distance(sys.rows.keys[i]) > 0) outer.push_back(i);
                if (auto zp = solve_rows(sys, chain, outer)) {
                    chain.add_scaled(differential(ctx, *zp), -1);
                    z.add_scaled(*zp, 1);
                    bool clean = true;
                    for (const auto& [k, c] : chain.entries)
                        if (key_distance(k) > 0) clean = false;
                    if (clean) {
                        if (trace)
                            *trace << "shell: degree " << degree << " moved onto targets, "
                                   << chain.entries.size() << " keys remain\n";
                        done = true;
                        break;
                    }
                }
            }
            if (!done)
                throw ResourceError("cycle reduction did not stabilize; margin " +
                                    std::to_string(default_margin(ctx)) + " exhausted");
        }
        return {chain, z};
    }
};

}  // namespace

ReduceOutcome reduce_cycle(const StarContext& ctx, const ChainElement& x,
                           const std::vector<AffineWord>& targets, std::ostream* trace) {
    std::vector<AffineWord> tg = targets;
    if (tg.empty()) tg.push_back({});
    for (const auto& [k, c] : x.entries)
        if (!is_canonical_key(ctx, k.face, k.weight))
            throw std::invalid_argument("chain key " + weight_to_string(k.weight) +
                                        " is not canonical for face " +
                                        face_to_string(k.face));
    ChainElement residual = differential(ctx, x);
    if (!residual.is_zero())
        throw std::invalid_argument("input chain is not a cycle; boundary = " +
                                    chain_to_string(residual));

    std::map<std::pair<Weight, int>, ChainElement> parts;
    for (const auto& [k, c] : x.entries) {
        Weight rep = reduce_to_alcove(ctx, k.weight).rep;
        parts[{rep, k.face.size() - 1}].add(k, c);
    }

    ReduceOutcome out;
    out.witness.x = x;
    for (auto& [tag, part] : parts) {
        if (trace)
            *trace << "orbit " << weight_to_string(tag.first) << " degree " << tag.second
                   << ": " << part.entries.size() << " keys\n";
        OrbitPartReducer red(ctx, tag.first, tag.second, tg, trace);
        auto [canon, z] = red.run(part);
        out.canonical.add_scaled(canon, 1);
        out.witness.z.add_scaled(z, 1);
    }
    out.witness.y = out.canonical;
    if (!verify_witness(ctx, out.witness))
        throw std::logic_error("internal witness verification failed");
    return out;
}

}  // namespace alcove
