#include "alcove/affine_weyl.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace alcove {

StarContext::StarContext(RootSystem r, Int k) : rs(std::move(r)), level(k) {
    if (k < 0) throw std::invalid_argument("level must be >= 0");
    shifted_level = level + rs.dual_coxeter;
}

int FaceIndex::size() const {
    int n = 0;
    for (std::uint32_t b = bits; b; b &= b - 1) ++n;
    return n;
}

std::vector<int> FaceIndex::members() const {
    std::vector<int> m;
    for (int i = 0; i < 32; ++i)
        if (contains(i)) m.push_back(i);
    return m;
}

FaceIndex face_from(std::initializer_list<int> members) {
    FaceIndex f;
    for (int i : members) f.bits |= 1u << i;
    return f;
}

FaceIndex face_from(const std::vector<int>& members) {
    FaceIndex f;
    for (int i : members) f.bits |= 1u << i;
    return f;
}

std::string face_to_string(const FaceIndex& f) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i : f.members()) {
        if (!first) os << ",";
        os << i;
        first = false;
    }
    os << "}";
    return os.str();
}

GenMask all_generators(const RootSystem& rs) {
    return (GenMask(1) << (rs.rank + 1)) - 1;
}

GenMask finite_generators(const RootSystem& rs) {
    return all_generators(rs) & ~GenMask(1);
}

GenMask subgroup_generators(const RootSystem& rs, FaceIndex face) {
    if (face.bits == 0) throw std::invalid_argument("face must be non-empty");
    if (face.bits & ~all_generators(rs))
        throw std::invalid_argument("face has vertices outside 0..rank");
    return all_generators(rs) & ~face.bits;
}

namespace {

// mu-space arithmetic: mu = lambda + rho.
Weight to_mu(const RootSystem& rs, const Weight& lambda) {
    Weight mu(lambda);
    for (auto& v : mu) v += 1;
    return mu;
}

Weight from_mu(const Weight& mu) {
    Weight lambda(mu);
    for (auto& v : lambda) v -= 1;
    return lambda;
}

// Signed wall evaluation: >0 strictly inside, 0 on the wall, <0 violated.
Int wall_value(const StarContext& ctx, const Weight& mu, int g) {
    if (g >= 1) return mu[g - 1];
    Int s = 0;
    for (int j = 0; j < ctx.rs.rank; ++j) s += ctx.rs.comarks[j] * mu[j];
    return ctx.shifted_level - s;
}

void reflect_mu(const StarContext& ctx, Weight& mu, int g) {
    if (g >= 1) {
        Int c = mu[g - 1];
        const Weight& alpha = ctx.rs.simple_roots[g - 1];
        for (int j = 0; j < ctx.rs.rank; ++j) mu[j] -= c * alpha[j];
    } else {
        Int c = -wall_value(ctx, mu, 0);  // <mu,theta^vee> - m
        const Weight& theta = ctx.rs.highest_root;
        for (int j = 0; j < ctx.rs.rank; ++j) mu[j] -= c * theta[j];
    }
}

void check_weight(const StarContext& ctx, const Weight& lambda) {
    if (lambda.size() != static_cast<std::size_t>(ctx.rs.rank))
        throw std::invalid_argument("weight/rank mismatch");
}

// Affine map on mu-space, used to enumerate subgroup elements exactly.
struct AffMap {
    std::vector<Int> m;  // rank x rank, row major
    std::vector<Int> t;

    static AffMap identity(int l) {
        AffMap a;
        a.m.assign(static_cast<std::size_t>(l) * l, 0);
        a.t.assign(l, 0);
        for (int i = 0; i < l; ++i) a.m[static_cast<std::size_t>(i) * l + i] = 1;
        return a;
    }

    Weight apply(const Weight& x) const {
        const int l = static_cast<int>(t.size());
        Weight y(l);
        for (int i = 0; i < l; ++i) {
            Int s = t[i];
            for (int j = 0; j < l; ++j) s += m[static_cast<std::size_t>(i) * l + j] * x[j];
            y[i] = s;
        }
        return y;
    }

    std::vector<Int> key() const {
        std::vector<Int> k = m;
        k.insert(k.end(), t.begin(), t.end());
        return k;
    }
};

AffMap generator_map(const StarContext& ctx, int g) {
    const int l = ctx.rs.rank;
    AffMap a = AffMap::identity(l);
    if (g >= 1) {
        const Weight& alpha = ctx.rs.simple_roots[g - 1];
        for (int i = 0; i < l; ++i) a.m[static_cast<std::size_t>(i) * l + (g - 1)] -= alpha[i];
    } else {
        const Weight& theta = ctx.rs.highest_root;
        for (int i = 0; i < l; ++i) {
            for (int j = 0; j < l; ++j)
                a.m[static_cast<std::size_t>(i) * l + j] -= theta[i] * ctx.rs.comarks[j];
            a.t[i] = ctx.shifted_level * theta[i];
        }
    }
    return a;
}

AffMap compose(const StarContext& ctx, const AffMap& g, const AffMap& a) {
    const int l = ctx.rs.rank;
    AffMap r;
    r.m.assign(static_cast<std::size_t>(l) * l, 0);
    r.t.assign(l, 0);
    for (int i = 0; i < l; ++i)
        for (int k = 0; k < l; ++k) {
            Int gik = g.m[static_cast<std::size_t>(i) * l + k];
            if (gik == 0) continue;
            for (int j = 0; j < l; ++j)
                r.m[static_cast<std::size_t>(i) * l + j] += gik * a.m[static_cast<std::size_t>(k) * l + j];
            r.t[i] += gik * a.t[k];
        }
    for (int i = 0; i < l; ++i) r.t[i] += g.t[i];
    return r;
}

}  // namespace

Weight star_reflect(const StarContext& ctx, int i, const Weight& lambda) {
    check_weight(ctx, lambda);
    if (i < 0 || i > ctx.rs.rank) throw std::invalid_argument("generator index out of range");
    Weight mu = to_mu(ctx.rs, lambda);
    reflect_mu(ctx, mu, i);
    return from_mu(mu);
}

Weight apply_word(const StarContext& ctx, const AffineWord& word, const Weight& lambda) {
    Weight cur = lambda;
    for (int g : word) cur = star_reflect(ctx, g, cur);
    return cur;
}

ReductionResult reduce_weight(const StarContext& ctx, const Weight& lambda, GenMask allowed) {
    check_weight(ctx, lambda);
    ReductionResult res;
    Weight mu = to_mu(ctx.rs, lambda);
    bool moved = true;
    while (moved) {
        moved = false;
        for (int g = 0; g <= ctx.rs.rank; ++g) {
            if (!((allowed >> g) & 1u)) continue;
            if (wall_value(ctx, mu, g) < 0) {
                reflect_mu(ctx, mu, g);
                res.word.push_back(g);
                moved = true;
                break;
            }
        }
    }
    res.rep = from_mu(mu);
    res.length = static_cast<Int>(res.word.size());
    bool on_wall = false;
    for (int g = 0; g <= ctx.rs.rank; ++g)
        if (((allowed >> g) & 1u) && wall_value(ctx, mu, g) == 0) on_wall = true;
    res.sign = on_wall ? 0 : (res.word.size() % 2 ? -1 : 1);
    return res;
}

ReductionResult reduce_to_alcove(const StarContext& ctx, const Weight& lambda) {
    return reduce_weight(ctx, lambda, all_generators(ctx.rs));
}

ReductionResult reduce_parabolic(const StarContext& ctx, FaceIndex face, const Weight& lambda) {
    return reduce_weight(ctx, lambda, subgroup_generators(ctx.rs, face));
}

Int length_of_weight(const StarContext& ctx, const Weight& lambda) {
    return reduce_to_alcove(ctx, lambda).length;
}

LengthBetween length_between(const StarContext& ctx, const Weight& lambda, const Weight& mu,
                             Int cap) {
    if (cap < 0) throw std::invalid_argument("cap must be >= 0");
    check_weight(ctx, lambda);
    check_weight(ctx, mu);
    if (lambda == mu) return {LengthBetween::Kind::Finite, 0};
    if (reduce_to_alcove(ctx, lambda).rep != reduce_to_alcove(ctx, mu).rep)
        return {LengthBetween::Kind::Infinite, 0};
    std::set<Weight> seen{lambda};
    std::deque<std::pair<Weight, Int>> queue{{lambda, 0}};
    while (!queue.empty()) {
        auto [cur, d] = queue.front();
        queue.pop_front();
        if (d == cap) continue;
        for (int g = 0; g <= ctx.rs.rank; ++g) {
            Weight nxt = star_reflect(ctx, g, cur);
            if (nxt == mu) return {LengthBetween::Kind::Finite, d + 1};
            if (seen.insert(nxt).second) queue.emplace_back(nxt, d + 1);
        }
    }
    return {LengthBetween::Kind::Undetermined, cap};
}

std::vector<SubgroupElement> enumerate_subgroup(const StarContext& ctx, FaceIndex face) {
    GenMask gens = subgroup_generators(ctx.rs, face);
    std::vector<SubgroupElement> out;
    std::set<std::vector<Int>> seen;
    std::deque<std::pair<AffMap, AffineWord>> queue;
    AffMap id = AffMap::identity(ctx.rs.rank);
    seen.insert(id.key());
    queue.emplace_back(id, AffineWord{});
    constexpr std::size_t kLimit = 2000000;
    while (!queue.empty()) {
        auto [cur, word] = queue.front();
        queue.pop_front();
        out.push_back({word, word.size() % 2 ? -1 : 1});
        if (out.size() > kLimit) throw std::runtime_error("subgroup enumeration limit exceeded");
        for (int g = 0; g <= ctx.rs.rank; ++g) {
            if (!((gens >> g) & 1u)) continue;
            AffMap nxt = compose(ctx, generator_map(ctx, g), cur);
            if (seen.insert(nxt.key()).second) {
                AffineWord w = word;
                w.push_back(g);
                queue.emplace_back(nxt, w);
            }
        }
    }
    return out;
}

Int longest_element_length(const StarContext& ctx, FaceIndex face) {
    Int best = 0;
    for (const auto& e : enumerate_subgroup(ctx, face))
        best = std::max<Int>(best, static_cast<Int>(e.word.size()));
    return best;
}

Int default_margin(const StarContext& ctx) {
    Int best = 0;
    for (int i = 0; i <= ctx.rs.rank; ++i)
        best = std::max(best, longest_element_length(ctx, FaceIndex{1u << i}));
    return best;
}

std::map<Weight, Int> skew_symmetrize(const StarContext& ctx, FaceIndex face,
                                      const Weight& lambda) {
    check_weight(ctx, lambda);
    std::map<Weight, Int> acc;
    for (const auto& e : enumerate_subgroup(ctx, face)) {
        Weight w = apply_word(ctx, e.word, lambda);
        auto it = acc.find(w);
        if (it == acc.end())
            acc.emplace(std::move(w), e.sign);
        else {
            it->second += e.sign;
            if (it->second == 0) acc.erase(it);
        }
    }
    return acc;
}

std::vector<Weight> closed_alcove_weights(const StarContext& ctx) {
    const int l = ctx.rs.rank;
    std::vector<Weight> out;
    Weight mu(l, 0);
    // lexicographic enumeration of mu >= 0 with <mu, theta^vee> <= m
    auto rec = [&](auto&& self, int pos, Int used) -> void {
        if (pos == l) {
            out.push_back(from_mu(mu));
            return;
        }
        Int a = ctx.rs.comarks[pos];
        for (Int v = 0; used + v * a <= ctx.shifted_level; ++v) {
            mu[pos] = v;
            self(self, pos + 1, used + v * a);
        }
        mu[pos] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

std::map<Weight, Int> window_weights(const StarContext& ctx, Int max_length) {
    std::map<Weight, Int> dist;
    if (max_length < 0) return dist;
    std::deque<Weight> frontier;
    for (auto& w : closed_alcove_weights(ctx)) {
        dist.emplace(w, 0);
        frontier.push_back(w);
    }
    for (Int d = 1; d <= max_length; ++d) {
        std::deque<Weight> next;
        for (const auto& cur : frontier) {
            for (int g = 0; g <= ctx.rs.rank; ++g) {
                Weight nxt = star_reflect(ctx, g, cur);
                if (dist.emplace(nxt, d).second) next.push_back(nxt);
            }
        }
        frontier = std::move(next);
    }
    return dist;
}

}  // namespace alcove
