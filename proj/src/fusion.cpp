#include "alcove/fusion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace alcove {

bool is_fusion_label(const StarContext& ctx, const Weight& lambda) {
    if (lambda.size() != static_cast<std::size_t>(ctx.rs.rank)) return false;
    if (!is_dominant(lambda)) return false;
    return coroot_pairing(ctx.rs, lambda, 0) <= ctx.level;
}

void require_fusion_label(const StarContext& ctx, const Weight& lambda) {
    if (is_fusion_label(ctx, lambda)) return;
    std::ostringstream os;
    os << "weight " << weight_to_string(lambda) << " is not a level-" << ctx.level
       << " label; valid labels:";
    for (const auto& w : alcove_weights(ctx.rs, ctx.level)) os << " " << weight_to_string(w);
    throw std::invalid_argument(os.str());
}

std::map<Weight, Int> fusion_product(const StarContext& ctx, const Weight& lambda,
                                     const Weight& mu) {
    require_fusion_label(ctx, lambda);
    require_fusion_label(ctx, mu);
    std::map<Weight, Int> out;
    for (const auto& [nu, m] : tensor_decompose(ctx.rs, lambda, mu)) {
        ReductionResult red = reduce_to_alcove(ctx, nu);
        if (red.sign == 0) continue;
        auto it = out.find(red.rep);
        if (it == out.end())
            out.emplace(red.rep, red.sign * m);
        else {
            it->second += red.sign * m;
            if (it->second == 0) out.erase(it);
        }
    }
    for (const auto& [w, n] : out)
        if (n < 0) throw std::runtime_error("negative fusion multiplicity");
    return out;
}

std::complex<double> character_at_special_point(const StarContext& ctx, const Weight& mu,
                                                const Weight& lambda) {
    require_fusion_label(ctx, lambda);
    std::vector<Rational> xi(ctx.rs.rank);
    for (int i = 0; i < ctx.rs.rank; ++i)
        xi[i] = Rational(lambda[i] + 1, ctx.shifted_level);
    return character_value(ctx.rs, mu, xi);
}

bool fusion_ideal_member(const StarContext& ctx, const CharacterCombination& chi, double tol) {
    for (const auto& sigma : alcove_weights(ctx.rs, ctx.level)) {
        std::complex<double> v = 0.0;
        for (const auto& [mu, c] : chi) {
            if (c == 0) continue;
            v += double(c) * character_at_special_point(ctx, mu, sigma);
        }
        if (std::abs(v) >= tol) return false;
    }
    return true;
}

int FusionTable::label_index(const Weight& w) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), w);
    if (it == labels.end() || *it != w) return -1;
    return static_cast<int>(it - labels.begin());
}

Int FusionTable::coefficient(int i, int j, int k) const {
    if (i > j) std::swap(i, j);
    auto it = products.find({i, j});
    if (it == products.end()) return 0;
    auto jt = it->second.find(k);
    return jt == it->second.end() ? 0 : jt->second;
}

FusionTable build_fusion_table(const StarContext& ctx) {
    FusionTable t;
    t.type = ctx.rs.type;
    t.level = ctx.level;
    t.labels = alcove_weights(ctx.rs, ctx.level);
    for (int i = 0; i < static_cast<int>(t.labels.size()); ++i) {
        for (int j = i; j < static_cast<int>(t.labels.size()); ++j) {
            auto prod = fusion_product(ctx, t.labels[i], t.labels[j]);
            std::map<int, Int> row;
            for (const auto& [nu, n] : prod) {
                int k = t.label_index(nu);
                if (k < 0) throw std::runtime_error("fusion product left the alcove");
                row.emplace(k, n);
            }
            t.products.emplace(std::make_pair(i, j), std::move(row));
        }
    }
    return t;
}

}  // namespace alcove
