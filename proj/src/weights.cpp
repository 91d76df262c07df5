#include "alcove/weights.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>

#include "alcove/affine_weyl.hpp"

namespace alcove {

Int WeightMultiset::total_mass() const {
    Int s = 0;
    for (const auto& [w, m] : entries) s += m;
    return s;
}

std::vector<Weight> alcove_weights(const RootSystem& rs, Int k) {
    if (k < 0) throw std::invalid_argument("level must be >= 0");
    std::vector<Weight> out;
    Weight lam(rs.rank, 0);
    auto rec = [&](auto&& self, int pos, Int used) -> void {
        if (pos == rs.rank) {
            out.push_back(lam);
            return;
        }
        Int a = rs.comarks[pos];
        for (Int v = 0; used + v * a <= k; ++v) {
            lam[pos] = v;
            self(self, pos + 1, used + v * a);
        }
        lam[pos] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

bool is_dominant(const Weight& lambda) {
    return std::all_of(lambda.begin(), lambda.end(), [](Int v) { return v >= 0; });
}

Weight dominant_rep(const RootSystem& rs, const Weight& lambda) {
    Weight cur = lambda;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < rs.rank; ++i) {
            if (cur[i] < 0) {
                Int c = cur[i];
                for (int j = 0; j < rs.rank; ++j) cur[j] -= c * rs.simple_roots[i][j];
                moved = true;
                break;
            }
        }
    }
    return cur;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& mu) {
    if (!is_dominant(mu)) throw std::invalid_argument("weight must be dominant");
    Weight mu_rho = weight_add(mu, rs.rho);
    Rational dim = 1;
    for (const auto& alpha : rs.positive_roots)
        dim *= inner_product(rs, mu_rho, alpha) / inner_product(rs, rs.rho, alpha);
    if (denominator(dim) != 1)
        throw std::runtime_error("Weyl dimension did not come out integral");
    return numerator(dim);
}

WeightMultiset freudenthal_multiplicities(const RootSystem& rs, const Weight& mu) {
    if (mu.size() != static_cast<std::size_t>(rs.rank))
        throw std::invalid_argument("weight/rank mismatch");
    if (!is_dominant(mu)) throw std::invalid_argument("weight must be dominant");

    // Weight set by string fill-down: from each known weight xi with
    // <xi, alpha_i^vee> = c > 0, the string xi - alpha_i ... xi - c alpha_i
    // consists of weights.  Starting at mu this reaches the full system.
    std::map<Weight, Int> mult;  // 0 = not yet computed
    mult.emplace(mu, 0);
    std::deque<Weight> queue{mu};
    while (!queue.empty()) {
        Weight cur = queue.front();
        queue.pop_front();
        for (int i = 0; i < rs.rank; ++i) {
            Int c = cur[i];
            Weight step = cur;
            for (Int j = 1; j <= c; ++j) {
                step = weight_sub(step, rs.simple_roots[i]);
                if (mult.emplace(step, 0).second) queue.push_back(step);
            }
        }
    }

    // Dominant weights ordered by depth below mu.  The depth of nu is the
    // root-basis height of mu - nu: with (A^{-1})_ij = F_ij / d_i it equals
    // sum_j h_j (mu - nu)_j for h_j = sum_i F_ij / d_i.
    std::vector<Rational> hvec(rs.rank, 0);
    for (int j = 0; j < rs.rank; ++j)
        for (int i = 0; i < rs.rank; ++i) hvec[j] += rs.qform[i][j] / rs.half_norms[i];
    auto depth_of = [&](const Weight& nu) {
        Rational h = 0;
        for (int j = 0; j < rs.rank; ++j) h += hvec[j] * (mu[j] - nu[j]);
        return h;
    };
    std::vector<std::pair<Rational, Weight>> dominants;  // (height of mu-nu, nu)
    for (const auto& [w, m0] : mult)
        if (is_dominant(w)) dominants.emplace_back(depth_of(w), w);
    std::sort(dominants.begin(), dominants.end());

    Weight mu_rho = weight_add(mu, rs.rho);
    Rational mu_norm = inner_product(rs, mu_rho, mu_rho);

    for (const auto& [depth, nu] : dominants) {
        if (nu == mu) {
            mult[nu] = 1;
            continue;
        }
        Rational sum = 0;
        for (const auto& alpha : rs.positive_roots) {
            Weight step = nu;
            while (true) {
                step = weight_add(step, alpha);
                if (!mult.count(step)) break;  // left the weight system
                // multiplicity is W-invariant and weights above nu are filled
                Int m = mult.at(dominant_rep(rs, step));
                assert(m > 0);
                sum += Rational(m) * inner_product(rs, step, alpha);
            }
        }
        Weight nu_rho = weight_add(nu, rs.rho);
        Rational denom = mu_norm - inner_product(rs, nu_rho, nu_rho);
        assert(denom > 0);
        Rational m = 2 * sum / denom;
        if (denominator(m) != 1)
            throw std::runtime_error("Freudenthal recursion produced a non-integer");
        mult[nu] = static_cast<Int>(numerator(m));
    }

    WeightMultiset out;
    for (const auto& [w, m] : mult) {
        Int v = is_dominant(w) ? m : mult.at(dominant_rep(rs, w));
        assert(v > 0);
        out.entries.emplace(w, v);
    }
    return out;
}

std::map<Weight, Int> tensor_decompose(const RootSystem& rs, const Weight& lambda,
                                       const Weight& mu) {
    if (!is_dominant(lambda) || !is_dominant(mu))
        throw std::invalid_argument("weights must be dominant");
    // expand the smaller factor
    const Weight* big = &lambda;
    const Weight* small = &mu;
    if (weyl_dimension(rs, lambda) < weyl_dimension(rs, mu)) std::swap(big, small);

    StarContext ctx(rs, 0);  // affine wall unused below
    GenMask finite = finite_generators(rs);
    std::map<Weight, Int> out;
    for (const auto& [eta, m] : freudenthal_multiplicities(rs, *small).entries) {
        ReductionResult red = reduce_weight(ctx, weight_add(*big, eta), finite);
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
        if (n < 0) throw std::runtime_error("negative tensor multiplicity");
    return out;
}

std::complex<double> character_value(const RootSystem& rs, const Weight& mu,
                                     const std::vector<Rational>& xi) {
    if (!is_dominant(mu)) throw std::invalid_argument("weight must be dominant");
    if (xi.size() != static_cast<std::size_t>(rs.rank))
        throw std::invalid_argument("point/rank mismatch");
    for (const auto& alpha : rs.positive_roots) {
        std::vector<Rational> a(alpha.begin(), alpha.end());
        if (denominator(inner_product(rs, a, xi)) == 1)
            throw std::domain_error("singular point: <alpha, xi> is an integer");
    }

    StarContext ctx(rs, 0);
    auto elements = enumerate_subgroup(ctx, FaceIndex{1u});  // finite W
    auto phase = [&](const Weight& x) {
        std::vector<Rational> xr(x.begin(), x.end());
        Rational q = inner_product(rs, xr, xi);
        // exact fractional part, then one trigonometric evaluation
        BigInt num = numerator(q), den = denominator(q);
        BigInt f = num % den;
        if (f < 0) f += den;
        double frac = Rational(f, den).convert_to<double>();
        return std::polar(1.0, 2.0 * std::numbers::pi * frac);
    };
    std::complex<double> numer = 0.0, denom = 0.0;
    for (const auto& e : elements) {
        // plain linear action: w(x + rho) = (w star x) + rho
        Weight wn = weight_add(apply_word(ctx, e.word, mu), rs.rho);
        Weight wr = weight_add(apply_word(ctx, e.word, Weight(rs.rank, 0)), rs.rho);
        numer += double(e.sign) * phase(wn);
        denom += double(e.sign) * phase(wr);
    }
    if (std::abs(denom) < 1e-12)
        throw std::domain_error("Weyl denominator vanished unexpectedly");
    return numer / denom;
}

}  // namespace alcove
