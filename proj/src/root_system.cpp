#include "alcove/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace alcove {

Weight weight_add(const Weight& a, const Weight& b) {
    assert(a.size() == b.size());
    Weight r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Weight weight_sub(const Weight& a, const Weight& b) {
    assert(a.size() == b.size());
    Weight r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Weight weight_scaled(const Weight& a, Int c) {
    Weight r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

std::string weight_to_string(const Weight& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

bool valid_lie_type(char series, int rank) {
    switch (series) {
        case 'A': return rank >= 1;
        case 'B': return rank >= 2;
        case 'C': return rank >= 2;
        case 'D': return rank >= 3;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

std::string LieType::to_string() const {
    return std::string(1, series) + std::to_string(rank);
}

LieType LieType::parse(std::string_view text) {
    if (text.size() < 2)
        throw std::invalid_argument("invalid Lie type '" + std::string(text) + "'");
    char s = text[0];
    int r = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("invalid Lie type '" + std::string(text) + "'");
        r = r * 10 + (text[i] - '0');
    }
    if (!valid_lie_type(s, r))
        throw std::invalid_argument("invalid Lie type '" + std::string(text) +
                                    "' (valid: A>=1, B>=2, C>=2, D>=3, E6/E7/E8, F4, G2)");
    return LieType{s, r};
}

namespace {

// Bourbaki numbering throughout.  Entry (i,j) is <alpha_j, alpha_i^vee>.
std::vector<std::vector<Int>> make_cartan(LieType t) {
    const int l = t.rank;
    std::vector<std::vector<Int>> a(l, std::vector<Int>(l, 0));
    for (int i = 0; i < l; ++i) a[i][i] = 2;
    auto bond = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
    switch (t.series) {
        case 'A':
            for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
            break;
        case 'B':  // alpha_l short
            for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
            a[l - 1][l - 2] = -2;
            break;
        case 'C':  // alpha_l long
            for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
            a[l - 2][l - 1] = -2;
            break;
        case 'D':
            for (int i = 0; i + 2 < l; ++i) bond(i, i + 1);
            bond(l - 3, l - 1);
            break;
        case 'E':
            bond(0, 2);
            for (int i = 2; i + 1 < l; ++i) bond(i, i + 1);
            bond(1, 3);
            break;
        case 'F':
            bond(0, 1);
            bond(1, 2);
            bond(2, 3);
            a[2][1] = -2;
            break;
        case 'G':  // alpha_1 short, alpha_2 long
            a[0][1] = -3;
            a[1][0] = -1;
            break;
        default:
            throw std::invalid_argument("unknown series");
    }
    return a;
}

// Determinant of an integer matrix via exact rational elimination.
Rational rational_det(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

std::vector<std::vector<Rational>> rational_inverse(const std::vector<std::vector<Int>>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw std::runtime_error("singular Cartan matrix");
        std::swap(m[p], m[c]);
        Rational d = m[c][c];
        for (auto& v : m[c]) v /= d;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

}  // namespace

RootSystem build_root_system(LieType type) {
    if (!valid_lie_type(type.series, type.rank))
        throw std::invalid_argument("invalid Lie type " + type.to_string());
    RootSystem rs;
    rs.type = type;
    rs.rank = type.rank;
    const int l = rs.rank;
    rs.cartan = make_cartan(type);

    rs.simple_roots.resize(l);
    for (int j = 0; j < l; ++j) {
        Weight w(l);
        for (int i = 0; i < l; ++i) w[i] = rs.cartan[i][j];
        rs.simple_roots[j] = w;
    }

    // Positive roots by height: beta + alpha_i is a root iff the alpha_i-string
    // through beta continues upward, i.e. p - <beta, alpha_i^vee> > 0 with
    // p = max { j : beta - j alpha_i is a root }.
    std::map<std::vector<Int>, Weight> roots;  // coords -> labels
    std::vector<std::vector<Int>> layer;
    for (int j = 0; j < l; ++j) {
        std::vector<Int> c(l, 0);
        c[j] = 1;
        roots.emplace(c, rs.simple_roots[j]);
        layer.push_back(c);
    }
    while (!layer.empty()) {
        std::vector<std::vector<Int>> next;
        for (const auto& c : layer) {
            const Weight& lab = roots.at(c);
            for (int i = 0; i < l; ++i) {
                Int p = 0;
                std::vector<Int> down = c;
                while (true) {
                    down[i] -= 1;
                    bool nonneg = std::all_of(down.begin(), down.end(),
                                              [](Int v) { return v >= 0; });
                    if (!nonneg || !roots.count(down)) break;
                    ++p;
                }
                if (p - lab[i] > 0) {
                    std::vector<Int> up = c;
                    up[i] += 1;
                    if (!roots.count(up)) {
                        roots.emplace(up, weight_add(lab, rs.simple_roots[i]));
                        next.push_back(up);
                    }
                }
            }
        }
        layer = std::move(next);
    }
    for (const auto& [c, lab] : roots) {
        rs.positive_root_coords.push_back(c);
        rs.positive_roots.push_back(lab);
    }

    // Highest root: unique root of maximal height.
    std::size_t best = 0;
    Int best_ht = -1;
    for (std::size_t i = 0; i < rs.positive_root_coords.size(); ++i) {
        Int ht = std::accumulate(rs.positive_root_coords[i].begin(),
                                 rs.positive_root_coords[i].end(), Int(0));
        if (ht > best_ht) {
            best_ht = ht;
            best = i;
        }
    }
    rs.highest_root = rs.positive_roots[best];
    rs.marks.assign(rs.positive_root_coords[best].begin(),
                    rs.positive_root_coords[best].end());

    // Symmetrizer d_i = (alpha_i,alpha_i)/2 from a_ij d_i = a_ji d_j on the
    // Dynkin graph, normalized so that (theta, theta) = 2.
    std::vector<Rational> d(l, 0);
    d[0] = 1;
    {
        std::vector<int> stack{0};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < l; ++j) {
                if (i == j || rs.cartan[i][j] == 0 || d[j] != 0) continue;
                d[j] = d[i] * rs.cartan[i][j] / rs.cartan[j][i];
                stack.push_back(j);
            }
        }
    }
    // (theta, theta) with provisional d: B_ij = d_i a_ij, theta in coords.
    Rational tt = 0;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            tt += Rational(rs.marks[i]) * d[i] * rs.cartan[i][j] * rs.marks[j];
    Rational scale = Rational(2) / tt;
    for (auto& v : d) v *= scale;
    rs.half_norms = d;

    rs.comarks.resize(l);
    for (int i = 0; i < l; ++i) {
        Rational cm = Rational(rs.marks[i]) * d[i];
        if (denominator(cm) != 1)
            throw std::runtime_error("non-integer comark");
        rs.comarks[i] = static_cast<Int>(numerator(cm));
    }
    rs.dual_coxeter = 1 + std::accumulate(rs.comarks.begin(), rs.comarks.end(), Int(0));
    rs.rho.assign(l, 1);

    // qform F = (A^T)^{-1} D, i.e. F_ij = d_i * (A^{-1})_ij.
    auto ainv = rational_inverse(rs.cartan);
    rs.qform.assign(l, std::vector<Rational>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) rs.qform[i][j] = d[i] * ainv[i][j];
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (rs.qform[i][j] != rs.qform[j][i])
                throw std::runtime_error("quadratic form not symmetric");

    // |W| = det(A) * l! * prod(marks).
    std::vector<std::vector<Rational>> aq(l, std::vector<Rational>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) aq[i][j] = rs.cartan[i][j];
    Rational det = rational_det(aq);
    Rational order = det;
    for (int i = 2; i <= l; ++i) order *= i;
    for (int i = 0; i < l; ++i) order *= rs.marks[i];
    if (denominator(order) != 1 || order <= 0)
        throw std::runtime_error("bad Weyl order");
    rs.weyl_order = static_cast<Int>(numerator(order));

    // Normalization checks the data must satisfy.
    if (inner_product(rs, rs.highest_root, rs.highest_root) != 2)
        throw std::runtime_error("highest root norm is not 2");
    for (int i = 0; i < l; ++i)
        if (rs.rho[i] != 1) throw std::runtime_error("rho pairing broken");
    return rs;
}

Int coroot_pairing(const RootSystem& rs, const Weight& lambda, int i) {
    if (lambda.size() != static_cast<std::size_t>(rs.rank))
        throw std::invalid_argument("weight/rank mismatch");
    if (i < 0 || i > rs.rank) throw std::invalid_argument("generator index out of range");
    if (i >= 1) return lambda[i - 1];
    Int s = 0;
    for (int j = 0; j < rs.rank; ++j) s += rs.comarks[j] * lambda[j];
    return s;
}

Rational inner_product(const RootSystem& rs, const Weight& a, const Weight& b) {
    if (a.size() != b.size() || a.size() != static_cast<std::size_t>(rs.rank))
        throw std::invalid_argument("weight/rank mismatch");
    Rational s = 0;
    for (int i = 0; i < rs.rank; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rs.rank; ++j) {
            if (b[j] == 0) continue;
            s += Rational(a[i]) * rs.qform[i][j] * b[j];
        }
    }
    return s;
}

Rational inner_product(const RootSystem& rs, const std::vector<Rational>& a,
                       const std::vector<Rational>& b) {
    if (a.size() != b.size() || a.size() != static_cast<std::size_t>(rs.rank))
        throw std::invalid_argument("weight/rank mismatch");
    Rational s = 0;
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) s += a[i] * rs.qform[i][j] * b[j];
    return s;
}

const std::vector<Weight>& positive_roots(const RootSystem& rs) {
    return rs.positive_roots;
}

}  // namespace alcove
