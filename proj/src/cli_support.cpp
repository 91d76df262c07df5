#include "alcove/cli_support.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "json.hpp"

#include "alcove/weights.hpp"

namespace alcove::cli {

using nlohmann::json;

Format parse_format(const std::string& s) {
    if (s == "plain") return Format::Plain;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format '" + s + "' (plain|json|csv)");
}

std::string weight_key(const Weight& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else
            cur.push_back(c);
    }
    parts.push_back(cur);
    return parts;
}

Int parse_int(const std::string& s) {
    std::size_t pos = 0;
    Int v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    return v;
}

}  // namespace

Weight parse_weight(const std::string& s, int rank) {
    auto parts = split(s, ',');
    if (static_cast<int>(parts.size()) != rank)
        throw std::invalid_argument("weight '" + s + "' does not have " +
                                    std::to_string(rank) + " labels");
    Weight w;
    for (const auto& p : parts) w.push_back(parse_int(p));
    return w;
}

FaceIndex parse_face(const std::string& s, int rank) {
    FaceIndex f;
    for (const auto& p : split(s, ',')) {
        Int v = parse_int(p);
        if (v < 0 || v > rank)
            throw std::invalid_argument("face vertex " + p + " out of range 0.." +
                                        std::to_string(rank));
        f.bits |= 1u << v;
    }
    if (f.bits == 0) throw std::invalid_argument("empty face");
    return f;
}

ChainElement parse_chain(const StarContext& ctx, const std::string& s) {
    ChainElement x;
    for (const auto& term : split(s, ';')) {
        if (term.empty()) continue;
        auto parts = split(term, ':');
        if (parts.size() != 3)
            throw std::invalid_argument("chain term '" + term + "' is not face:weight:coeff");
        FaceIndex f = parse_face(parts[0], ctx.rs.rank);
        Weight w = parse_weight(parts[1], ctx.rs.rank);
        if (!is_canonical_key(ctx, f, w))
            throw std::invalid_argument("weight " + weight_to_string(w) +
                                        " is not the canonical representative for face " +
                                        face_to_string(f));
        x.add({f, w}, parse_int(parts[2]));
    }
    return x;
}

AffineWord parse_word(const std::string& s, int rank) {
    AffineWord w;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        Int v = parse_int(tok);
        if (v < 0 || v > rank)
            throw std::invalid_argument("generator " + tok + " out of range 0.." +
                                        std::to_string(rank));
        w.push_back(static_cast<int>(v));
    }
    return w;
}

std::string fusion_pair_plain(const std::map<Weight, Int>& prod) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, n] : prod) {
        if (!first) os << " ";
        os << weight_key(w) << ":" << n;
        first = false;
    }
    return os.str();
}

namespace {

json fusion_table_to_json(const FusionTable& t) {
    json j;
    j["schema"] = kSchemaVersion;
    j["type"] = t.type.to_string();
    j["rank"] = t.type.rank;
    j["level"] = t.level;
    j["labels"] = json::array();
    for (const auto& w : t.labels) j["labels"].push_back(weight_key(w));
    json prods = json::object();
    for (const auto& [ij, row] : t.products) {
        json entry = json::object();
        for (const auto& [k, n] : row) entry[weight_key(t.labels[k])] = n;
        prods[weight_key(t.labels[ij.first]) + "|" + weight_key(t.labels[ij.second])] = entry;
    }
    j["products"] = prods;
    return j;
}

}  // namespace

std::string fusion_table_json(const FusionTable& t) {
    return fusion_table_to_json(t).dump(2) + "\n";
}

std::string fusion_table_plain(const FusionTable& t) {
    std::ostringstream os;
    os << t.type.to_string() << " level " << t.level << ", " << t.labels.size()
       << " labels\n";
    for (const auto& [ij, row] : t.products) {
        os << weight_key(t.labels[ij.first]) << " * " << weight_key(t.labels[ij.second])
           << " =";
        for (const auto& [k, n] : row) os << " " << weight_key(t.labels[k]) << ":" << n;
        os << "\n";
    }
    return os.str();
}

std::string fusion_table_csv(const FusionTable& t) {
    std::ostringstream os;
    os << "lambda,mu,nu,coeff\n";
    for (const auto& [ij, row] : t.products)
        for (const auto& [k, n] : row)
            os << weight_key(t.labels[ij.first]) << "," << weight_key(t.labels[ij.second])
               << "," << weight_key(t.labels[k]) << "," << n << "\n";
    return os.str();
}

HomologyReport run_homology(const StarContext& ctx, const Truncation& trunc) {
    HomologyReport r;
    r.type = ctx.rs.type;
    r.level = ctx.level;
    r.trunc = trunc;
    r.degrees = homology_snf(ctx, trunc);
    r.expected_rank = static_cast<Int>(alcove_weights(ctx.rs, ctx.level).size());
    r.pass = r.degrees[0].free_rank == r.expected_rank && r.degrees[0].torsion.empty();
    for (std::size_t p = 1; p < r.degrees.size(); ++p)
        if (r.degrees[p].free_rank != 0 || !r.degrees[p].torsion.empty()) r.pass = false;
    return r;
}

std::string homology_json(const HomologyReport& r) {
    json j;
    j["schema"] = kSchemaVersion;
    j["type"] = r.type.to_string();
    j["rank"] = r.type.rank;
    j["level"] = r.level;
    j["trunc"] = r.trunc.max_length;
    j["margin"] = r.trunc.margin;
    j["expected_rank"] = r.expected_rank;
    j["pass"] = r.pass;
    j["degrees"] = json::array();
    for (std::size_t p = 0; p < r.degrees.size(); ++p) {
        json d;
        d["degree"] = p;
        d["rank"] = r.degrees[p].free_rank;
        d["torsion"] = json::array();
        for (const auto& t : r.degrees[p].torsion) d["torsion"].push_back(t.str());
        j["degrees"].push_back(d);
    }
    return j.dump(2) + "\n";
}

std::string homology_plain(const HomologyReport& r) {
    std::ostringstream os;
    os << r.type.to_string() << " level " << r.level << " trunc " << r.trunc.max_length
       << " margin " << r.trunc.margin << "\n";
    for (std::size_t p = 0; p < r.degrees.size(); ++p) {
        os << "degree " << p << ": rank " << r.degrees[p].free_rank;
        if (!r.degrees[p].torsion.empty()) {
            os << " torsion";
            for (const auto& t : r.degrees[p].torsion) os << " " << t.str();
        }
        os << "\n";
    }
    os << "expected: rank " << r.expected_rank << " at degree 0, zero above\n";
    os << (r.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

namespace {

json chain_to_json(const ChainElement& x) {
    json arr = json::array();
    for (const auto& [k, c] : x.entries) {
        json e;
        e["face"] = k.face.members();
        e["weight"] = k.weight;
        e["coeff"] = c;
        arr.push_back(e);
    }
    return arr;
}

}  // namespace

std::string chain_json(const ChainElement& x) { return chain_to_json(x).dump(2) + "\n"; }

std::string reduce_json(const ReduceOutcome& out, bool verified) {
    json j;
    j["schema"] = kSchemaVersion;
    j["canonical"] = chain_to_json(out.canonical);
    j["witness"]["z"] = chain_to_json(out.witness.z);
    j["witness"]["x"] = chain_to_json(out.witness.x);
    j["witness"]["y"] = chain_to_json(out.witness.y);
    j["verified"] = verified;
    return j.dump(2) + "\n";
}

std::filesystem::path resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("ALCOVE_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "alcove";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "alcove";
    return std::filesystem::path(".alcove-cache");
}

std::optional<std::string> cache_load(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();
    json j = json::parse(bytes, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        std::cerr << "warning: ignoring unreadable cache entry " << file.string() << "\n";
        return std::nullopt;
    }
    if (!j.contains("schema") || j["schema"] != kSchemaVersion) return std::nullopt;
    return bytes;
}

void cache_store(const std::filesystem::path& file, const std::string& bytes) {
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    auto tmp = file;
    tmp += ".tmp." + std::to_string(static_cast<long>(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;  // caching is best effort
        out << bytes;
    }
    std::filesystem::rename(tmp, file, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace alcove::cli
