#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "alcove/cli_support.hpp"
#include "alcove/formal_module.hpp"

using namespace alcove;

namespace {

struct GlobalOpts {
    std::string format = "plain";
    std::string cache_dir;
    bool no_cache = false;
};

int cmd_info(const std::string& type_str) {
    RootSystem rs = build_root_system(LieType::parse(type_str));
    std::cout << rs.type.to_string() << "\n";
    std::cout << "cartan matrix:\n";
    for (int i = 0; i < rs.rank; ++i) {
        std::cout << " ";
        for (int j = 0; j < rs.rank; ++j) std::cout << " " << rs.cartan[i][j];
        std::cout << "\n";
    }
    std::cout << "rho: " << weight_to_string(rs.rho) << "\n";
    std::cout << "highest root: " << weight_to_string(rs.highest_root) << "\n";
    std::cout << "comarks: " << weight_to_string(rs.comarks) << "\n";
    std::cout << "dual coxeter: " << rs.dual_coxeter << "\n";
    std::cout << "weyl order: " << rs.weyl_order << "\n";
    std::cout << "positive roots: " << rs.positive_roots.size() << "\n";
    return 0;
}

int cmd_fusion(const GlobalOpts& g, const std::string& type_str, Int k,
               const std::string& lam_str, const std::string& mu_str) {
    StarContext ctx(build_root_system(LieType::parse(type_str)), k);
    Weight lam = cli::parse_weight(lam_str, ctx.rs.rank);
    Weight mu = cli::parse_weight(mu_str, ctx.rs.rank);
    auto prod = fusion_product(ctx, lam, mu);
    if (cli::parse_format(g.format) == cli::Format::Json) {
        FusionTable t;  // single-pair table keeps the schema uniform
        t.type = ctx.rs.type;
        t.level = k;
        t.labels = alcove_weights(ctx.rs, k);
        int i = t.label_index(lam), j = t.label_index(mu);
        std::map<int, Int> row;
        for (const auto& [nu, n] : prod) row.emplace(t.label_index(nu), n);
        t.products.emplace(std::make_pair(std::min(i, j), std::max(i, j)), row);
        std::cout << cli::fusion_table_json(t);
    } else {
        std::cout << cli::fusion_pair_plain(prod) << "\n";
    }
    return 0;
}

int cmd_fusion_table(const GlobalOpts& g, const std::string& type_str, Int k, bool check,
                     double tol) {
    StarContext ctx(build_root_system(LieType::parse(type_str)), k);
    cli::Format fmt = cli::parse_format(g.format);
    std::filesystem::path cache_file =
        cli::resolve_cache_dir(g.cache_dir) /
        ("fusion-v" + std::to_string(cli::kSchemaVersion) + "-" + ctx.rs.type.to_string() +
         "-k" + std::to_string(k) + ".json");

    std::string bytes;
    if (fmt == cli::Format::Json && !g.no_cache && !check) {
        if (auto cached = cli::cache_load(cache_file)) {
            std::cout << *cached;
            return 0;
        }
    }
    FusionTable t = build_fusion_table(ctx);
    if (check) {
        for (std::size_t i = 0; i < t.labels.size(); ++i)
            for (std::size_t j = i; j < t.labels.size(); ++j)
                for (const auto& sigma : t.labels) {
                    std::complex<double> lhs = 0.0;
                    for (const auto& [kk, n] :
                         t.products.at({static_cast<int>(i), static_cast<int>(j)}))
                        lhs += double(n) * character_at_special_point(ctx, t.labels[kk], sigma);
                    std::complex<double> rhs =
                        character_at_special_point(ctx, t.labels[i], sigma) *
                        character_at_special_point(ctx, t.labels[j], sigma);
                    if (std::abs(lhs - rhs) > tol) {
                        std::cerr << "character cross-check failed at " << cli::weight_key(sigma)
                                  << "\n";
                        return 2;
                    }
                }
    }
    switch (fmt) {
        case cli::Format::Json:
            bytes = cli::fusion_table_json(t);
            if (!g.no_cache) cli::cache_store(cache_file, bytes);
            break;
        case cli::Format::Csv: bytes = cli::fusion_table_csv(t); break;
        case cli::Format::Plain: bytes = cli::fusion_table_plain(t); break;
    }
    std::cout << bytes;
    return 0;
}

int cmd_homology(const GlobalOpts& g, const std::string& type_str, Int k, Int trunc_len,
                 Int margin_override) {
    StarContext ctx(build_root_system(LieType::parse(type_str)), k);
    Truncation trunc = make_truncation(ctx, trunc_len);
    if (margin_override >= 0) trunc.margin = margin_override;
    if (trunc.max_length < trunc.margin) {
        std::cerr << "insufficient window: --trunc must be at least the margin ("
                  << trunc.margin << "); try --trunc " << trunc.margin + 1 << "\n";
        return 3;
    }
    cli::Format fmt = cli::parse_format(g.format);
    std::filesystem::path cache_file =
        cli::resolve_cache_dir(g.cache_dir) /
        ("homology-v" + std::to_string(cli::kSchemaVersion) + "-" + ctx.rs.type.to_string() +
         "-k" + std::to_string(k) + "-L" + std::to_string(trunc.max_length) + "-m" +
         std::to_string(trunc.margin) + ".json");
    if (fmt == cli::Format::Json && !g.no_cache) {
        if (auto cached = cli::cache_load(cache_file)) {
            std::cout << *cached;
            auto j = nlohmann::json::parse(*cached);
            return j["pass"] == true ? 0 : 2;
        }
    }
    cli::HomologyReport r = cli::run_homology(ctx, trunc);
    if (fmt == cli::Format::Json) {
        std::string bytes = cli::homology_json(r);
        if (!g.no_cache) cli::cache_store(cache_file, bytes);
        std::cout << bytes;
    } else {
        std::cout << cli::homology_plain(r);
    }
    return r.pass ? 0 : 2;
}

int cmd_reduce(const GlobalOpts& g, const std::string& type_str, Int k,
               const std::string& chain_str, const std::vector<std::string>& target_strs,
               bool trace) {
    StarContext ctx(build_root_system(LieType::parse(type_str)), k);
    ChainElement x = cli::parse_chain(ctx, chain_str);
    std::vector<AffineWord> targets;
    for (const auto& t : target_strs) targets.push_back(cli::parse_word(t, ctx.rs.rank));
    ReduceOutcome out;
    try {
        out = reduce_cycle(ctx, x, targets, trace ? &std::cerr : nullptr);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    bool ok = verify_witness(ctx, out.witness);
    if (cli::parse_format(g.format) == cli::Format::Json)
        std::cout << cli::reduce_json(out, ok);
    else {
        std::cout << "canonical: " << chain_to_string(out.canonical) << "\n";
        std::cout << "witness z: " << chain_to_string(out.witness.z) << "\n";
        std::cout << "verified: " << (ok ? "yes" : "no") << "\n";
    }
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact alcove combinatorics: fusion rings and face-complex homology"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--format", g.format, "output format: plain|json|csv");
    app.add_option("--cache-dir", g.cache_dir, "cache directory");
    app.add_flag("--no-cache", g.no_cache, "bypass the result cache");

    std::string type_str, lam_str, mu_str, chain_str;
    Int level = 0, trunc_len = 4, margin_override = -1;
    std::vector<std::string> targets;
    bool trace = false, check = false;
    double tol = 1e-6;

    auto* info = app.add_subcommand("info", "print Cartan data for a type");
    info->fallthrough();
    info->add_option("type", type_str)->required();

    auto* fus = app.add_subcommand("fusion", "fusion product of two labels");
    fus->fallthrough();
    fus->add_option("type", type_str)->required();
    fus->add_option("level", level)->required();
    fus->add_option("lambda", lam_str)->required();
    fus->add_option("mu", mu_str)->required();

    auto* tab = app.add_subcommand("fusion-table", "full level-k fusion table");
    tab->fallthrough();
    tab->add_option("type", type_str)->required();
    tab->add_option("level", level)->required();
    tab->add_flag("--check", check, "run the special-point character cross-check");
    tab->add_option("--tol", tol, "cross-check tolerance");

    auto* hom = app.add_subcommand("homology", "truncated face-complex homology");
    hom->fallthrough();
    hom->add_option("type", type_str)->required();
    hom->add_option("level", level)->required();
    hom->add_option("--trunc", trunc_len, "window length");
    hom->add_option("--margin", margin_override, "margin override");

    auto* red = app.add_subcommand("reduce", "move a cycle onto target alcoves");
    red->fallthrough();
    red->add_option("type", type_str)->required();
    red->add_option("level", level)->required();
    red->add_option("--chain", chain_str, "semicolon-separated face:weight:coeff terms")
        ->required();
    red->add_option("--target", targets, "target alcove word, repeatable (default identity)");
    red->add_flag("--trace", trace, "print each move to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (info->parsed()) return cmd_info(type_str);
        if (fus->parsed()) return cmd_fusion(g, type_str, level, lam_str, mu_str);
        if (tab->parsed()) return cmd_fusion_table(g, type_str, level, check, tol);
        if (hom->parsed()) return cmd_homology(g, type_str, level, trunc_len, margin_override);
        if (red->parsed()) return cmd_reduce(g, type_str, level, chain_str, targets, trace);
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
