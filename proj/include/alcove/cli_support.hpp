#ifndef ALCOVE_CLI_SUPPORT_HPP
#define ALCOVE_CLI_SUPPORT_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "alcove/chain_complex.hpp"
#include "alcove/fusion.hpp"

namespace alcove::cli {

inline constexpr int kSchemaVersion = 1;

enum class Format { Plain, Json, Csv };
Format parse_format(const std::string& s);  // throws std::invalid_argument

std::string weight_key(const Weight& w);                       // "1,0"
Weight parse_weight(const std::string& s, int rank);           // throws
FaceIndex parse_face(const std::string& s, int rank);          // throws
ChainElement parse_chain(const StarContext& ctx, const std::string& s);  // "0,1:3:1;..."
AffineWord parse_word(const std::string& s, int rank);         // "0 1 0" or ""

std::string fusion_pair_plain(const std::map<Weight, Int>& prod);
std::string fusion_table_json(const FusionTable& t);
std::string fusion_table_plain(const FusionTable& t);
std::string fusion_table_csv(const FusionTable& t);

struct HomologyReport {
    LieType type;
    Int level = 0;
    Truncation trunc;
    std::vector<DegreeHomology> degrees;
    Int expected_rank = 0;
    bool pass = false;
};

HomologyReport run_homology(const StarContext& ctx, const Truncation& trunc);
std::string homology_json(const HomologyReport& r);
std::string homology_plain(const HomologyReport& r);

std::string chain_json(const ChainElement& x);
std::string reduce_json(const ReduceOutcome& out, bool verified);

/// Cache directory resolution: explicit flag, then ALCOVE_CACHE_DIR, then
/// XDG_CACHE_HOME/alcove, then ~/.cache/alcove, then ./.alcove-cache.
std::filesystem::path resolve_cache_dir(const std::string& flag_value);

/// Returns the cached bytes when the file exists and carries the expected
/// schema version; unreadable or mismatched entries yield nullopt (with a
/// warning on stderr for corrupted ones).
std::optional<std::string> cache_load(const std::filesystem::path& file);

/// Atomic write: temp file in the same directory, then rename.
void cache_store(const std::filesystem::path& file, const std::string& bytes);

}  // namespace alcove::cli

#endif
