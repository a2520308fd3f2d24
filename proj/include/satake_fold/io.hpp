#pragma once

#include <string>

#include <json.hpp>

#include "satake_fold/builtins.hpp"
#include "satake_fold/twining.hpp"

namespace satake_fold {

using Json = nlohmann::ordered_json;

/// {"d": int, "simple_roots": [[int]], "simple_coroots": [[int]]}. Throws
/// ParseError on malformed input and InvalidDatum if the datum is invalid.
RootDatum datum_from_json(const Json& j);
Json to_json(const RootDatum& datum);

/// {"perm": [int] (1-based), "matrix_on_X": [[int]] (rows)}.
PinnedAut sigma_from_json(const Json& j, const RootDatum& datum);
Json to_json(const PinnedAut& sigma);

Json read_json_file(const std::string& path);

/// A built-in name or a path to a JSON file.
RootDatum load_group(const std::string& source);
PinnedAut load_sigma(const std::string& source, const RootDatum& datum);

/// Comma-separated integers of the given length.
IntVector parse_vector(const std::string& text, Eigen::Index expected_length, const std::string& what);
/// Comma-separated 1-based indices, returned 0-based.
Word parse_word(const std::string& text, int rank);

Json to_json(const IntVector& v);
Json to_json(const RationalCoweight& v);
Json to_json(const IntMatrix& m);
Json word_to_json(const Word& w);

/// {"terms": [{"coweight": [...], "mult": m}]} in coweight_order.
Json to_json(const CharPoly& ch, const RootSystem& system);
Json to_json(const TwiningReport& report, const TwiningContext& ctx);
Json fold_to_json(const RootDatum& datum, const PinnedAut& sigma, const FoldedDatum& fd, const FoldedWeyl& fw);

}  // namespace satake_fold
