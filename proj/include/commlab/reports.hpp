#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "commlab/finite_verifier.hpp"
#include "commlab/homotopy.hpp"
#include "commlab/trials.hpp"

namespace commlab {

using Json = nlohmann::ordered_json;

// Payload conversions omit wall-clock timing so that equal inputs give
// byte-identical payloads; timing goes in a separate field of the envelope.
Json to_json(const IdentityReport& r);
Json to_json(const ConnectivityScan& s);
Json to_json(const FiniteTrial& t);
Json to_json(const TripleTrial& t);
Json to_json(const Pi2Report& r);
Json to_json(const Pi3Certificate& c);

/// UTC timestamp like 20261018T120000Z.
std::string utc_timestamp();

/// Writes {subcommand, seed, payload..., timing} to
/// <dir>/<subcommand>-<seed>-<timestamp>.json without overwriting an earlier
/// report, then points <dir>/latest at it. Both writes go through a temp
/// file and a rename.
std::filesystem::path write_report(const std::filesystem::path& dir, const std::string& subcommand,
                                   std::uint64_t seed, const Json& payload, const Json& timing);

/// Writes text to path via a temporary sibling and rename.
void write_atomically(const std::filesystem::path& path, const std::string& text);

}  // namespace commlab
