#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ulc/intrinsic_volumes.hpp"
#include "ulc/pmf.hpp"

namespace ulc::cli {

/// Malformed input or configuration; maps to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal form that parses back to the same double.
[[nodiscard]] std::string format_double(double value);
[[nodiscard]] std::string format_optional(const std::optional<double>& value);

/// Reads and parses a JSON file. Throws InputError on I/O or syntax errors.
[[nodiscard]] nlohmann::json read_json_file(const std::filesystem::path& path);

/// {"offset": int, "masses": [float, ...]}
[[nodiscard]] DiscretePmf pmf_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json pmf_to_json(const DiscretePmf& pmf);

/// {"box": {"sides": [...]}} | {"cube": {"r", "n"}} | {"ball": {"radius", "n"}}
[[nodiscard]] ConvexBody body_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json body_to_json(const ConvexBody& body);

/// Writes via a sibling temporary file and a rename, so readers never see a
/// partial file.
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

}  // namespace ulc::cli
