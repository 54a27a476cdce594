#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "starks/report.hpp"

namespace starks::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum Exit : int { ok = 0, failure = 1, usage = 2, budget = 3 };

std::string sha256_hex(std::string_view data);
std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, std::string_view text);

nlohmann::json report_json(const VerificationReport& r);

/// Collects input hashes while a command runs, then writes
/// {kind, inputs, result, tool_version, wall_time}.
class Certificate {
 public:
  explicit Certificate(std::string kind);

  /// Reads a file and records its digest under its path.
  std::string read_input(const std::filesystem::path& p);
  nlohmann::json& result() { return result_; }
  nlohmann::json to_json() const;
  void write(const std::filesystem::path& p) const;

 private:
  std::string kind_;
  std::map<std::string, std::string> inputs_;
  nlohmann::json result_ = nlohmann::json::object();
  std::chrono::steady_clock::time_point start_;
};

/// Certificate with wall_time removed; the part that must repeat exactly.
nlohmann::json certificate_payload(const nlohmann::json& cert);

}  // namespace starks::cli
