#include "artifacts.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace starks::cli {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::filesystem::path& p, std::string_view text) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

nlohmann::json report_json(const VerificationReport& r) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : r.violations) v.push_back({{"kind", x.kind}, {"where", x.where}, {"detail", x.detail}});
  return {{"subject", r.subject}, {"passed", r.passed()}, {"checks", r.checks}, {"violations", v}, {"notes", r.notes}};
}

Certificate::Certificate(std::string kind) : kind_(std::move(kind)), start_(std::chrono::steady_clock::now()) {}

std::string Certificate::read_input(const std::filesystem::path& p) {
  std::string text = read_file(p);
  inputs_[p.filename().string()] = sha256_hex(text);
  return text;
}

nlohmann::json Certificate::to_json() const {
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  return {{"kind", kind_}, {"inputs", inputs_}, {"result", result_}, {"tool_version", kToolVersion}, {"wall_time", wall}};
}

void Certificate::write(const std::filesystem::path& p) const { write_file(p, to_json().dump(1) + "\n"); }

nlohmann::json certificate_payload(const nlohmann::json& cert) {
  nlohmann::json c = cert;
  c.erase("wall_time");
  return c;
}

}  // namespace starks::cli
