#include <doctest.h>

#include <filesystem>
#include <nlohmann/json.hpp>
#include <sstream>

#include "artifacts.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json payload_after(const std::vector<std::string>& args, const fs::path& dir, const std::string& cert) {
  fs::remove_all(dir);
  std::vector<std::string> a = args;
  a.insert(a.end(), {"--out-dir", dir.string()});
  std::ostringstream out, err;
  REQUIRE(starks::cli::run(a, out, err) == 0);
  return starks::cli::certificate_payload(json::parse(starks::cli::read_file(dir / cert)));
}

}  // namespace

TEST_CASE("identical invocations give identical certificates") {
  const fs::path base = fs::temp_directory_path() / "star-ks-property";
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"game", "classical", "--n", "7", "--variant", "point_line"}, "classical-n7-point_line.cert.json"},
      {{"bell", "certify", "--n", "7"}, "bell-n7-certificate.cert.json"},
      {{"game", "visibility", "--d", "10", "--variant", "line_line"}, "visibility-d10-line_line.cert.json"},
      {{"hadamard", "build", "--q", "5", "--out", "gh.json"}, "gh.cert.json"}};
  for (const auto& [args, cert] : cases) {
    const json first = payload_after(args, base / "a", cert);
    CHECK(payload_after(args, base / "b", cert).dump() == first.dump());
  }
}

TEST_CASE("thread count does not change results") {
  const fs::path base = fs::temp_directory_path() / "star-ks-threads";
  const std::vector<std::string> args{"game", "classical", "--n", "9", "--variant", "colored"};
  const std::string cert = "classical-n9-colored.cert.json";
  auto with = [&](const char* threads, const char* dir) {
    auto a = args;
    a.insert(a.end(), {"--threads", threads});
    return payload_after(a, base / dir, cert).dump();
  };
  const std::string one = with("1", "t1");
  CHECK(with("3", "t3") == one);
  CHECK(with("8", "t8") == one);
}

TEST_CASE("pipeline stages read only files") {
  const fs::path dir = fs::temp_directory_path() / "star-ks-stages";
  fs::remove_all(dir);
  std::ostringstream out, err;
  REQUIRE(starks::cli::run({"pipeline", "paper-n9", "--out-dir", dir.string()}, out, err) == 0);
  // Re-running one downstream stage from the stored artifact reproduces its certificate.
  const fs::path stage = dir / "paper-n9";
  const json before = starks::cli::certificate_payload(json::parse(starks::cli::read_file(stage / "quantum-n9-colored.cert.json")));
  const fs::path again = dir / "again";
  std::ostringstream o2, e2;
  REQUIRE(starks::cli::run({"game", "quantum", "--n", "9", "--variant", "colored", "--kset", (stage / "kset.json").string(),
                            "--out-dir", again.string()},
                           o2, e2) == 0);
  const json after = starks::cli::certificate_payload(json::parse(starks::cli::read_file(again / "quantum-n9-colored.cert.json")));
  CHECK(after.dump() == before.dump());
}
