// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0
//
// Runs the smwt executable through the shell. Needs SMWT_CLI_PATH and
// SMWT_FIXTURES_DIR.

#ifndef SMWT_TESTS_CLI_HPP
#define SMWT_TESTS_CLI_HPP

#include <sys/wait.h>
#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

namespace cli {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

inline std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

inline std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = fs::temp_directory_path() /
            ("smwt_" + tag + "_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
             std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string operator/(const std::string& name) const { return (path_ / name).string(); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

inline std::string fixture(const std::string& name) {
  return std::string(SMWT_FIXTURES_DIR) + "/" + name;
}

inline Result run(const std::vector<std::string>& args, const TempDir& scratch) {
  std::string cmd = quote(SMWT_CLI_PATH);
  for (const std::string& a : args) cmd += " " + quote(a);
  const std::string out = scratch / ".stdout", err = scratch / ".stderr";
  cmd += " >" + quote(out) + " 2>" + quote(err);
  const int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

struct Case {
  std::string name;
  std::vector<std::string> args;
  int expected_code;
};

/// Every subcommand and exit code over the shipped fixtures. Outputs land in
/// `dir`; the verify case reads the pinv output, so order matters.
inline std::vector<Case> fixture_suite(const TempDir& dir) {
  const std::string o = "orthogonal/", m = "mixed/", s = "system/";
  auto f = [](const std::string& n) { return fixture(n); };
  return {
      {"version", {"--version"}, 0},
      {"no subcommand", {}, 2},
      {"pinv", {"pinv", f(o + "A.json"), "--output", dir / "A_pinv.json"}, 0},
      {"verify own pinv", {"verify", f(o + "A.json"), dir / "A_pinv.json"}, 0},
      {"verify fixture pinv", {"verify", f(o + "A.json"), f(o + "A_pinv.json")}, 0},
      {"verify wrong pinv", {"verify", f(o + "A.json"), f(o + "S_pinv.json")}, 1},
      {"smw pinv orthogonal update",
       {"smw", f(o + "A.json"), f(o + "U.json"), f(o + "B.json"), f(o + "V.json"), "--mode", "pinv",
        "--output", dir / "S1.json", "--report", dir / "S1_report.json"},
       0},
      {"smw orthogonal fast path",
       {"smw", f(o + "A.json"), f(o + "U.json"), f(o + "B.json"), f(o + "V.json"), "--mode",
        "orthogonal", "--output", dir / "S1o.json"},
       0},
      {"smw pinv mixed update",
       {"smw", f(o + "A.json"), f(m + "U.json"), f(o + "B.json"), f(m + "V.json"), "--mode", "pinv",
        "--output", dir / "S2.json"},
       0},
      {"smw orthogonal mode falls back",
       {"smw", f(o + "A.json"), f(m + "U.json"), f(o + "B.json"), f(m + "V.json"), "--mode",
        "orthogonal", "--output", dir / "S2o.json"},
       4},
      {"smw invertible on singular A",
       {"smw", f(o + "A.json"), f(o + "U.json"), f(o + "B.json"), f(o + "V.json"), "--mode",
        "invertible", "--output", dir / "S1i.json"},
       3},
      {"smw invertible on invertible base",
       {"smw", f(o + "S.json"), f(o + "U.json"), f(o + "B.json"), f(o + "V.json"), "--mode",
        "invertible", "--output", dir / "S3.json"},
       0},
      {"smw hermitian on non-Hermitian A",
       {"smw", f(o + "A.json"), f(o + "U.json"), f(o + "B.json"), f(o + "V.json"), "--mode",
        "hermitian", "--output", dir / "S1h.json"},
       2},
      {"smw shape mismatch",
       {"smw", f(o + "A.json"), f(o + "V.json"), f(o + "B.json"), f(o + "U.json"), "--mode", "pinv",
        "--output", dir / "bad.json"},
       2},
      {"solve inconsistent", {"solve", f(s + "A.json"), f(s + "D.json"), "--output", dir / "X.json"}, 5},
      {"solve invertible", {"solve", f(o + "S.json"), f(s + "D.json"), "--output", dir / "X2.json"}, 0},
      {"sweep",
       {"sweep", f(s + "A.json"), f(s + "D.json"), "--eps-a", "0.09,0.05,0.01", "--eps-d", "0.01",
        "--alpha-min", "0.25", "--alpha-max", "2.5", "--alpha-steps", "10", "--output",
        dir / "sweep.csv"},
       0},
      {"sweep negative eps",
       {"sweep", f(s + "A.json"), f(s + "D.json"), "--eps-a", "-0.1", "--output", dir / "bad.csv"},
       2},
      {"missing input", {"pinv", dir / "missing.json", "--output", dir / "out.json"}, 2},
      {"malformed input", {"pinv", f("make_fixtures.py"), "--output", dir / "out.json"}, 2},
  };
}

}  // namespace cli

#endif  // SMWT_TESTS_CLI_HPP
