#pragma once

// Calibrated thresholds for the report-only asymptotic checks. The file is
// plain text: a version line, then `key = value` lines; `#` starts a comment.

#include <fstream>
#include <map>
#include <optional>
#include <string>

#include "bpden/errors.hpp"

namespace bpden {

inline constexpr const char* kFixturesMagic = "bpden-fixtures v1";

class Fixtures {
 public:
  Fixtures() = default;

  static Fixtures load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ResourceError("cannot open fixtures file " + path);
    Fixtures f;
    f.path_ = path;
    std::string line;
    bool saw_magic = false;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
      if (!saw_magic) {
        if (line != kFixturesMagic) throw ResourceError("fixtures file " + path + " has no version line");
        saw_magic = true;
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ResourceError("malformed fixtures line: " + line);
      auto key = line.substr(0, eq);
      key.erase(key.find_last_not_of(" \t") + 1);
      const auto value = line.substr(line.find_first_not_of(" \t", eq + 1));
      f.values_[key] = std::stod(value);
    }
    if (!saw_magic) throw ResourceError("fixtures file " + path + " is empty");
    return f;
  }

  std::optional<double> get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  /// Throws when the key is missing.
  double require(const std::string& key) const {
    if (auto v = get(key)) return *v;
    throw ResourceError("fixture '" + key + "' missing" + (path_.empty() ? "" : " in " + path_));
  }

  bool empty() const { return values_.empty(); }

 private:
  std::string path_;
  std::map<std::string, double> values_;
};

}  // namespace bpden
