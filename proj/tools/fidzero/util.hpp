#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fidzero/models.hpp"
#include "json.hpp"

namespace fidzero::cli {

using nlohmann::json;

/// Shortest round-trip decimal form of v.
std::string canon_double(double v);
std::string canon_bool(bool v);

double parse_double(const std::string& key, const std::string& text);
int parse_int(const std::string& key, const std::string& text);
long long parse_ll(const std::string& key, const std::string& text);
bool parse_bool(const std::string& key, const std::string& text);
std::vector<std::string> split_csv(const std::string& text);

/// Resolves option values with precedence CLI flag > config file > default,
/// canonicalizes them, and remembers every resolved key/value pair for the
/// run manifest. A manifest.json passed as the config file is accepted: its
/// "config" sub-object is used.
class ConfigResolver {
 public:
  ConfigResolver() = default;
  /// Loads the config file; throws std::invalid_argument on unreadable or
  /// malformed content.
  void load_file(const std::string& path);

  /// cli_given: the flag appeared on the command line (its text wins).
  std::string resolve(const std::string& key, bool cli_given,
                      const std::string& cli_text,
                      const std::string& default_text);

  /// Re-store the canonical form of an already-resolved key.
  void canonicalize(const std::string& key, const std::string& canon);

  const std::vector<std::pair<std::string, std::string>>& resolved() const {
    return resolved_;
  }
  json resolved_json() const;

 private:
  json file_cfg_ = json::object();
  std::vector<std::pair<std::string, std::string>> resolved_;
};

struct ModelOptions {
  std::string model;
  double delta = 0.6;
  double t1 = 1.0;
  double t2 = -1.0;
  double theta = ModelSpec::kDefaultTheta;
  bool full_zone = false;
};

/// Builds the ModelSpec and validates it (throws std::invalid_argument with
/// the offending key in the message).
ModelSpec make_model(const ModelOptions& opts);

std::string iso8601_utc_now();

void ensure_directory(const std::string& dir);
std::string path_join(const std::string& dir, const std::string& name);
std::string read_text_file(const std::string& path);  // throws if unreadable

/// Lowercase hex SHA-256 of a file's bytes; throws if unreadable.
std::string sha256_hex_file(const std::string& path);

}  // namespace fidzero::cli
