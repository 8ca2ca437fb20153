#include "util.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <climits>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fidzero::cli {

std::string canon_double(double v) {
  char buf[32];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string canon_bool(bool v) { return v ? "true" : "false"; }

double parse_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* b = text.data();
  const char* e = b + text.size();
  const auto r = std::from_chars(b, e, v);
  if (r.ec != std::errc{} || r.ptr != e)
    throw std::invalid_argument(key + ": expected a number, got '" + text +
                                "'");
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  const long long v = parse_ll(key, text);
  if (v < INT_MIN || v > INT_MAX)
    throw std::invalid_argument(key + ": value out of range: '" + text + "'");
  return static_cast<int>(v);
}

long long parse_ll(const std::string& key, const std::string& text) {
  long long v = 0;
  const char* b = text.data();
  const char* e = b + text.size();
  const auto r = std::from_chars(b, e, v);
  if (r.ec != std::errc{} || r.ptr != e)
    throw std::invalid_argument(key + ": expected an integer, got '" + text +
                                "'");
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw std::invalid_argument(key + ": expected true/false, got '" + text +
                              "'");
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

void ConfigResolver::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::invalid_argument("config: cannot read '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("config: '" + path + "' is not valid JSON (" +
                                e.what() + ")");
  }
  if (!j.is_object())
    throw std::invalid_argument("config: '" + path +
                                "' must hold a JSON object");
  // A run manifest carries the effective config under "config".
  if (j.contains("config") && j["config"].is_object())
    file_cfg_ = j["config"];
  else
    file_cfg_ = j;
}

std::string ConfigResolver::resolve(const std::string& key, bool cli_given,
                                    const std::string& cli_text,
                                    const std::string& default_text) {
  std::string value;
  if (cli_given) {
    value = cli_text;
  } else if (file_cfg_.contains(key)) {
    const json& v = file_cfg_[key];
    if (v.is_string())
      value = v.get<std::string>();
    else if (v.is_boolean())
      value = canon_bool(v.get<bool>());
    else if (v.is_number())
      value = v.dump();
    else
      throw std::invalid_argument(key + ": unsupported JSON value type");
  } else {
    value = default_text;
  }
  resolved_.emplace_back(key, value);
  return value;
}

void ConfigResolver::canonicalize(const std::string& key,
                                  const std::string& canon) {
  for (auto it = resolved_.rbegin(); it != resolved_.rend(); ++it) {
    if (it->first == key) {
      it->second = canon;
      return;
    }
  }
  resolved_.emplace_back(key, canon);
}

json ConfigResolver::resolved_json() const {
  json j = json::object();
  for (const auto& [k, v] : resolved_) j[k] = v;
  return j;
}

ModelSpec make_model(const ModelOptions& opts) {
  ModelSpec spec;
  if (opts.model == "kitaev") {
    spec = ModelSpec::kitaev(opts.delta, opts.full_zone);
  } else if (opts.model == "ssh") {
    spec = ModelSpec::ssh(opts.t2);
  } else if (opts.model == "haldane") {
    spec = ModelSpec::haldane(opts.t1, opts.t2, opts.theta);
  } else if (opts.model == "qwz") {
    spec = ModelSpec::qwz();
  } else {
    throw std::invalid_argument("model: unknown model '" + opts.model + "'");
  }
  return spec;
}

std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw std::invalid_argument("out: cannot create directory '" + dir +
                                "': " + ec.message());
}

std::string path_join(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex_file(const std::string& path) {
  const std::string data = read_text_file(path);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
    EVP_MD_CTX_free(ctx);
    throw std::runtime_error("sha256: digest computation failed");
  }
  EVP_MD_CTX_free(ctx);
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char b[3];
    std::snprintf(b, sizeof b, "%02x", digest[i]);
    hex += b;
  }
  return hex;
}

}  // namespace fidzero::cli
