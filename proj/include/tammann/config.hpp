#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace tammann {

/// Flat key-value configuration. Files use `key = value` lines grouped by
/// `[section]` headers; keys are stored as `section.key`. `#` starts a
/// comment. Lookups of malformed values throw ConfigError.
class Config {
public:
  static Config parse(std::istream& in, const std::string& origin = "<stream>");
  static Config load(const std::string& path);

  void set(const std::string& key, const std::string& value);
  /// Parses `key=value` and stores it.
  void apply_override(const std::string& assignment);

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  /// Comma-separated list of numbers.
  std::vector<double> get_doubles(const std::string& key, const std::vector<double>& fallback) const;
  std::vector<std::string> get_strings(const std::string& key,
                                       const std::vector<std::string>& fallback) const;

  const std::map<std::string, std::string>& entries() const { return values_; }

  /// Keys not in `known` and not starting with one of `prefixes`.
  std::vector<std::string> unknown_keys(const std::set<std::string>& known,
                                        const std::vector<std::string>& prefixes) const;

private:
  std::map<std::string, std::string> values_;
};

std::vector<std::string> split_list(const std::string& s, char sep = ',');
std::string trim(const std::string& s);
double parse_double(const std::string& s, const std::string& what);

} // namespace tammann
