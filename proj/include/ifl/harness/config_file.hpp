#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifl {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat `key = value` text with `#` comments. Keys carry a section prefix
/// (`hydro.N`); values are kept as trimmed strings.
class ConfigFile {
 public:
  static ConfigFile parse(const std::string& text, const std::set<std::string>& known_keys);
  static ConfigFile load(const std::string& path, const std::set<std::string>& known_keys);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  const std::string& get(const std::string& key) const;
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

std::vector<std::string> split_list(const std::string& value, char sep = ',');
std::vector<int> parse_int_list(const std::string& value);
std::vector<double> parse_double_list(const std::string& value);
/// "1:2;1:3" -> {{1,2},{1,3}}
std::vector<std::vector<int>> parse_tuple_list(const std::string& value);
double parse_double(const std::string& value, const std::string& key);
long long parse_int(const std::string& value, const std::string& key);

}  // namespace ifl
