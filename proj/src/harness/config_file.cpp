#include "ifl/harness/config_file.hpp"

#include <fstream>
#include <sstream>

namespace ifl {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ConfigFile ConfigFile::parse(const std::string& text, const std::set<std::string>& known_keys) {
  ConfigFile cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(lineno) + ": expected key = value, got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!known_keys.count(key)) throw UsageError("unknown config key '" + key + "' (line " + std::to_string(lineno) + ")");
    cfg.values_[key] = value;
  }
  return cfg;
}

ConfigFile ConfigFile::load(const std::string& path, const std::set<std::string>& known_keys) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), known_keys);
}

const std::string& ConfigFile::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw UsageError("missing config key '" + key + "'");
  return it->second;
}

std::vector<std::string> split_list(const std::string& value, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw UsageError("config key '" + key + "': '" + value + "' is not a number");
  }
}

long long parse_int(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw UsageError("config key '" + key + "': '" + value + "' is not an integer");
  }
}

std::vector<int> parse_int_list(const std::string& value) {
  std::vector<int> out;
  for (const auto& s : split_list(value)) out.push_back(static_cast<int>(parse_int(s, value)));
  return out;
}

std::vector<double> parse_double_list(const std::string& value) {
  std::vector<double> out;
  for (const auto& s : split_list(value)) out.push_back(parse_double(s, value));
  return out;
}

std::vector<std::vector<int>> parse_tuple_list(const std::string& value) {
  std::vector<std::vector<int>> out;
  for (const auto& tuple : split_list(value, ';')) {
    std::vector<int> t;
    for (const auto& s : split_list(tuple, ':')) t.push_back(static_cast<int>(parse_int(s, value)));
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace ifl
