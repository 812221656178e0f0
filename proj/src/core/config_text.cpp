#include "ifl/core/config_text.hpp"

#include <charconv>
#include <vector>

namespace ifl {

std::string to_text(const HeightConfig& config) {
  std::string bits;
  for (auto b : config.slopes()) bits.push_back(b ? '1' : '0');
  return "N=" + std::to_string(config.size()) + " anchor=" + std::to_string(config.anchor()) + " slopes=" + bits;
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_spaces() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  void expect(std::string_view key) {
    skip_spaces();
    if (s.substr(pos, key.size()) != key) throw ParseError("expected '" + std::string(key) + "'", pos);
    pos += key.size();
  }
  std::int64_t integer() {
    std::int64_t v = 0;
    const char* begin = s.data() + pos;
    auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), v);
    if (ec != std::errc() || ptr == begin) throw ParseError("expected an integer", pos);
    pos += static_cast<std::size_t>(ptr - begin);
    return v;
  }
};

}  // namespace

HeightConfig parse_config(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  Cursor c{line};
  c.expect("N=");
  const std::size_t n_col = c.pos;
  const auto n = c.integer();
  c.expect("anchor=");
  const auto anchor = c.integer();
  c.expect("slopes=");
  const std::size_t bits_col = c.pos;
  std::vector<std::uint8_t> bits;
  while (c.pos < line.size() && (line[c.pos] == '0' || line[c.pos] == '1')) {
    bits.push_back(static_cast<std::uint8_t>(line[c.pos] - '0'));
    ++c.pos;
  }
  c.skip_spaces();
  if (c.pos != line.size()) throw ParseError("unexpected character '" + std::string(1, line[c.pos]) + "'", c.pos);
  if (n <= 0 || n % 2 != 0) throw ParseError("N must be even and positive", n_col);
  if (static_cast<std::int64_t>(bits.size()) != n) {
    throw ParseError("slope string has length " + std::to_string(bits.size()) + ", expected " + std::to_string(n),
                     bits_col);
  }
  try {
    return HeightConfig::from_slopes(anchor, bits);
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), bits_col);
  }
}

}  // namespace ifl
