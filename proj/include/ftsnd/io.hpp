#pragma once

// Set-system interchange format.
//
//   m=<int> n=<int>
//   <ascending points of block 1, space separated>
//   ...
//   <ascending points of block n>   (an empty line is the empty block)
//
// Lines starting with '#' are comments and never count as blocks. The JSON
// form {"m": <int>, "blocks": [[...], ...]} is accepted interchangeably.

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ftsnd/errors.hpp"
#include "ftsnd/set_system.hpp"

namespace ftsnd::io {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

inline std::size_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw parse_error(line, std::string("expected a non-negative integer for ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

inline std::size_t parse_key(std::string_view tok, std::string_view key, std::size_t line) {
  if (tok.size() <= key.size() + 1 || tok.substr(0, key.size()) != key || tok[key.size()] != '=') {
    throw parse_error(line, "expected '" + std::string(key) + "=<int>' in header");
  }
  return parse_uint(tok.substr(key.size() + 1), line, std::string(key).c_str());
}

inline std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline Block parse_block(std::string_view line_text, std::size_t m, std::size_t line) {
  Block b(m);
  std::size_t prev = 0;
  for (auto tok : tokens(line_text)) {
    const auto p = parse_uint(tok, line, "point");
    if (p < 1 || p > m) throw parse_error(line, "point " + std::to_string(p) + " outside 1.." + std::to_string(m));
    if (p <= prev) throw parse_error(line, "points must be strictly ascending");
    b.insert(p);
    prev = p;
  }
  return b;
}

inline SetSystem parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(1, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("m") || !j.contains("blocks")) {
    throw parse_error(1, "JSON set system needs fields 'm' and 'blocks'");
  }
  if (!j["m"].is_number_unsigned()) throw parse_error(1, "'m' must be a non-negative integer");
  const auto m = j["m"].get<std::size_t>();
  if (!j["blocks"].is_array()) throw parse_error(1, "'blocks' must be an array");
  SetSystem s(m);
  std::size_t idx = 0;
  for (const auto& jb : j["blocks"]) {
    ++idx;
    if (!jb.is_array()) throw parse_error(1, "block " + std::to_string(idx) + " is not an array");
    Block b(m);
    std::size_t prev = 0;
    for (const auto& jp : jb) {
      if (!jp.is_number_unsigned()) throw parse_error(1, "block " + std::to_string(idx) + " has a non-integer point");
      const auto p = jp.get<std::size_t>();
      if (p < 1 || p > m || p <= prev) {
        throw parse_error(1, "block " + std::to_string(idx) + ": points must be ascending within 1.." + std::to_string(m));
      }
      b.insert(p);
      prev = p;
    }
    s.add(std::move(b));
  }
  if (j.contains("n") && (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() != s.size())) {
    throw parse_error(1, "'n' does not match the number of blocks");
  }
  return s;
}

}  // namespace detail

inline SetSystem parse_set_system(std::string_view text) {
  const auto trimmed = detail::trim(text);
  if (!trimmed.empty() && trimmed.front() == '{') return detail::parse_json(trimmed);

  const auto lines = detail::split_lines(text);
  std::size_t i = 0;
  // Leading comments and blank lines before the header.
  while (i < lines.size() && (detail::trim(lines[i]).empty() || detail::trim(lines[i]).front() == '#')) ++i;
  if (i == lines.size()) throw parse_error(i == 0 ? 1 : i, "missing 'm=<int> n=<int>' header");
  const std::size_t header_line = i + 1;
  const auto head = detail::tokens(lines[i]);
  if (head.size() != 2) throw parse_error(header_line, "header must be 'm=<int> n=<int>'");
  const auto m = detail::parse_key(head[0], "m", header_line);
  const auto n = detail::parse_key(head[1], "n", header_line);
  ++i;

  SetSystem s(m);
  while (s.size() < n) {
    if (i >= lines.size()) {
      throw parse_error(i + 1, "expected " + std::to_string(n) + " blocks, found " + std::to_string(s.size()));
    }
    const auto t = detail::trim(lines[i]);
    if (!t.empty() && t.front() == '#') {
      ++i;
      continue;
    }
    s.add(detail::parse_block(lines[i], m, i + 1));
    ++i;
  }
  for (; i < lines.size(); ++i) {
    const auto t = detail::trim(lines[i]);
    if (!t.empty() && t.front() != '#') throw parse_error(i + 1, "unexpected content after the last block");
  }
  return s;
}

inline std::string format_set_system(const SetSystem& s) {
  std::ostringstream out;
  out << "m=" << s.order() << " n=" << s.size() << '\n';
  for (const auto& b : s.blocks()) {
    bool first = true;
    for (auto p : b.points()) {
      if (!first) out << ' ';
      out << p;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

inline std::string format_set_system_json(const SetSystem& s) {
  nlohmann::json j;
  j["m"] = s.order();
  j["n"] = s.size();
  j["blocks"] = nlohmann::json::array();
  for (const auto& b : s.blocks()) j["blocks"].push_back(b.points());
  return j.dump() + "\n";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SetSystem load_set_system(const std::string& path) {
  const auto text = read_file(path);
  try {
    return parse_set_system(text);
  } catch (const parse_error& e) {
    throw parse_error(e.line(), e.detail(), path);
  }
}

inline void save_set_system(const std::string& path, const SetSystem& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error("cannot write '" + path + "'");
  out << format_set_system(s);
}

}  // namespace ftsnd::io
