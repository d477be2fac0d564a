#pragma once

#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bpenta/error.hpp"
#include "bpenta/rational.hpp"
#include "bpenta/system.hpp"

namespace bpenta {

/// Text format for a backward pentadiagonal system:
///
///   # comment lines (first non-blank character '#') and blank lines are skipped
///   n
///   a~_1 .. a~_{n-2}
///   a_1  .. a_{n-1}
///   d_1  .. d_n
///   b_2  .. b_n
///   b~_3 .. b~_n
///   y_1  .. y_n
///
/// Entries are whitespace separated integers, exact decimals or p/q.
inline BackwardPentaSystem<BigRational> parse_system_file(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.emplace_back(line_no, std::move(line));
  }
  if (lines.size() != 7) {
    throw Error(ErrorKind::Parse, "expected 7 data lines (n, five bands, y), found " + std::to_string(lines.size()));
  }

  const auto tokens = [](const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
  };

  const auto n_tokens = tokens(lines[0].second);
  if (n_tokens.size() != 1 || !detail::all_digits(n_tokens[0]) || n_tokens[0].size() > 9) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(lines[0].first) + ": expected the system size n");
  }
  const std::size_t n = std::stoul(n_tokens[0]);
  if (n < kMinSystemSize) {
    throw Error(ErrorKind::SizeTooSmall, "system size " + std::to_string(n) + " is below the minimum of 5");
  }

  static constexpr const char* kNames[] = {"a_tilde", "a", "d", "b", "b_tilde", "y"};
  const std::size_t expected[] = {n - 2, n - 1, n, n - 1, n - 2, n};
  std::vector<BigRational> vectors[6];
  for (std::size_t v = 0; v < 6; ++v) {
    const auto& [no, line] = lines[v + 1];
    const auto toks = tokens(line);
    if (toks.size() != expected[v]) {
      throw Error(ErrorKind::LengthMismatch, "line " + std::to_string(no) + ": vector " + kNames[v] + " has " +
                                                 std::to_string(toks.size()) + " entries, expected " +
                                                 std::to_string(expected[v]));
    }
    vectors[v].reserve(toks.size());
    for (const auto& t : toks) {
      try {
        vectors[v].push_back(BigRational::parse(t));
      } catch (const Error& e) {
        throw Error(e.kind(), "line " + std::to_string(no) + ": " + e.what());
      }
    }
  }
  return BackwardPentaSystem<BigRational>(std::move(vectors[0]), std::move(vectors[1]), std::move(vectors[2]),
                                          std::move(vectors[3]), std::move(vectors[4]), std::move(vectors[5]));
}

inline void write_system_file(std::ostream& out, const BackwardPentaSystem<BigRational>& s,
                              const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << s.size() << '\n';
  for (const auto* v : {&s.a_tilde(), &s.a(), &s.d(), &s.b(), &s.b_tilde(), &s.y()}) {
    for (std::size_t k = 0; k < v->size(); ++k) {
      if (k) out << ' ';
      out << (*v)[k].to_string();
    }
    out << '\n';
  }
}

inline std::string format_system_file(const BackwardPentaSystem<BigRational>& s,
                                      const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  write_system_file(out, s, comments);
  return out.str();
}

}  // namespace bpenta
