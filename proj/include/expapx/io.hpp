// Copyright 2026 The expapx Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats. Vertices, elements and cities are 1-based in files.
//
//   graph:  p edge <n> <m>      then m lines  e <u> <v>
//   scp:    p scp <n> <m>       then m lines  s [<weight>] : <e1> <e2> ...
//   atsp:   p atsp <n>          then n rows of n numbers (diagonal ignored)
//
// Lines starting with 'c' are comments. LF and CRLF are both accepted.

#ifndef EXPAPX_IO_HPP_
#define EXPAPX_IO_HPP_

#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "expapx/error.hpp"
#include "expapx/graph.hpp"
#include "expapx/rational.hpp"
#include "expapx/setsystem.hpp"
#include "expapx/tsp.hpp"

namespace expapx {
namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

inline std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' ||
                               text[i] == '\v' || text[i] == '\f')) {
      ++i;
    }
    std::size_t start = i;
    while (i < text.size() && !(text[i] == ' ' || text[i] == '\t' || text[i] == '\r' ||
                                text[i] == '\v' || text[i] == '\f')) {
      ++i;
    }
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

// Non-empty, non-comment lines with their 1-based line numbers.
inline std::vector<Line> content_lines(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split_tokens(text.substr(pos, end - pos));
    if (!tokens.empty() && tokens.front().front() != 'c') {
      out.push_back(Line{number, std::move(tokens)});
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

inline std::int64_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected an integer ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

}  // namespace detail

inline Graph parse_graph(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty() || lines.front().tokens.front() != "p") {
    throw ParseError(lines.empty() ? 1 : lines.front().number, "missing 'p edge <n> <m>' header");
  }
  const auto& header = lines.front();
  if (header.tokens.size() != 4 || header.tokens[1] != "edge") {
    throw ParseError(header.number, "malformed header, expected 'p edge <n> <m>'");
  }
  std::int64_t n = detail::parse_count(header.tokens[2], header.number, "vertex count");
  std::int64_t m = detail::parse_count(header.tokens[3], header.number, "edge count");
  if (n < 0 || m < 0 || n > (1 << 24)) throw ParseError(header.number, "malformed header counts");
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.front() != "e" || line.tokens.size() != 3) {
      throw ParseError(line.number, "expected 'e <u> <v>'");
    }
    std::int64_t u = detail::parse_count(line.tokens[1], line.number, "endpoint");
    std::int64_t v = detail::parse_count(line.tokens[2], line.number, "endpoint");
    if (u < 1 || v < 1 || u > n || v > n) throw ParseError(line.number, "endpoint out of range");
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    edges.push_back(make_edge(static_cast<int>(u - 1), static_cast<int>(v - 1)));
    edge_line.push_back(line.number);
  }
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError(lines.back().number, "header announces " + std::to_string(m) +
                                              " edges, found " + std::to_string(edges.size()));
  }
  std::vector<std::size_t> idx(edges.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t k = 1; k < idx.size(); ++k) {
    if (edges[idx[k]] == edges[idx[k - 1]]) throw ParseError(edge_line[idx[k]], "duplicate edge");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

inline SetSystem parse_setsystem(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty() || lines.front().tokens.front() != "p") {
    throw ParseError(lines.empty() ? 1 : lines.front().number, "missing 'p scp <n> <m>' header");
  }
  const auto& header = lines.front();
  if (header.tokens.size() != 4 || header.tokens[1] != "scp") {
    throw ParseError(header.number, "malformed header, expected 'p scp <n> <m>'");
  }
  std::int64_t n = detail::parse_count(header.tokens[2], header.number, "universe size");
  std::int64_t m = detail::parse_count(header.tokens[3], header.number, "set count");
  if (n < 0 || m < 0) throw ParseError(header.number, "malformed header counts");
  if (n > kMaxUniverse) {
    throw ParseError(header.number, "universe size " + std::to_string(n) + " exceeds " +
                                        std::to_string(kMaxUniverse));
  }
  std::vector<Subset> sets;
  std::vector<Rational> weights;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.front() != "s") throw ParseError(line.number, "expected 's [weight] : elements'");
    // Re-split around ':' so that "s 2:1 2" and "s 2 : 1 2" both parse.
    std::string joined;
    for (std::size_t k = 1; k < line.tokens.size(); ++k) {
      joined += line.tokens[k];
      joined += ' ';
    }
    std::size_t colon = joined.find(':');
    if (colon == std::string::npos) throw ParseError(line.number, "missing ':' in set line");
    auto weight_tokens = detail::split_tokens(std::string_view(joined).substr(0, colon));
    auto element_tokens = detail::split_tokens(std::string_view(joined).substr(colon + 1));
    Rational w = 1;
    if (weight_tokens.size() > 1) throw ParseError(line.number, "more than one weight token");
    if (weight_tokens.size() == 1) {
      auto parsed = parse_rational(weight_tokens.front());
      if (!parsed) throw ParseError(line.number, "bad weight '" + std::string(weight_tokens.front()) + "'");
      w = *parsed;
      if (w < 0) throw ParseError(line.number, "negative weight");
    }
    Subset s;
    for (auto tok : element_tokens) {
      std::int64_t e = detail::parse_count(tok, line.number, "element");
      if (e < 1 || e > n) {
        throw ParseError(line.number, "element " + std::to_string(e) + " outside universe 1.." +
                                          std::to_string(n));
      }
      s.insert(static_cast<int>(e - 1));
    }
    sets.push_back(s);
    weights.push_back(std::move(w));
  }
  if (sets.empty()) throw ParseError(header.number, "empty family");
  if (static_cast<std::int64_t>(sets.size()) != m) {
    throw ParseError(lines.back().number, "header announces " + std::to_string(m) +
                                              " sets, found " + std::to_string(sets.size()));
  }
  return SetSystem(static_cast<int>(n), std::move(sets), std::move(weights));
}

inline TspInstance parse_tsp(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty() || lines.front().tokens.front() != "p") {
    throw ParseError(lines.empty() ? 1 : lines.front().number, "missing 'p atsp <n>' header");
  }
  const auto& header = lines.front();
  if (header.tokens.size() != 3 || header.tokens[1] != "atsp") {
    throw ParseError(header.number, "malformed header, expected 'p atsp <n>'");
  }
  std::int64_t n = detail::parse_count(header.tokens[2], header.number, "city count");
  if (n < 1 || n > 4096) throw ParseError(header.number, "city count out of range");
  std::vector<Rational> w;
  w.reserve(static_cast<std::size_t>(n * n));
  std::size_t last_line = header.number;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    for (auto tok : lines[i].tokens) {
      auto q = parse_rational(tok);
      if (!q) throw ParseError(lines[i].number, "bad weight '" + std::string(tok) + "'");
      if (*q < 0) throw ParseError(lines[i].number, "negative weight");
      if (static_cast<std::int64_t>(w.size()) == n * n) throw ParseError(lines[i].number, "too many weights");
      w.push_back(std::move(*q));
    }
    last_line = lines[i].number;
  }
  if (static_cast<std::int64_t>(w.size()) != n * n) {
    throw ParseError(last_line, "expected " + std::to_string(n * n) + " weights, found " +
                                    std::to_string(w.size()));
  }
  for (std::int64_t i = 0; i < n; ++i) w[static_cast<std::size_t>(i * n + i)] = 0;
  if (auto bad = find_triangle_violation(static_cast<int>(n), w)) {
    throw ParseError(last_line, "triangle inequality violated: w(" + std::to_string(bad->x) + "," +
                                    std::to_string(bad->z) + ") > w(" + std::to_string(bad->x) +
                                    "," + std::to_string(bad->y) + ") + w(" +
                                    std::to_string(bad->y) + "," + std::to_string(bad->z) +
                                    ") for witness (x,y,z) = (" + std::to_string(bad->x) + "," +
                                    std::to_string(bad->y) + "," + std::to_string(bad->z) +
                                    ") (0-based)");
  }
  return TspInstance(static_cast<int>(n), std::move(w));
}

inline std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

inline std::string serialize(const SetSystem& s) {
  std::ostringstream out;
  out << "p scp " << s.universe_size() << ' ' << s.num_sets() << '\n';
  for (std::size_t i = 0; i < s.num_sets(); ++i) {
    out << "s " << to_string(s.weight(i)) << " :";
    for (int e : s.set(i).elements()) out << ' ' << e + 1;
    out << '\n';
  }
  return out.str();
}

inline std::string serialize(const TspInstance& t) {
  std::ostringstream out;
  const int n = t.num_cities();
  out << "p atsp " << n << '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j > 0) out << ' ';
      out << to_string(t.weight(i, j));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace expapx

#endif  // EXPAPX_IO_HPP_
