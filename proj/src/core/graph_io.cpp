#include "algconn/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <vector>

#include "algconn/errors.hpp"

namespace algconn {
namespace {

[[noreturn]] void parse_fail(const std::string& message) {
  throw Error(ErrorCode::parse_error, message);
}

// Splits the edge-list text into integer tokens, dropping '#' comments.
std::vector<long long> integer_tokens(std::string_view text) {
  std::vector<long long> tokens;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() &&
             (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r' ||
              line[pos] == ',')) {
        ++pos;
      }
      if (pos >= line.size()) break;
      long long value = 0;
      auto [end, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
      if (ec != std::errc{}) {
        parse_fail("line " + std::to_string(line_no) + ": expected an integer");
      }
      tokens.push_back(value);
      pos = static_cast<std::size_t>(end - line.data());
    }
  }
  return tokens;
}

constexpr int kGraph6Offset = 63;

void append_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kGraph6Offset));
    }
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kGraph6Offset));
    }
  }
}

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto tokens = integer_tokens(text);
  if (tokens.size() < 2) parse_fail("missing \"n m\" header");
  const long long n = tokens[0];
  const long long m = tokens[1];
  if (n < 0 || m < 0 || n > 1'000'000) parse_fail("invalid header values");
  if (static_cast<long long>(tokens.size()) != 2 + 2 * m) {
    parse_fail("header announces " + std::to_string(m) + " edges but " +
               std::to_string((tokens.size() - 2) / 2) + " endpoint pairs follow");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const long long u = tokens[2 + 2 * i];
    const long long v = tokens[3 + 2 * i];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      parse_fail("edge " + std::to_string(i) + " has an endpoint outside 0.." +
                 std::to_string(n - 1));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const Error& e) {
    parse_fail(e.what());
  }
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (auto eol = text.find('\n'); eol != std::string_view::npos) {
    text = trim(text.substr(0, eol));
  }
  if (text.empty()) parse_fail("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) parse_fail("graph6 byte outside 63..126");
  }
  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto take = [&](int count) {
    std::uint64_t value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) parse_fail("truncated graph6 order field");
      value = (value << 6) | static_cast<std::uint64_t>(text[pos++] - kGraph6Offset);
    }
    return value;
  };
  if (text[0] != '~') {
    n = take(1);
  } else if (text.size() > 1 && text[1] != '~') {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > 1'000'000) parse_fail("graph6 order too large");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    parse_fail("graph6 body has " + std::to_string(text.size() - pos) +
               " bytes, expected " + std::to_string(bytes));
  }
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kGraph6Offset;
      if (byte & (0x20 >> (k % 6))) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const int last = text.back() - kGraph6Offset;
    if (last & ((1 << (6 - bits % 6)) - 1)) parse_fail("nonzero graph6 padding");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  append_order(out, n);
  int current = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    const auto nbrs = g.neighbors(j);
    for (Vertex i = 0; i < j; ++i) {
      current <<= 1;
      if (std::binary_search(nbrs.begin(), nbrs.end(), i)) current |= 1;
      if (++filled == 6) {
        out.push_back(static_cast<char>(current + kGraph6Offset));
        current = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((current << (6 - filled)) + kGraph6Offset));
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    if (c >= 63 || c == '>') return parse_graph6(text);
    return parse_edge_list(text);
  }
  parse_fail("empty graph input");
}

}  // namespace algconn
