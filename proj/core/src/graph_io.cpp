#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cyclestab/error.hpp"
#include "cyclestab/graph.hpp"

namespace cyclestab {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

// Splits a line into exactly two non-negative decimal integers.
bool parse_pair(std::string_view line, long long& a, long long& b) {
  std::size_t pos = 0;
  auto next = [&](long long& out) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) return false;
    const char* first = line.data() + pos;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr == first || out < 0) return false;
    pos = static_cast<std::size_t>(ptr - line.data());
    return pos == line.size() || line[pos] == ' ' || line[pos] == '\t';
  };
  if (!next(a) || !next(b)) return false;
  while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  return pos == line.size();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    long long a = 0, b = 0;
    if (!parse_pair(line, a, b)) {
      throw ParseError(line_no, have_header ? "expected `u v`" : "expected header `n m`");
    }
    if (!have_header) {
      if (a > kMaxOrder) throw ParseError(line_no, "order exceeds 2^24");
      n = a;
      m = b;
      have_header = true;
      edges.reserve(static_cast<std::size_t>(std::min<long long>(m, 1 << 26)));
    } else {
      if (static_cast<long long>(edges.size()) >= m) {
        throw ParseError(line_no, "more than " + std::to_string(m) + " edge lines");
      }
      if (a >= n || b >= n) {
        throw ParseError(line_no, "vertex id >= n = " + std::to_string(n));
      }
      if (a == b) throw ParseError(line_no, "self-loop at " + std::to_string(a));
      edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
      edge_line.push_back(line_no);
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing header `n m`");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  // Duplicates are reported at the earliest line that repeats an edge.
  std::vector<std::size_t> idx(edges.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto key = [&](std::size_t i) {
    return std::minmax(edges[i].u, edges[i].v);
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return std::pair(key(x), x) < std::pair(key(y), y);
  });
  std::size_t dup_line = 0;
  Edge dup{};
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (key(idx[i]) == key(idx[i - 1])) {
      const std::size_t line = edge_line[idx[i]];
      if (dup_line == 0 || line < dup_line) {
        dup_line = line;
        dup = {key(idx[i]).first, key(idx[i]).second};
      }
    }
  }
  if (dup_line != 0) {
    throw ParseError(dup_line,
                     "duplicate edge " + std::to_string(dup.u) + " " + std::to_string(dup.v));
  }
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out;
  out.reserve(16 + g.size() * 12);
  out += std::to_string(g.order());
  out += ' ';
  out += std::to_string(g.size());
  out += '\n';
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError(0, "graph6: byte outside [63, 126]");
  }
  std::size_t pos = 0;
  auto take = [&]() -> long long {
    if (pos >= text.size()) throw ParseError(0, "graph6: truncated");
    return text[pos++] - 63;
  };
  long long n = take();
  if (n == 63) {
    int width = 3;
    if (pos < text.size() && text[pos] - 63 == 63) {
      ++pos;
      width = 6;
    }
    n = 0;
    for (int i = 0; i < width; ++i) n = (n << 6) | take();
  }
  if (n > kMaxOrder) throw ParseError(0, "graph6: order exceeds 2^24");
  const long long pairs = n * (n - 1) / 2;
  const long long bytes = (pairs + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != bytes) {
    throw ParseError(0, "graph6: expected " + std::to_string(bytes) + " edge bytes");
  }
  std::vector<Edge> edges;
  long long bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + static_cast<std::size_t>(bit / 6)] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

Graph parse_graph(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) throw ParseError(1, "empty input");
  const char c = t.front();
  if ((c >= '0' && c <= '9') || c == '#') return parse_edge_list(text);
  return parse_graph6(t);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << serialize_edge_list(g);
}

}  // namespace cyclestab
