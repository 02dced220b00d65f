#include "eigenframe/graphcore/graph6.hpp"

#include <string>

#include "eigenframe/error.hpp"

namespace eigenframe {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sixbits(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6 byte " + std::to_string(static_cast<int>(c)) + " outside 63..126",
                     pos);
  }
  return c - 63;
}

void put_sixbits(std::string& out, unsigned value) {
  out.push_back(static_cast<char>(63 + (value & 0x3f)));
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);
  if (text[pos] == ':' || text[pos] == ';' || text[pos] == '&') {
    throw ParseError("sparse6/digraph6 input is not graph6", pos);
  }

  std::uint64_t n = 0;
  if (text[pos] != '~') {
    n = static_cast<std::uint64_t>(sixbits(text, pos));
    pos += 1;
  } else {
    std::size_t width = 3;
    std::size_t start = pos + 1;
    if (start < text.size() && text[start] == '~') {
      width = 6;
      start += 1;
    }
    if (start + width > text.size()) throw ParseError("truncated graph6 size header", pos);
    for (std::size_t k = 0; k < width; ++k) {
      n = (n << 6) | static_cast<std::uint64_t>(sixbits(text, start + k));
    }
    const std::uint64_t low = width == 3 ? 63 : 258048;
    if (n < low) throw ParseError("non-canonical graph6 size header", pos);
    pos = start + width;
  }
  if (n > kMaxVertices) {
    throw ResourceError("graph6 input declares " + std::to_string(n) + " vertices, above the cap");
  }

  const std::uint64_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) +
                         " bytes, expected " + std::to_string(bytes),
                     text.size() - pos < bytes ? text.size() : pos + bytes);
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = sixbits(text, pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + static_cast<std::size_t>(bytes) - 1;
    const int chunk = sixbits(text, last);
    const int pad = static_cast<int>(6 - bits % 6);
    if (chunk & ((1 << pad) - 1)) throw ParseError("nonzero graph6 padding bits", last);
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    put_sixbits(out, static_cast<unsigned>(n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) put_sixbits(out, static_cast<unsigned>(n >> shift));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) put_sixbits(out, static_cast<unsigned>(n >> shift));
  }
  unsigned chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        put_sixbits(out, chunk);
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) put_sixbits(out, chunk << (6 - filled));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

}  // namespace eigenframe
