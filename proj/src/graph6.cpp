#include "spexkm/graph6.hpp"

#include <algorithm>
#include <cstdint>

#include "spexkm/errors.hpp"

namespace spexkm {

namespace {

constexpr int kBias = 63;

void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > 126) throw ParseError("graph6: byte outside the printable range 63..126", pos);
  return c - kBias;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  put_size(out, static_cast<std::uint64_t>(n));
  int acc = 0;
  int filled = 0;
  // upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input", 0);

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::uint64_t>(sextet(text, 0));
    pos = 1;
  } else if (text.size() > 1 && text[1] == 126) {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, i));
    pos = 8;
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, i));
    pos = 4;
  }
  if (n > static_cast<std::uint64_t>(kMaxVertices))
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds capacity", 0);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  // a stray byte is a better diagnosis than the length mismatch it causes
  for (std::size_t i = pos; i < text.size(); ++i) sextet(text, i);
  if (text.size() != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) + " bytes, got " + std::to_string(text.size()),
                     std::min(text.size(), expected));

  Graph g(static_cast<int>(n));
  std::size_t bit = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int chunk = sextet(text, pos + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int last = sextet(text, pos + bit / 6);
    if ((last & ((1 << (6 - bit % 6)) - 1)) != 0) throw ParseError("graph6: nonzero padding bits", pos + bit / 6);
  }
  return g;
}

}  // namespace spexkm
