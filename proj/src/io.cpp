#include "monopath/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace monopath {

namespace {

struct LineReader {
  std::istringstream in;
  int line_no = 0;

  explicit LineReader(const std::string& text) : in(text) {}

  // Next non-blank line, or false at end of input.
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  }
};

std::vector<long> parse_ints(LineReader& r, const std::string& line, std::size_t expected) {
  std::istringstream ls(line);
  std::vector<long> vals;
  std::string tok;
  while (ls >> tok) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      r.fail("expected integer, got '" + tok + "'");
    }
    if (used != tok.size()) r.fail("expected integer, got '" + tok + "'");
    vals.push_back(v);
  }
  if (vals.size() != expected) r.fail("expected " + std::to_string(expected) + " fields");
  return vals;
}

int parse_header(LineReader& r, const std::string& keyword, std::size_t fields, std::vector<long>& out) {
  std::string line;
  if (!r.next(line)) r.fail("missing '" + keyword + "' header");
  std::istringstream ls(line);
  std::string kw;
  ls >> kw;
  if (kw != keyword) r.fail("expected '" + keyword + "' header");
  std::string rest;
  std::getline(ls, rest);
  out = parse_ints(r, rest, fields);
  if (out[0] < 1 || out[0] > 1 << 16) r.fail("vertex count out of range");
  return static_cast<int>(out[0]);
}

// Reads one line per unordered pair; returns the digraph and, when
// `with_colour`, the colour of each edge keyed by u*n+v.
Digraph read_pairs(LineReader& r, int n, bool with_colour, int k, std::vector<int>& colours) {
  Digraph d(n);
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  colours.assign(static_cast<std::size_t>(n) * n, -1);
  std::string line;
  for (std::size_t i = 0; i < pairs; ++i) {
    if (!r.next(line)) r.fail("expected " + std::to_string(pairs) + " edge lines, got " + std::to_string(i));
    auto vals = parse_ints(r, line, with_colour ? 3 : 2);
    long u = vals[0], v = vals[1];
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) r.fail("invalid edge");
    if (d.has_edge(u, v) || d.has_edge(v, u)) r.fail("duplicate pair");
    d.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (with_colour) {
      if (vals[2] < 0 || vals[2] >= k) r.fail("colour out of range");
      colours[static_cast<std::size_t>(u) * n + v] = static_cast<int>(vals[2]);
    }
  }
  if (r.next(line)) r.fail("trailing content");
  return d;
}

}  // namespace

std::string render_tournament(const Tournament& t) {
  std::ostringstream out;
  out << "tournament " << t.order() << '\n';
  for (Vertex u = 0; u < t.order(); ++u)
    for (Vertex v = u + 1; v < t.order(); ++v) {
      if (t.beats(u, v))
        out << u << ' ' << v << '\n';
      else
        out << v << ' ' << u << '\n';
    }
  return out.str();
}

Tournament parse_tournament(const std::string& text) {
  LineReader r(text);
  std::vector<long> header;
  const int n = parse_header(r, "tournament", 1, header);
  std::vector<int> unused;
  return Tournament(read_pairs(r, n, false, 0, unused));
}

std::string render_colouring(const EdgeColouring& col) {
  std::ostringstream out;
  const Tournament& t = col.tournament();
  out << "colouring " << t.order() << ' ' << col.colours() << '\n';
  for (Vertex u = 0; u < t.order(); ++u)
    for (Vertex v = u + 1; v < t.order(); ++v) {
      Vertex a = t.beats(u, v) ? u : v;
      Vertex b = a == u ? v : u;
      out << a << ' ' << b << ' ' << col.colour(a, b) << '\n';
    }
  return out.str();
}

EdgeColouring parse_colouring(const std::string& text) {
  LineReader r(text);
  std::vector<long> header;
  const int n = parse_header(r, "colouring", 2, header);
  if (header[1] < 2 || header[1] > 127) r.fail("colour count out of range");
  const int k = static_cast<int>(header[1]);
  std::vector<int> colours;
  Digraph d = read_pairs(r, n, true, k, colours);
  EdgeColouring col(Tournament(std::move(d)), k);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (colours[static_cast<std::size_t>(u) * n + v] >= 0) col.set(u, v, colours[static_cast<std::size_t>(u) * n + v]);
  return col;
}

EdgeColouring parse_colouring(const std::string& text, const Tournament& t) {
  EdgeColouring col = parse_colouring(text);
  if (!(col.tournament() == t)) throw ParseError("colouring orientation does not match the tournament");
  return col;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace monopath
