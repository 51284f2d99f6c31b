#include "kgraph/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace kgraph {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

class Parser {
 public:
  Document run(std::string_view text) {
    std::size_t line_no = 0;
    while (!text.empty()) {
      ++line_no;
      const auto nl = text.find('\n');
      const std::string_view line = text.substr(0, nl);
      text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
      line_ = line_no;
      statement(tokenize(line));
    }
    if (k_ == 0) {
      line_ = 1;
      fail(ErrorCode::SyntaxError, 1, "missing 'k' declaration");
    }
    Skeleton skeleton(k_, std::move(vertices_), std::move(edges_));
    return {std::move(skeleton), std::move(squares_)};
  }

 private:
  [[noreturn]] void fail(ErrorCode code, std::size_t column, const std::string& what) const {
    throw Error(code, "line " + std::to_string(line_) + ", column " + std::to_string(column) + ": " + what);
  }

  void arity(const std::vector<Token>& t, std::size_t n) const {
    if (t.size() < n) fail(ErrorCode::SyntaxError, t.front().column, "'" + std::string(t.front().text) +
                                                                         "' expects " + std::to_string(n - 1) +
                                                                         " arguments");
    if (t.size() > n) fail(ErrorCode::SyntaxError, t[n].column, "unexpected token '" + std::string(t[n].text) + "'");
  }

  std::uint32_t natural(const Token& t) const {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
      fail(ErrorCode::SyntaxError, t.column, "expected a natural number, got '" + std::string(t.text) + "'");
    return value;
  }

  VertexId vertex(const Token& t) const {
    auto it = vertex_index_.find(std::string(t.text));
    if (it == vertex_index_.end()) fail(ErrorCode::UnknownVertex, t.column, "unknown vertex '" + std::string(t.text) + "'");
    return it->second;
  }

  EdgeId edge(const Token& t) const {
    auto it = edge_index_.find(std::string(t.text));
    if (it == edge_index_.end()) fail(ErrorCode::UnknownEdgeId, t.column, "unknown edge '" + std::string(t.text) + "'");
    return it->second;
  }

  void statement(const std::vector<Token>& t) {
    if (t.empty()) return;
    const std::string_view head = t[0].text;
    if (head == "k") {
      arity(t, 2);
      if (k_ != 0) fail(ErrorCode::SyntaxError, t[0].column, "'k' declared twice");
      k_ = natural(t[1]);
      if (k_ == 0) fail(ErrorCode::SyntaxError, t[1].column, "k must be positive");
      return;
    }
    if (k_ == 0) fail(ErrorCode::SyntaxError, t[0].column, "'k' must be declared first");
    if (head == "vertex") {
      arity(t, 2);
      if (!squares_.empty() || !edges_.empty())
        fail(ErrorCode::SyntaxError, t[0].column, "vertices must precede edges and squares");
      if (!vertex_index_.emplace(std::string(t[1].text), static_cast<VertexId>(vertices_.size())).second)
        fail(ErrorCode::SyntaxError, t[1].column, "duplicate vertex '" + std::string(t[1].text) + "'");
      vertices_.emplace_back(t[1].text);
    } else if (head == "edge") {
      arity(t, 5);
      if (!squares_.empty()) fail(ErrorCode::SyntaxError, t[0].column, "edges must precede squares");
      const std::uint32_t colour = natural(t[2]);
      if (colour < 1 || colour > k_)
        fail(ErrorCode::ColourOutOfRange, t[2].column,
             "colour " + std::to_string(colour) + " outside 1.." + std::to_string(k_));
      const VertexId source = vertex(t[3]);
      const VertexId range = vertex(t[4]);
      if (!edge_index_.emplace(std::string(t[1].text), static_cast<EdgeId>(edges_.size())).second)
        fail(ErrorCode::SyntaxError, t[1].column, "duplicate edge '" + std::string(t[1].text) + "'");
      edges_.push_back({std::string(t[1].text), colour, source, range});
    } else if (head == "square") {
      arity(t, 5);
      squares_.push_back({edge(t[1]), edge(t[2]), edge(t[3]), edge(t[4])});
    } else {
      fail(ErrorCode::SyntaxError, t[0].column, "unknown directive '" + std::string(head) + "'");
    }
  }

  std::size_t line_ = 0;
  std::uint32_t k_ = 0;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  SquareTable squares_;
  std::map<std::string, VertexId> vertex_index_;
  std::map<std::string, EdgeId> edge_index_;
};

}  // namespace

Document parse(std::string_view text) { return Parser().run(text); }

Document parse_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string serialise(const Skeleton& skeleton, const SquareTable& squares) {
  std::string out = "k " + std::to_string(skeleton.k()) + "\n";
  auto names = skeleton.vertex_names();
  std::sort(names.begin(), names.end());
  for (const auto& v : names) out += "vertex " + v + "\n";

  auto edges = skeleton.edges();
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (const auto& e : edges)
    out += "edge " + e.id + " " + std::to_string(e.colour) + " " + skeleton.vertex_name(e.source) + " " +
           skeleton.vertex_name(e.range) + "\n";

  std::vector<std::array<std::string, 4>> rows;
  for (const Square& s : squares)
    rows.push_back({skeleton.edge(s.outer_lo).id, skeleton.edge(s.inner_lo).id, skeleton.edge(s.outer_hi).id,
                    skeleton.edge(s.inner_hi).id});
  std::sort(rows.begin(), rows.end());
  for (const auto& r : rows) out += "square " + r[0] + " " + r[1] + " " + r[2] + " " + r[3] + "\n";
  return out;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::pair<const char*, const char*> edge_style(Colour c) {
  static constexpr std::array<const char*, 4> styles{"solid", "dashed", "dotted", "bold"};
  static constexpr std::array<const char*, 5> colours{"black", "red", "blue", "darkgreen", "orange"};
  return {styles[(c - 1) % styles.size()], colours[(c - 1) % colours.size()]};
}

}  // namespace

std::string export_dot(const KGraph& g) {
  const Skeleton& sk = g.skeleton();
  std::string out = "digraph kgraph {\n";
  auto names = sk.vertex_names();
  std::sort(names.begin(), names.end());
  for (const auto& v : names) out += "  " + quoted(v) + ";\n";
  auto edges = sk.edges();
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (const auto& e : edges) {
    const auto [style, colour] = edge_style(e.colour);
    out += "  " + quoted(sk.vertex_name(e.source)) + " -> " + quoted(sk.vertex_name(e.range)) + " [label=" +
           quoted(e.id) + ", style=" + style + ", color=" + colour + "];\n";
  }
  return out + "}\n";
}

}  // namespace kgraph
