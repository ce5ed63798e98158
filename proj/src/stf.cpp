#include "shadow/stf.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace shadow {

ParseError::ParseError(Kind kind, int line, int column, const std::string& message)
    : std::runtime_error(std::string(kind == Kind::Syntax ? "syntax error" : "semantic error") +
                         " at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
                         message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[k]))) {
      ++k;
      continue;
    }
    if (line[k] == '#') break;
    std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k])) && line[k] != '#') ++k;
    out.push_back({line.substr(start, k - start), static_cast<int>(start) + 1});
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line) : tokens_(std::move(tokens)), line_(line) {}

  [[noreturn]] void syntax(const Token& t, const std::string& msg) const {
    throw ParseError(ParseError::Kind::Syntax, line_, t.column, msg + " near '" + std::string(t.text) + "'");
  }
  [[noreturn]] void semantic(const Token& t, const std::string& msg) const {
    throw ParseError(ParseError::Kind::Semantic, line_, t.column, msg);
  }

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }

  Token take(const char* what) {
    if (done()) {
      Token end{"", tokens_.empty() ? 1 : tokens_.back().column + static_cast<int>(tokens_.back().text.size())};
      tokens_.push_back(end);
      syntax(tokens_.back(), std::string("expected ") + what);
    }
    return tokens_[pos_++];
  }

  void keyword(const char* word) {
    const Token& t = take(word);
    if (t.text != word) syntax(t, std::string("expected '") + word + "'");
  }

  Token identifier_token(const char* what) {
    Token t = take(what);
    if (!is_identifier(t.text)) syntax(t, std::string("expected ") + what);
    return t;
  }
  std::string identifier(const char* what) { return std::string(identifier_token(what).text); }

  void finish() {
    if (!done()) syntax(peek(), "unexpected trailing token");
  }

  int line() const { return line_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_;
};

int digit_in(char c, int hi) {
  if (c < '0' || c > '9') return -1;
  int d = c - '0';
  return d <= hi ? d : -1;
}

// "(a,b,c)" with each digit in 0..hi.
std::array<int, 3> parse_triple(LineParser& lp, const Token& t, std::string_view body, int hi) {
  if (body.size() != 7 || body[0] != '(' || body[2] != ',' || body[4] != ',' || body[6] != ')')
    lp.syntax(t, "expected (a,b,c)");
  std::array<int, 3> out{};
  for (int k = 0; k < 3; ++k) {
    out[k] = digit_in(body[1 + 2 * k], hi);
    if (out[k] < 0) lp.syntax(t, "index out of range 0.." + std::to_string(hi));
  }
  return out;
}

class DocumentBuilder {
 public:
  ShadowDocument doc;
  bool have_header = false;

  void line(LineParser& lp) {
    const Token& head = lp.take("declaration");
    if (head.text == "shadow") {
      if (have_header) lp.semantic(head, "second shadow header");
      doc.name = lp.identifier("shadow name");
      have_header = true;
    } else {
      if (!have_header) lp.syntax(head, "document must start with 'shadow <name>'");
      if (head.text == "vertex") vertex(lp);
      else if (head.text == "edge") edge(lp);
      else if (head.text == "circle") circle(lp);
      else if (head.text == "region") region(lp);
      else lp.syntax(head, "unknown declaration");
    }
    lp.finish();
  }

 private:
  std::map<std::string, std::pair<char, int>> ids_;
  std::map<std::pair<int, int>, bool> claimed_;

  void declare(LineParser& lp, const Token& at, const std::string& id, char kind, int index) {
    if (!ids_.emplace(id, std::make_pair(kind, index)).second) lp.semantic(at, "duplicate identifier '" + id + "'");
  }

  void vertex(LineParser& lp) {
    Token t = lp.identifier_token("vertex id");
    std::string id(t.text);
    declare(lp, t, id, 'v', static_cast<int>(doc.data.vertices.size()));
    doc.data.vertices.push_back({id});
  }

  Attachment attachment(LineParser& lp) {
    const Token& t = lp.take("<vertex>.<half-edge>");
    auto dot = t.text.rfind('.');
    if (dot == std::string_view::npos || dot + 2 != t.text.size()) lp.syntax(t, "expected <vertex>.<half-edge>");
    std::string_view vid = t.text.substr(0, dot);
    if (!is_identifier(vid)) lp.syntax(t, "expected vertex identifier");
    int h = digit_in(t.text[dot + 1], 3);
    if (h < 0) lp.syntax(t, "half-edge index out of range 0..3");
    auto it = ids_.find(std::string(vid));
    if (it == ids_.end() || it->second.first != 'v') lp.semantic(t, "unknown vertex '" + std::string(vid) + "'");
    Attachment a;
    a.vertex = it->second.second;
    a.half_edge = h;
    if (claimed_[{a.vertex, h}]) lp.semantic(t, "half-edge " + std::string(t.text) + " claimed twice");
    claimed_[{a.vertex, h}] = true;
    const Token& w = lp.take("wing map");
    a.wings = parse_triple(lp, w, w.text, 3);
    return a;
  }

  void edge(LineParser& lp) {
    Token t = lp.identifier_token("edge id");
    Edge e;
    e.id = std::string(t.text);
    declare(lp, t, e.id, 'e', static_cast<int>(doc.data.edges.size()));
    e.ends[0] = attachment(lp);
    e.ends[1] = attachment(lp);
    doc.data.edges.push_back(std::move(e));
  }

  void circle(LineParser& lp) {
    Token t = lp.identifier_token("circle id");
    Circle c;
    c.id = std::string(t.text);
    declare(lp, t, c.id, 'c', static_cast<int>(doc.data.circles.size()));
    const Token& m = lp.take("perm(a,b,c)");
    if (m.text.substr(0, 4) != "perm") lp.syntax(m, "expected perm(a,b,c)");
    c.monodromy = parse_triple(lp, m, m.text.substr(4), 2);
    doc.data.circles.push_back(c);
  }

  ArcState seed(LineParser& lp, const Token& t) {
    std::string_view s = t.text;
    if (s.size() < 4 || (s.back() != '+' && s.back() != '-')) lp.syntax(t, "expected seed <arc>.<slot>[+|-]");
    const int dir = s.back() == '+' ? 1 : -1;
    s.remove_suffix(1);
    auto dot = s.rfind('.');
    if (dot == std::string_view::npos || dot + 2 != s.size()) lp.syntax(t, "expected seed <arc>.<slot>[+|-]");
    std::string_view aid = s.substr(0, dot);
    if (!is_identifier(aid)) lp.syntax(t, "expected edge or circle identifier");
    const int slot = digit_in(s[dot + 1], 2);
    if (slot < 0) lp.syntax(t, "slot index out of range 0..2");
    auto it = ids_.find(std::string(aid));
    if (it == ids_.end() || (it->second.first != 'e' && it->second.first != 'c'))
      lp.semantic(t, "unknown edge or circle '" + std::string(aid) + "'");
    return {it->second.first == 'e' ? ArcKind::Edge : ArcKind::Circle, it->second.second, slot, dir};
  }

  void region(LineParser& lp) {
    Token t = lp.identifier_token("region id");
    Region r;
    r.id = std::string(t.text);
    declare(lp, t, r.id, 'r', static_cast<int>(doc.data.regions.size()));
    lp.keyword("genus");
    const Token& g = lp.take("genus");
    if (g.text.empty() || g.text.size() > 6 || (g.text.size() > 1 && g.text[0] == '0')) lp.syntax(g, "expected genus");
    r.genus = 0;
    for (char c : g.text) {
      if (c < '0' || c > '9') lp.syntax(g, "expected genus");
      r.genus = r.genus * 10 + (c - '0');
    }
    lp.keyword("orientable");
    const Token& o = lp.take("yes|no");
    if (o.text == "yes") r.orientable = true;
    else if (o.text == "no") r.orientable = false;
    else lp.syntax(o, "expected yes or no");
    lp.keyword("gleam");
    const Token& gl = lp.take("gleam literal");
    auto value = HalfInt::parse(gl.text);
    if (!value) lp.syntax(gl, "bad gleam literal");
    lp.keyword("boundary");
    while (!lp.done()) r.boundary.push_back(seed(lp, lp.take("seed")));
    doc.data.regions.push_back(std::move(r));
    doc.gleams.push_back(*value);
  }
};

}  // namespace

ShadowDocument parse_stf(std::string_view text) {
  DocumentBuilder builder;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto tokens = tokenize(text.substr(start, end - start));
    if (!tokens.empty()) {
      LineParser lp(std::move(tokens), line_no);
      builder.line(lp);
    }
    start = end + 1;
  }
  if (!builder.have_header) throw ParseError(ParseError::Kind::Syntax, line_no, 1, "missing 'shadow <name>' header");
  return std::move(builder.doc);
}

namespace {
std::string triple(const std::array<int, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}
}  // namespace

std::string serialize_stf(const ShadowDocument& doc) {
  const PolyhedronData& d = doc.data;
  std::ostringstream out;
  out << "shadow " << doc.name << "\n";
  for (const auto& v : d.vertices) out << "vertex " << v.id << "\n";
  for (const auto& e : d.edges) {
    out << "edge " << e.id;
    for (const auto& a : e.ends)
      out << " " << d.vertices[a.vertex].id << "." << a.half_edge << " " << triple(a.wings);
    out << "\n";
  }
  for (const auto& c : d.circles) out << "circle " << c.id << " perm" << triple(c.monodromy) << "\n";
  for (std::size_t r = 0; r < d.regions.size(); ++r) {
    const Region& reg = d.regions[r];
    out << "region " << reg.id << " genus " << reg.genus << " orientable " << (reg.orientable ? "yes" : "no")
        << " gleam " << doc.gleams[r].str() << " boundary";
    for (const auto& s : reg.boundary) {
      out << " " << (s.kind == ArcKind::Edge ? d.edges[s.index].id : d.circles[s.index].id) << "." << s.slot
          << (s.dir > 0 ? "+" : "-");
    }
    out << "\n";
  }
  return out.str();
}

Shadow load_shadow(std::string_view text) {
  ShadowDocument doc = parse_stf(text);
  Shadow s{Polyhedron(std::move(doc.data)), std::move(doc.gleams), doc.name};
  ValidationReport parity = check_parity(s.poly, s.gleams);
  if (!parity.ok()) throw std::runtime_error("gleam parity violation: " + parity.str());
  return s;
}

Shadow read_shadow_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_shadow(buf.str());
}

ShadowDocument to_document(const Shadow& s) { return {s.name, s.poly.data(), s.gleams}; }

std::string serialize_stf(const Shadow& s) { return serialize_stf(to_document(s)); }

}  // namespace shadow
