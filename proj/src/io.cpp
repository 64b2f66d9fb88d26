#include "tambara/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "tambara/error.hpp"

namespace tambara {

namespace {

struct Token {
  std::string text;
  int line;
};

class Tokens {
 public:
  explicit Tokens(std::string_view text) {
    int line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (c == '\n') {
        ++line;
        ++i;
      } else if (c == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else {
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '#') ++j;
        toks_.push_back({std::string(text.substr(i, j - i)), line});
        i = j;
      }
    }
    last_line_ = line;
  }

  bool done() const { return pos_ >= toks_.size(); }
  int line() const { return done() ? last_line_ : toks_[pos_].line; }
  const std::string& peek(std::size_t ahead = 0) const {
    static const std::string none;
    return pos_ + ahead < toks_.size() ? toks_[pos_ + ahead].text : none;
  }
  std::string next(const char* what) {
    if (done()) throw ParseError(line(), std::string("unexpected end of input, expected ") + what);
    return toks_[pos_++].text;
  }
  void expect(const std::string& word) {
    const int ln = line();
    auto t = next(word.c_str());
    if (t != word) throw ParseError(ln, "expected '" + word + "', found '" + t + "'");
  }
  int integer(const char* what) {
    const int ln = line();
    auto t = next(what);
    int v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) throw ParseError(ln, std::string("expected ") + what + ", found '" + t + "'");
    return v;
  }
  void finish() {
    if (!done()) throw ParseError(line(), "unexpected trailing '" + peek() + "'");
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int last_line_ = 1;
};

bool is_int(const std::string& s) {
  if (s.empty()) return false;
  int v;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && p == s.data() + s.size();
}

std::vector<int> int_list(const std::string& text, int line) {
  std::string s = text;
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!is_int(item)) throw ParseError(line, "bad element list '" + text + "'");
    out.push_back(std::stoi(item));
  }
  return out;
}

std::string strip_parens(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
    if (depth == 0 && i + 1 < s.size()) return s;
  }
  return s.substr(1, s.size() - 2);
}

int positive(const std::string& s, const std::string& ref) {
  if (!is_int(s) || std::stoi(s) < 1) throw ParseError(1, "bad group reference '" + ref + "'");
  return std::stoi(s);
}

class RefCache {
 public:
  GroupPtr get(const std::string& ref) {
    auto it = cache_.find(ref);
    if (it != cache_.end()) return it->second;
    return cache_[ref] = parse_group_ref(ref);
  }

 private:
  std::map<std::string, GroupPtr> cache_;
};

GSet read_gset(Tokens& t, RefCache& refs) {
  t.expect("gset");
  const int ln = t.line();
  auto g = refs.get(t.next("group reference"));
  const int n = t.integer("point count");
  if (n < 0) throw ParseError(ln, "negative point count");
  auto gen_line = [&] {
    const auto& a = t.peek();
    if (a.size() > 1 && a.back() == ':' && is_int(a.substr(0, a.size() - 1))) return true;
    return is_int(a) && t.peek(1) == ":";
  };
  try {
    if (gen_line()) {
      std::vector<std::pair<int, std::vector<int>>> gens;
      while (!t.done() && gen_line()) {
        const int gl = t.line();
        auto head = t.next("element");
        if (head.back() == ':') head.pop_back();
        else t.expect(":");
        const int elem = std::stoi(head);
        if (elem < 0 || elem >= g->order()) throw ParseError(gl, "element " + head + " out of range");
        std::vector<int> perm(n);
        for (auto& p : perm) p = t.integer("point index");
        gens.emplace_back(elem, std::move(perm));
      }
      return GSet::from_generators(g, n, gens);
    }
    std::vector<int> act(static_cast<std::size_t>(g->order()) * n);
    for (auto& a : act) a = t.integer("point index");
    return GSet(g, n, std::move(act));
  } catch (const ValidationError& e) {
    throw ParseError(ln, e.what());
  }
}

GMap read_gmap(Tokens& t, const std::map<std::string, const GSet*>& sets, const std::string& src,
               const std::string& tgt) {
  const int ln = t.line();
  t.expect("gmap");
  auto s = t.next("source name");
  auto d = t.next("target name");
  if (s != src || d != tgt) throw ParseError(ln, "expected 'gmap " + src + " " + tgt + "'");
  const GSet& a = *sets.at(s);
  std::vector<int> fn(a.size());
  for (auto& v : fn) v = t.integer("image index");
  try {
    return GMap(a, *sets.at(d), std::move(fn));
  } catch (const ValidationError& e) {
    throw ParseError(ln, e.what());
  }
}

std::vector<int> generators_of(const FiniteGroup& g) {
  std::vector<int> gens;
  Subgroup span = g.trivial();
  for (int a = 0; a < g.order(); ++a) {
    if (span.contains(a)) continue;
    gens.push_back(a);
    span = g.generated_by(gens);
  }
  return gens;
}

}  // namespace

GroupPtr parse_group(std::string_view text, std::string name) {
  Tokens t(text);
  t.expect("group");
  const int n = t.integer("group order");
  if (n < 1) throw ParseError(1, "group order must be positive");
  if (n > kMaxGroupOrder) throw ResourceError("group order " + std::to_string(n) + " exceeds " + std::to_string(kMaxGroupOrder));
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (auto& row : rows)
    for (auto& v : row) v = t.integer("table entry");
  t.finish();
  return FiniteGroup::from_table(rows, std::move(name));
}

std::string write_group(const FiniteGroup& g) {
  std::ostringstream os;
  os << "group " << g.order() << "\n";
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) os << (b ? " " : "") << g.mul(a, b);
    os << "\n";
  }
  return os.str();
}

GroupPtr parse_group_ref(const std::string& raw) {
  const std::string ref = strip_parens(raw);
  if (ref == "klein4") return klein4();
  if (ref.rfind("cyclic:", 0) == 0) return cyclic(positive(ref.substr(7), ref));
  if (ref.rfind("sym:", 0) == 0) return symmetric(positive(ref.substr(4), ref));
  if (ref.rfind("sub:", 0) == 0) {
    auto at = ref.find('@');
    if (at == std::string::npos) throw ParseError(1, "sub: reference needs '@<group>'");
    auto parent = parse_group_ref(ref.substr(at + 1));
    auto elems = int_list(ref.substr(4, at - 4), 1);
    for (int e : elems)
      if (e < 0 || e >= parent->order()) throw ParseError(1, "element " + std::to_string(e) + " out of range");
    Subgroup h = parent->generated_by(elems);
    if (h.order() != static_cast<int>(elems.size())) throw ParseError(1, "sub: elements do not form a subgroup");
    return parent->embed(h).group;
  }
  if (ref.rfind("product:", 0) == 0) {
    const std::string body = ref.substr(8);
    int depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      depth += body[i] == '(' ? 1 : body[i] == ')' ? -1 : 0;
      if (depth != 0 || body[i] != 'x' || i == 0) continue;
      try {
        return direct_product(parse_group_ref(body.substr(0, i)), parse_group_ref(body.substr(i + 1)));
      } catch (const ParseError&) {
      }
    }
    throw ParseError(1, "bad product reference '" + ref + "'");
  }
  if (std::filesystem::is_regular_file(ref)) return parse_group(read_file(ref), ref);
  throw ParseError(1, "unknown group reference '" + ref + "'");
}

Subgroup parse_subgroup(const GroupPtr& g, const std::string& text) {
  if (text == "e") return g->trivial();
  if (text == "G") return g->whole();
  if (text.size() > 1 && text[0] == 'C' && is_int(text.substr(1))) {
    const int n = std::stoi(text.substr(1));
    for (auto s : g->lattice().subgroups) {
      if (s.order() != n) continue;
      for (int a : s.elements())
        if (g->element_order(a) == n) return s;
    }
    throw ParseError(1, "no cyclic subgroup of order " + text.substr(1));
  }
  auto elems = int_list(text, 1);
  for (int e : elems)
    if (e < 0 || e >= g->order()) throw ParseError(1, "element " + std::to_string(e) + " out of range");
  return g->generated_by(elems);
}

std::string format_subgroup(const FiniteGroup&, Subgroup h) {
  std::ostringstream os;
  auto el = h.elements();
  for (std::size_t i = 0; i < el.size(); ++i) os << (i ? "," : "") << el[i];
  return os.str();
}

GSet parse_gset(std::string_view text) {
  Tokens t(text);
  RefCache refs;
  auto x = read_gset(t, refs);
  t.finish();
  return x;
}

std::string write_gset(const GSet& x) {
  std::ostringstream os;
  const auto& g = *x.group();
  os << "gset " << g.name() << " " << x.size() << "\n";
  if (x.size() == 0) return os.str();
  for (int a : generators_of(g)) {
    os << a << " :";
    for (int p = 0; p < x.size(); ++p) os << " " << x.act(a, p);
    os << "\n";
  }
  return os.str();
}

Bispan parse_bispan(std::string_view text) {
  Tokens t(text);
  RefCache refs;
  t.expect("bispan");
  GSet x = read_gset(t, refs);
  GSet s = read_gset(t, refs);
  GSet tt = read_gset(t, refs);
  GSet y = read_gset(t, refs);
  std::map<std::string, const GSet*> sets{{"X", &x}, {"S", &s}, {"T", &tt}, {"Y", &y}};
  const int ln = t.line();
  GMap f = read_gmap(t, sets, "S", "X");
  GMap g = read_gmap(t, sets, "S", "T");
  GMap h = read_gmap(t, sets, "T", "Y");
  t.finish();
  try {
    return Bispan(std::move(f), std::move(g), std::move(h));
  } catch (const ShapeError& e) {
    throw ParseError(ln, e.what());
  }
}

std::string write_bispan(const Bispan& b) {
  std::ostringstream os;
  os << "bispan\n" << write_gset(b.source()) << write_gset(b.s()) << write_gset(b.t()) << write_gset(b.target());
  auto map = [&](const char* a, const char* c, const GMap& m) {
    os << "gmap " << a << " " << c << "\n";
    for (int i = 0; i < m.source.size(); ++i) os << (i ? " " : "") << m(i);
    if (m.source.size()) os << "\n";
  };
  map("S", "X", b.f);
  map("S", "T", b.g);
  map("T", "Y", b.h);
  return os.str();
}

IndexingSystem parse_indexing(std::string_view text, bool check) {
  Tokens t(text);
  t.expect("indexing");
  auto g = parse_group_ref(t.next("group reference"));
  const auto& lat = g->lattice();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < lat.size(); ++i) pairs.emplace_back(i, i);
  while (!t.done()) {
    const int ln = t.line();
    t.expect("adm");
    auto read = [&](const char* what) {
      const std::string tok(t.next(what));
      if (tok == "e" || tok == "G" || tok[0] == 'C') {
        try {
          return parse_subgroup(g, tok);
        } catch (const ParseError& e) {
          const std::string msg = e.what();
          throw ParseError(ln, msg.substr(msg.find(": ") + 2));
        }
      }
      auto el = int_list(tok, ln);
      auto s = g->generated_by(el);
      if (s.order() != static_cast<int>(el.size())) throw ParseError(ln, "element list is not a subgroup");
      return s;
    };
    auto hs = read("H"), ks = read("K");
    if (!ks.is_subset_of(hs)) throw ParseError(ln, "K is not contained in H");
    pairs.emplace_back(lat.index_of(hs), lat.index_of(ks));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  IndexingSystem sys(g, pairs);
  if (!check) return sys;
  auto rep = validate(sys);
  if (!rep.ok) throw ValidationError("indexing system fails the " + rep.axiom + " axiom: " + rep.witness);
  return sys;
}

std::string write_indexing(const IndexingSystem& sys) { return sys.describe(); }

GRing parse_ring(std::string_view text, const GroupPtr& g) {
  Tokens t(text);
  t.expect("ring");
  const int n = t.integer("ring order");
  if (n < 1) throw ParseError(1, "ring order must be positive");
  if (n > kMaxRingOrder) throw ResourceError("ring order " + std::to_string(n) + " exceeds " + std::to_string(kMaxRingOrder));
  std::vector<int> add(n * n), mul(n * n);
  for (auto& v : add) v = t.integer("addition entry");
  for (auto& v : mul) v = t.integer("multiplication entry");
  std::vector<std::vector<int>> action(g->order(), std::vector<int>(n));
  for (auto& row : action)
    for (auto& v : row) v = t.integer("automorphism entry");
  t.finish();
  return GRing(g, n, std::move(add), std::move(mul), std::move(action), "ring:" + std::to_string(n));
}

std::string write_ring(const GRing& r) {
  std::ostringstream os;
  const int n = r.size();
  os << "ring " << n << "\n";
  for (const auto* table : {&r.add_table(), &r.mul_table()})
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) os << (b ? " " : "") << (*table)[a * n + b];
      os << "\n";
    }
  for (const auto& row : r.action()) {
    for (int a = 0; a < n; ++a) os << (a ? " " : "") << row[a];
    os << "\n";
  }
  return os.str();
}

Value parse_value(std::string_view text) {
  std::string s(text);
  for (auto& c : s)
    if (c == ',' || c == '(' || c == ')') c = ' ';
  std::istringstream is(s);
  Value v;
  std::string tok;
  while (is >> tok) {
    long long x = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw ParseError(1, "bad coordinate '" + tok + "'");
    v.c.push_back(x);
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace tambara
