#include "catpascal/algebra.hpp"

#include "catpascal/decorated.hpp"
#include "catpascal/errors.hpp"
#include "catpascal/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

namespace catpascal {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

void trim_monomial(ScalarPoly::Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

int degree(const ScalarPoly::Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

std::string subscript(int j) {
  std::string digits = std::to_string(j), out;
  for (char c : digits) {
    out += "\xE2\x82";
    out += static_cast<char>(0x80 + (c - '0'));
  }
  return out;
}

std::string var_name(std::size_t i) {
  if (i == 0) return "δ";
  if (i == 1) return "δ′";
  return "δ" + subscript(static_cast<int>(i) - 2);
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(at(n)) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[at(x)] != x) x = up[at(x)] = up[at(up[at(x)])];
    return x;
  }
  void unite(int a, int b) { up[at(find(a))] = find(b); }
};

}  // namespace

// ---------------------------------------------------------------- ScalarPoly

ScalarPoly::ScalarPoly(long c) {
  if (c != 0) terms_[{}] = c;
}

ScalarPoly::ScalarPoly(const BigInt& c) {
  if (c != 0) terms_[{}] = c;
}

ScalarPoly ScalarPoly::var(int index, int power) {
  ScalarPoly p;
  Monomial m(at(index) + 1, 0);
  m[at(index)] = power;
  trim_monomial(m);
  p.terms_[m] = 1;
  return p;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
  for (auto& [m, c] : o.terms_) {
    auto& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
  }
  return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
  for (auto& [m, c] : o.terms_) {
    auto& slot = terms_[m];
    slot -= c;
    if (slot == 0) terms_.erase(m);
  }
  return *this;
}

ScalarPoly& ScalarPoly::operator*=(const ScalarPoly& o) {
  std::map<Monomial, BigInt> out;
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) {
      Monomial m(std::max(m1.size(), m2.size()), 0);
      for (std::size_t i = 0; i < m1.size(); ++i) m[i] += m1[i];
      for (std::size_t i = 0; i < m2.size(); ++i) m[i] += m2[i];
      auto& slot = out[m];
      slot += c1 * c2;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  terms_ = std::move(out);
  return *this;
}

Rational ScalarPoly::evaluate(const std::vector<Rational>& values) const {
  Rational total = 0;
  for (auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const Rational v = i < values.size() ? values[i] : Rational(0);
      for (int e = 0; e < m[i]; ++e) t *= v;
    }
    total += t;
  }
  total.canonicalize();
  return total;
}

std::string ScalarPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, BigInt>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    const int da = degree(a.first), db = degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string s;
  for (std::size_t t = 0; t < ts.size(); ++t) {
    auto [m, c] = ts[t];
    const bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (t == 0)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "·";
      mono += var_name(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty())
      s += mag.get_str();
    else if (mag == 1)
      s += mono;
    else
      s += mag.get_str() + "·" + mono;
  }
  return s;
}

// ---------------------------------------------------------------- Diagram

void Diagram::canonicalize() {
  std::vector<int> relabel(deco.size(), -1);
  std::vector<int> nd;
  for (auto& b : block) {
    if (relabel[at(b)] < 0) {
      relabel[at(b)] = static_cast<int>(nd.size());
      nd.push_back(deco[at(b)]);
    }
    b = relabel[at(b)];
  }
  deco = std::move(nd);
}

int Diagram::propagating() const {
  std::vector<int> seen(deco.size(), 0);
  for (int i = 0; i < top + bottom; ++i) seen[at(block[at(i)])] |= i < top ? 1 : 2;
  return static_cast<int>(std::count(seen.begin(), seen.end(), 3));
}

// ---------------------------------------------------------------- AlgebraSpec

std::string AlgebraSpec::id() const {
  switch (kind) {
    case AlgebraKind::tl: return "tl";
    case AlgebraKind::blob: return "blob";
    case AlgebraKind::partition: return "partition";
    case AlgebraKind::brauer: return "brauer";
    case AlgebraKind::dn: return "dn";
    case AlgebraKind::contour:
      return "contour:" + std::to_string(k) + "," + std::to_string(d) + (cyclotomic ? ",cyclotomic" : "");
  }
  return "";
}

int AlgebraSpec::cap() const {
  switch (kind) {
    case AlgebraKind::tl: return 10;
    case AlgebraKind::blob: return 7;
    case AlgebraKind::partition: return 4;
    case AlgebraKind::brauer: return 6;
    case AlgebraKind::dn: return 7;
    case AlgebraKind::contour: return 5;
  }
  return 0;
}

bool AlgebraSpec::planar() const {
  return kind != AlgebraKind::partition && kind != AlgebraKind::brauer;
}

AlgebraSpec parse_algebra(std::string_view text) {
  AlgebraSpec a;
  std::string t(text);
  if (t == "tl") return a;
  if (t == "blob") { a.kind = AlgebraKind::blob; a.d = 2; a.k = 1; return a; }
  if (t == "partition") { a.kind = AlgebraKind::partition; return a; }
  if (t == "brauer") { a.kind = AlgebraKind::brauer; return a; }
  if (t == "dn") { a.kind = AlgebraKind::dn; return a; }
  if (t.rfind("contour:", 0) == 0) {
    a.kind = AlgebraKind::contour;
    std::vector<std::string> parts;
    std::string cur;
    for (char c : t.substr(8)) {
      if (c == ',') { parts.push_back(cur); cur.clear(); } else cur += c;
    }
    parts.push_back(cur);
    if (parts.size() == 3 && parts[2] == "cyclotomic") {
      a.cyclotomic = true;
      parts.pop_back();
    }
    if (parts.size() != 2) throw InvalidSpec("contour algebra needs contour:k,d[,cyclotomic]");
    try {
      a.k = std::stoi(parts[0]);
      a.d = std::stoi(parts[1]);
    } catch (const std::exception&) {
      throw InvalidSpec("bad contour parameters in '" + t + "'");
    }
    if (a.k < 0 || a.d < 1) throw InvalidSpec("contour algebra needs k >= 0 and d >= 1");
    return a;
  }
  throw InvalidSpec("unknown algebra '" + t + "'");
}

// ---------------------------------------------------------------- elements

void AlgebraElement::add(const Diagram& d, const ScalarPoly& c) {
  if (c.is_zero()) return;
  auto& slot = terms[d];
  slot += c;
  if (slot.is_zero()) terms.erase(d);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (auto& [d, c] : o.terms) add(d, c);
  return *this;
}

// ---------------------------------------------------------------- words

Diagram diagram_from_word(const Word& w, int top, int bottom) {
  if (static_cast<int>(w.size()) != top + bottom) throw DomainError("word has the wrong length");
  auto p = partners(w);
  Diagram d;
  d.top = top;
  d.bottom = bottom;
  d.block.assign(w.size(), -1);
  auto point = [&](int pos) { return pos < top ? pos : top + (top + bottom - 1 - pos); };
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (p[i] < 0) throw DomainError("unmatched point in a full diagram");
    if (!w[i].open) continue;
    const int b = d.parts();
    d.deco.push_back(w[i].mark);
    d.block[at(point(static_cast<int>(i)))] = b;
    d.block[at(point(p[i]))] = b;
  }
  d.canonicalize();
  return d;
}

Word diagram_word(const Diagram& d) {
  const int size = d.top + d.bottom;
  auto pos = [&](int point) { return point < d.top ? point : d.top + (size - 1 - point); };
  std::vector<std::vector<int>> members(at(d.parts()));
  for (int i = 0; i < size; ++i) members[at(d.block[at(i)])].push_back(pos(i));
  Word w(at(size));
  for (int b = 0; b < d.parts(); ++b) {
    auto& m = members[at(b)];
    if (m.size() != 2) throw DomainError("not a pair diagram");
    std::sort(m.begin(), m.end());
    w[at(m[0])] = {true, d.deco[at(b)]};
    w[at(m[1])] = {false, 0};
  }
  if (!is_balanced(w)) throw DomainError("diagram is not planar");
  return w;
}

Diagram diagram_from_pair(const PairDiagram& p) { return diagram_from_word(p.word(), p.north, p.south); }

PairDiagram diagram_to_pair(const Diagram& d) {
  Word w = diagram_word(d);
  for (auto& s : w) s.mark = 0;
  return PairDiagram::from_word(w, d.top);
}

Diagram half_as_diagram(const HalfDiagram& h) {
  Diagram d;
  d.top = h.size();
  d.bottom = h.propagating();
  d.block.assign(at(d.top + d.bottom), -1);
  int line = 0;
  for (int i = 0; i < h.size(); ++i) {
    const int q = h.partner[at(i)];
    if (q < 0) {
      d.block[at(i)] = d.block[at(d.top + line)] = d.parts();
      d.deco.push_back(0);
      ++line;
    } else if (q > i) {
      d.block[at(i)] = d.block[at(q)] = d.parts();
      d.deco.push_back(0);
    }
  }
  d.canonicalize();
  return d;
}

namespace {

Diagram from_two_row(const TwoRowPartition& p, int n) {
  Diagram d;
  d.top = d.bottom = n;
  d.block.assign(at(2 * n), -1);
  for (auto& b : p) {
    const int id = d.parts();
    d.deco.push_back(0);
    for (auto& x : b) {
      if (x.v < 1 || x.v > n) throw DomainError("point out of range");
      auto& slot = d.block[at(x.primed ? n + x.v - 1 : x.v - 1)];
      if (slot >= 0) throw DomainError("point listed twice");
      slot = id;
    }
  }
  if (std::find(d.block.begin(), d.block.end(), -1) != d.block.end())
    throw DomainError("some points are missing");
  d.canonicalize();
  return d;
}

TwoRowPartition to_two_row(const Diagram& d) {
  TwoRowPartition p(at(d.parts()));
  for (int i = 0; i < d.top + d.bottom; ++i)
    p[at(d.block[at(i)])].push_back(i < d.top ? Pt{false, i + 1} : Pt{true, i - d.top + 1});
  return canonical(p);
}

MarkFormatter formatter(const AlgebraSpec& a) {
  if (a.kind == AlgebraKind::blob) return blob_mark_str;
  if (a.kind == AlgebraKind::dn) return dblob_mark_str;
  return {};
}

MarkParser mark_parser(const AlgebraSpec& a) {
  if (a.kind == AlgebraKind::blob) return blob_mark_parse;
  if (a.kind == AlgebraKind::dn) return dblob_mark_parse;
  return {};
}

int blob_total(const Word& w) {
  int c = 0;
  for (auto& s : w) c += s.mark;
  return c;
}

void check_basis(const AlgebraSpec& a, const Diagram& d) {
  if (!a.planar()) {
    if (a.kind == AlgebraKind::brauer)
      for (int b = 0; b < d.parts(); ++b)
        if (std::count(d.block.begin(), d.block.end(), b) != 2) throw DomainError("not a pair partition");
    return;
  }
  Word w = diagram_word(d);
  switch (a.kind) {
    case AlgebraKind::tl:
      if (blob_total(w)) throw DomainError("Temperley-Lieb diagrams carry no decorations");
      break;
    case AlgebraKind::blob:
      blob_vertex(w);
      break;
    case AlgebraKind::dn:
      dblob_vertex(w);
      if (blob_total(w) % 2) throw DomainError("odd number of blobs");
      break;
    case AlgebraKind::contour:
      if (!is_contour(w, a.k, a.d)) throw DomainError("not a contour diagram");
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<Diagram> algebra_basis(const AlgebraSpec& a, int n) {
  std::vector<Diagram> out;
  auto words = [&](const std::vector<Word>& ws) {
    for (auto& w : ws) out.push_back(diagram_from_word(w, n, n));
  };
  switch (a.kind) {
    case AlgebraKind::tl:
      for (auto& p : enum_ncpp(n)) out.push_back(diagram_from_pair(p));
      break;
    case AlgebraKind::blob: words(enum_blob(n)); break;
    case AlgebraKind::dn: words(enum_dblob(n)); break;
    case AlgebraKind::contour: words(enum_contour(n, a.k, a.d)); break;
    case AlgebraKind::partition:
      for (auto& p : enum_cp(n)) out.push_back(from_two_row(p, n));
      break;
    case AlgebraKind::brauer:
      for (auto& p : enum_cbr(n)) out.push_back(from_two_row(p, n));
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

AlgebraElement algebra_identity(const AlgebraSpec& a, int n) {
  Diagram d;
  d.top = d.bottom = n;
  for (int i = 0; i < n; ++i) d.block.push_back(i);
  for (int i = 0; i < n; ++i) d.block.push_back(i);
  d.deco.assign(at(n), 0);
  AlgebraElement e{a, n, {}};
  if (a.kind == AlgebraKind::blob && n > 0) {
    d.deco[0] = kBlob;
    e.add(d, 1);
    d.deco[0] = kSquare;
    e.add(d, 1);
  } else {
    e.add(d, 1);
  }
  return e;
}

AlgebraElement basis_element(const AlgebraSpec& a, const Diagram& d) {
  AlgebraElement e{a, d.top, {}};
  e.add(d, 1);
  return e;
}

// ---------------------------------------------------------------- multiplication

PseudoDiagram concatenate(const Diagram& a, const Diagram& b) {
  if (a.bottom != b.top) throw DomainError("diagram sizes do not match");
  const int A = a.parts(), B = b.parts();
  UnionFind uf(A + B);
  for (int j = 0; j < a.bottom; ++j) uf.unite(a.block[at(a.top + j)], A + b.block[at(j)]);
  PseudoDiagram p;
  p.shape.top = a.top;
  p.shape.bottom = b.bottom;
  std::map<int, int> part_of;  // component root -> part
  auto part = [&](int node) {
    const int r = uf.find(node);
    auto it = part_of.find(r);
    if (it != part_of.end()) return it->second;
    const int id = static_cast<int>(part_of.size());
    part_of[r] = id;
    return id;
  };
  for (int i = 0; i < a.top; ++i) p.shape.block.push_back(part(a.block[at(i)]));
  for (int j = 0; j < b.bottom; ++j) p.shape.block.push_back(part(A + b.block[at(b.top + j)]));
  const int parts = static_cast<int>(part_of.size());
  p.shape.deco.assign(at(parts), 0);
  p.part_pieces.assign(at(parts), {});
  std::map<int, int> loop_of;
  auto record = [&](int node, int deco) {
    const int r = uf.find(node);
    auto it = part_of.find(r);
    if (it != part_of.end()) {
      if (deco) p.part_pieces[at(it->second)].push_back(deco);
      return;
    }
    auto lt = loop_of.find(r);
    if (lt == loop_of.end()) {
      lt = loop_of.emplace(r, static_cast<int>(p.loops.size())).first;
      p.loops.push_back({});
    }
    if (deco) p.loops[at(lt->second)].push_back(deco);
  };
  for (int x = 0; x < A; ++x) record(x, a.deco[at(x)]);
  for (int x = 0; x < B; ++x) record(A + x, b.deco[at(x)]);
  return p;
}

namespace {

// Combined decoration of a strand made of the given pieces; nullopt if the
// strand vanishes.
std::optional<int> combine(const AlgebraSpec& a, const std::vector<int>& pieces) {
  int v = 0;
  for (int x : pieces) {
    switch (a.kind) {
      case AlgebraKind::blob:
        v |= x;
        break;
      case AlgebraKind::dn:
        v ^= x;
        break;
      case AlgebraKind::contour:
        v = a.cyclotomic ? (v + x) % a.d : std::max(v, x);
        break;
      default:
        throw InternalError("decoration in an undecorated algebra");
    }
  }
  if (a.kind == AlgebraKind::blob && v == (kBlob | kSquare)) return std::nullopt;
  return v;
}

std::optional<ScalarPoly> loop_value(const AlgebraSpec& a, int v) {
  switch (a.kind) {
    case AlgebraKind::blob:
      if (v == kBlob) return ScalarPoly::delta_prime();
      if (v == kSquare) return ScalarPoly::delta() - ScalarPoly::delta_prime();
      return ScalarPoly::delta();
    case AlgebraKind::dn:
      if (v % 2) return std::nullopt;
      return ScalarPoly::delta();
    case AlgebraKind::contour:
      return ScalarPoly::delta_j(v);
    default:
      return ScalarPoly::delta();
  }
}

}  // namespace

AlgebraElement reduce(const AlgebraSpec& a, const PseudoDiagram& p, std::mt19937* rng) {
  AlgebraElement out{a, p.shape.top, {}};
  Diagram d = p.shape;
  auto shuffled = [&](std::vector<int> v) {
    if (rng) std::shuffle(v.begin(), v.end(), *rng);
    return v;
  };
  for (std::size_t i = 0; i < p.part_pieces.size(); ++i) {
    auto v = combine(a, shuffled(p.part_pieces[i]));
    if (!v) return out;
    d.deco[i] = *v;
  }
  std::vector<std::size_t> order(p.loops.size());
  std::iota(order.begin(), order.end(), 0);
  if (rng) std::shuffle(order.begin(), order.end(), *rng);
  ScalarPoly coeff(1);
  for (auto i : order) {
    auto v = combine(a, shuffled(p.loops[i]));
    if (!v) return out;
    auto s = loop_value(a, *v);
    if (!s) return out;
    coeff *= *s;
  }
  std::vector<std::size_t> expand;
  if (a.planar() && a.kind != AlgebraKind::tl) {
    d.canonicalize();
    Word w = diagram_word(d);
    auto dep = depths(w);
    // map word position back to part via the canonical block numbering
    const int size = d.top + d.bottom;
    auto point = [&](int pos) { return pos < d.top ? pos : d.top + (size - 1 - pos); };
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!w[i].open) continue;
      const int part = d.block[at(point(static_cast<int>(i)))];
      const int level = dep[i];
      const int deco = d.deco[at(part)];
      const bool allowed = a.kind == AlgebraKind::contour ? level < a.k : level == 0;
      if (deco && !allowed) throw InternalError("decoration landed on a covered line");
      if (a.kind == AlgebraKind::blob && level == 0 && deco == 0) expand.push_back(at(part));
    }
  }
  if (expand.empty()) {
    d.canonicalize();
    out.add(d, coeff);
    return out;
  }
  for (unsigned long mask = 0; mask < (1UL << expand.size()); ++mask) {
    Diagram e = d;
    for (std::size_t i = 0; i < expand.size(); ++i) e.deco[expand[i]] = (mask >> i) & 1UL ? kSquare : kBlob;
    e.canonicalize();
    out.add(e, coeff);
  }
  return out;
}

AlgebraElement multiply(const AlgebraSpec& a, const Diagram& x, const Diagram& y) {
  if (x.top != y.top || x.bottom != y.bottom) throw DomainError("diagrams of different sizes");
  return reduce(a, concatenate(x, y));
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (!(x.algebra == y.algebra)) throw IncompatibleFamilies("elements of different algebras");
  if (x.n != y.n) throw DomainError("elements of different sizes");
  AlgebraElement out{x.algebra, x.n, {}};
  for (auto& [dx, cx] : x.terms)
    for (auto& [dy, cy] : y.terms) {
      auto prod = multiply(x.algebra, dx, dy);
      const ScalarPoly c = cx * cy;
      for (auto& [d, cd] : prod.terms) out.add(d, c * cd);
    }
  return out;
}

// ---------------------------------------------------------------- text

namespace {

Diagram tl_generator(int n, int i) {
  if (i < 1 || i >= n) throw DomainError("generator U" + std::to_string(i) + " out of range");
  Diagram d;
  d.top = d.bottom = n;
  d.block.assign(at(2 * n), -1);
  int part = 0;
  for (int j = 0; j < n; ++j) {
    if (j == i - 1) {
      d.block[at(j)] = d.block[at(j + 1)] = part++;
      d.block[at(n + j)] = d.block[at(n + j + 1)] = part++;
      ++j;
    } else {
      d.block[at(j)] = d.block[at(n + j)] = part++;
    }
  }
  d.deco.assign(at(part), 0);
  d.canonicalize();
  return d;
}

bool looks_like_generator_word(std::string_view t) {
  return !t.empty() && (t == "1" || t.front() == 'U');
}

std::vector<int> generator_indices(int n, std::string_view t) {
  std::vector<int> idx;
  std::size_t i = 0;
  while (i < t.size()) {
    const char c = t[i];
    if (c == ' ' || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (c != 'U') throw DomainError("bad generator word '" + std::string(t) + "'");
    ++i;
    std::size_t j = i;
    while (j < t.size() && t[j] >= '0' && t[j] <= '9') ++j;
    if (j == i) {
      if (n != 2) throw DomainError("bare U is only allowed when n = 2");
      idx.push_back(1);
    } else {
      idx.push_back(std::stoi(std::string(t.substr(i, j - i))));
    }
    i = j;
  }
  return idx;
}

}  // namespace

Diagram parse_diagram(const AlgebraSpec& a, int n, std::string_view text) {
  Diagram d;
  if (a.planar()) {
    Word w = parse_word(text, mark_parser(a));
    if (static_cast<int>(w.size()) != 2 * n || !is_balanced(w))
      throw DomainError("expected a balanced word on " + std::to_string(2 * n) + " points");
    d = diagram_from_word(w, n, n);
  } else {
    d = from_two_row(parse_partition(text), n);
  }
  check_basis(a, d);
  return d;
}

AlgebraElement parse_element(const AlgebraSpec& a, int n, std::string_view text) {
  if (text == "1") return algebra_identity(a, n);
  if (a.kind == AlgebraKind::tl && looks_like_generator_word(text)) {
    AlgebraElement e = algebra_identity(a, n);
    for (int i : generator_indices(n, text)) e = multiply(e, basis_element(a, tl_generator(n, i)));
    return e;
  }
  return basis_element(a, parse_diagram(a, n, text));
}

std::string format_diagram(const AlgebraSpec& a, const Diagram& d) {
  if (a.planar()) return format_word(diagram_word(d), formatter(a));
  return partition_str(to_two_row(d));
}

std::optional<std::string> tl_generator_name(const Diagram& d) {
  const int n = d.top;
  if (d.bottom != n || n > 10) return std::nullopt;
  static std::mutex lock;
  static std::map<int, std::map<Diagram, std::string>> cache;
  std::lock_guard<std::mutex> g(lock);
  auto& names = cache[n];
  if (names.empty()) {
    AlgebraSpec tl;
    auto id = algebra_identity(tl, n).terms.begin()->first;
    names[id] = "1";
    std::vector<Diagram> frontier{id};
    while (!frontier.empty()) {
      std::vector<Diagram> next;
      for (auto& x : frontier)
        for (int i = 1; i < n; ++i) {
          auto prod = multiply(tl, x, tl_generator(n, i));
          auto y = prod.terms.begin()->first;
          if (names.count(y)) continue;
          const std::string gen = n == 2 ? "U" : "U" + std::to_string(i);
          names[y] = (names[x] == "1" ? "" : names[x]) + gen;
          next.push_back(y);
        }
      frontier = std::move(next);
    }
  }
  auto it = names.find(d);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::string format_element(const AlgebraElement& x, bool generator_names) {
  if (x.terms.empty()) return "0";
  std::string s;
  for (auto& [d, c] : x.terms) {
    std::string name;
    if (generator_names && x.algebra.kind == AlgebraKind::tl)
      if (auto g = tl_generator_name(d)) name = *g;
    if (name.empty()) name = format_diagram(x.algebra, d);
    std::string cs = c.str();
    std::string term;
    if (cs == "1")
      term = name;
    else if (cs.find(' ') != std::string::npos)
      term = "(" + cs + ") * " + name;
    else
      term = cs + " * " + name;
    s += (s.empty() ? "" : " + ") + term;
  }
  return s;
}

// ---------------------------------------------------------------- dimension identity

DimensionIdentity dimension_identity(const AlgebraSpec& a, int n) {
  DimensionIdentity r;
  r.algebra = a.id();
  r.n = n;
  r.basis = algebra_basis(a, n).size();
  std::shared_ptr<const PascalFamily> f;
  int layer = n;
  switch (a.kind) {
    case AlgebraKind::tl: f = tl_family(); break;
    case AlgebraKind::blob: f = blob_family(); break;
    case AlgebraKind::dn: f = dblob_family(); break;
    case AlgebraKind::contour: f = contour_family(a.k, a.d); break;
    case AlgebraKind::partition: f = bell_family(); layer = 2 * n; break;
    case AlgebraKind::brauer: f = brauer_family(); break;
  }
  std::map<VertexLabel, std::size_t> count;
  for (auto& e : f->enumerate_layer(layer)) ++count[e.vertex];
  for (auto& [v, c] : count) {
    r.halves.push_back({v, c});
    r.sum_of_squares += BigInt(c) * BigInt(c);
  }
  return r;
}

// ---------------------------------------------------------------- standard modules

std::optional<std::pair<ScalarPoly, HalfDiagram>> standard_action(const Diagram& D,
                                                                  const HalfDiagram& h) {
  if (D.bottom != h.size() || D.top != D.bottom) throw DomainError("diagram sizes do not match");
  const Diagram hd = half_as_diagram(h);
  auto p = concatenate(D, hd);
  HalfDiagram out;
  out.partner.assign(at(D.top), -1);
  std::vector<std::vector<int>> members(at(p.shape.parts()));
  for (int i = 0; i < p.shape.top + p.shape.bottom; ++i) members[at(p.shape.block[at(i)])].push_back(i);
  for (auto& m : members) {
    if (m.size() != 2) throw InternalError("not a pair diagram");
    if (m[0] >= D.top) return std::nullopt;  // two propagating lines joined
    if (m[1] < D.top) {
      out.partner[at(m[0])] = m[1];
      out.partner[at(m[1])] = m[0];
    }
  }
  return std::make_pair(ScalarPoly::delta(static_cast<int>(p.loops.size())), out);
}

std::vector<HalfDiagram> standard_basis(int n, int l) {
  std::vector<std::pair<std::string, HalfDiagram>> tagged;
  for (auto& h : enum_tl_halves(n))
    if (h.propagating() == l) tagged.push_back({format_word(h.word()), h});
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<HalfDiagram> out;
  for (auto& t : tagged) out.push_back(t.second);
  return out;
}

namespace {

ScalarPoly pairing(const HalfDiagram& x, const HalfDiagram& y) {
  const int n = x.size();
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    if (x.partner[at(i)] > i) uf.unite(i, x.partner[at(i)]);
    if (y.partner[at(i)] > i) uf.unite(i, y.partner[at(i)]);
  }
  std::map<int, std::pair<int, int>> ends;
  for (int i = 0; i < n; ++i) {
    auto& e = ends[uf.find(i)];
    if (x.partner[at(i)] < 0) ++e.first;
    if (y.partner[at(i)] < 0) ++e.second;
  }
  int loops = 0;
  for (auto& [r, e] : ends) {
    if (e.first == 0 && e.second == 0)
      ++loops;
    else if (e.first != 1 || e.second != 1)
      return ScalarPoly(0);
  }
  return ScalarPoly::delta(loops);
}

}  // namespace

std::vector<std::vector<ScalarPoly>> gram(int n, int l) {
  if (l < 0 || l > n || (n - l) % 2) throw DomainError("no standard module with these parameters");
  auto basis = standard_basis(n, l);
  std::vector<std::vector<ScalarPoly>> m(basis.size(), std::vector<ScalarPoly>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) m[i][j] = pairing(basis[i], basis[j]);
  return m;
}

ScalarPoly determinant(const std::vector<std::vector<ScalarPoly>>& m) {
  const std::size_t k = m.size();
  if (k > 22) throw DomainError("matrix too large for exact expansion");
  std::vector<ScalarPoly> f(std::size_t{1} << k);
  f[0] = 1;
  for (std::size_t mask = 0; mask < f.size(); ++mask) {
    if (f[mask].is_zero()) continue;
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == k) continue;
    for (std::size_t c = 0; c < k; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      if (m[row][c].is_zero()) continue;
      const int above = __builtin_popcountll(mask >> (c + 1));
      ScalarPoly t = f[mask] * m[row][c];
      if (above % 2)
        f[mask | (std::size_t{1} << c)] -= t;
      else
        f[mask | (std::size_t{1} << c)] += t;
    }
  }
  return f.back();
}

ScalarPoly gram_det(int n, int l) { return determinant(gram(n, l)); }

// ---------------------------------------------------------------- simple dimensions

BigInt tl_simple_dim(int n, long lambda, int l) {
  if (l < 2 || lambda < 0) throw DomainError("need l >= 2 and lambda >= 0");
  if ((n - lambda) % 2) return 0;
  const long m = (lambda + 1) / l + 1;
  WalkConstraint c;
  c.forbidden = {VertexLabel::integer(-1)};
  c.rules = {{VertexLabel::integer(m * l - 1), VertexLabel::integer((m - 1) * l - 1)}};
  return restricted_count(a_inf_inf(), n, VertexLabel::integer(lambda), c);
}

RootedGraph rollet_simple_graph(int l) {
  if (l < 2) throw InvalidSpec("Rollet graph needs l >= 2");
  auto mult = [l](long s) {
    const long r = ((s + 1) % l) - 1;
    if (r == l - 2) return 0;
    if (r == -1) return 2;
    return 1;
  };
  return RootedGraph(
      "rollet:" + std::to_string(l), VertexLabel::integer(0),
      [mult](const VertexLabel& v) {
        const long t = v.value();
        std::vector<VertexLabel> out{VertexLabel::integer(t + 1)};
        if (t >= 1)
          for (int i = 0; i < mult(t - 1); ++i) out.push_back(VertexLabel::integer(t - 1));
        return out;
      },
      false);
}

BigInt tl_simple_dim_rollet(int n, long lambda, int l) {
  return layer_counts(rollet_simple_graph(l), n).at(n, VertexLabel::integer(lambda));
}

BigInt blob_simple_dim(int n, long lambda, long l0) {
  if (l0 >= 0) throw DomainError("l0 must be negative");
  WalkConstraint c;
  c.forbidden = {VertexLabel::integer(l0)};
  return restricted_count(a_inf_inf(), n, VertexLabel::integer(lambda), c);
}

BigInt blob_simple_dim_shifted(int n, long lambda, long l0) {
  if (l0 >= 0) throw DomainError("l0 must be negative");
  const long shifted = lambda - l0 - 1;
  if (shifted < 0) return 0;
  return layer_counts(a_inf(-l0 - 1), n).at(n, VertexLabel::integer(shifted));
}

}  // namespace catpascal
