#include "catpascal/decorated.hpp"

#include "catpascal/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace catpascal {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// Every way of choosing, at each position, one of the listed marks.
void decorate(const Word& base, const std::vector<std::vector<int>>& allowed,
              const std::function<void(const Word&)>& emit) {
  Word w = base;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == w.size()) {
      emit(w);
      return;
    }
    for (int m : allowed[i]) {
      w[i].mark = m;
      go(i + 1);
    }
    w[i].mark = 0;
  };
  go(0);
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}


}  // namespace

// ---------------------------------------------------------------- blob

std::string blob_mark_str(int m) {
  if (m == kBlob) return "•";
  if (m == kSquare) return "□";
  throw DomainError("bad blob mark " + std::to_string(m));
}

int blob_mark_parse(std::string_view tok) {
  if (tok == "•" || tok == "*") return kBlob;
  if (tok == "□" || tok == "#") return kSquare;
  throw DomainError("bad blob mark '" + std::string(tok) + "'");
}

long blob_vertex(const Word& h) {
  if (!is_standard(h)) throw DomainError("blob word is not standard");
  auto d = depths(h);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!h[i].open) continue;
    const bool exposed = d[i] == 0;
    if (exposed && h[i].mark != kBlob && h[i].mark != kSquare)
      throw DomainError("exposed arc without blob or square");
    if (!exposed && h[i].mark != 0) throw DomainError("decoration on a covered arc");
  }
  auto u = unmatched_positions(h);
  if (u.empty()) return 0;
  const long l = static_cast<long>(u.size());
  return h[at(u.front())].mark == kBlob ? l : -l;
}

Word blob_edge(long from, long to, const Word& h) {
  if (std::labs(from - to) != 1) throw DomainError("not an edge of A_inf^inf");
  if (blob_vertex(h) != from) throw DomainError("element does not lie over the source vertex");
  Word r = h;
  const bool outward = std::labs(to) > std::labs(from);
  if (from == 0)
    r.push_back({true, to > 0 ? kBlob : kSquare});
  else
    r.push_back({outward, 0});
  return r;
}

std::vector<Word> enum_blob_halves(int n) {
  std::vector<Word> out;
  for (auto& h : enum_tl_halves(n)) {
    Word w = h.word();
    auto d = depths(w);
    std::vector<std::vector<int>> allowed;
    for (std::size_t i = 0; i < w.size(); ++i)
      allowed.push_back(w[i].open && d[i] == 0 ? std::vector<int>{kBlob, kSquare}
                                               : std::vector<int>{0});
    decorate(w, allowed, [&](const Word& x) { out.push_back(x); });
  }
  return out;
}

std::vector<Word> enum_blob(int n) {
  std::vector<Word> out;
  for (auto& dgm : enum_ncpp(n)) {
    Word w = dgm.word();
    auto d = depths(w);
    std::vector<std::vector<int>> allowed;
    for (std::size_t i = 0; i < w.size(); ++i)
      allowed.push_back(w[i].open && d[i] == 0 ? std::vector<int>{kBlob, kSquare}
                                               : std::vector<int>{0});
    decorate(w, allowed, [&](const Word& x) { out.push_back(x); });
  }
  return out;
}

std::pair<Word, Word> blob_cut(const Word& d) { return split_word(d); }

Word blob_join(const Word& north, const Word& south) {
  return join_words(north, south, [](int a, int b) {
    if (a != b) throw DomainError("propagating line decorated differently on the two halves");
    return a;
  });
}

// ---------------------------------------------------------------- lambda brackets

std::string type_mark_str(int m) { return std::to_string(m + 1); }

int type_mark_parse(std::string_view tok) {
  int t = std::stoi(std::string(tok));
  if (t < 1) throw DomainError("bracket types start at 1");
  return t - 1;
}

namespace {

void check_types(const std::vector<int>& lambda, const Word& h) {
  if (!is_standard(h)) throw DomainError("bracket word is not standard");
  auto d = depths(h);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!h[i].open) continue;
    const int choices = lambda_at(lambda, static_cast<std::size_t>(d[i]) + 1);
    if (h[i].mark < 0 || h[i].mark >= choices)
      throw DomainError("bracket type out of range at depth " + std::to_string(d[i]));
  }
}

std::vector<std::vector<int>> type_choices(const std::vector<int>& lambda, const Word& w) {
  auto d = depths(w);
  std::vector<std::vector<int>> allowed;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<int> c;
    if (w[i].open)
      for (int t = 0; t < lambda_at(lambda, static_cast<std::size_t>(d[i]) + 1); ++t) c.push_back(t);
    else
      c.push_back(0);
    allowed.push_back(std::move(c));
  }
  return allowed;
}

}  // namespace

VertexLabel lambda_vertex(const std::vector<int>& lambda, const Word& h) {
  check_types(lambda, h);
  std::vector<int> seq;
  for (int p : unmatched_positions(h)) seq.push_back(h[at(p)].mark + 1);
  return VertexLabel::sequence(seq);
}

Word lambda_bracket_edge(const VertexLabel& from, const VertexLabel& to, const Word& h) {
  Word r = h;
  if (to.size() == from.size() + 1) {
    r.push_back({true, to.data().back() - 1});
  } else if (to.size() + 1 == from.size()) {
    if (r.empty() || unmatched(r) == 0) throw DomainError("close bracket with nothing open");
    r.push_back({false, 0});
  } else {
    throw DomainError("not an edge of the tree");
  }
  return r;
}

std::vector<Word> enum_lambda_brackets(const std::vector<int>& lambda, int n) {
  std::vector<Word> out;
  for (auto& w : standard_words(n))
    decorate(w, type_choices(lambda, w), [&](const Word& x) { out.push_back(x); });
  return out;
}

std::vector<Word> enum_lambda_bracket_full(const std::vector<int>& lambda, int pairs) {
  std::vector<Word> out;
  for (auto& w : balanced_words(pairs))
    decorate(w, type_choices(lambda, w), [&](const Word& x) { out.push_back(x); });
  return out;
}

std::pair<Word, Word> lambda_bracket_decompose(const Word& s) {
  if (!is_balanced(s)) throw DomainError("not a matched bracket sequence");
  return split_word(s);
}

Word lambda_bracket_compose(const Word& left, const Word& right) {
  return join_words(left, right, [](int a, int b) {
    if (a != b) throw DomainError("unmatched bracket types differ");
    return a;
  });
}

std::string render_lambda_brackets(const std::vector<int>& lambda, const Word& w) {
  static const char* opens[] = {"(", "[", "{", "<"};
  static const char* closes[] = {")", "]", "}", ">"};
  auto p = partners(w);
  auto d = depths(w);
  std::vector<int> glyph(w.size(), 0);
  std::vector<int> stack;
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].open) {
      int g;
      if (lambda_at(lambda, static_cast<std::size_t>(d[i]) + 1) == 1 && !stack.empty())
        g = glyph[at(stack.back())];
      else
        g = w[i].mark;
      glyph[i] = g;
      stack.push_back(static_cast<int>(i));
      s += g < 4 ? opens[g] : "(" + std::to_string(g + 1);
    } else {
      int g = glyph[at(p[i])];
      stack.pop_back();
      s += g < 4 ? closes[g] : ")";
    }
  }
  return s;
}

// ---------------------------------------------------------------- contour

std::vector<int> contour_lambda(int k, int d) {
  if (k < 0 || d < 1) throw InvalidSpec("contour diagrams need k >= 0 and d >= 1");
  std::vector<int> lambda(static_cast<std::size_t>(k), d);
  lambda.push_back(1);
  return lambda;
}

std::vector<int> cover_levels(const Word& w) { return depths(w); }

bool is_contour(const Word& w, int k, int d) {
  if (!is_standard(w)) return false;
  auto lev = cover_levels(w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].open) {
      if (w[i].mark != 0) return false;
      continue;
    }
    const int limit = lev[i] < k ? d - 1 : 0;
    if (w[i].mark < 0 || w[i].mark > limit) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<int>> blob_count_choices(const Word& w, int k, int d) {
  auto lev = cover_levels(w);
  std::vector<std::vector<int>> allowed;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<int> c{0};
    if (w[i].open && lev[i] < k)
      for (int b = 1; b < d; ++b) c.push_back(b);
    allowed.push_back(std::move(c));
  }
  return allowed;
}

}  // namespace

std::vector<Word> enum_contour_halves(int n, int k, int d) {
  std::vector<Word> out;
  for (auto& h : enum_tl_halves(n)) {
    Word w = h.word();
    decorate(w, blob_count_choices(w, k, d), [&](const Word& x) { out.push_back(x); });
  }
  return out;
}

std::vector<Word> enum_contour(int n, int k, int d) {
  std::vector<Word> out;
  for (auto& dgm : enum_ncpp(n)) {
    Word w = dgm.word();
    decorate(w, blob_count_choices(w, k, d), [&](const Word& x) { out.push_back(x); });
  }
  return out;
}

Word contour_edge(const VertexLabel& from, const VertexLabel& to, const Word& h) {
  Word r = h;
  if (to.size() == from.size() + 1) {
    r.push_back({true, to.data().back() - 1});  // d_{j+1} - 1 blobs on the new line
  } else if (to.size() + 1 == from.size()) {
    if (unmatched(r) == 0) throw DomainError("no propagating line to bend");
    r.push_back({false, 0});  // bend the rightmost line, keeping its blobs
  } else {
    throw DomainError("not an edge of the tree");
  }
  return r;
}

std::pair<Word, Word> contour_cut(const Word& d) { return split_word(d); }

Word contour_stitch(const Word& north, const Word& south) {
  return join_words(north, south, [](int a, int b) {
    if (a != b) throw DomainError("cut line carries different blob counts");
    return a;
  });
}

// ---------------------------------------------------------------- D-type blobs

std::string dblob_mark_str(int m) {
  if (m == 1) return "b";
  throw DomainError("bad D-type mark " + std::to_string(m));
}

int dblob_mark_parse(std::string_view tok) {
  if (tok == "b") return 1;
  throw DomainError("bad D-type mark '" + std::string(tok) + "'");
}

VertexLabel dblob_vertex(const Word& h) {
  if (!is_standard(h)) throw DomainError("D-type word is not standard");
  auto d = depths(h);
  int blobs = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!h[i].open) continue;
    if (h[i].mark != 0 && (d[i] != 0 || h[i].mark != 1))
      throw DomainError("blob on a covered arc");
    blobs += h[i].mark;
  }
  const int l = unmatched(h);
  if (l == 0) return blobs % 2 ? VertexLabel::primed(0) : VertexLabel::integer(0);
  if (blobs % 2) throw DomainError("half-diagram with lines and an odd number of blobs");
  return VertexLabel::integer(l);
}

Word dblob_edge(const VertexLabel& from, const VertexLabel& to, const Word& h) {
  if (dblob_vertex(h) != from) throw DomainError("element does not lie over the source vertex");
  Word r = h;
  if (from.marked()) {
    if (to != VertexLabel::integer(1)) throw DomainError("not an edge of D_inf");
    r.push_back({true, 1});
    return r;
  }
  if (to.marked()) {
    if (from != VertexLabel::integer(1)) throw DomainError("not an edge of D_inf");
    auto u = unmatched_positions(r);
    auto& line = r[at(u.back())];
    line.mark ^= 1;  // a second blob cancels the first
    r.push_back({false, 0});
    return r;
  }
  if (std::labs(to.value() - from.value()) != 1) throw DomainError("not an edge of D_inf");
  r.push_back({to.value() > from.value(), 0});
  return r;
}

namespace {

std::vector<std::vector<int>> exposed_choices(const Word& w) {
  auto d = depths(w);
  std::vector<std::vector<int>> allowed;
  for (std::size_t i = 0; i < w.size(); ++i)
    allowed.push_back(w[i].open && d[i] == 0 ? std::vector<int>{0, 1} : std::vector<int>{0});
  return allowed;
}

int blob_count(const Word& w) {
  int c = 0;
  for (auto& s : w) c += s.mark;
  return c;
}

}  // namespace

std::vector<Word> enum_dblob_halves(int n) {
  std::vector<Word> out;
  for (auto& h : enum_tl_halves(n)) {
    Word w = h.word();
    const bool lines = h.propagating() > 0;
    decorate(w, exposed_choices(w), [&](const Word& x) {
      if (!lines || blob_count(x) % 2 == 0) out.push_back(x);
    });
  }
  return out;
}

std::vector<Word> enum_dblob(int n) {
  std::vector<Word> out;
  for (auto& dgm : enum_ncpp(n)) {
    Word w = dgm.word();
    decorate(w, exposed_choices(w), [&](const Word& x) {
      if (blob_count(x) % 2 == 0) out.push_back(x);
    });
  }
  return out;
}

std::pair<Word, Word> dblob_cut(const Word& d) {
  if (!is_balanced(d) || blob_count(d) % 2) throw DomainError("not a D-type diagram");
  auto [a, b] = split_word(d);
  for (Word* h : {&a, &b}) {
    auto u = unmatched_positions(*h);
    if (u.empty()) continue;
    auto& line = (*h)[at(u.front())];
    line.mark = 0;
    line.mark = blob_count(*h) % 2;
  }
  return {a, b};
}

Word dblob_join(const Word& north, const Word& south) {
  bool first = true;
  return join_words(north, south, [&](int a, int b) {
    int m = first ? (a ^ b) : 0;
    if (!first && (a || b)) throw DomainError("blob on a covered line");
    first = false;
    return m;
  });
}

// ---------------------------------------------------------------- coloured trees

namespace {

int layer_colours(const std::vector<int>& lambda, int layer) {
  return lambda_at(lambda, static_cast<std::size_t>(layer));
}

void colour_forest(const std::vector<int>& lambda, std::vector<PlanarTree>& forest, int layer,
                   const std::function<void()>& done);

// Colours every node of forest[i..] (and their descendants), then calls done.
void colour_from(const std::vector<int>& lambda, std::vector<PlanarTree>& forest, std::size_t i,
                 int layer, const std::function<void()>& done) {
  if (i == forest.size()) {
    done();
    return;
  }
  for (int c = 0; c < layer_colours(lambda, layer); ++c) {
    forest[i].colour = c;
    colour_forest(lambda, forest[i].children, layer + 1,
                  [&] { colour_from(lambda, forest, i + 1, layer, done); });
  }
}

void colour_forest(const std::vector<int>& lambda, std::vector<PlanarTree>& forest, int layer,
                   const std::function<void()>& done) {
  colour_from(lambda, forest, 0, layer, done);
}

}  // namespace

std::vector<HalfTree> enum_coloured_half_trees(const std::vector<int>& lambda, int n) {
  std::vector<HalfTree> out;
  for (auto h : enum_half_trees(n)) {
    const int l = h.trunk();
    // trunk vertex i sits in layer i; branches of trunk vertex i start in layer i+1
    std::function<void(int)> trunk = [&](int i) {
      if (i > l) {
        std::function<void(int)> branch = [&](int j) {
          if (j > l) {
            out.push_back(h);
            return;
          }
          colour_forest(lambda, h.branches[at(j)], j + 1, [&] { branch(j + 1); });
        };
        branch(0);
        return;
      }
      for (int c = 0; c < layer_colours(lambda, i); ++c) {
        h.colours[at(i - 1)] = c;
        trunk(i + 1);
      }
    };
    trunk(1);
  }
  return out;
}

std::vector<PlanarTree> enum_coloured_trees(const std::vector<int>& lambda, int edges) {
  std::vector<PlanarTree> out;
  for (auto t : enum_planar_trees(edges))
    colour_forest(lambda, t.children, 1, [&] { out.push_back(t); });
  return out;
}

HalfTree coloured_tree_edge(const VertexLabel& from, const VertexLabel& to, const HalfTree& h) {
  if (to.size() == from.size() + 1) return halftree_edge(TreeEdge::plus, h, to.data().back() - 1);
  if (to.size() + 1 == from.size()) return halftree_edge(TreeEdge::minus, h);
  throw DomainError("not an edge of the tree");
}

Word coloured_tree_bijection(const HalfTree& h) { return halftree_encode(h); }

// ---------------------------------------------------------------- families

namespace {

struct WordSpec {
  std::string id;
  RootedGraph graph;
  int cap;
  MarkFormatter fmt;
  MarkParser parse;
  std::function<VertexLabel(const Word&)> vertex;
  std::function<std::vector<Word>(int)> layer;
  std::function<Word(const VertexLabel&, const VertexLabel&, const Word&)> step;
  std::function<std::string(const Word&)> render;
};

class WordFamily : public PascalFamily {
 public:
  explicit WordFamily(WordSpec s) : s_(std::move(s)) {}

  std::string id() const override { return s_.id; }
  const RootedGraph& graph() const override { return s_.graph; }
  int cap() const override { return s_.cap; }
  Element origin() const override { return Element{s_.id, 0, s_.graph.root(), ""}; }

  std::vector<Element> enumerate_layer(int n) const override {
    std::vector<Element> out;
    for (auto& w : s_.layer(n)) out.push_back(wrap(w));
    return out;
  }

  Element edge_map(const VertexLabel& source, int key, const Element& x) const override {
    Word w = parse(x.payload);
    if (s_.vertex(w) != source) throw DomainError("element does not lie over the source vertex");
    return wrap(s_.step(source, s_.graph.target(source, key), w));
  }

  std::pair<int, VertexLabel> classify(const std::string& payload) const override {
    Word w = parse(payload);
    return {static_cast<int>(w.size()), s_.vertex(w)};
  }

  std::string render(const Element& x) const override {
    Word w = parse(x.payload);
    return s_.render ? s_.render(w) : render_arcs(w, s_.fmt);
  }

  Word parse(const std::string& p) const { return parse_word(p, s_.parse); }
  std::string format(const Word& w) const { return format_word(w, s_.fmt); }
  Element wrap(const Word& w) const {
    return Element{s_.id, static_cast<int>(w.size()), s_.vertex(w), format(w)};
  }

 private:
  WordSpec s_;
};

struct SeqSpec {
  std::shared_ptr<const WordFamily> family;
  int cap;
  std::function<std::vector<Word>(int)> members;
  std::function<std::pair<Word, Word>(const Word&)> cut;
  std::function<Word(const Word&, const Word&)> join;
  std::function<std::string(const Word&)> render;
};

class WordSequence : public CatalanSequence {
 public:
  explicit WordSequence(SeqSpec s) : s_(std::move(s)) {}
  std::string id() const override { return s_.family->id(); }
  const PascalFamily& bra() const override { return *s_.family; }
  const PascalFamily& ket() const override { return *s_.family; }
  int cap() const override { return s_.cap; }
  std::vector<std::string> members(int n) const override {
    std::vector<std::string> out;
    for (auto& w : s_.members(n)) out.push_back(s_.family->format(w));
    return out;
  }
  std::pair<Element, Element> decompose(int n, const std::string& m) const override {
    Word w = s_.family->parse(m);
    if (static_cast<int>(w.size()) != 2 * n) throw DomainError("member has the wrong size");
    auto [a, b] = s_.cut(w);
    return {s_.family->wrap(a), s_.family->wrap(b)};
  }
  std::string compose(int, const Element& bra, const Element& ket) const override {
    return s_.family->format(s_.join(s_.family->parse(bra.payload), s_.family->parse(ket.payload)));
  }
  std::string render(int, const std::string& m) const override {
    Word w = s_.family->parse(m);
    return s_.render ? s_.render(w) : render_arcs(w);
  }

 private:
  SeqSpec s_;
};

template <class Key, class Value>
class Cache {
 public:
  template <class Make>
  std::shared_ptr<const Value> get(const Key& k, Make make) {
    std::lock_guard<std::mutex> g(lock_);
    auto it = map_.find(k);
    if (it != map_.end()) return it->second;
    auto v = make();
    map_.emplace(k, v);
    return v;
  }

 private:
  std::mutex lock_;
  std::map<Key, std::shared_ptr<const Value>> map_;
};

std::shared_ptr<const WordFamily> blob_word_family() {
  static const auto f = std::make_shared<const WordFamily>(WordSpec{
      "blob", a_inf_inf(), 12, blob_mark_str, blob_mark_parse,
      [](const Word& w) { return VertexLabel::integer(blob_vertex(w)); }, enum_blob_halves,
      [](const VertexLabel& a, const VertexLabel& b, const Word& w) {
        return blob_edge(a.value(), b.value(), w);
      },
      {}});
  return f;
}

std::shared_ptr<const WordFamily> dblob_word_family() {
  static const auto f = std::make_shared<const WordFamily>(WordSpec{
      "dblob", d_inf(), 12, dblob_mark_str, dblob_mark_parse, dblob_vertex, enum_dblob_halves,
      dblob_edge, {}});
  return f;
}

std::shared_ptr<const WordFamily> lambda_word_family(const std::vector<int>& lambda_in) {
  static Cache<std::vector<int>, WordFamily> cache;
  auto lambda = normalize_lambda(lambda_in);
  return cache.get(lambda, [&] {
    return std::make_shared<const WordFamily>(WordSpec{
        "lbrackets:" + join_ints(lambda), a_tree(lambda), 10, type_mark_str, type_mark_parse,
        [lambda](const Word& w) { return lambda_vertex(lambda, w); },
        [lambda](int n) { return enum_lambda_brackets(lambda, n); }, lambda_bracket_edge,
        [lambda](const Word& w) { return render_lambda_brackets(lambda, w) + "\n"; }});
  });
}

std::shared_ptr<const WordFamily> contour_word_family(int k, int d) {
  static Cache<std::pair<int, int>, WordFamily> cache;
  auto lambda = contour_lambda(k, d);
  return cache.get({k, d}, [&] {
    return std::make_shared<const WordFamily>(WordSpec{
        "contour:" + std::to_string(k) + "," + std::to_string(d), a_tree(lambda), 8, {}, {},
        [k, d](const Word& w) {
          if (!is_contour(w, k, d)) throw DomainError("not a contour half-diagram");
          std::vector<int> seq;
          for (int p : unmatched_positions(w)) seq.push_back(w[at(p)].mark + 1);
          return VertexLabel::sequence(seq);
        },
        [k, d](int n) { return enum_contour_halves(n, k, d); }, contour_edge, {}});
  });
}

std::shared_ptr<const WordFamily> coloured_word_family(const std::vector<int>& lambda_in) {
  static Cache<std::vector<int>, WordFamily> cache;
  auto lambda = normalize_lambda(lambda_in);
  return cache.get(lambda, [&] {
    return std::make_shared<const WordFamily>(WordSpec{
        "ctrees:" + join_ints(lambda), a_tree(lambda), 10, type_mark_str, type_mark_parse,
        [lambda](const Word& w) { return lambda_vertex(lambda, w); },
        [lambda](int n) {
          std::vector<Word> out;
          for (auto& h : enum_coloured_half_trees(lambda, n)) out.push_back(coloured_tree_bijection(h));
          return out;
        },
        [](const VertexLabel& a, const VertexLabel& b, const Word& w) {
          return coloured_tree_bijection(coloured_tree_edge(a, b, halftree_decode(w)));
        },
        {}});
  });
}

}  // namespace

std::shared_ptr<const PascalFamily> blob_family() { return blob_word_family(); }
std::shared_ptr<const PascalFamily> dblob_family() { return dblob_word_family(); }
std::shared_ptr<const PascalFamily> lambda_bracket_family(const std::vector<int>& lambda) {
  return lambda_word_family(lambda);
}
std::shared_ptr<const PascalFamily> contour_family(int k, int d) { return contour_word_family(k, d); }
std::shared_ptr<const PascalFamily> coloured_tree_family(const std::vector<int>& lambda) {
  return coloured_word_family(lambda);
}

std::shared_ptr<const CatalanSequence> blob_sequence() {
  static const auto s = std::make_shared<const WordSequence>(
      SeqSpec{blob_word_family(), 7, enum_blob, blob_cut, blob_join,
              [](const Word& w) { return render_arcs(w, blob_mark_str); }});
  return s;
}

std::shared_ptr<const CatalanSequence> dblob_sequence() {
  static const auto s = std::make_shared<const WordSequence>(
      SeqSpec{dblob_word_family(), 7, enum_dblob, dblob_cut, dblob_join,
              [](const Word& w) { return render_arcs(w, dblob_mark_str); }});
  return s;
}

std::shared_ptr<const CatalanSequence> lambda_bracket_sequence(const std::vector<int>& lambda_in) {
  static Cache<std::vector<int>, CatalanSequence> cache;
  auto lambda = normalize_lambda(lambda_in);
  return cache.get(lambda, [&] {
    return std::make_shared<const WordSequence>(SeqSpec{
        lambda_word_family(lambda), 6, [lambda](int n) { return enum_lambda_bracket_full(lambda, n); },
        lambda_bracket_decompose, lambda_bracket_compose,
        [lambda](const Word& w) { return render_lambda_brackets(lambda, w); }});
  });
}

std::shared_ptr<const CatalanSequence> contour_sequence(int k, int d) {
  static Cache<std::pair<int, int>, CatalanSequence> cache;
  return cache.get({k, d}, [&] {
    return std::make_shared<const WordSequence>(
        SeqSpec{contour_word_family(k, d), 6, [k, d](int n) { return enum_contour(n, k, d); },
                contour_cut, contour_stitch, {}});
  });
}

std::shared_ptr<const CatalanSequence> coloured_tree_sequence(const std::vector<int>& lambda_in) {
  static Cache<std::vector<int>, CatalanSequence> cache;
  auto lambda = normalize_lambda(lambda_in);
  return cache.get(lambda, [&] {
    return std::make_shared<const WordSequence>(SeqSpec{
        coloured_word_family(lambda), 6,
        [lambda](int n) {
          std::vector<Word> out;
          for (auto& t : enum_coloured_trees(lambda, n)) out.push_back(tree_encode(t));
          return out;
        },
        [](const Word& w) {
          auto [r, l] = tree_cut(tree_decode(w));
          return std::make_pair(halftree_encode(r), halftree_encode(l));
        },
        [](const Word& a, const Word& b) {
          return tree_encode(tree_splice(halftree_decode(a), halftree_decode(b)));
        },
        [lambda](const Word& w) { return render_lambda_brackets(lambda, w); }});
  });
}

}  // namespace catpascal
