#include "catpascal/typea.hpp"

#include "catpascal/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace catpascal {

// ---------------------------------------------------------------- diagrams

int PairDiagram::propagating() const {
  int c = 0;
  for (int i = 0; i < north; ++i)
    if (partner[static_cast<std::size_t>(i)] >= north) ++c;
  return c;
}

Word PairDiagram::word() const {
  Word w;
  for (int i = 0; i < size(); ++i) w.push_back({partner[static_cast<std::size_t>(i)] > i, 0});
  return w;
}

PairDiagram PairDiagram::from_word(const Word& w, int north) {
  if (!is_balanced(w)) throw DomainError("diagram word is not balanced");
  PairDiagram d;
  d.north = north;
  d.south = static_cast<int>(w.size()) - north;
  d.partner = partners(w);
  return d;
}

int HalfDiagram::propagating() const {
  return static_cast<int>(std::count(partner.begin(), partner.end(), -1));
}

Word HalfDiagram::word() const {
  Word w;
  for (int i = 0; i < size(); ++i) {
    int p = partner[static_cast<std::size_t>(i)];
    w.push_back({p < 0 || p > i, 0});
  }
  return w;
}

HalfDiagram HalfDiagram::from_word(const Word& w) {
  if (!is_standard(w)) throw DomainError("half-diagram word is not standard");
  return HalfDiagram{partners(w)};
}

namespace {

using Matching = std::vector<int>;

// Noncrossing perfect matchings of m points, indices relative to 0.
const std::vector<Matching>& perfect(int m) {
  static std::deque<std::vector<Matching>> memo;
  static std::mutex lock;
  std::lock_guard<std::mutex> g(lock);
  if (memo.empty()) memo.push_back({Matching{}});
  while (static_cast<int>(memo.size()) <= m) {
    const int k = static_cast<int>(memo.size());
    std::vector<Matching> out;
    if (k % 2 == 0) {
      for (int j = 1; j < k; j += 2)
        for (auto& inner : memo[static_cast<std::size_t>(j - 1)])
          for (auto& rest : memo[static_cast<std::size_t>(k - j - 1)]) {
            Matching p(static_cast<std::size_t>(k));
            p[0] = j;
            p[static_cast<std::size_t>(j)] = 0;
            for (std::size_t i = 0; i < inner.size(); ++i) p[i + 1] = inner[i] + 1;
            for (std::size_t i = 0; i < rest.size(); ++i)
              p[static_cast<std::size_t>(j) + 1 + i] = rest[i] + j + 1;
            out.push_back(std::move(p));
          }
    }
    memo.push_back(std::move(out));
  }
  return memo[static_cast<std::size_t>(m)];
}

}  // namespace

std::vector<PairDiagram> enum_ncpp(int n) {
  std::vector<PairDiagram> out;
  for (auto& p : perfect(2 * n)) out.push_back(PairDiagram{n, n, p});
  return out;
}

std::vector<HalfDiagram> enum_tl_halves(int n) {
  // A half-diagram is a sequence of blocks, each a propagating point or an
  // arc enclosing a perfect matching.
  std::vector<std::vector<Matching>> halves(static_cast<std::size_t>(n) + 1);
  halves[0].push_back({});
  for (int k = 1; k <= n; ++k) {
    auto& out = halves[static_cast<std::size_t>(k)];
    for (auto& rest : halves[static_cast<std::size_t>(k - 1)]) {
      Matching p{-1};
      for (int x : rest) p.push_back(x < 0 ? -1 : x + 1);
      out.push_back(std::move(p));
    }
    for (int span = 2; span <= k; span += 2)
      for (auto& inner : perfect(span - 2))
        for (auto& rest : halves[static_cast<std::size_t>(k - span)]) {
          Matching p(static_cast<std::size_t>(span));
          p[0] = span - 1;
          p[static_cast<std::size_t>(span - 1)] = 0;
          for (std::size_t i = 0; i < inner.size(); ++i) p[i + 1] = inner[i] + 1;
          for (int x : rest) p.push_back(x < 0 ? -1 : x + span);
          out.push_back(std::move(p));
        }
  }
  std::vector<HalfDiagram> res;
  for (auto& p : halves[static_cast<std::size_t>(n)]) res.push_back(HalfDiagram{p});
  return res;
}

std::pair<HalfDiagram, HalfDiagram> tl_cut(const PairDiagram& d) {
  HalfDiagram top, bottom;
  for (int i = 0; i < d.north; ++i) {
    int p = d.partner[static_cast<std::size_t>(i)];
    top.partner.push_back(p < d.north ? p : -1);
  }
  for (int j = 0; j < d.south; ++j) {
    int p = d.partner[static_cast<std::size_t>(d.south_point(j))];
    bottom.partner.push_back(p >= d.north ? d.size() - 1 - p : -1);
  }
  return {top, bottom};
}

PairDiagram tl_join(const HalfDiagram& north, const HalfDiagram& south) {
  if (north.propagating() != south.propagating())
    throw DomainError("halves have different numbers of propagating lines");
  PairDiagram d;
  d.north = north.size();
  d.south = south.size();
  d.partner.assign(static_cast<std::size_t>(d.size()), -1);
  std::vector<int> lines_n, lines_s;
  for (int i = 0; i < d.north; ++i) {
    int p = north.partner[static_cast<std::size_t>(i)];
    if (p < 0)
      lines_n.push_back(i);
    else
      d.partner[static_cast<std::size_t>(i)] = p;
  }
  for (int j = 0; j < d.south; ++j) {
    int p = south.partner[static_cast<std::size_t>(j)];
    if (p < 0)
      lines_s.push_back(d.south_point(j));
    else
      d.partner[static_cast<std::size_t>(d.south_point(j))] = d.south_point(p);
  }
  for (std::size_t k = 0; k < lines_n.size(); ++k) {
    d.partner[static_cast<std::size_t>(lines_n[k])] = lines_s[k];
    d.partner[static_cast<std::size_t>(lines_s[k])] = lines_n[k];
  }
  return d;
}

HalfDiagram tl_edge(TLEdge kind, const HalfDiagram& h) {
  HalfDiagram r = h;
  const int n = h.size();
  if (kind == TLEdge::up) {
    r.partner.push_back(-1);
    return r;
  }
  for (int i = n - 1; i >= 0; --i)
    if (h.partner[static_cast<std::size_t>(i)] < 0) {
      r.partner[static_cast<std::size_t>(i)] = n;
      r.partner.push_back(i);
      return r;
    }
  throw DomainError("no propagating line to bend");
}

// ---------------------------------------------------------------- brackets

Word bracket_edge(BracketEdge e, const Word& s) {
  if (e == BracketEdge::close && unmatched(s) == 0)
    throw DomainError("close bracket with nothing open");
  Word r = s;
  r.push_back({e == BracketEdge::open, 0});
  return r;
}

std::pair<Word, Word> bracket_decompose(const Word& s) {
  if (!is_balanced(s)) throw DomainError("not a matched bracket sequence");
  return split_word(s);
}

Word bracket_compose(const Word& left, const Word& right) {
  return join_words(left, right, [](int, int) { return 0; });
}

// ---------------------------------------------------------------- trees

int PlanarTree::edges() const {
  int e = 0;
  for (auto& c : children) e += 1 + c.edges();
  return e;
}

int HalfTree::edges() const {
  int e = trunk();
  for (auto& f : branches)
    for (auto& t : f) e += 1 + t.edges();
  return e;
}

namespace {

void encode_forest(const std::vector<PlanarTree>& f, Word& w) {
  for (auto& c : f) {
    w.push_back({true, c.colour});
    encode_forest(c.children, w);
    w.push_back({false, 0});
  }
}

std::vector<PlanarTree> decode_forest(const Word& w, std::size_t begin, std::size_t end) {
  std::vector<PlanarTree> root(1);
  std::vector<PlanarTree*> stack{&root[0]};
  for (std::size_t i = begin; i < end; ++i) {
    if (w[i].open) {
      stack.back()->children.push_back(PlanarTree{{}, w[i].mark});
      stack.push_back(&stack.back()->children.back());
    } else {
      if (stack.size() == 1) throw DomainError("tree word is not balanced");
      stack.pop_back();
    }
  }
  if (stack.size() != 1) throw DomainError("tree word is not balanced");
  return std::move(root[0].children);
}

}  // namespace

Word tree_encode(const PlanarTree& t) {
  Word w;
  encode_forest(t.children, w);
  return w;
}

PlanarTree tree_decode(const Word& w) {
  if (!is_balanced(w)) throw DomainError("tree word is not balanced");
  return PlanarTree{decode_forest(w, 0, w.size()), 0};
}

Word halftree_encode(const HalfTree& h) {
  Word w;
  for (std::size_t i = 0; i < h.branches.size(); ++i) {
    if (i) w.push_back({true, h.colours[i - 1]});
    encode_forest(h.branches[i], w);
  }
  return w;
}

HalfTree halftree_decode(const Word& w) {
  if (!is_standard(w)) throw DomainError("half-tree word is not standard");
  HalfTree h;
  h.branches.clear();
  std::size_t start = 0;
  for (int p : unmatched_positions(w)) {
    h.colours.push_back(w[static_cast<std::size_t>(p)].mark);
    h.branches.push_back(decode_forest(w, start, static_cast<std::size_t>(p)));
    start = static_cast<std::size_t>(p) + 1;
  }
  h.branches.push_back(decode_forest(w, start, w.size()));
  return h;
}

std::vector<PlanarTree> mirror(const std::vector<PlanarTree>& forest) {
  std::vector<PlanarTree> r;
  for (auto it = forest.rbegin(); it != forest.rend(); ++it)
    r.push_back(PlanarTree{mirror(it->children), it->colour});
  return r;
}

HalfTree halftree_edge(TreeEdge e, const HalfTree& h, int colour) {
  HalfTree r = h;
  if (e == TreeEdge::plus) {
    r.branches.emplace_back();
    r.colours.push_back(colour);
    return r;
  }
  if (h.trunk() == 0) throw DomainError("half-tree has no trunk edge to fold");
  PlanarTree folded{std::move(r.branches.back()), r.colours.back()};
  r.branches.pop_back();
  r.colours.pop_back();
  r.branches.back().push_back(std::move(folded));
  return r;
}

std::pair<HalfTree, HalfTree> tree_cut(const PlanarTree& t) {
  const int n = t.edges();
  struct Frame {
    const PlanarTree* node;
    std::size_t next;
  };
  std::vector<Frame> path{{&t, 0}};
  int steps = 0;
  while (steps < n) {
    auto& top = path.back();
    if (top.next < top.node->children.size()) {
      path.push_back({&top.node->children[top.next], 0});
    } else {
      path.pop_back();
      ++path.back().next;
    }
    ++steps;
  }
  HalfTree right, left;
  right.branches.clear();
  left.branches.clear();
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& ch = path[i].node->children;
    const std::size_t k = path[i].next;
    const bool top = i + 1 == path.size();
    right.branches.emplace_back(ch.begin(), ch.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<PlanarTree> after(ch.begin() + static_cast<std::ptrdiff_t>(top ? k : k + 1),
                                  ch.end());
    left.branches.push_back(mirror(after));
    if (i > 0) {
      right.colours.push_back(path[i].node->colour);
      left.colours.push_back(path[i].node->colour);
    }
  }
  return {right, left};
}

PlanarTree tree_splice(const HalfTree& right, const HalfTree& left) {
  if (right.trunk() != left.trunk() || right.colours != left.colours)
    throw DomainError("half-trees with different trunks");
  const int l = right.trunk();
  PlanarTree node;
  for (int i = l; i >= 0; --i) {
    PlanarTree v;
    if (i > 0) v.colour = right.colours[static_cast<std::size_t>(i - 1)];
    v.children = right.branches[static_cast<std::size_t>(i)];
    if (i < l) v.children.push_back(std::move(node));
    for (auto& c : mirror(left.branches[static_cast<std::size_t>(i)])) v.children.push_back(c);
    node = std::move(v);
  }
  return node;
}

namespace {

const std::vector<std::vector<PlanarTree>>& forests(int e) {
  static std::deque<std::vector<std::vector<PlanarTree>>> memo;
  static std::mutex lock;
  std::lock_guard<std::mutex> g(lock);
  if (memo.empty()) memo.push_back({{}});
  while (static_cast<int>(memo.size()) <= e) {
    const int k = static_cast<int>(memo.size());
    std::vector<std::vector<PlanarTree>> out;
    for (int first = 0; first < k; ++first)
      for (auto& sub : memo[static_cast<std::size_t>(first)])
        for (auto& rest : memo[static_cast<std::size_t>(k - 1 - first)]) {
          std::vector<PlanarTree> f{PlanarTree{sub, 0}};
          f.insert(f.end(), rest.begin(), rest.end());
          out.push_back(std::move(f));
        }
    memo.push_back(std::move(out));
  }
  return memo[static_cast<std::size_t>(e)];
}

}  // namespace

std::vector<PlanarTree> enum_planar_trees(int edges) {
  std::vector<PlanarTree> out;
  for (auto& f : forests(edges)) out.push_back(PlanarTree{f, 0});
  return out;
}

std::vector<HalfTree> enum_half_trees(int n) {
  std::vector<HalfTree> out;
  for (int l = n % 2; l <= n; l += 2) {
    const int m = (n - l) / 2;
    // weak compositions of m into l+1 parts
    std::vector<int> parts(static_cast<std::size_t>(l + 1), 0);
    std::function<void(std::size_t, int)> place = [&](std::size_t i, int left) {
      if (i == parts.size() - 1) {
        parts[i] = left;
        std::vector<const std::vector<std::vector<PlanarTree>>*> choices;
        for (int p : parts) choices.push_back(&forests(p));
        std::vector<std::size_t> idx(parts.size(), 0);
        while (true) {
          HalfTree h;
          h.branches.clear();
          for (std::size_t k = 0; k < parts.size(); ++k) h.branches.push_back((*choices[k])[idx[k]]);
          h.colours.assign(parts.size() - 1, 0);
          out.push_back(std::move(h));
          std::size_t k = 0;
          while (k < idx.size() && ++idx[k] == choices[k]->size()) idx[k++] = 0;
          if (k == idx.size()) break;
        }
        return;
      }
      for (int a = 0; a <= left; ++a) {
        parts[i] = a;
        place(i + 1, left - a);
      }
    };
    place(0, m);
  }
  return out;
}

PlanarTree tl_region_tree(const PairDiagram& d) {
  const int N = d.size();
  if (N == 0) return PlanarTree{};
  std::vector<int> parent(static_cast<std::size_t>(N));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  // gap g lies between points g and g+1 (mod N)
  for (int g = 0; g < N; ++g) {
    int a = find(g), b = find(d.partner[static_cast<std::size_t>((g + 1) % N)]);
    parent[static_cast<std::size_t>(a)] = b;
  }
  struct Arc {
    int lo, hi;
  };
  std::vector<Arc> arcs;
  for (int i = 0; i < N; ++i)
    if (d.partner[static_cast<std::size_t>(i)] > i) arcs.push_back({i, d.partner[static_cast<std::size_t>(i)]});
  std::function<PlanarTree(int, int)> build = [&](int region, int via) {
    PlanarTree t;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      if (static_cast<int>(k) == via) continue;
      int r1 = find((arcs[k].lo + N - 1) % N), r2 = find(arcs[k].lo);
      if (r1 == region) t.children.push_back(build(r2, static_cast<int>(k)));
      else if (r2 == region) t.children.push_back(build(r1, static_cast<int>(k)));
    }
    return t;
  };
  return build(find(N - 1), -1);
}

// ---------------------------------------------------------------- intervals

int IntervalPointOrder::points() const {
  return static_cast<int>(std::count(point.begin(), point.end(), true));
}

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

int down_size(const IntervalPointOrder& x, int i) {
  int c = 0;
  for (int j = 0; j < x.size(); ++j) c += x.less[idx(j)][idx(i)];
  return c;
}

int up_size(const IntervalPointOrder& x, int i) {
  int c = 0;
  for (int j = 0; j < x.size(); ++j) c += x.less[idx(i)][idx(j)];
  return c;
}

// Elements listed as in interval_from_brackets: intervals by start, then
// points by position.
IntervalPointOrder from_positions(const std::vector<std::pair<int, int>>& spans,
                                  const std::vector<int>& pts) {
  IntervalPointOrder x;
  const std::size_t s = spans.size() + pts.size();
  x.point.assign(s, false);
  x.less.assign(s, std::vector<bool>(s, false));
  for (std::size_t k = 0; k < pts.size(); ++k) x.point[spans.size() + k] = true;
  auto start = [&](std::size_t i) { return i < spans.size() ? spans[i].first : pts[i - spans.size()]; };
  for (std::size_t i = 0; i < spans.size(); ++i)
    for (std::size_t j = 0; j < s; ++j) x.less[i][j] = spans[i].second < start(j);
  return x;
}

}  // namespace

bool is_uipo(const IntervalPointOrder& x) {
  const int s = x.size();
  auto lt = [&](int a, int b) { return static_cast<bool>(x.less[idx(a)][idx(b)]); };
  auto inc = [&](int a, int b) { return a != b && !lt(a, b) && !lt(b, a); };
  for (int a = 0; a < s; ++a) {
    if (lt(a, a)) return false;
    for (int b = 0; b < s; ++b) {
      if (lt(a, b) && lt(b, a)) return false;
      if (x.point[idx(a)] && lt(a, b)) return false;
      for (int c = 0; c < s; ++c)
        if (lt(a, b) && lt(b, c) && !lt(a, c)) return false;
    }
  }
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b)
      for (int c = 0; c < s; ++c)
        for (int d = 0; d < s; ++d) {
          // 2+2
          if (lt(a, b) && lt(c, d) && inc(a, d) && inc(c, b) && inc(a, c) && inc(b, d))
            return false;
          // 3+1 among intervals
          if (!x.point[idx(a)] && !x.point[idx(b)] && !x.point[idx(c)] && !x.point[idx(d)] &&
              lt(a, b) && lt(b, c) && inc(d, a) && inc(d, b) && inc(d, c))
            return false;
        }
  for (int p = 0; p < s; ++p) {
    if (!x.point[idx(p)]) continue;
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b)
        if (!x.point[idx(a)] && !x.point[idx(b)] && !lt(a, p) && !lt(b, p) && lt(a, b))
          return false;
  }
  return true;
}

IntervalPointOrder interval_from_brackets(const Word& s) {
  if (!is_standard(s)) throw DomainError("interval word is not standard");
  std::vector<int> open;
  std::size_t head = 0;
  std::vector<std::pair<int, int>> spans;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (s[idx(i)].open) {
      open.push_back(i);
    } else {
      spans.push_back({open[head++], i});
    }
  }
  std::vector<int> pts(open.begin() + static_cast<std::ptrdiff_t>(head), open.end());
  return from_positions(spans, pts);
}

Word interval_to_brackets(const IntervalPointOrder& x) {
  const int s = x.size();
  std::vector<int> order(idx(s));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> dn(idx(s)), up(idx(s));
  for (int i = 0; i < s; ++i) {
    dn[idx(i)] = down_size(x, i);
    up[idx(i)] = up_size(x, i);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (x.point[idx(a)] != x.point[idx(b)]) return !x.point[idx(a)];
    if (dn[idx(a)] != dn[idx(b)]) return dn[idx(a)] < dn[idx(b)];
    return up[idx(a)] > up[idx(b)];
  });
  std::vector<int> intervals;
  for (int e : order)
    if (!x.point[idx(e)]) intervals.push_back(e);
  Word w;
  std::size_t closed = 0;
  for (int e : order) {
    while (closed < intervals.size() && x.less[idx(intervals[closed])][idx(e)]) {
      w.push_back({false, 0});
      ++closed;
    }
    w.push_back({true, 0});
  }
  for (; closed < intervals.size(); ++closed) w.push_back({false, 0});
  // the word must reproduce the order exactly
  auto y = interval_from_brackets(w);
  if (y.size() != s || y.points() != x.points()) throw DomainError("not an interval-point order");
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (y.less[idx(i)][idx(j)] != x.less[idx(order[idx(i)])][idx(order[idx(j)])])
        throw DomainError("not an interval-point order");
  return w;
}

IntervalPointOrder interval_combine(const IntervalPointOrder& x1, const IntervalPointOrder& x2) {
  if (x1.points() != x2.points()) throw DomainError("orders with different numbers of points");
  auto by_height = [](const IntervalPointOrder& x, bool ascending) {
    std::vector<int> p;
    for (int i = 0; i < x.size(); ++i)
      if (x.point[idx(i)]) p.push_back(i);
    std::stable_sort(p.begin(), p.end(), [&](int a, int b) {
      return ascending ? down_size(x, a) < down_size(x, b) : down_size(x, a) > down_size(x, b);
    });
    return p;
  };
  auto p1 = by_height(x1, true);
  auto p2 = by_height(x2, false);
  std::vector<int> map2(idx(x2.size()), -1);
  int next = x1.size();
  for (std::size_t k = 0; k < p2.size(); ++k) map2[idx(p2[k])] = p1[k];
  for (int i = 0; i < x2.size(); ++i)
    if (!x2.point[idx(i)]) map2[idx(i)] = next++;
  const int s = next;
  IntervalPointOrder r;
  r.point.assign(idx(s), false);
  r.less.assign(idx(s), std::vector<bool>(idx(s), false));
  for (int a = 0; a < x1.size(); ++a)
    for (int b = 0; b < x1.size(); ++b)
      if (x1.less[idx(a)][idx(b)]) r.less[idx(a)][idx(b)] = true;
  for (int a = 0; a < x2.size(); ++a)
    for (int b = 0; b < x2.size(); ++b)
      if (x2.less[idx(b)][idx(a)]) r.less[idx(map2[idx(a)])][idx(map2[idx(b)])] = true;
  for (int a = 0; a < x1.size(); ++a)
    for (int b = 0; b < x2.size(); ++b)
      if (!x1.point[idx(a)] && !x2.point[idx(b)]) r.less[idx(a)][idx(map2[idx(b)])] = true;
  return r;
}

IntervalPointOrder interval_edge(IntervalEdge e, const IntervalPointOrder& x) {
  IntervalPointOrder r = x;
  const int s = x.size();
  if (e == IntervalEdge::plus) {
    r.point.push_back(true);
    for (int i = 0; i < s; ++i) r.less[idx(i)].push_back(!x.point[idx(i)]);
    r.less.emplace_back(idx(s) + 1, false);
    return r;
  }
  int best = -1;
  for (int i = 0; i < s; ++i)
    if (x.point[idx(i)] && (best < 0 || down_size(x, i) < down_size(x, best))) best = i;
  if (best < 0) throw DomainError("no labelled point to release");
  r.point[idx(best)] = false;
  return r;
}

namespace {

// Arrangements on the line of unit intervals (S = start, E = end) and
// points (P).  Unit length forces intervals to end in the order they
// start; no interval may start after a point.
void arrangements(int n, bool with_points, std::string& cur, int open,
                  const std::function<void(const std::string&)>& emit) {
  const int left = n - static_cast<int>(cur.size());
  if (left == 0) {
    if (open == 0) emit(cur);
    return;
  }
  const bool seen_point = cur.find('P') != std::string::npos;
  if (!seen_point && open + 1 <= left - 1) {
    cur.push_back('S');
    arrangements(n, with_points, cur, open + 1, emit);
    cur.pop_back();
  }
  if (open > 0) {
    cur.push_back('E');
    arrangements(n, with_points, cur, open - 1, emit);
    cur.pop_back();
  }
  if (with_points) {
    cur.push_back('P');
    arrangements(n, with_points, cur, open, emit);
    cur.pop_back();
  }
}

std::vector<IntervalPointOrder> orders_from_arrangements(int n, bool with_points) {
  std::set<Word> seen;
  std::vector<IntervalPointOrder> out;
  std::string cur;
  arrangements(n, with_points, cur, 0, [&](const std::string& a) {
    std::vector<std::pair<int, int>> spans;
    std::vector<int> starts, pts;
    std::size_t head = 0;
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
      if (a[idx(i)] == 'S') starts.push_back(i);
      if (a[idx(i)] == 'E') spans.push_back({starts[head++], i});
      if (a[idx(i)] == 'P') pts.push_back(i);
    }
    std::sort(spans.begin(), spans.end());
    auto x = from_positions(spans, pts);
    if (seen.insert(interval_to_brackets(x)).second) out.push_back(std::move(x));
  });
  return out;
}

}  // namespace

std::vector<IntervalPointOrder> enum_interval_layer(int n) { return orders_from_arrangements(n, true); }

std::vector<IntervalPointOrder> enum_interval_orders(int n) {
  return orders_from_arrangements(2 * n, false);
}

std::string interval_str(const IntervalPointOrder& x) {
  // intervals I, J, K, ... ; points a, b, c, ...
  std::vector<std::string> name(idx(x.size()));
  int ni = 0, np = 0;
  for (int i = 0; i < x.size(); ++i) {
    if (x.point[idx(i)]) {
      name[idx(i)] = std::string(1, static_cast<char>('a' + np++ % 26));
    } else {
      name[idx(i)] = std::string(1, static_cast<char>('I' + ni % 18));
      if (ni++ >= 18) name[idx(i)] += std::to_string(ni);
    }
  }
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < x.size(); ++j) {
      if (!x.less[idx(i)][idx(j)]) continue;
      bool cover = true;
      for (int k = 0; k < x.size(); ++k)
        if (x.less[idx(i)][idx(k)] && x.less[idx(k)][idx(j)]) cover = false;
      if (!cover) continue;
      os << (first ? "" : ", ") << name[idx(i)] << "<" << name[idx(j)];
      first = false;
    }
  os << ")";
  std::string pts;
  for (int i = 0; i < x.size(); ++i)
    if (x.point[idx(i)]) pts += (pts.empty() ? "" : ",") + name[idx(i)];
  if (!pts.empty()) os << " points " << pts;
  return os.str();
}

// ---------------------------------------------------------------- noncrossing partitions

namespace {

void nc_blocks(int lo, int hi, std::vector<NoncrossingPartition>& out) {
  // partitions of {lo..hi}; the block of lo is chosen first, the gaps it
  // leaves are filled independently
  if (lo > hi) {
    out.push_back({});
    return;
  }
  const int span = hi - lo;
  for (unsigned mask = 0; mask < (1u << span); ++mask) {
    std::vector<int> block{lo};
    for (int k = 0; k < span; ++k)
      if (mask & (1u << k)) block.push_back(lo + 1 + k);
    std::vector<std::vector<NoncrossingPartition>> gaps;
    for (std::size_t j = 0; j < block.size(); ++j) {
      int a = block[j] + 1, b = j + 1 < block.size() ? block[j + 1] - 1 : hi;
      std::vector<NoncrossingPartition> g;
      nc_blocks(a, b, g);
      gaps.push_back(std::move(g));
    }
    std::vector<std::size_t> at(gaps.size(), 0);
    while (true) {
      NoncrossingPartition p{block};
      for (std::size_t j = 0; j < gaps.size(); ++j)
        for (auto& b : gaps[j][at[j]]) p.push_back(b);
      std::sort(p.begin(), p.end());
      out.push_back(std::move(p));
      std::size_t j = 0;
      while (j < at.size() && ++at[j] == gaps[j].size()) at[j++] = 0;
      if (j == at.size()) break;
    }
  }
}

}  // namespace

std::vector<NoncrossingPartition> enum_noncrossing_partitions(int n) {
  std::vector<NoncrossingPartition> out;
  nc_blocks(1, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

PairDiagram ncpp_from_ncp(const NoncrossingPartition& p, int n) {
  PairDiagram d;
  d.north = n;
  d.south = n;
  d.partner.assign(idx(2 * n), -1);
  auto link = [&](int a, int b) {
    if (d.partner[idx(a)] >= 0 || d.partner[idx(b)] >= 0) throw DomainError("not a partition");
    d.partner[idx(a)] = b;
    d.partner[idx(b)] = a;
  };
  for (auto& block : p) {
    for (std::size_t j = 0; j + 1 < block.size(); ++j) link(2 * block[j] - 1, 2 * block[j + 1] - 2);
    link(2 * block.front() - 2, 2 * block.back() - 1);
  }
  if (std::count(d.partner.begin(), d.partner.end(), -1)) throw DomainError("not a partition of n");
  if (!is_balanced(d.word()) || partners(d.word()) != d.partner)
    throw DomainError("partition is not noncrossing");
  return d;
}

NoncrossingPartition ncp_from_ncpp(const PairDiagram& d) {
  const int N = d.size();
  std::vector<int> parent(idx(N));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[idx(x)] == x ? x : parent[idx(x)] = find(parent[idx(x)]);
  };
  auto unite = [&](int a, int b) { parent[idx(find(a))] = find(b); };
  for (int i = 0; i < N; ++i) unite(i, d.partner[idx(i)]);
  for (int b = 0; 2 * b + 1 < N; ++b) unite(2 * b, 2 * b + 1);
  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < N; i += 2) blocks[find(i)].push_back(i / 2 + 1);
  NoncrossingPartition p;
  for (auto& [_, b] : blocks) p.push_back(b);
  std::sort(p.begin(), p.end());
  return p;
}

std::string ncp_str(const NoncrossingPartition& p) {
  if (p.empty()) return "∅";
  std::string s;
  for (auto& b : p) {
    if (!s.empty()) s += '|';
    s += '{';
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    s += '}';
  }
  return s;
}

NoncrossingPartition parse_ncp(const std::string& s) {
  NoncrossingPartition p;
  if (s == "∅" || s.empty()) return p;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '|') {
      ++i;
      continue;
    }
    if (s[i] != '{') throw DomainError("bad partition: " + s);
    auto j = s.find('}', i);
    if (j == std::string::npos) throw DomainError("bad partition: " + s);
    std::vector<int> b;
    std::stringstream ss(s.substr(i + 1, j - i - 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) b.push_back(std::stoi(tok));
    std::sort(b.begin(), b.end());
    p.push_back(b);
    i = j + 1;
  }
  std::sort(p.begin(), p.end());
  return p;
}

// ---------------------------------------------------------------- families

namespace {

class AinfFamily : public PascalFamily {
 public:
  explicit AinfFamily(std::string id) : id_(std::move(id)), graph_(a_inf()) {}

  std::string id() const override { return id_; }
  const RootedGraph& graph() const override { return graph_; }
  int cap() const override { return 12; }
  Element origin() const override { return Element{id_, 0, VertexLabel::integer(0), ""}; }

  std::pair<int, VertexLabel> classify(const std::string& payload) const override {
    auto w = parse_word(payload);
    if (!is_standard(w)) throw DomainError("not a standard word: " + payload);
    return {static_cast<int>(w.size()), VertexLabel::integer(unmatched(w))};
  }

  Element edge_map(const VertexLabel& source, int key, const Element& x) const override {
    if (x.vertex != source) throw DomainError("element does not lie over the source vertex");
    const bool up = graph_.target(source, key).value() > source.value();
    Word w = step(up, parse_word(x.payload));
    return wrap(w);
  }

 protected:
  virtual Word step(bool up, const Word& w) const = 0;

  Element wrap(const Word& w) const {
    return Element{id_, static_cast<int>(w.size()), VertexLabel::integer(unmatched(w)),
                   format_word(w)};
  }

 private:
  std::string id_;
  RootedGraph graph_;
};

class TLFamily : public AinfFamily {
 public:
  TLFamily() : AinfFamily("tl") {}
  std::vector<Element> enumerate_layer(int n) const override {
    std::vector<Element> out;
    for (auto& h : enum_tl_halves(n)) out.push_back(wrap(h.word()));
    return out;
  }
  std::string render(const Element& x) const override { return render_arcs(parse_word(x.payload)); }

 protected:
  Word step(bool up, const Word& w) const override {
    return tl_edge(up ? TLEdge::up : TLEdge::down, HalfDiagram::from_word(w)).word();
  }
};

class BracketFamily : public AinfFamily {
 public:
  BracketFamily() : AinfFamily("brackets") {}
  std::vector<Element> enumerate_layer(int n) const override {
    std::vector<Element> out;
    for (auto& w : standard_words(n)) out.push_back(wrap(w));
    return out;
  }

 protected:
  Word step(bool up, const Word& w) const override {
    return bracket_edge(up ? BracketEdge::open : BracketEdge::close, w);
  }
};

std::string render_tree(const std::vector<PlanarTree>& f, const std::string& indent) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    s += indent + "o\n";
    s += render_tree(f[i].children, indent + "  ");
  }
  return s;
}

class TreeFamily : public AinfFamily {
 public:
  TreeFamily() : AinfFamily("trees") {}
  std::vector<Element> enumerate_layer(int n) const override {
    std::vector<Element> out;
    for (auto& h : enum_half_trees(n)) out.push_back(wrap(halftree_encode(h)));
    return out;
  }
  std::string render(const Element& x) const override {
    auto h = halftree_decode(parse_word(x.payload));
    std::string s;
    for (int i = h.trunk(); i >= 0; --i) {
      s += "T" + std::to_string(i) + "\n";
      s += render_tree(h.branches[static_cast<std::size_t>(i)], "  ");
    }
    return s;
  }

 protected:
  Word step(bool up, const Word& w) const override {
    return halftree_encode(halftree_edge(up ? TreeEdge::plus : TreeEdge::minus, halftree_decode(w)));
  }
};

class IntervalFamily : public AinfFamily {
 public:
  IntervalFamily() : AinfFamily("intervals") {}
  std::vector<Element> enumerate_layer(int n) const override {
    std::vector<Element> out;
    for (auto& x : enum_interval_layer(n)) out.push_back(wrap(interval_to_brackets(x)));
    return out;
  }
  std::string render(const Element& x) const override {
    return interval_str(interval_from_brackets(parse_word(x.payload))) + "\n";
  }

 protected:
  Word step(bool up, const Word& w) const override {
    return interval_to_brackets(
        interval_edge(up ? IntervalEdge::plus : IntervalEdge::minus, interval_from_brackets(w)));
  }
};

// Half-objects of noncrossing partitions are the TL half-diagrams of their
// doubled pair partitions; layers are collected by cutting those.
class NCPFamily : public AinfFamily {
 public:
  NCPFamily() : AinfFamily("ncp") {}
  std::vector<Element> enumerate_layer(int n) const override {
    std::set<Word> halves;
    for (auto& p : enum_noncrossing_partitions(n)) {
      auto d = ncpp_from_ncp(p, n);
      auto [top, bottom] = tl_cut(d);
      halves.insert(top.word());
      halves.insert(bottom.word());
    }
    std::vector<Element> out;
    for (auto& w : halves) out.push_back(wrap(w));
    return out;
  }
  std::string render(const Element& x) const override { return render_arcs(parse_word(x.payload)); }

 protected:
  Word step(bool up, const Word& w) const override {
    return tl_edge(up ? TLEdge::up : TLEdge::down, HalfDiagram::from_word(w)).word();
  }
};

Element ainf_element(const std::string& fam, const Word& w) {
  return Element{fam, static_cast<int>(w.size()), VertexLabel::integer(unmatched(w)), format_word(w)};
}

class AinfSequence : public CatalanSequence {
 public:
  explicit AinfSequence(std::shared_ptr<const PascalFamily> f) : f_(std::move(f)) {}
  std::string id() const override { return f_->id(); }
  const PascalFamily& bra() const override { return *f_; }
  const PascalFamily& ket() const override { return *f_; }
  int cap() const override { return 10; }

 protected:
  std::shared_ptr<const PascalFamily> f_;
};

class TLSequence : public AinfSequence {
 public:
  using AinfSequence::AinfSequence;
  std::vector<std::string> members(int n) const override {
    std::vector<std::string> out;
    for (auto& d : enum_ncpp(n)) out.push_back(format_word(d.word()));
    return out;
  }
  std::pair<Element, Element> decompose(int n, const std::string& m) const override {
    auto [a, b] = tl_cut(PairDiagram::from_word(parse_word(m), n));
    return {ainf_element(id(), a.word()), ainf_element(id(), b.word())};
  }
  std::string compose(int, const Element& bra, const Element& ket) const override {
    return format_word(tl_join(HalfDiagram::from_word(parse_word(bra.payload)),
                               HalfDiagram::from_word(parse_word(ket.payload)))
                           .word());
  }
  std::string render(int, const std::string& m) const override { return render_arcs(parse_word(m)); }
};

class BracketSequence : public AinfSequence {
 public:
  using AinfSequence::AinfSequence;
  std::vector<std::string> members(int n) const override {
    std::vector<std::string> out;
    for (auto& w : balanced_words(n)) out.push_back(format_word(w));
    return out;
  }
  std::pair<Element, Element> decompose(int, const std::string& m) const override {
    auto [a, b] = bracket_decompose(parse_word(m));
    return {ainf_element(id(), a), ainf_element(id(), b)};
  }
  std::string compose(int, const Element& bra, const Element& ket) const override {
    return format_word(bracket_compose(parse_word(bra.payload), parse_word(ket.payload)));
  }
};

class TreeSequence : public AinfSequence {
 public:
  using AinfSequence::AinfSequence;
  std::vector<std::string> members(int n) const override {
    std::vector<std::string> out;
    for (auto& t : enum_planar_trees(n)) out.push_back(format_word(tree_encode(t)));
    return out;
  }
  std::pair<Element, Element> decompose(int, const std::string& m) const override {
    auto [r, l] = tree_cut(tree_decode(parse_word(m)));
    return {ainf_element(id(), halftree_encode(r)), ainf_element(id(), halftree_encode(l))};
  }
  std::string compose(int, const Element& bra, const Element& ket) const override {
    return format_word(tree_encode(tree_splice(halftree_decode(parse_word(bra.payload)),
                                               halftree_decode(parse_word(ket.payload)))));
  }
};

class IntervalSequence : public AinfSequence {
 public:
  using AinfSequence::AinfSequence;
  std::vector<std::string> members(int n) const override {
    std::vector<std::string> out;
    for (auto& x : enum_interval_orders(n)) out.push_back(format_word(interval_to_brackets(x)));
    return out;
  }
  // The lowest n end-points give the first half; the remaining ones, read
  // downwards, give the second.
  std::pair<Element, Element> decompose(int, const std::string& m) const override {
    auto w = interval_to_brackets(interval_from_brackets(parse_word(m)));
    auto [a, b] = split_word(w);
    auto canon = [](const Word& h) { return interval_to_brackets(interval_from_brackets(h)); };
    return {ainf_element(id(), canon(a)), ainf_element(id(), canon(b))};
  }
  std::string compose(int, const Element& bra, const Element& ket) const override {
    auto x = interval_combine(interval_from_brackets(parse_word(bra.payload)),
                              interval_from_brackets(parse_word(ket.payload)));
    return format_word(interval_to_brackets(x));
  }
  std::string render(int, const std::string& m) const override {
    return interval_str(interval_from_brackets(parse_word(m)));
  }
};

class NCPSequence : public AinfSequence {
 public:
  using AinfSequence::AinfSequence;
  std::vector<std::string> members(int n) const override {
    std::vector<std::string> out;
    for (auto& p : enum_noncrossing_partitions(n)) out.push_back(ncp_str(p));
    return out;
  }
  std::pair<Element, Element> decompose(int n, const std::string& m) const override {
    auto [a, b] = tl_cut(ncpp_from_ncp(parse_ncp(m), n));
    return {ainf_element(id(), a.word()), ainf_element(id(), b.word())};
  }
  std::string compose(int, const Element& bra, const Element& ket) const override {
    auto d = tl_join(HalfDiagram::from_word(parse_word(bra.payload)),
                     HalfDiagram::from_word(parse_word(ket.payload)));
    return ncp_str(ncp_from_ncpp(d));
  }
};

template <class F>
std::shared_ptr<const PascalFamily> single() {
  static const auto f = std::make_shared<const F>();
  return f;
}

}  // namespace

std::shared_ptr<const PascalFamily> tl_family() { return single<TLFamily>(); }
std::shared_ptr<const PascalFamily> bracket_family() { return single<BracketFamily>(); }
std::shared_ptr<const PascalFamily> tree_family() { return single<TreeFamily>(); }
std::shared_ptr<const PascalFamily> interval_family() { return single<IntervalFamily>(); }
std::shared_ptr<const PascalFamily> ncp_family() { return single<NCPFamily>(); }

std::shared_ptr<const CatalanSequence> tl_sequence() {
  static const auto s = std::make_shared<const TLSequence>(tl_family());
  return s;
}
std::shared_ptr<const CatalanSequence> bracket_sequence() {
  static const auto s = std::make_shared<const BracketSequence>(bracket_family());
  return s;
}
std::shared_ptr<const CatalanSequence> tree_sequence() {
  static const auto s = std::make_shared<const TreeSequence>(tree_family());
  return s;
}
std::shared_ptr<const CatalanSequence> interval_sequence() {
  static const auto s = std::make_shared<const IntervalSequence>(interval_family());
  return s;
}
std::shared_ptr<const CatalanSequence> ncp_sequence() {
  static const auto s = std::make_shared<const NCPSequence>(ncp_family());
  return s;
}

}  // namespace catpascal
