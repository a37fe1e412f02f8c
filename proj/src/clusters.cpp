#include "catpascal/clusters.hpp"

#include "catpascal/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace catpascal {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

constexpr std::string_view kEmpty = "∅";

}  // namespace

std::strong_ordering operator<=>(const APRoot& a, const APRoot& b) {
  if (auto c = a.i <=> b.i; c != 0) return c;
  if (auto c = b.neg <=> a.neg; c != 0) return c;  // -a_i before a_i + ...
  if (auto c = a.j <=> b.j; c != 0) return c;
  return a.tagged <=> b.tagged;
}

int TaggedCluster::tags() const {
  int t = global ? 1 : 0;
  for (auto& r : roots) t += r.tagged ? 1 : 0;
  return t;
}

// ---------------------------------------------------------------- text

std::string root_str(const APRoot& a) {
  if (a.neg) return "-a" + std::to_string(a.i) + (a.tagged ? "~" : "");
  std::string s;
  for (int k = a.i; k <= a.j; ++k) s += (k > a.i ? "+a" : "a") + std::to_string(k);
  return s;
}

APRoot parse_root(std::string_view text) {
  std::string t = trim(text);
  auto number = [&](std::string_view s) {
    if (s.size() < 2 || s[0] != 'a' ||
        !std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw DomainError("bad root '" + t + "'");
    return std::stoi(std::string(s.substr(1)));
  };
  if (!t.empty() && t[0] == '-') {
    bool tagged = t.back() == '~';
    auto body = std::string_view(t).substr(1, t.size() - 1 - (tagged ? 1 : 0));
    return APRoot::negative(number(body), tagged);
  }
  std::vector<int> idx;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= t.size(); ++k)
    if (k == t.size() || t[k] == '+') {
      idx.push_back(number(std::string_view(t).substr(start, k - start)));
      start = k + 1;
    }
  for (std::size_t k = 1; k < idx.size(); ++k)
    if (idx[k] != idx[k - 1] + 1) throw DomainError("root '" + t + "' is not a consecutive sum");
  return APRoot::positive(idx.front(), idx.back());
}

std::string cluster_str(const Cluster& c) {
  if (c.empty()) return std::string(kEmpty);
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + root_str(c[k]);
  return s;
}

Cluster parse_cluster(std::string_view text) {
  std::string t = trim(text);
  Cluster c;
  if (t == kEmpty) return c;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= t.size(); ++k)
    if (k == t.size() || t[k] == ',') {
      c.push_back(parse_root(std::string_view(t).substr(start, k - start)));
      start = k + 1;
    }
  std::sort(c.begin(), c.end());
  return c;
}

std::string tagged_str(const TaggedCluster& c) { return cluster_str(c.roots) + (c.global ? ",+" : ""); }

TaggedCluster parse_tagged(std::string_view text) {
  std::string t = trim(text);
  TaggedCluster c;
  if (t.size() >= 2 && t.substr(t.size() - 2) == ",+") {
    c.global = true;
    t = t.substr(0, t.size() - 2);
  }
  c.roots = parse_cluster(t);
  return c;
}

// ---------------------------------------------------------------- roots

std::vector<APRoot> almost_positive_roots(int rank) {
  std::vector<APRoot> out;
  for (int i = 1; i <= rank; ++i) out.push_back(APRoot::negative(i));
  for (int i = 1; i <= rank; ++i)
    for (int j = i; j <= rank; ++j) out.push_back(APRoot::positive(i, j));
  std::sort(out.begin(), out.end());
  return out;
}

APRoot sigma(int i, const APRoot& a) {
  if (a.neg) return a.i == i ? APRoot::positive(i, i) : a;
  if (a.i == i && a.j == i) return APRoot::negative(i);
  if (i == a.i - 1) return APRoot::positive(a.i - 1, a.j);
  if (i == a.j + 1) return APRoot::positive(a.i, a.j + 1);
  if (i == a.i) return APRoot::positive(a.i + 1, a.j);
  if (i == a.j) return APRoot::positive(a.i, a.j - 1);
  return a;
}

bool compatible(int rank, const APRoot& a_in, const APRoot& b_in) {
  APRoot a = a_in, b = b_in;
  a.tagged = b.tagged = false;
  if (a == b) return true;
  std::vector<int> word;
  for (int i = rank; i >= 1; --i) word.push_back(i);
  const int bound = (rank + 1) * (rank + 2);
  for (int step = 0; step <= bound; ++step) {
    if (a.neg && b.neg) return true;
    if (a.neg) return !b.contains(a.i);
    if (b.neg) return !a.contains(b.i);
    const int s = word.front();
    a = sigma(s, a);
    b = sigma(s, b);
    std::rotate(word.begin(), word.begin() + 1, word.end());
  }
  throw InternalError("compatibility reduction did not terminate");
}

std::vector<Cluster> enumerate_clusters(int rank) {
  if (rank < 0) return {Cluster{}};
  static std::mutex lock;
  static std::map<int, std::vector<Cluster>> cache;
  {
    std::lock_guard<std::mutex> g(lock);
    auto it = cache.find(rank);
    if (it != cache.end()) return it->second;
  }
  auto roots = almost_positive_roots(rank);
  const std::size_t m = roots.size();
  std::vector<std::vector<bool>> ok(m, std::vector<bool>(m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) ok[x][y] = compatible(rank, roots[x], roots[y]);
  std::vector<Cluster> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    bool extended = false;
    for (std::size_t x = 0; x < m; ++x) {
      if (std::find(cur.begin(), cur.end(), x) != cur.end()) continue;
      if (std::all_of(cur.begin(), cur.end(), [&](std::size_t y) { return ok[x][y]; })) {
        extended = true;
        if (x < from) continue;
        cur.push_back(x);
        go(x + 1);
        cur.pop_back();
      }
    }
    if (!extended) {
      Cluster c;
      for (auto x : cur) c.push_back(roots[x]);
      out.push_back(c);
    }
  };
  go(0);
  std::sort(out.begin(), out.end());
  std::lock_guard<std::mutex> g(lock);
  cache[rank] = out;
  return out;
}

// ---------------------------------------------------------------- tagged clusters

long cluster_vertex(int n, const TaggedCluster& c) {
  const int rank = n % 2 ? (n - 1) / 2 : n / 2 - 1;
  if (static_cast<int>(c.roots.size()) != std::max(rank, 0))
    throw DomainError("cluster has the wrong rank for layer " + std::to_string(n));
  for (auto& r : c.roots) {
    if (r.tagged && !r.neg) throw DomainError("only negative simple roots carry tags");
    if (r.i < 1 || r.j > rank) throw DomainError("root outside the rank");
  }
  for (std::size_t x = 0; x < c.roots.size(); ++x)
    for (std::size_t y = x + 1; y < c.roots.size(); ++y)
      if (!compatible(rank, c.roots[x], c.roots[y])) throw DomainError("roots are not compatible");
  if (n % 2) {
    if (c.global) throw DomainError("odd layers carry no global tag");
    return 2L * c.tags() + 1;
  }
  if (n == 0 && c.global) throw DomainError("layer 0 carries no tag");
  return 2L * c.tags();
}

std::vector<TaggedCluster> enum_tagged_clusters(int n) {
  const int rank = n % 2 ? (n - 1) / 2 : n / 2 - 1;
  std::vector<TaggedCluster> out;
  for (auto& c : enumerate_clusters(rank)) {
    std::vector<std::size_t> negs;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k].neg) negs.push_back(k);
    for (unsigned long mask = 0; mask < (1UL << negs.size()); ++mask)
      for (int g = 0; g <= (n % 2 == 0 && n > 0 ? 1 : 0); ++g) {
        TaggedCluster t{c, g == 1};
        for (std::size_t b = 0; b < negs.size(); ++b) t.roots[negs[b]].tagged = (mask >> b) & 1UL;
        out.push_back(t);
      }
  }
  return out;
}

// ---------------------------------------------------------------- bra-ket

std::pair<TaggedCluster, TaggedCluster> cluster_braket(int n, const Cluster& X) {
  if (n < 0) throw DomainError("negative size");
  const int rank = n - 1;
  if (static_cast<int>(X.size()) != std::max(rank, 0)) throw DomainError("cluster has the wrong rank");
  const bool odd = n % 2 == 1;
  const int r = odd ? (n - 1) / 2 : n / 2 - 1;
  // positive roots of X ending at k, by starting index
  auto ending = [&](int k) {
    std::vector<int> starts;
    for (auto& a : X)
      if (!a.neg && a.j == k) starts.push_back(a.i);
    std::sort(starts.begin(), starts.end());
    return starts;
  };
  std::set<APRoot> removed;
  std::vector<APRoot> added;
  for (int k = r + 1; k <= n - 1; ++k) {
    auto Y = ending(k);
    if (Y.empty()) continue;
    const bool middle = !odd && k == r + 1;
    // first index right of the cut; X_k holds the roots of Y_k starting no later
    const int cutoff = odd || middle ? r + 1 : r + 2;
    auto size_of = [&](int u) {
      auto e = ending(u);
      return static_cast<std::size_t>(std::count_if(e.begin(), e.end(), [&](int i) { return i <= cutoff; }));
    };
    std::vector<int> I;
    for (int i : Y)
      if (i <= cutoff) I.push_back(i);
    if (Y.front() >= cutoff) continue;
    if (I.size() == 1) {
      const int low = odd ? r : r + 1;
      int t = middle ? r : low;
      for (int u = k - 1; u > low && !middle; --u)
        if (size_of(u) > 1) {
          t = u;
          break;
        }
      removed.insert(APRoot::positive(I[0], k));
      added.push_back(APRoot::positive(t + 1, k));
    } else {
      for (int i : Y) removed.insert(APRoot::positive(i, k));
      added.push_back(APRoot::negative(k, true));
      for (std::size_t q = 1; q < Y.size(); ++q) added.push_back(APRoot::negative(Y[q] - 1, q == 1));
    }
  }
  Cluster Xp;
  for (auto& a : X)
    if (!removed.count(a)) Xp.push_back(a);
  Xp.insert(Xp.end(), added.begin(), added.end());
  std::sort(Xp.begin(), Xp.end());
  if (std::adjacent_find(Xp.begin(), Xp.end()) != Xp.end())
    throw InternalError("bra-ket extraction repeated a root of " + cluster_str(X));
  TaggedCluster C, D;
  const int right_from = odd ? r + 1 : r + 2;
  auto reflect = [&](const APRoot& a) {
    APRoot b = a;
    b.i = n - a.j;
    b.j = n - a.i;
    return b;
  };
  bool middle_pos = false, middle_tagged = false;
  for (auto& a : Xp) {
    if (a.j <= r) {
      C.roots.push_back(a);
    } else if (a.i >= right_from) {
      D.roots.push_back(reflect(a));
    } else if (!odd && a.i == r + 1 && a.j == r + 1) {
      if (a.neg)
        middle_tagged = a.tagged;
      else
        middle_pos = true;
    } else {
      throw InternalError("bra-ket extraction left a root straddling the cut: " + root_str(a));
    }
  }
  std::sort(C.roots.begin(), C.roots.end());
  std::sort(D.roots.begin(), D.roots.end());
  if (!odd) {
    if (middle_pos) {
      C.global = D.global = true;
    } else if (middle_tagged) {
      if (C.tags() < D.tags())
        C.global = true;
      else if (D.tags() < C.tags())
        D.global = true;
      else
        throw InternalError("global tag cannot balance the halves of " + cluster_str(X));
    }
  }
  if (C.tags() != D.tags()) throw InternalError("halves carry different numbers of tags");
  return {C, D};
}

namespace {

struct BraketTable {
  std::map<std::pair<TaggedCluster, TaggedCluster>, Cluster> inverse;
};

const BraketTable& braket_table(int n) {
  static std::mutex lock;
  static std::map<int, BraketTable> cache;
  std::lock_guard<std::mutex> g(lock);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  BraketTable t;
  for (auto& X : enumerate_clusters(n - 1)) {
    auto halves = cluster_braket(n, X);
    if (!t.inverse.emplace(halves, X).second)
      throw CorruptFamily("bra-ket extraction is not injective at " + cluster_str(X));
  }
  return cache.emplace(n, std::move(t)).first->second;
}

int first_negative_below(const Cluster& c, int i) {
  int best = 0;
  for (auto& a : c)
    if (a.neg && a.i < i) best = std::max(best, a.i);
  return best + 1;
}

}  // namespace

Cluster cluster_compose(int n, const TaggedCluster& C, const TaggedCluster& D) {
  auto& t = braket_table(n);
  auto it = t.inverse.find({C, D});
  if (it == t.inverse.end()) throw DomainError("no cluster decomposes into this pair");
  return it->second;
}

// ---------------------------------------------------------------- edge maps

TaggedCluster cluster_edge(int n, ClusterEdge e, const TaggedCluster& c) {
  const long l = cluster_vertex(n, c);
  TaggedCluster out = c;
  if (n % 2) {
    if (e == ClusterEdge::plus) {
      out.global = true;
    } else if (l < 1) {
      throw DomainError("no edge towards the root from vertex 0");
    }
    return out;
  }
  const int r = n / 2 - 1;
  if (e == ClusterEdge::plus) {
    if (n > 0) out.roots.push_back(APRoot::negative(n / 2, c.global));
    out.global = false;
  } else {
    if (l < 1) throw DomainError("no edge towards the root from vertex 0");
    int from;
    if (!c.global) {
      int k = 0;
      for (auto& a : c.roots)
        if (a.neg && a.tagged) k = std::max(k, a.i);
      if (k == 0) throw InternalError("tagged cluster without a tag");
      out.roots.clear();
      for (auto& a : c.roots) {
        if (a.neg && a.i >= k)
          out.roots.push_back(APRoot::positive(a.i + 1, r + 1));
        else
          out.roots.push_back(a);
      }
      from = first_negative_below(c.roots, k);
    } else {
      from = first_negative_below(c.roots, r + 1);
    }
    out.roots.push_back(APRoot::positive(from, r + 1));
    out.global = false;
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

// ---------------------------------------------------------------- family

namespace {

std::pair<int, TaggedCluster> split_payload(const std::string& p) {
  auto colon = p.find(':');
  if (colon == std::string::npos) throw DomainError("cluster payload needs a '<layer>:' prefix");
  const std::string num = trim(std::string_view(p).substr(0, colon));
  if (num.empty() || !std::all_of(num.begin(), num.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw DomainError("bad layer in '" + p + "'");
  return {std::stoi(num), parse_tagged(std::string_view(p).substr(colon + 1))};
}

std::string join_payload(int n, const TaggedCluster& c) { return std::to_string(n) + ":" + tagged_str(c); }

class ClusterFamily : public PascalFamily {
 public:
  ClusterFamily() : g_(a_inf()) {}
  std::string id() const override { return "clusters"; }
  const RootedGraph& graph() const override { return g_; }
  int cap() const override { return 11; }
  Element origin() const override { return wrap(0, TaggedCluster{}); }
  std::vector<Element> enumerate_layer(int n) const override {
    std::vector<Element> out;
    for (auto& c : enum_tagged_clusters(n)) out.push_back(wrap(n, c));
    return out;
  }
  Element edge_map(const VertexLabel& source, int key, const Element& x) const override {
    auto [n, c] = split_payload(x.payload);
    if (cluster_vertex(n, c) != source.value()) throw DomainError("element does not lie over the source vertex");
    const long to = g_.target(source, key).value();
    return wrap(n + 1, cluster_edge(n, to > source.value() ? ClusterEdge::plus : ClusterEdge::minus, c));
  }
  std::pair<int, VertexLabel> classify(const std::string& payload) const override {
    auto [n, c] = split_payload(payload);
    return {n, VertexLabel::integer(cluster_vertex(n, c))};
  }
  Element wrap(int n, const TaggedCluster& c) const {
    return Element{id(), n, VertexLabel::integer(cluster_vertex(n, c)), join_payload(n, c)};
  }

 private:
  RootedGraph g_;
};

class ClusterSequence : public CatalanSequence {
 public:
  explicit ClusterSequence(std::shared_ptr<const ClusterFamily> f) : f_(std::move(f)) {}
  std::string id() const override { return "clusters"; }
  const PascalFamily& bra() const override { return *f_; }
  const PascalFamily& ket() const override { return *f_; }
  int cap() const override { return 7; }
  std::vector<std::string> members(int n) const override {
    std::vector<std::string> out;
    for (auto& c : enumerate_clusters(n - 1)) out.push_back(cluster_str(c));
    return out;
  }
  std::pair<Element, Element> decompose(int n, const std::string& m) const override {
    auto [C, D] = cluster_braket(n, parse_cluster(m));
    return {f_->wrap(n, C), f_->wrap(n, D)};
  }
  std::string compose(int n, const Element& bra, const Element& ket) const override {
    auto [n1, C] = split_payload(bra.payload);
    auto [n2, D] = split_payload(ket.payload);
    if (n1 != n || n2 != n) throw DomainError("halves are not in layer " + std::to_string(n));
    return cluster_str(cluster_compose(n, C, D));
  }

 private:
  std::shared_ptr<const ClusterFamily> f_;
};

std::shared_ptr<const ClusterFamily> the_family() {
  static const auto f = std::make_shared<const ClusterFamily>();
  return f;
}

}  // namespace

std::shared_ptr<const PascalFamily> cluster_family() { return the_family(); }

std::shared_ptr<const CatalanSequence> cluster_sequence() {
  static const auto s = std::make_shared<const ClusterSequence>(the_family());
  return s;
}

}  // namespace catpascal
