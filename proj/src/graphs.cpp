#include "catpascal/graphs.hpp"

#include "catpascal/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <omp.h>

namespace catpascal {

RootedGraph::RootedGraph(std::string descriptor, VertexLabel root, Neighbours neighbours,
                         bool undirected)
    : impl_(std::make_shared<const Impl>(
          Impl{std::move(descriptor), std::move(root), std::move(neighbours), undirected})) {}

std::vector<VertexLabel> RootedGraph::targets(const VertexLabel& v) const {
  auto t = impl_->neighbours(v);
  std::stable_sort(t.begin(), t.end());
  return t;
}

std::vector<OutEdge> RootedGraph::out(const VertexLabel& v) const {
  auto t = targets(v);
  std::vector<OutEdge> edges;
  edges.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    edges.push_back({static_cast<int>(i), std::move(t[i])});
  return edges;
}

VertexLabel RootedGraph::target(const VertexLabel& v, int key) const {
  auto t = targets(v);
  if (key < 0 || static_cast<std::size_t>(key) >= t.size())
    throw DomainError("edge key " + std::to_string(key) + " out of range at " + v.str());
  return t[static_cast<std::size_t>(key)];
}

std::vector<int> normalize_lambda(const std::vector<int>& lambda) {
  if (lambda.empty()) return {1};
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) throw InvalidSpec("negative entry in lambda");
    if (lambda[i] == 0 && i + 1 != lambda.size())
      throw InvalidSpec("zero entry in non-final position of lambda");
  }
  return lambda;
}

int lambda_at(const std::vector<int>& lambda, std::size_t i) {
  if (i == 0) throw DomainError("lambda is indexed from 1");
  if (i <= lambda.size()) return lambda[i - 1];
  return lambda.back();
}

namespace {

std::string join_ints(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace

RootedGraph a_inf(long root) {
  std::string d = root == 0 ? "a_inf" : "a_inf@" + std::to_string(root);
  return RootedGraph(
      d, VertexLabel::integer(root),
      [](const VertexLabel& v) {
        long x = v.value();
        std::vector<VertexLabel> t;
        if (x > 0) t.push_back(VertexLabel::integer(x - 1));
        t.push_back(VertexLabel::integer(x + 1));
        return t;
      },
      true);
}

RootedGraph a_inf_inf() {
  return RootedGraph(
      "a_inf_inf", VertexLabel::integer(0),
      [](const VertexLabel& v) {
        long x = v.value();
        return std::vector<VertexLabel>{VertexLabel::integer(x - 1), VertexLabel::integer(x + 1)};
      },
      true);
}

RootedGraph d_inf() {
  return RootedGraph(
      "d_inf", VertexLabel::integer(0),
      [](const VertexLabel& v) {
        long x = v.value();
        if (x == 0) return std::vector<VertexLabel>{VertexLabel::integer(1)};
        if (x == 1)
          return std::vector<VertexLabel>{VertexLabel::integer(0), VertexLabel::primed(0),
                                          VertexLabel::integer(2)};
        return std::vector<VertexLabel>{VertexLabel::integer(x - 1), VertexLabel::integer(x + 1)};
      },
      true);
}

RootedGraph gamma_graph(const std::vector<int>& lambda_in) {
  auto lambda = normalize_lambda(lambda_in);
  const long k = static_cast<long>(lambda.size());
  return RootedGraph(
      "gamma:" + join_ints(lambda), VertexLabel::integer(0),
      [lambda, k](const VertexLabel& v) {
        long x = v.value();
        std::vector<VertexLabel> t;
        if (x < k - 1)
          t.assign(static_cast<std::size_t>(lambda[static_cast<std::size_t>(x)]),
                   VertexLabel::integer(x + 1));
        else
          t.assign(static_cast<std::size_t>(lambda.back()), VertexLabel::integer(x));
        return t;
      },
      false);
}

RootedGraph a_tree(const std::vector<int>& lambda_in) {
  auto lambda = normalize_lambda(lambda_in);
  return RootedGraph(
      "atree:" + join_ints(lambda), VertexLabel::sequence({}),
      [lambda](const VertexLabel& v) {
        const auto& d = v.data();
        std::vector<VertexLabel> t;
        if (!d.empty()) t.push_back(VertexLabel::sequence({d.begin(), d.end() - 1}));
        int children = lambda_at(lambda, d.size() + 1);
        for (int c = 1; c <= children; ++c) {
          auto e = d;
          e.push_back(c);
          t.push_back(VertexLabel::sequence(std::move(e)));
        }
        return t;
      },
      true);
}

namespace {

std::vector<std::vector<int>> removable(const std::vector<int>& p) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 < p.size() && p[i + 1] == p[i]) continue;
    auto q = p;
    --q[i];
    if (q[i] == 0) q.pop_back();
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<std::vector<int>> addable(const std::vector<int>& p) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i <= p.size(); ++i) {
    int here = i < p.size() ? p[i] : 0;
    if (i > 0 && p[i - 1] <= here) continue;
    auto q = p;
    if (i == q.size())
      q.push_back(1);
    else
      ++q[i];
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

RootedGraph young() {
  return RootedGraph(
      "young", VertexLabel::partition({}),
      [](const VertexLabel& v) {
        std::vector<VertexLabel> t;
        for (auto& q : removable(v.data())) t.push_back(VertexLabel::partition(q));
        for (auto& q : addable(v.data())) t.push_back(VertexLabel::partition(q));
        return t;
      },
      true);
}

RootedGraph double_young() {
  return RootedGraph(
      "dyoung", VertexLabel::partition({}),
      [](const VertexLabel& v) {
        std::vector<VertexLabel> t;
        const auto& p = v.data();
        if (!v.marked()) {
          t.push_back(VertexLabel::partition(p, true));
          for (auto& q : removable(p)) t.push_back(VertexLabel::partition(q, true));
        } else {
          t.push_back(VertexLabel::partition(p, false));
          for (auto& q : addable(p)) t.push_back(VertexLabel::partition(q, false));
        }
        return t;
      },
      true);
}

RootedGraph weight_plus(int N) {
  if (N < 1) throw InvalidSpec("weightplus needs N >= 1");
  const std::size_t r = static_cast<std::size_t>(N - 1);
  return RootedGraph(
      "weightplus:" + std::to_string(N), VertexLabel::weight(std::vector<int>(r, 0)),
      [r](const VertexLabel& v) {
        const auto& x = v.data();
        std::vector<VertexLabel> t;
        for (std::size_t i = 0; i < r; ++i) {
          if (i > 0 && x[i] + 1 > x[i - 1]) continue;
          auto y = x;
          ++y[i];
          t.push_back(VertexLabel::weight(std::move(y)));
        }
        if (r == 0 || x[r - 1] >= 1) {
          auto y = x;
          for (auto& c : y) --c;
          t.push_back(VertexLabel::weight(std::move(y)));
        }
        return t;
      },
      false);
}

RootedGraph truncate(const RootedGraph& base, std::set<VertexLabel> forbidden) {
  if (forbidden.count(base.root())) throw InvalidSpec("cannot truncate the root");
  std::string d = "truncate(" + base.descriptor() + ";";
  bool first = true;
  for (auto& f : forbidden) {
    if (!first) d += ',';
    d += f.str();
    first = false;
  }
  d += ")";
  return RootedGraph(
      d, base.root(),
      [base, forbidden](const VertexLabel& v) {
        auto t = base.targets(v);
        std::erase_if(t, [&](const VertexLabel& w) { return forbidden.count(w) > 0; });
        return t;
      },
      base.undirected());
}

VertexLabel endpoint(const RootedGraph& g, const Walk& w) {
  VertexLabel v = g.root();
  for (int k : w.steps) v = g.target(v, k);
  return v;
}

std::vector<VertexLabel> vertices_along(const RootedGraph& g, const Walk& w) {
  std::vector<VertexLabel> vs{g.root()};
  for (int k : w.steps) vs.push_back(g.target(vs.back(), k));
  return vs;
}

RootedGraph directed_cover(const RootedGraph& g) {
  return RootedGraph(
      "cover(" + g.descriptor() + ")", VertexLabel::walk({}),
      [g](const VertexLabel& p) {
        Walk w{g.descriptor(), p.data()};
        auto n = g.targets(endpoint(g, w)).size();
        std::vector<VertexLabel> t;
        for (std::size_t i = 0; i < n; ++i) {
          auto s = p.data();
          s.push_back(static_cast<int>(i));
          t.push_back(VertexLabel::walk(std::move(s)));
        }
        return t;
      },
      false);
}

namespace {

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  if (s.empty()) return out;
  while (true) {
    auto comma = s.find(',');
    auto tok = s.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw InvalidSpec("bad integer list: " + std::string(s));
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

// Splits "a,b,(c,d),e" at top-level commas.
std::vector<std::string> split_top(std::string_view s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '<') ++depth;
    if (c == ')' || c == ']' || c == '>') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

}  // namespace

RootedGraph make_graph(const std::string& spec) {
  std::string_view s(spec);
  if (s == "a_inf") return a_inf();
  if (s == "a_inf_inf") return a_inf_inf();
  if (s == "d_inf") return d_inf();
  if (s == "young") return young();
  if (s == "dyoung") return double_young();
  auto with_prefix = [&](std::string_view p) { return s.substr(0, p.size()) == p; };
  if (with_prefix("gamma:")) return gamma_graph(parse_int_list(s.substr(6)));
  if (with_prefix("atree:")) return a_tree(parse_int_list(s.substr(6)));
  if (with_prefix("weightplus:")) {
    auto v = parse_int_list(s.substr(11));
    if (v.size() != 1) throw InvalidSpec("weightplus takes one integer");
    return weight_plus(v[0]);
  }
  if (with_prefix("truncate(") && s.back() == ')') {
    auto body = s.substr(9, s.size() - 10);
    int depth = 0;
    std::size_t semi = std::string_view::npos;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (body[i] == ';' && depth == 0) semi = i;
    }
    if (semi == std::string_view::npos) throw InvalidSpec("truncate needs ';'");
    auto base = make_graph(std::string(body.substr(0, semi)));
    std::set<VertexLabel> forbidden;
    for (auto& tok : split_top(body.substr(semi + 1)))
      forbidden.insert(parse_label(tok, base.label_kind()));
    return truncate(base, std::move(forbidden));
  }
  throw InvalidSpec("unknown graph spec: " + spec);
}

BigInt CountTable::at(int n, const VertexLabel& v) const {
  if (n < 0 || n > n_max()) return 0;
  auto& l = layer(n);
  auto it = l.find(v);
  return it == l.end() ? BigInt(0) : it->second;
}

BigInt CountTable::layer_total(int n) const {
  BigInt t = 0;
  for (auto& [v, c] : layer(n)) t += c;
  return t;
}

CountTable layer_counts_serial(const RootedGraph& g, int n_max) {
  std::vector<CountTable::Layer> layers;
  layers.push_back({{g.root(), BigInt(1)}});
  for (int n = 1; n <= n_max; ++n) {
    CountTable::Layer next;
    for (auto& [v, c] : layers.back())
      for (auto& t : g.targets(v)) next[t] += c;
    layers.push_back(std::move(next));
  }
  return CountTable(std::move(layers));
}

CountTable layer_counts(const RootedGraph& g, int n_max) {
  std::vector<CountTable::Layer> layers;
  layers.push_back({{g.root(), BigInt(1)}});
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::pair<VertexLabel, BigInt>> prev(layers.back().begin(), layers.back().end());
    const long m = static_cast<long>(prev.size());
    CountTable::Layer next;
#pragma omp parallel
    {
      CountTable::Layer local;
#pragma omp for schedule(dynamic, 16) nowait
      for (long i = 0; i < m; ++i) {
        const auto& [v, c] = prev[static_cast<std::size_t>(i)];
        for (auto& t : g.targets(v)) local[t] += c;
      }
#pragma omp critical(catpascal_layer_merge)
      for (auto& [v, c] : local) next[v] += c;
    }
    layers.push_back(std::move(next));
  }
  return CountTable(std::move(layers));
}

std::vector<BigInt> sum_of_squares(const RootedGraph& g, int m) {
  auto t = layer_counts(g, m);
  std::vector<BigInt> out;
  for (int n = 0; n <= m; ++n) {
    BigInt s = 0;
    for (auto& [v, c] : t.layer(n)) s += c * c;
    out.push_back(s);
  }
  return out;
}

std::vector<BigInt> catalan_numbers(const RootedGraph& g, int m) {
  auto t = layer_counts(g, 2 * m);
  std::vector<BigInt> out;
  for (int n = 0; n <= m; ++n) out.push_back(t.at(2 * n, g.root()));
  if (g.undirected()) {
    for (int n = 0; n <= m; ++n) {
      BigInt s = 0;
      for (auto& [v, c] : t.layer(n)) s += c * c;
      if (s != out[static_cast<std::size_t>(n)])
        throw InternalError("sum of squares disagrees with closed walks on " + g.descriptor());
    }
  }
  return out;
}

std::vector<Walk> enumerate_walks(const RootedGraph& g, int n,
                                  const std::optional<VertexLabel>& target) {
  std::vector<Walk> result;
  struct Frame {
    VertexLabel v;
    std::vector<VertexLabel> next;
    std::size_t i;
  };
  std::vector<int> steps;
  std::vector<Frame> stack;
  if (n < 0) return result;
  if (n == 0) {
    if (!target || *target == g.root()) result.push_back({g.descriptor(), {}});
    return result;
  }
  stack.push_back({g.root(), g.targets(g.root()), 0});
  while (!stack.empty()) {
    auto& f = stack.back();
    if (f.i == f.next.size()) {
      stack.pop_back();
      if (!steps.empty()) steps.pop_back();
      continue;
    }
    std::size_t k = f.i++;
    VertexLabel w = f.next[k];
    steps.push_back(static_cast<int>(k));
    if (static_cast<int>(steps.size()) == n) {
      if (!target || *target == w) result.push_back({g.descriptor(), steps});
      steps.pop_back();
    } else {
      auto nx = g.targets(w);
      stack.push_back({std::move(w), std::move(nx), 0});
    }
  }
  return result;
}

bool WalkConstraint::satisfied_by(const std::vector<VertexLabel>& visits) const {
  for (auto& v : visits)
    if (forbidden.count(v)) return false;
  for (auto& [trigger, required] : rules) {
    bool seen_required = false;
    for (auto it = visits.rbegin(); it != visits.rend(); ++it) {
      if (*it == trigger && !seen_required) return false;
      if (*it == required) seen_required = true;
    }
  }
  return true;
}

BigInt restricted_count_by_enumeration(const RootedGraph& g, int n, const VertexLabel& target,
                                       const WalkConstraint& c) {
  BigInt count = 0;
  for (auto& w : enumerate_walks(g, n, target))
    if (c.satisfied_by(vertices_along(g, w))) ++count;
  return count;
}

BigInt restricted_count_by_automaton(const RootedGraph& g, int n, const VertexLabel& target,
                                     const WalkConstraint& c) {
  if (c.rules.size() > 64) throw DomainError("at most 64 conditional rules supported");
  auto visit = [&](const VertexLabel& v, std::uint64_t pending) {
    for (std::size_t i = 0; i < c.rules.size(); ++i)
      if (c.rules[i].second == v) pending &= ~(std::uint64_t{1} << i);
    for (std::size_t i = 0; i < c.rules.size(); ++i)
      if (c.rules[i].first == v) pending |= std::uint64_t{1} << i;
    return pending;
  };
  using State = std::pair<VertexLabel, std::uint64_t>;
  std::map<State, BigInt> cur;
  if (c.forbidden.count(g.root())) return 0;
  cur[{g.root(), visit(g.root(), 0)}] = 1;
  for (int step = 0; step < n; ++step) {
    std::map<State, BigInt> next;
    for (auto& [state, count] : cur)
      for (auto& t : g.targets(state.first)) {
        if (c.forbidden.count(t)) continue;
        next[{t, visit(t, state.second)}] += count;
      }
    cur = std::move(next);
  }
  auto it = cur.find({target, 0});
  return it == cur.end() ? BigInt(0) : it->second;
}

BigInt restricted_count(const RootedGraph& g, int n, const VertexLabel& target,
                        const WalkConstraint& c) {
  if (n <= kEnumerationCap)
    return restricted_count_by_enumeration(g, n, target, c);
  return restricted_count_by_automaton(g, n, target, c);
}

}  // namespace catpascal
