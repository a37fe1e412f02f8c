#include "catpascal/pascal.hpp"

#include "catpascal/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace catpascal {

std::string to_json(const Element& e) {
  nlohmann::ordered_json j;
  j["family"] = e.family;
  j["n"] = e.n;
  if (e.vertex.kind() == VertexLabel::Kind::Integer && !e.vertex.marked())
    j["vertex"] = e.vertex.value();
  else
    j["vertex"] = e.vertex.str();
  j["payload"] = e.payload;
  return j.dump();
}

Element PascalFamily::make(const std::string& payload) const {
  auto [n, v] = classify(payload);
  return Element{id(), n, v, payload};
}

std::vector<Element> PascalFamily::layer(int n, const VertexLabel& v) const {
  std::vector<Element> out;
  for (auto& w : enumerate_walks(graph(), n, v)) out.push_back(element_of(*this, w));
  return out;
}

bool VerificationReport::ok() const {
  return origin_ok && std::all_of(cells.begin(), cells.end(), [](auto& c) { return c.ok(); });
}

std::vector<std::size_t> VerificationReport::layer_sizes(int n) const {
  std::vector<std::size_t> s;
  for (auto& c : cells)
    if (c.n == n) s.push_back(c.enumerated);
  return s;
}

std::string VerificationReport::table() const {
  std::ostringstream os;
  os << "n\tvertex\twalks\tsize\tinj\tdisj\tcover\tcard\n";
  for (auto& c : cells) {
    os << c.n << '\t' << c.vertex.str() << '\t' << c.walks.get_str() << '\t' << c.enumerated
       << '\t' << (c.injective ? "ok" : "FAIL") << '\t' << (c.disjoint ? "ok" : "FAIL") << '\t'
       << (c.covers && c.classified ? "ok" : "FAIL") << '\t' << (c.cardinality ? "ok" : "FAIL");
    if (c.witness) os << "\twitness=" << c.witness->payload;
    os << '\n';
  }
  return os.str();
}

namespace {

using Grouped = std::map<VertexLabel, std::vector<Element>>;

Grouped group_layer(const PascalFamily& f, int n) {
  Grouped g;
  for (auto& e : f.enumerate_layer(n)) g[e.vertex].push_back(e);
  return g;
}

struct Image {
  VertexLabel target;
  int key;
  Element value;
  Element source;
};

}  // namespace

VerificationReport verify_family(const PascalFamily& f, int n_max, Exec exec) {
  VerificationReport report;
  report.family = f.id();
  report.n_max = n_max;
  const auto& g = f.graph();
  auto counts = layer_counts(g, n_max);

  auto layer0 = f.enumerate_layer(0);
  auto o = f.origin();
  report.origin_ok = layer0.size() == 1 && layer0.front() == o && o.vertex == g.root() && o.n == 0;

  Grouped prev = group_layer(f, 0);
  for (int n = 1; n <= n_max; ++n) {
    Grouped cur = group_layer(f, n);
    std::vector<std::pair<VertexLabel, const std::vector<Element>*>> sources;
    for (auto& [v, xs] : prev) sources.emplace_back(v, &xs);

    std::vector<std::vector<Image>> per_source(sources.size());
    std::vector<std::string> failures(sources.size());
    auto work = [&](std::size_t i) {
      const auto& [u, xs] = sources[i];
      try {
        auto edges = g.out(u);
        for (auto& e : edges)
          for (auto& x : *xs) per_source[i].push_back({e.target, e.key, f.edge_map(u, e.key, x), x});
      } catch (const std::exception& ex) {
        failures[i] = ex.what();
      }
    };
    const long m = static_cast<long>(sources.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (long i = 0; i < m; ++i) work(static_cast<std::size_t>(i));
    } else {
      for (long i = 0; i < m; ++i) work(static_cast<std::size_t>(i));
    }

    std::map<VertexLabel, std::vector<const Image*>> by_target;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      if (!failures[i].empty()) {
        CellReport c;
        c.n = n;
        c.vertex = sources[i].first;
        c.classified = false;
        c.witness = sources[i].second->front();
        report.cells.push_back(std::move(c));
      }
      for (auto& im : per_source[i]) by_target[im.target].push_back(&im);
    }

    std::set<VertexLabel> vertices;
    for (auto& [v, _] : counts.layer(n)) vertices.insert(v);
    for (auto& [v, _] : cur) vertices.insert(v);
    for (auto& [v, _] : by_target) vertices.insert(v);

    for (auto& v : vertices) {
      CellReport c;
      c.n = n;
      c.vertex = v;
      c.walks = counts.at(n, v);
      auto it = cur.find(v);
      static const std::vector<Element> none;
      const auto& ys = it == cur.end() ? none : it->second;
      c.enumerated = ys.size();
      c.cardinality = BigInt(ys.size()) == c.walks;
      std::set<std::string> yset;
      for (auto& y : ys) {
        if (!yset.insert(y.payload).second) {
          c.cardinality = false;
          c.witness = y;
        }
        if (y.n != n || y.vertex != v) c.classified = false;
      }
      // payload -> edges (source vertex, key) that produced it
      std::map<std::string, std::set<std::pair<VertexLabel, int>>> seen;
      auto bt = by_target.find(v);
      if (bt != by_target.end()) {
        for (auto* im : bt->second) {
          ++c.images;
          auto [cn, cv] = f.classify(im->value.payload);
          if (cn != n || cv != v || im->value.n != n || im->value.vertex != v) {
            c.classified = false;
            if (!c.witness) c.witness = im->value;
          }
          auto& edges = seen[im->value.payload];
          auto edge = std::make_pair(im->source.vertex, im->key);
          if (edges.count(edge)) {
            c.injective = false;
            if (!c.witness) c.witness = im->value;
          } else if (!edges.empty()) {
            c.disjoint = false;
            if (!c.witness) c.witness = im->value;
          }
          edges.insert(edge);
          if (!yset.count(im->value.payload)) {
            c.covers = false;
            if (!c.witness) c.witness = im->value;
          }
        }
      }
      for (auto& y : ys)
        if (!seen.count(y.payload)) {
          c.covers = false;
          if (!c.witness) c.witness = y;
        }
      report.cells.push_back(std::move(c));
    }
    prev = std::move(cur);
  }
  return report;
}

Element element_of(const PascalFamily& f, const Walk& w) {
  Element x = f.origin();
  for (int k : w.steps) x = f.edge_map(x.vertex, k, x);
  return x;
}

WalkIndex::WalkIndex(const PascalFamily& f, int n_max) {
  const auto& g = f.graph();
  layers_.push_back({{f.origin(), Walk{g.descriptor(), {}}}});
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::pair<Element, Walk>> next;
    for (auto& [x, w] : layers_.back())
      for (auto& e : g.out(x.vertex)) {
        Walk w2 = w;
        w2.steps.push_back(e.key);
        next.emplace_back(f.edge_map(x.vertex, e.key, x), std::move(w2));
      }
    layers_.push_back(std::move(next));
  }
  for (std::size_t n = 0; n < layers_.size(); ++n)
    for (std::size_t i = 0; i < layers_[n].size(); ++i) {
      auto key = std::make_pair(static_cast<int>(n), layers_[n][i].first.payload);
      if (!where_.emplace(key, i).second)
        throw CorruptFamily(f.id() + ": two walks reach " + key.second);
    }
}

const Walk& WalkIndex::walk_of(const Element& x) const {
  auto it = where_.find({x.n, x.payload});
  if (it == where_.end()) throw CorruptFamily("no walk reaches " + x.payload);
  return layers_[static_cast<std::size_t>(x.n)][it->second].second;
}

const std::vector<std::pair<Element, Walk>>& WalkIndex::layer(int n) const {
  return layers_.at(static_cast<std::size_t>(n));
}

Walk walk_of(const PascalFamily& f, const Element& x) {
  WalkIndex idx(f, x.n);
  return idx.walk_of(x);
}

Element transport(const PascalFamily& f1, const PascalFamily& f2, const Element& x) {
  if (f1.graph().descriptor() != f2.graph().descriptor())
    throw IncompatibleFamilies(f1.id() + " lives on " + f1.graph().descriptor() + ", " + f2.id() +
                               " on " + f2.graph().descriptor());
  Walk w = walk_of(f1, x);
  return element_of(f2, w);
}

std::pair<Element, Element> catalan_decompose(const CatalanSequence& cs, int n,
                                              const std::string& member) {
  return cs.decompose(n, member);
}

std::string catalan_compose(const CatalanSequence& cs, int n, const Element& bra,
                            const Element& ket) {
  return cs.compose(n, bra, ket);
}

bool BijectionReport::ok() const {
  return std::all_of(layers.begin(), layers.end(), [](auto& l) { return l.ok(); });
}

BijectionReport verify_catalan(const CatalanSequence& cs, int n_max) {
  BijectionReport report;
  report.sequence = cs.id();
  auto closed = catalan_numbers(cs.bra().graph(), n_max);
  for (int n = 0; n <= n_max; ++n) {
    BijectionLayer L;
    L.n = n;
    L.closed_walks = closed[static_cast<std::size_t>(n)];
    std::map<VertexLabel, std::set<std::string>> bra_layer, ket_layer;
    for (auto& e : cs.bra().enumerate_layer(n)) bra_layer[e.vertex].insert(e.payload);
    for (auto& e : cs.ket().enumerate_layer(n)) ket_layer[e.vertex].insert(e.payload);
    for (auto& [v, s] : bra_layer) {
      auto it = ket_layer.find(v);
      if (it != ket_layer.end()) L.pairs += BigInt(s.size()) * BigInt(it->second.size());
    }
    auto members = cs.members(n);
    L.members = members.size();
    std::set<std::pair<std::string, std::string>> images;
    for (auto& m : members) {
      auto [a, b] = cs.decompose(n, m);
      auto fail = [&](bool& flag) {
        flag = false;
        if (!L.witness) L.witness = m;
      };
      if (a.vertex != b.vertex || a.n != n || b.n != n) fail(L.common_vertex);
      if (!bra_layer[a.vertex].count(a.payload) || !ket_layer[b.vertex].count(b.payload))
        fail(L.in_layers);
      if (!images.insert({a.payload, b.payload}).second) fail(L.injective);
      if (cs.compose(n, a, b) != m) fail(L.round_trip);
    }
    report.layers.push_back(std::move(L));
  }
  return report;
}

}  // namespace catpascal
