#pragma once

#include "catpascal/label.hpp"
#include "catpascal/numeric.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace catpascal {

struct OutEdge {
  int key;
  VertexLabel target;
};

// A lazily generated, locally finite directed multigraph with a root.  The
// neighbour function may return targets in any order and with repeats
// (multi-edges); out() sorts them by label so that edge keys 0,1,2,... are
// stable.  Copies share the underlying generator.
class RootedGraph {
 public:
  using Neighbours = std::function<std::vector<VertexLabel>(const VertexLabel&)>;

  RootedGraph(std::string descriptor, VertexLabel root, Neighbours neighbours,
              bool undirected);

  const std::string& descriptor() const { return impl_->descriptor; }
  const VertexLabel& root() const { return impl_->root; }
  bool undirected() const { return impl_->undirected; }
  VertexLabel::Kind label_kind() const { return impl_->root.kind(); }

  std::vector<OutEdge> out(const VertexLabel& v) const;
  std::vector<VertexLabel> targets(const VertexLabel& v) const;
  VertexLabel target(const VertexLabel& v, int key) const;

 private:
  struct Impl {
    std::string descriptor;
    VertexLabel root;
    Neighbours neighbours;
    bool undirected;
  };
  std::shared_ptr<const Impl> impl_;
};

// Catalog.
RootedGraph a_inf(long root = 0);
RootedGraph a_inf_inf();
RootedGraph d_inf();
RootedGraph gamma_graph(const std::vector<int>& lambda);
RootedGraph a_tree(const std::vector<int>& lambda);
RootedGraph young();
RootedGraph double_young();
RootedGraph weight_plus(int N);
RootedGraph truncate(const RootedGraph& base, std::set<VertexLabel> forbidden);
RootedGraph directed_cover(const RootedGraph& g);

// Validates lambda (entries >= 0, zeros only in final position) and returns
// it with the empty sequence promoted to (1).
std::vector<int> normalize_lambda(const std::vector<int>& lambda);
// lambda_i for i >= 1, with the final positive entry repeating forever.
int lambda_at(const std::vector<int>& lambda, std::size_t i);

// a_inf | a_inf_inf | d_inf | gamma:2,2,1 | atree:2,2,1 | young | dyoung |
// weightplus:3 | truncate(<spec>;v1,v2,...)
RootedGraph make_graph(const std::string& spec);

struct Walk {
  std::string graph;
  std::vector<int> steps;

  std::size_t length() const { return steps.size(); }
  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk&, const Walk&) = default;
};

VertexLabel endpoint(const RootedGraph& g, const Walk& w);
std::vector<VertexLabel> vertices_along(const RootedGraph& g, const Walk& w);

class CountTable {
 public:
  using Layer = std::map<VertexLabel, BigInt>;

  CountTable() = default;
  explicit CountTable(std::vector<Layer> layers) : layers_(std::move(layers)) {}

  int n_max() const { return static_cast<int>(layers_.size()) - 1; }
  const Layer& layer(int n) const { return layers_.at(static_cast<std::size_t>(n)); }
  BigInt at(int n, const VertexLabel& v) const;
  BigInt layer_total(int n) const;

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  std::vector<Layer> layers_;
};

// Layer-by-layer dynamic programme N(n;w) = sum over edges v->w of N(n-1;v).
// The default version expands each layer in parallel; the serial version is
// the reference implementation.
CountTable layer_counts(const RootedGraph& g, int n_max);
CountTable layer_counts_serial(const RootedGraph& g, int n_max);

// N(2n; root) for n = 0..m.  For undirected graphs this is cross-checked
// against sum_v N(n;v)^2 and an InternalError is raised on disagreement.
std::vector<BigInt> catalan_numbers(const RootedGraph& g, int m);
// sum_v N(n;v)^2 for n = 0..m.
std::vector<BigInt> sum_of_squares(const RootedGraph& g, int m);

std::vector<Walk> enumerate_walks(const RootedGraph& g, int n,
                                  const std::optional<VertexLabel>& target = std::nullopt);

struct WalkConstraint {
  std::set<VertexLabel> forbidden;
  // (trigger, required): every visit to trigger must be followed strictly
  // later by a visit to required.
  std::vector<std::pair<VertexLabel, VertexLabel>> rules;

  bool satisfied_by(const std::vector<VertexLabel>& visits) const;
};

inline constexpr int kEnumerationCap = 10;

BigInt restricted_count(const RootedGraph& g, int n, const VertexLabel& target,
                        const WalkConstraint& c);
BigInt restricted_count_by_enumeration(const RootedGraph& g, int n,
                                       const VertexLabel& target, const WalkConstraint& c);
BigInt restricted_count_by_automaton(const RootedGraph& g, int n, const VertexLabel& target,
                                     const WalkConstraint& c);

}  // namespace catpascal
