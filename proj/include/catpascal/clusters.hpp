#pragma once

#include "catpascal/pascal.hpp"

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catpascal {

// An almost positive root of type A: either the negative simple root -a_i
// (neg, i == j), possibly tagged, or the positive root a_i + ... + a_j.
struct APRoot {
  bool neg = false;
  int i = 1;
  int j = 1;
  bool tagged = false;

  static APRoot negative(int i, bool tagged = false) { return {true, i, i, tagged}; }
  static APRoot positive(int i, int j) { return {false, i, j, false}; }
  bool contains(int k) const { return !neg && i <= k && k <= j; }

  friend bool operator==(const APRoot&, const APRoot&) = default;
  friend std::strong_ordering operator<=>(const APRoot& a, const APRoot& b);
};

using Cluster = std::vector<APRoot>;  // sorted

struct TaggedCluster {
  Cluster roots;
  bool global = false;

  int tags() const;
  friend auto operator<=>(const TaggedCluster&, const TaggedCluster&) = default;
};

std::string root_str(const APRoot& a);
APRoot parse_root(std::string_view text);
std::string cluster_str(const Cluster& c);
Cluster parse_cluster(std::string_view text);
std::string tagged_str(const TaggedCluster& c);
TaggedCluster parse_tagged(std::string_view text);

std::vector<APRoot> almost_positive_roots(int rank);
APRoot sigma(int i, const APRoot& a);
// c-compatibility for c = s_rank ... s_1.
bool compatible(int rank, const APRoot& a, const APRoot& b);
std::vector<Cluster> enumerate_clusters(int rank);

// Vertex of a tagged cluster in layer n of A_inf.
long cluster_vertex(int n, const TaggedCluster& c);
std::vector<TaggedCluster> enum_tagged_clusters(int n);

// X a cluster of type A_{n-1}; the halves lie in layer n.
std::pair<TaggedCluster, TaggedCluster> cluster_braket(int n, const Cluster& X);
Cluster cluster_compose(int n, const TaggedCluster& C, const TaggedCluster& D);

enum class ClusterEdge { plus, minus };
// phi_c^+ or phi_c^- on an element of layer n.
TaggedCluster cluster_edge(int n, ClusterEdge e, const TaggedCluster& c);

// Family payloads are "<layer>:<tagged cluster>"; the same tagged cluster
// can sit in two consecutive layers.
std::shared_ptr<const PascalFamily> cluster_family();
std::shared_ptr<const CatalanSequence> cluster_sequence();

}  // namespace catpascal
