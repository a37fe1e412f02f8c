#pragma once

#include "catpascal/pascal.hpp"

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catpascal {

// ---------------------------------------------------------------- plain partitions

using Block = std::vector<int>;
using PlainPartition = std::vector<Block>;  // blocks sorted, sorted by minimum

std::vector<PlainPartition> enum_set_partitions(int n);
BigInt bell(int n);
// Partitions of {1..n} into pairs; empty when n is odd.
std::vector<PlainPartition> enum_pair_partitions(int n);

// ---------------------------------------------------------------- two-row partitions

// A point of n ∪ n'.  Unprimed points sort before primed ones.
struct Pt {
  bool primed = false;
  int v = 0;
  friend auto operator<=>(const Pt&, const Pt&) = default;
};

using TwoRowPartition = std::vector<std::vector<Pt>>;

TwoRowPartition canonical(TwoRowPartition p);
std::string partition_str(const TwoRowPartition& p);
TwoRowPartition parse_partition(std::string_view text);

// 𝒞_p(n) and 𝒞_p(n+) (n+1 and (n+1)' in one part).
std::vector<TwoRowPartition> enum_cp(int n);
std::vector<TwoRowPartition> enum_cp_plus(int n);
// Pair partitions of n ∪ n'.
std::vector<TwoRowPartition> enum_cbr(int n);

// ---------------------------------------------------------------- tableaux

using Shape = std::vector<int>;
using Tableau = std::vector<std::vector<int>>;  // rows, top first

Shape shape_of(const Tableau& t);
bool is_standard_tableau(const Tableau& t);
std::vector<Tableau> enum_syt(const Shape& s);
std::vector<Shape> partitions_of(int n, int max_rows = -1);
BigInt hook_dim(const Shape& s);
std::vector<int> row_word(const Tableau& t);
std::string tableau_str(const Tableau& t);
Tableau parse_tableau(std::string_view text);

// perm[i-1] = image of i, for a permutation of {1..l}.
using Permutation = std::vector<int>;
std::pair<Tableau, Tableau> rs_insert(const Permutation& p);
Permutation rs_inverse(const Tableau& P, const Tableau& Q);

// Fixed bijection {(k, U) : 1 <= k <= |nu|+1, U in SYT(nu)} <-> SYT of the
// shapes covering nu.  Both sides are ranked and paired by rank: (k, U) by k
// then row word of U; targets by shape (lexicographically decreasing) then
// row word.
class BranchingBijection {
 public:
  explicit BranchingBijection(Shape nu);
  const Shape& nu() const { return nu_; }
  std::size_t size() const { return left_.size(); }
  Tableau forward(int k, const Tableau& U) const;
  std::pair<int, Tableau> backward(const Tableau& T) const;
  const std::vector<std::pair<int, Tableau>>& sources() const { return left_; }
  const std::vector<Tableau>& targets() const { return right_; }

 private:
  Shape nu_;
  std::vector<std::pair<int, Tableau>> left_;
  std::vector<Tableau> right_;
};

std::shared_ptr<const BranchingBijection> branching_bijection(const Shape& nu);

// ---------------------------------------------------------------- half partitions

// Non-propagating blocks plus propagating blocks, each list ordered by
// minimum.  For the Bell family in odd layers the propagating block holding
// the largest point is the distinguished one.
struct HalfPartition {
  PlainPartition nonprop;
  PlainPartition prop;
  friend auto operator<=>(const HalfPartition&, const HalfPartition&) = default;
};

int ground_size(const HalfPartition& h);
void normalize(HalfPartition& h);

struct HalfElement {
  HalfPartition sigma;
  Tableau T;
  friend auto operator<=>(const HalfElement&, const HalfElement&) = default;
};

// "<non-propagating> ; <propagating> ; <tableau>", blocks joined by '|',
// tableau rows by '/', "∅" for an empty list.
std::string half_str(const HalfElement& e);
HalfElement parse_half(std::string_view text);

// Bell family on the doubled Young graph.
VertexLabel bell_vertex(const HalfElement& e, int* layer = nullptr);
HalfElement bell_edge(const VertexLabel& from, const VertexLabel& to, const HalfElement& e);
std::vector<HalfElement> enum_bell_layer(int m);
std::pair<HalfElement, HalfElement> bell_braket(int m, const TwoRowPartition& p);
TwoRowPartition bell_compose(int m, const HalfElement& bra, const HalfElement& ket);

// Brauer family on the Young graph.
VertexLabel brauer_vertex(const HalfElement& e, int* layer = nullptr);
HalfElement brauer_edge(const VertexLabel& from, const VertexLabel& to, const HalfElement& e);
std::vector<HalfElement> enum_brauer_layer(int n);
std::pair<HalfElement, HalfElement> brauer_braket(int n, const TwoRowPartition& p);
TwoRowPartition brauer_compose(int n, const HalfElement& bra, const HalfElement& ket);

std::shared_ptr<const PascalFamily> bell_family();
std::shared_ptr<const PascalFamily> brauer_family();
std::shared_ptr<const CatalanSequence> bell_sequence();
std::shared_ptr<const CatalanSequence> brauer_sequence();

// ---------------------------------------------------------------- weight lattice

struct WeightDimRow {
  Shape lambda;
  VertexLabel vertex;
  BigInt walks = 0;
  BigInt hooks = 0;
};

struct WeightDimReport {
  int n = 0;
  std::vector<WeightDimRow> rows;
  bool ok() const;
};

// Walk counts on the dominant A2 weight lattice against the hook law, for
// every partition of n with at most three rows.
WeightDimReport weight_dim_check(int n);

}  // namespace catpascal
