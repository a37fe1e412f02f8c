#pragma once

#include "catpascal/pascal.hpp"
#include "catpascal/words.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace catpascal {

// Temperley-Lieb diagrams.  Points are indexed in disk order: north 1..n
// from west to east, then south n..1, so that arcs never cross in the
// circular order.  partner[i] is the other end of the arc at point i.
struct PairDiagram {
  int north = 0;
  int south = 0;
  std::vector<int> partner;

  int size() const { return north + south; }
  int north_point(int i) const { return i; }             // i in 0..north-1, west to east
  int south_point(int j) const { return size() - 1 - j; }  // j in 0..south-1, west to east
  int propagating() const;
  Word word() const;
  static PairDiagram from_word(const Word& w, int north);

  friend bool operator==(const PairDiagram&, const PairDiagram&) = default;
};

// partner[i] = -1 marks a propagating point.
struct HalfDiagram {
  std::vector<int> partner;

  int size() const { return static_cast<int>(partner.size()); }
  int propagating() const;
  Word word() const;
  static HalfDiagram from_word(const Word& w);

  friend bool operator==(const HalfDiagram&, const HalfDiagram&) = default;
};

std::vector<PairDiagram> enum_ncpp(int n);
std::vector<HalfDiagram> enum_tl_halves(int n);

std::pair<HalfDiagram, HalfDiagram> tl_cut(const PairDiagram& d);
PairDiagram tl_join(const HalfDiagram& north, const HalfDiagram& south);

enum class TLEdge { up, down };
HalfDiagram tl_edge(TLEdge kind, const HalfDiagram& h);

// Brackets.
enum class BracketEdge { open, close };
Word bracket_edge(BracketEdge e, const Word& s);
std::pair<Word, Word> bracket_decompose(const Word& s);
Word bracket_compose(const Word& left, const Word& right);

// Rooted planar trees.  Children are listed in anticlockwise order as seen
// from the root.  colour is the colour of the node itself (0 when the tree
// is uncoloured) and is written as the mark of the open bracket entering it.
struct PlanarTree {
  std::vector<PlanarTree> children;
  int colour = 0;

  int edges() const;
  friend bool operator==(const PlanarTree&, const PlanarTree&) = default;
};

// branches[i] is the ordered forest hanging off trunk vertex i,
// i = 0..l, where l is the trunk length; colours[i-1] is the colour of
// trunk vertex i.
struct HalfTree {
  std::vector<std::vector<PlanarTree>> branches{{}};
  std::vector<int> colours;

  int trunk() const { return static_cast<int>(branches.size()) - 1; }
  int edges() const;
  friend bool operator==(const HalfTree&, const HalfTree&) = default;
};

Word tree_encode(const PlanarTree& t);
PlanarTree tree_decode(const Word& w);
Word halftree_encode(const HalfTree& h);
HalfTree halftree_decode(const Word& w);
std::vector<PlanarTree> mirror(const std::vector<PlanarTree>& forest);

enum class TreeEdge { plus, minus };
HalfTree halftree_edge(TreeEdge e, const HalfTree& h, int colour = 0);

std::pair<HalfTree, HalfTree> tree_cut(const PlanarTree& t);
PlanarTree tree_splice(const HalfTree& right, const HalfTree& left);

std::vector<PlanarTree> enum_planar_trees(int edges);
std::vector<HalfTree> enum_half_trees(int n);

// The dual tree of a full TL diagram: one vertex per region of the
// complement, one edge per arc, rooted at the region touching the west
// side.
PlanarTree tl_region_tree(const PairDiagram& d);

// Unit interval-point orders.  less[i][j] means element i < element j.
struct IntervalPointOrder {
  std::vector<bool> point;
  std::vector<std::vector<bool>> less;

  int size() const { return static_cast<int>(point.size()); }
  int points() const;
  int intervals() const { return size() - points(); }
  // Number of boundary symbols: two per interval, one per point.
  int degree() const { return 2 * intervals() + points(); }
};

bool is_uipo(const IntervalPointOrder& x);
IntervalPointOrder interval_from_brackets(const Word& s);
Word interval_to_brackets(const IntervalPointOrder& x);
IntervalPointOrder interval_combine(const IntervalPointOrder& x1, const IntervalPointOrder& x2);

enum class IntervalEdge { plus, minus };
IntervalPointOrder interval_edge(IntervalEdge e, const IntervalPointOrder& x);

// All interval-point orders of degree n up to isomorphism, built from
// arrangements of unit intervals and points on the line.
std::vector<IntervalPointOrder> enum_interval_layer(int n);
std::vector<IntervalPointOrder> enum_interval_orders(int n);

std::string interval_str(const IntervalPointOrder& x);

// Noncrossing partitions; blocks sorted, each block sorted.
using NoncrossingPartition = std::vector<std::vector<int>>;

std::vector<NoncrossingPartition> enum_noncrossing_partitions(int n);
// Points of the pair diagram are the 2n boundary points in disk order.
NoncrossingPartition ncp_from_ncpp(const PairDiagram& d);
PairDiagram ncpp_from_ncp(const NoncrossingPartition& p, int n);
std::string ncp_str(const NoncrossingPartition& p);
NoncrossingPartition parse_ncp(const std::string& s);

// Families on (A_inf, 0).  Every payload is the standard bracket word of
// the element.
std::shared_ptr<const PascalFamily> tl_family();
std::shared_ptr<const PascalFamily> bracket_family();
std::shared_ptr<const PascalFamily> tree_family();
std::shared_ptr<const PascalFamily> interval_family();
std::shared_ptr<const PascalFamily> ncp_family();

std::shared_ptr<const CatalanSequence> tl_sequence();
std::shared_ptr<const CatalanSequence> bracket_sequence();
std::shared_ptr<const CatalanSequence> tree_sequence();
std::shared_ptr<const CatalanSequence> interval_sequence();
std::shared_ptr<const CatalanSequence> ncp_sequence();

}  // namespace catpascal
