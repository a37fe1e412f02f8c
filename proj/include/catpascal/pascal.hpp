#pragma once

#include "catpascal/graphs.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace catpascal {

struct Element {
  std::string family;
  int n = 0;
  VertexLabel vertex;
  std::string payload;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

std::string to_json(const Element& e);

class PascalFamily {
 public:
  virtual ~PascalFamily() = default;

  virtual std::string id() const = 0;
  virtual const RootedGraph& graph() const = 0;
  virtual int cap() const = 0;

  // The single layer-0 element, lying over the root.
  virtual Element origin() const = 0;
  // Every element of layer n, built directly from the definition of the
  // family (never from the edge maps).  Order is unspecified.
  virtual std::vector<Element> enumerate_layer(int n) const = 0;
  // The injection attached to edge `key` of out(source), applied to an
  // element of layer n over `source`; the result lies in layer n+1.
  virtual Element edge_map(const VertexLabel& source, int key, const Element& x) const = 0;
  // (n, vertex) of a payload.
  virtual std::pair<int, VertexLabel> classify(const std::string& payload) const = 0;
  virtual std::string render(const Element& x) const { return x.payload; }

  Element make(const std::string& payload) const;
  // Layer n over v, ordered as the image of the lexicographic walk order.
  std::vector<Element> layer(int n, const VertexLabel& v) const;
};

struct CellReport {
  int n = 0;
  VertexLabel vertex;
  BigInt walks = 0;
  std::size_t enumerated = 0;
  std::size_t images = 0;
  bool injective = true;
  bool disjoint = true;
  bool covers = true;
  bool cardinality = true;
  bool classified = true;
  std::optional<Element> witness;

  bool ok() const { return injective && disjoint && covers && cardinality && classified; }
};

struct VerificationReport {
  std::string family;
  int n_max = 0;
  bool origin_ok = true;
  std::vector<CellReport> cells;

  bool ok() const;
  std::vector<std::size_t> layer_sizes(int n) const;
  std::string table() const;
};

enum class Exec { serial, parallel };

VerificationReport verify_family(const PascalFamily& f, int n_max, Exec exec = Exec::parallel);

Element element_of(const PascalFamily& f, const Walk& w);

// All layer-k elements for k <= n_max with the walk reaching each one.
// Throws CorruptFamily if two walks produce the same element.
class WalkIndex {
 public:
  WalkIndex(const PascalFamily& f, int n_max);
  const Walk& walk_of(const Element& x) const;
  const std::vector<std::pair<Element, Walk>>& layer(int n) const;

 private:
  std::vector<std::vector<std::pair<Element, Walk>>> layers_;
  std::map<std::pair<int, std::string>, std::size_t> where_;
};

Walk walk_of(const PascalFamily& f, const Element& x);
Element transport(const PascalFamily& f1, const PascalFamily& f2, const Element& x);

class CatalanSequence {
 public:
  virtual ~CatalanSequence() = default;

  virtual std::string id() const = 0;
  virtual const PascalFamily& bra() const = 0;
  virtual const PascalFamily& ket() const = 0;
  virtual int cap() const = 0;
  // Members of size n (closed walks of length 2n), enumerated directly.
  virtual std::vector<std::string> members(int n) const = 0;
  virtual std::pair<Element, Element> decompose(int n, const std::string& member) const = 0;
  virtual std::string compose(int n, const Element& bra, const Element& ket) const = 0;
  virtual std::string render(int, const std::string& member) const { return member; }
};

std::pair<Element, Element> catalan_decompose(const CatalanSequence& cs, int n,
                                              const std::string& member);
std::string catalan_compose(const CatalanSequence& cs, int n, const Element& bra,
                            const Element& ket);

struct BijectionLayer {
  int n = 0;
  std::size_t members = 0;
  BigInt pairs = 0;
  BigInt closed_walks = 0;
  bool common_vertex = true;
  bool in_layers = true;
  bool round_trip = true;
  bool injective = true;
  std::optional<std::string> witness;

  bool ok() const {
    return common_vertex && in_layers && round_trip && injective && BigInt(members) == pairs &&
           pairs == closed_walks;
  }
};

struct BijectionReport {
  std::string sequence;
  std::vector<BijectionLayer> layers;
  bool ok() const;
};

BijectionReport verify_catalan(const CatalanSequence& cs, int n_max);

}  // namespace catpascal
