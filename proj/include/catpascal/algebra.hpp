#pragma once

#include "catpascal/graphs.hpp"
#include "catpascal/numeric.hpp"
#include "catpascal/typea.hpp"

#include <compare>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catpascal {

// Polynomial in the loop parameters: variable 0 is δ, 1 is δ′ and 2+j is
// the contour loop parameter δ_j.
class ScalarPoly {
 public:
  using Monomial = std::vector<int>;  // exponents, no trailing zeros

  ScalarPoly() = default;
  ScalarPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit ScalarPoly(const BigInt& c);

  static ScalarPoly var(int index, int power = 1);
  static ScalarPoly delta(int power = 1) { return var(0, power); }
  static ScalarPoly delta_prime() { return var(1); }
  static ScalarPoly delta_j(int j) { return var(2 + j); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }

  ScalarPoly& operator+=(const ScalarPoly& o);
  ScalarPoly& operator-=(const ScalarPoly& o);
  ScalarPoly& operator*=(const ScalarPoly& o);
  friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
  friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
  friend ScalarPoly operator*(ScalarPoly a, const ScalarPoly& b) { return a *= b; }
  ScalarPoly operator-() const { return ScalarPoly(0) - *this; }
  friend bool operator==(const ScalarPoly&, const ScalarPoly&) = default;

  // values[i] substitutes variable i; missing variables count as zero.
  Rational evaluate(const std::vector<Rational>& values) const;
  // Graded order, highest degree first.
  std::string str() const;

 private:
  std::map<Monomial, BigInt> terms_;
};

// A diagram with `top` north points and `bottom` south points.  Point i < top
// is north point i+1, point top+j is south point j+1.  block[p] names the part
// of point p and deco[b] the decoration of part b.  Canonical form numbers
// the parts in order of first appearance.
struct Diagram {
  int top = 0;
  int bottom = 0;
  std::vector<int> block;
  std::vector<int> deco;

  void canonicalize();
  int parts() const { return static_cast<int>(deco.size()); }
  int propagating() const;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;
};

enum class AlgebraKind { tl, blob, partition, brauer, dn, contour };

struct AlgebraSpec {
  AlgebraKind kind = AlgebraKind::tl;
  int k = 0;
  int d = 1;
  bool cyclotomic = false;

  std::string id() const;
  int cap() const;
  bool planar() const;
  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

// "tl", "blob", "partition", "brauer", "dn", "contour:k,d" or
// "contour:k,d,cyclotomic".
AlgebraSpec parse_algebra(std::string_view text);

struct AlgebraElement {
  AlgebraSpec algebra;
  int n = 0;
  std::map<Diagram, ScalarPoly> terms;

  void add(const Diagram& d, const ScalarPoly& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

std::vector<Diagram> algebra_basis(const AlgebraSpec& a, int n);
AlgebraElement algebra_identity(const AlgebraSpec& a, int n);
AlgebraElement basis_element(const AlgebraSpec& a, const Diagram& d);

// Stacked concatenation before any reduction: the parts of the composite
// (with the decorations of every piece that went into them) and the loops.
struct PseudoDiagram {
  Diagram shape;  // decorations left at zero
  std::vector<std::vector<int>> part_pieces;
  std::vector<std::vector<int>> loops;
};
PseudoDiagram concatenate(const Diagram& a, const Diagram& b);
// Applies the reduction rules; pieces and loops are consumed in the order
// given by `rng` when supplied, in stored order otherwise.
AlgebraElement reduce(const AlgebraSpec& a, const PseudoDiagram& p, std::mt19937* rng = nullptr);

AlgebraElement multiply(const AlgebraSpec& a, const Diagram& x, const Diagram& y);
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

// Pair diagrams are written as disk words (north west to east, then south
// east to west) with the decoration after each open bracket; partition and
// Brauer diagrams as "{1,2'}|{2,1'}".  Temperley-Lieb diagrams may also be
// given as words in the generators U1..U(n-1) ("U" when n = 2, "1" for the
// identity).
Diagram parse_diagram(const AlgebraSpec& a, int n, std::string_view text);
// A basis diagram, a generator word, or "1" for the identity.
AlgebraElement parse_element(const AlgebraSpec& a, int n, std::string_view text);
std::string format_diagram(const AlgebraSpec& a, const Diagram& d);
std::optional<std::string> tl_generator_name(const Diagram& d);
std::string format_element(const AlgebraElement& x, bool generator_names = false);

Diagram diagram_from_word(const Word& w, int top, int bottom);
Word diagram_word(const Diagram& d);
Diagram diagram_from_pair(const PairDiagram& p);
PairDiagram diagram_to_pair(const Diagram& d);
Diagram half_as_diagram(const HalfDiagram& h);

struct DimensionIdentity {
  std::string algebra;
  int n = 0;
  std::size_t basis = 0;
  std::vector<std::pair<VertexLabel, std::size_t>> halves;
  BigInt sum_of_squares = 0;
  bool ok() const { return BigInt(basis) == sum_of_squares; }
};

DimensionIdentity dimension_identity(const AlgebraSpec& a, int n);

// Action of a Temperley-Lieb diagram on the standard-module basis element
// h; nullopt when the number of propagating lines drops.
std::optional<std::pair<ScalarPoly, HalfDiagram>> standard_action(const Diagram& D,
                                                                  const HalfDiagram& h);

std::vector<HalfDiagram> standard_basis(int n, int l);
std::vector<std::vector<ScalarPoly>> gram(int n, int l);
ScalarPoly determinant(const std::vector<std::vector<ScalarPoly>>& m);
ScalarPoly gram_det(int n, int l);

// Simple-module dimensions from restricted walks.
BigInt tl_simple_dim(int n, long lambda, int l);
RootedGraph rollet_simple_graph(int l);
BigInt tl_simple_dim_rollet(int n, long lambda, int l);
BigInt blob_simple_dim(int n, long lambda, long l0);
BigInt blob_simple_dim_shifted(int n, long lambda, long l0);

}  // namespace catpascal
