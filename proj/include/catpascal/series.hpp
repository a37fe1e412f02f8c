#pragma once

#include "catpascal/graphs.hpp"
#include "catpascal/numeric.hpp"

#include <string>
#include <vector>

namespace catpascal {

// Power series truncated at x^order, exact rational coefficients.
class Series {
 public:
  explicit Series(int order = 0);
  Series(std::vector<Rational> coeffs, int order);
  static Series one(int order);
  static Series x(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  Rational& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Rational& s, Series a);
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

  // f^alpha for f(0) = 1.
  Series pow(const Rational& alpha) const;
  // exp(f) for f(0) = 0.
  Series exp() const;
  // Coefficients as integers; throws InternalError if any is fractional.
  std::vector<BigInt> integers() const;
  std::string str() const;

 private:
  std::vector<Rational> c_;
};

Series series_h0(int m);
Series series_hlambda(const std::vector<int>& lambda, int m);
// 1 / sqrt(1 - 4x), closed form of H^{(2,1)}.
Series series_h1(int m);
// H^{(2,2,1)}
Series series_h2(int m);
Series series_sqrt_1m4x(int m);
std::vector<BigInt> series_bell_egf(int m);
std::vector<BigInt> bell_by_recurrence(int m);
bool series_matches_walks(const RootedGraph& g, const Series& s, int m);

}  // namespace catpascal
