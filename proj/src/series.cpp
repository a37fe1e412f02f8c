#include "catpascal/series.hpp"

#include "catpascal/errors.hpp"

#include <algorithm>

namespace catpascal {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

}  // namespace

Series::Series(int order) : c_(at(std::max(order, 0) + 1), Rational(0)) {}

Series::Series(std::vector<Rational> coeffs, int order) : c_(std::move(coeffs)) {
  c_.resize(at(std::max(order, 0) + 1), Rational(0));
}

Series Series::one(int order) {
  Series s(order);
  s[0] = 1;
  return s;
}

Series Series::x(int order) {
  Series s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

Series& Series::operator+=(const Series& o) {
  if (o.order() != order()) throw DomainError("series of different orders");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (o.order() != order()) throw DomainError("series of different orders");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  if (a.order() != b.order()) throw DomainError("series of different orders");
  Series out(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series operator*(const Rational& s, Series a) {
  for (auto& c : a.c_) c *= s;
  return a;
}

Series Series::pow(const Rational& alpha) const {
  if (c_[0] != 1) throw DomainError("pow needs constant term 1");
  Series g(order());
  g[0] = 1;
  for (int n = 1; n <= order(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += (alpha * k - (n - k)) * (*this)[k] * g[n - k];
    g[n] = acc / n;
  }
  return g;
}

Series Series::exp() const {
  if (c_[0] != 0) throw DomainError("exp needs constant term 0");
  Series h(order());
  h[0] = 1;
  for (int n = 1; n <= order(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += Rational(k) * (*this)[k] * h[n - k];
    h[n] = acc / n;
  }
  return h;
}

std::vector<BigInt> Series::integers() const {
  std::vector<BigInt> out;
  for (auto c : c_) {
    c.canonicalize();
    if (c.get_den() != 1) throw InternalError("non-integral coefficient " + to_string(c));
    out.push_back(c.get_num());
  }
  return out;
}

std::string Series::str() const {
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) s += (k ? "," : "") + to_string(c_[k]);
  return s;
}

namespace {

// H = 1 + c x H^2, the series of the infinite c-ary tail
Series tail_series(int c, int m) {
  Series h(m);
  h[0] = 1;
  for (int n = 1; n <= m; ++n) {
    for (int i = 0; i < n; ++i) h[n] += h[i] * h[n - 1 - i];
    h[n] *= c;
  }
  return h;
}

}  // namespace

Series series_h0(int m) { return tail_series(1, m); }

Series series_hlambda(const std::vector<int>& lambda, int m) {
  if (m < 0) throw DomainError("negative order");
  auto lam = normalize_lambda(lambda);
  // the last entry repeats forever; then H^lambda = 1 + lambda_1 x H^{lambda'} H^lambda
  Series h = tail_series(lam.back(), m);
  for (std::size_t q = lam.size() - 1; q >= 1; --q) {
    const Series inner = h;
    Series next(m);
    next[0] = 1;
    for (int n = 1; n <= m; ++n) {
      Rational acc = 0;
      for (int i = 0; i < n; ++i) acc += inner[i] * next[n - 1 - i];
      next[n] = lam[q - 1] * acc;
    }
    h = next;
  }
  return h;
}

Series series_h1(int m) { return (Series::one(m) - Rational(4) * Series::x(m)).pow(Rational(-1, 2)); }

Series series_h2(int m) { return series_hlambda({2, 2, 1}, m); }

Series series_sqrt_1m4x(int m) { return (Series::one(m) - Rational(4) * Series::x(m)).pow(Rational(1, 2)); }

std::vector<BigInt> series_bell_egf(int m) {
  if (m < 0) throw DomainError("negative order");
  Series e(m);
  Rational f = 1;
  for (int k = 1; k <= m; ++k) {
    f /= k;
    e[k] = f;
  }
  Series b = e.exp();
  for (int k = 0; k <= m; ++k) b[k] *= Rational(factorial(k));
  auto out = b.integers();
  if (out != bell_by_recurrence(m)) throw InternalError("Bell EGF disagrees with the binomial recurrence");
  return out;
}

std::vector<BigInt> bell_by_recurrence(int m) {
  std::vector<BigInt> b{1};
  for (int n = 0; n < m; ++n) {
    BigInt next = 0;
    for (int k = 0; k <= n; ++k) next += binomial(n, k) * b[at(k)];
    b.push_back(next);
  }
  return b;
}

bool series_matches_walks(const RootedGraph& g, const Series& s, int m) {
  if (m > s.order()) return false;
  auto walks = catalan_numbers(g, m);
  for (int k = 0; k <= m; ++k)
    if (Rational(walks[at(k)]) != s[k]) return false;
  return true;
}

}  // namespace catpascal
