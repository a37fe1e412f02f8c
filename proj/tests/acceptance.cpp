// Acceptance run: one PASS/FAIL line per criterion, with the first few
// mismatches underneath a failing line.

#include "catpascal/algebra.hpp"
#include "catpascal/clusters.hpp"
#include "catpascal/decorated.hpp"
#include "catpascal/graphs.hpp"
#include "catpascal/partitions.hpp"
#include "catpascal/registry.hpp"
#include "catpascal/series.hpp"
#include "catpascal/typea.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace catpascal;

namespace {

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (notes_.size() < 8) notes_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  int failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  int failures_ = 0;
  std::vector<std::string> notes_;
};

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

BigInt ballot(int n, long v) {
  if (v < 0 || v > n || (n - v) % 2) return 0;
  long k = (n - v) / 2;
  return binomial(n, k) - (k > 0 ? binomial(n, k - 1) : BigInt(0));
}

// ---------------------------------------------------------------- 1

void catalan_core(Criterion& c) {
  auto got = catalan_numbers(a_inf(), 6);
  c.expect(got == ints({1, 1, 2, 5, 14, 42, 132}), "catalan_numbers(A_inf, 6) = " + join(got));
  auto t = layer_counts(a_inf(), 14);
  for (int n = 0; n <= 14; ++n) {
    for (long v = 0; v <= n + 1; ++v)
      c.expect(t.at(n, VertexLabel::integer(v)) == ballot(n, v),
               "N(" + std::to_string(n) + ";" + std::to_string(v) + ")");
    for (auto& [v, cnt] : t.layer(n)) c.expect(v.value() >= 0 && v.value() <= n, "vertex out of range");
  }
}

// ---------------------------------------------------------------- 2

void type_a_families(Criterion& c) {
  std::vector<std::shared_ptr<const PascalFamily>> fs{tl_family(), bracket_family(), tree_family(),
                                                      interval_family(), ncp_family()};
  auto walks = layer_counts(a_inf(), 8);
  for (auto& f : fs) {
    auto r = verify_family(*f, 8);
    c.expect(r.ok(), f->id() + " fails verify_family to n = 8");
    for (auto& cell : r.cells)
      c.expect(BigInt(cell.enumerated) == walks.at(cell.n, cell.vertex),
               f->id() + " cell (" + std::to_string(cell.n) + "," + cell.vertex.str() + ")");
  }
  int pairs = 0;
  for (auto& f1 : fs)
    for (auto& f2 : fs) {
      if (f1 == f2) continue;
      ++pairs;
      for (int n = 0; n <= 6; ++n) {
        std::set<std::string> images;
        auto layer = f1->enumerate_layer(n);
        for (auto& x : layer) {
          auto y = transport(*f1, *f2, x);
          images.insert(y.payload);
          c.expect(transport(*f2, *f1, y) == x, f1->id() + " -> " + f2->id() + " on " + x.payload);
        }
        c.expect(images.size() == layer.size(), f1->id() + " -> " + f2->id() + " not injective");
      }
    }
  c.expect(pairs == 20, "ordered pairs");
}

// ---------------------------------------------------------------- 3

void sum_of_squares_identities(Criterion& c) {
  auto check = [&](const char* spec, int n) {
    auto d = dimension_identity(parse_algebra(spec), n);
    c.expect(d.ok(), std::string(spec) + " n = " + std::to_string(n) + ": " + std::to_string(d.basis) +
                         " vs " + d.sum_of_squares.get_str());
    return d;
  };
  for (int n = 0; n <= 6; ++n) {
    auto d = check("tl", n);
    if (n == 4) {
      std::vector<std::size_t> h;
      for (auto& [v, k] : d.halves) h.push_back(k * k);
      c.expect(d.basis == 14 && h == std::vector<std::size_t>{4, 9, 1}, "TL_4: 14 = 4+9+1");
    }
  }
  for (int n = 0; n <= 5; ++n) {
    auto d = check("blob", n);
    if (n == 3) {
      std::vector<std::size_t> h;
      for (auto& [v, k] : d.halves) h.push_back(k * k);
      c.expect(d.basis == 20 && h == std::vector<std::size_t>{1, 9, 9, 1}, "blob_3: 20 = 1+9+9+1");
    }
  }
  for (int n = 0; n <= 5; ++n) check("dn", n);
  for (int n = 0; n <= 4; ++n) check("partition", n);
  for (int n = 0; n <= 6; ++n) check("brauer", n);
}

// ---------------------------------------------------------------- 4

void bell_brauer(Criterion& c) {
  auto expect = ints({1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147});
  auto walks = catalan_numbers(double_young(), 9);
  c.expect(walks == expect, "N(2n; empty) on the doubled Young graph = " + join(walks));
  auto egf = series_bell_egf(9);
  c.expect(egf == expect, "Bell EGF = " + join(egf));
  for (int n = 0; n <= 9; ++n)
    c.expect(BigInt(enum_set_partitions(n).size()) == expect[static_cast<std::size_t>(n)],
             "|set partitions of " + std::to_string(n) + "|");
  auto y = catalan_numbers(young(), 5);
  c.expect(y == ints({1, 1, 3, 15, 105, 945}), "N(2n; empty) on the Young graph = " + join(y));
  for (int n = 0; n <= 5; ++n)
    c.expect(BigInt(enum_cbr(n).size()) == y[static_cast<std::size_t>(n)], "|Brauer diagrams|");
}

// ---------------------------------------------------------------- 5

struct BraketRow {
  const char* cluster;
  const char* C;
  const char* D;
};

// The A3 bra-ket table as printed, in payload syntax.
const std::vector<BraketRow> kA3Table{
    {"-a1,-a2,-a3", "-a1", "-a1"},
    {"-a1,-a2,a3", "-a1", "a1"},
    {"a1,-a2,-a3", "a1", "-a1"},
    {"a1,-a2,a3", "a1", "a1"},
    {"-a1,a2,-a3", "a1,+", "-a1,+"},
    {"-a1,a2,a2+a3", "-a1,+", "a1,+"},
    {"-a1,a2+a3,a3", "-a1,+", "-a1~"},
    {"a1,a1+a2,-a3", "a1,+", "-a1,+"},
    {"a1,a1+a2,a1+a2+a3", "a1,+", "a1,+"},
    {"a1,a1+a2+a3,a3", "a1,+", "-a1~"},
    {"a1+a2,a2,-a3", "-a1~", "-a1,+"},
    {"a1+a2,a2,a1+a2+a3", "-a1~", "a1,+"},
    {"a1+a2+a3,a2+a3,a3", "-a1~", "-a1~"},
    {"a1+a2+a3,a2,a2+a3", "-a1~,+", "-a1~,+"},
};

// Row sizes of the printed array of tagged clusters, top row first.
const std::vector<std::vector<std::size_t>> kClusterRows{
    {1}, {1, 1}, {2, 1}, {2, 3, 1}, {5, 4, 1}, {5, 9, 5, 1}, {14, 14, 6, 1}};

void clusters(Criterion& c) {
  std::set<Cluster> printed;
  for (auto& row : kA3Table) printed.insert(parse_cluster(row.cluster));
  auto all = enumerate_clusters(3);
  c.expect(all.size() == 14 && std::set<Cluster>(all.begin(), all.end()) == printed,
           "enumerate_clusters(3) differs from the printed list");

  for (std::size_t i = 0; i < kA3Table.size(); ++i) {
    auto& row = kA3Table[i];
    auto [C, D] = cluster_braket(4, parse_cluster(row.cluster));
    c.expect(tagged_str(C) == row.C && tagged_str(D) == row.D,
             "row " + std::to_string(i + 1) + " {" + row.cluster + "}: got " + tagged_str(C) + " | " +
                 tagged_str(D) + ", printed " + row.C + " | " + row.D);
  }

  // The printed top row is the single element of layer 1.
  auto r = verify_family(*cluster_family(), static_cast<int>(kClusterRows.size()));
  c.expect(r.ok(), "tagged clusters fail verify_family");
  for (std::size_t k = 0; k < kClusterRows.size(); ++k) {
    auto got = r.layer_sizes(static_cast<int>(k) + 1);
    c.expect(got == kClusterRows[k], "array row " + std::to_string(k) + ": " + join(got));
  }

  for (int n = 0; n <= 6; ++n) {
    // both ways: cells of the verified array, and the tagged clusters grouped by vertex
    BigInt from_cells = 0;
    for (auto s : r.layer_sizes(n + 1)) from_cells += BigInt(s) * s;
    std::map<long, BigInt> groups;
    for (auto& t : enum_tagged_clusters(n + 1)) groups[cluster_vertex(n + 1, t)] += 1;
    BigInt from_groups = 0;
    for (auto& [v, k] : groups) from_groups += k * k;
    c.expect(from_cells == catalan(n + 1) && from_groups == catalan(n + 1),
             "sum of squares at n = " + std::to_string(n));
    std::set<std::pair<TaggedCluster, TaggedCluster>> halves;
    for (auto& X : enumerate_clusters(n)) halves.insert(cluster_braket(n + 1, X));
    c.expect(BigInt(halves.size()) == catalan(n + 1), "bra-ket not injective at n = " + std::to_string(n));
  }
}

// ---------------------------------------------------------------- 6

void generating_functions(Criterion& c) {
  for (auto lambda : std::vector<std::vector<int>>{{}, {1}, {2, 1}, {3, 1}, {2, 2, 1}, {2, 2, 2, 1}})
    c.expect(series_matches_walks(a_tree(lambda), series_hlambda(lambda, 8), 8),
             "H^(" + join(lambda) + ") to order 8");
  c.expect(series_matches_walks(a_inf(), series_h0(8), 8), "H0 on A_inf");
  c.expect(series_hlambda({2, 2, 1}, 5).integers() == ints({1, 2, 8, 36, 168, 796}), "H^(2,2,1)");
  c.expect(series_h1(12) * series_sqrt_1m4x(12) == Series::one(12), "H1 sqrt(1-4x) = 1");
}

// ---------------------------------------------------------------- 7

void truncation(Criterion& c) {
  auto chain = layer_counts(a_inf(), 8);
  for (int n = 0; n <= 8; ++n)
    for (long lam = n % 2; lam <= n; lam += 2)
      c.expect(blob_simple_dim(n, lam, -1) == chain.at(n, VertexLabel::integer(lam)),
               "blob l0 = -1 at (" + std::to_string(n) + "," + std::to_string(lam) + ")");
  for (int n = 0; n <= 8; ++n)
    for (long lam = n % 2; lam <= n; lam += 2) {
      auto a = tl_simple_dim(n, lam, 3);
      auto b = tl_simple_dim_rollet(n, lam, 3);
      c.expect(a == b, "l = 3, n = " + std::to_string(n) + ", lambda = " + std::to_string(lam) +
                           ": constrained walks " + a.get_str() + ", Rollet graph " + b.get_str());
    }
  for (long l0 : {-2L, -3L})
    for (int n = 0; n <= 8; ++n)
      for (long lam = -n; lam <= n; lam += 2)
        c.expect(blob_simple_dim(n, lam, l0) == blob_simple_dim_shifted(n, lam, l0),
                 "root shift l0 = " + std::to_string(l0));
}

// ---------------------------------------------------------------- 8

void algebra_soundness(Criterion& c) {
  const std::vector<std::pair<const char*, int>> caps{
      {"tl", 3}, {"blob", 2}, {"partition", 2}, {"brauer", 3}, {"dn", 3}, {"contour:1,2", 2}, {"contour:1,2,cyclotomic", 2}};
  for (auto [spec, n] : caps) {
    auto a = parse_algebra(spec);
    std::vector<AlgebraElement> b;
    for (auto& d : algebra_basis(a, n)) b.push_back(basis_element(a, d));
    auto one = algebra_identity(a, n);
    for (auto& x : b) c.expect(multiply(one, x) == x && multiply(x, one) == x, std::string(spec) + " unit");
    for (auto& x : b)
      for (auto& y : b) {
        auto xy = multiply(x, y);
        for (auto& z : b)
          c.expect(multiply(xy, z) == multiply(x, multiply(y, z)), std::string(spec) + " associativity");
      }
  }

  // bra-ket factorisation: if D D' keeps the common number l of lines then it
  // is <b|c> |a><d| with D = |a><b| and D' = |c><d|
  auto tl = parse_algebra("tl");
  for (int n = 0; n <= 4; ++n) {
    auto basis = algebra_basis(tl, n);
    for (auto& x : basis)
      for (auto& y : basis) {
        if (x.propagating() != y.propagating()) continue;
        const int l = x.propagating();
        auto [a, b] = tl_cut(diagram_to_pair(x));
        auto [cc, d] = tl_cut(diagram_to_pair(y));
        auto prod = multiply(tl, x, y);
        auto sb = standard_basis(n, l);
        auto ib = std::find(sb.begin(), sb.end(), b) - sb.begin();
        auto ic = std::find(sb.begin(), sb.end(), cc) - sb.begin();
        auto pairing = gram(n, l)[static_cast<std::size_t>(ib)][static_cast<std::size_t>(ic)];
        if (prod.terms.size() == 1 && prod.terms.begin()->first.propagating() == l) {
          c.expect(prod.terms.begin()->first == diagram_from_pair(tl_join(a, d)), "factorisation diagram");
          c.expect(prod.terms.begin()->second == pairing, "factorisation scalar");
        } else {
          c.expect(pairing.is_zero(), "lines dropped although <b|c> is nonzero");
        }
      }
  }

  std::mt19937 rng(1000003);
  for (auto spec : {"tl", "blob", "partition", "brauer", "dn", "contour:1,2", "contour:1,2,cyclotomic"}) {
    auto a = parse_algebra(spec);
    auto basis = algebra_basis(a, std::min(4, a.cap()));
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < 1000; ++t) {
      auto p = concatenate(basis[pick(rng)], basis[pick(rng)]);
      c.expect(reduce(a, p) == reduce(a, p, &rng), std::string(spec) + " loop removal order");
    }
  }

  auto d = ScalarPoly::delta();
  c.expect(gram_det(3, 1) == d * d - 1, "gram_det(3,1) = " + gram_det(3, 1).str());
  const Rational generic(7, 3);
  for (int n = 0; n <= 5; ++n)
    for (int l = n % 2; l <= n; l += 2)
      c.expect(gram_det(n, l).evaluate({generic}) != 0,
               "gram_det(" + std::to_string(n) + "," + std::to_string(l) + ") vanishes at 7/3");
}

// ---------------------------------------------------------------- 9

void bijections(Criterion& c) {
  for (auto& spec : family_specs()) {
    auto cs = make_sequence(spec);
    auto r = verify_catalan(*cs, cs->cap());
    c.expect(r.ok(), spec + " at cap " + std::to_string(cs->cap()));
    c.expect(static_cast<int>(r.layers.size()) == cs->cap() + 1, spec + " layers");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria{
      {"Catalan core", catalan_core},
      {"family verification and transports", type_a_families},
      {"sum-of-squares dimension identities", sum_of_squares_identities},
      {"Bell and Brauer counts", bell_brauer},
      {"clusters", clusters},
      {"generating functions", generating_functions},
      {"truncation and simple modules", truncation},
      {"algebra soundness", algebra_soundness},
      {"bijection totality", bijections},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    criteria[i].second(c);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << i + 1 << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << criteria[i].first;
    std::cout.precision(2);
    std::cout << std::fixed << "  (" << secs << "s)";
    if (!c.ok()) std::cout << "  " << c.failures() << " mismatch(es)";
    std::cout << '\n';
    for (auto& note : c.notes()) std::cout << "    " << note << '\n';
    failed += !c.ok();
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria pass\n";
  return failed ? 1 : 0;
}
