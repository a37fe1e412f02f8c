#include <doctest.h>

#include "catpascal/errors.hpp"
#include "catpascal/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace catpascal;

TEST_CASE("set partitions and Bell numbers") {
  std::vector<long> first{1, 1, 2, 5, 15};
  for (int n = 0; n <= 4; ++n) CHECK(bell(n) == first[static_cast<std::size_t>(n)]);
  CHECK(bell(9) == 21147);
  CHECK(enum_set_partitions(1) == std::vector<PlainPartition>{{{1}}});
  for (int n = 0; n <= 8; ++n) CHECK(BigInt(enum_set_partitions(n).size()) == bell(n));
  CHECK(enum_pair_partitions(3).empty());
  CHECK(enum_pair_partitions(8).size() == 105);
  CHECK(enum_pair_partitions(10).size() == 945);
}

TEST_CASE("two-row partitions") {
  for (int n = 0; n <= 3; ++n) {
    CHECK(BigInt(enum_cp(n).size()) == bell(2 * n));
    CHECK(BigInt(enum_cp_plus(n).size()) == bell(2 * n + 1));
  }
  std::vector<std::size_t> brauer{1, 1, 3, 15, 105};
  for (int n = 0; n <= 4; ++n) CHECK(enum_cbr(n).size() == brauer[static_cast<std::size_t>(n)]);
  auto p = parse_partition("{5,6,2',5'}|{1,4,4'}|{3',6'}|{2,3,1'}");
  CHECK(partition_str(p) == "{1,4,4'}|{2,3,1'}|{5,6,2',5'}|{3',6'}");
  CHECK(parse_partition(partition_str(p)) == p);
}

TEST_CASE("tableaux and the hook law") {
  CHECK(hook_dim({2, 1}) == 2);
  for (int n = 1; n <= 6; ++n) CHECK(hook_dim({n}) == 1);
  for (int n = 0; n <= 7; ++n) {
    BigInt sum = 0;
    for (auto& s : partitions_of(n)) {
      auto ts = enum_syt(s);
      CHECK(BigInt(ts.size()) == hook_dim(s));
      for (auto& t : ts) {
        CHECK(is_standard_tableau(t));
        CHECK(shape_of(t) == s);
        CHECK(parse_tableau(tableau_str(t)) == t);
      }
      sum += hook_dim(s) * hook_dim(s);
    }
    CHECK(sum == factorial(n));
  }
  CHECK(partitions_of(5, 3).size() == 5);
}

TEST_CASE("Robinson-Schensted") {
  auto [P, Q] = rs_insert({1, 2, 3});
  CHECK(P == Tableau{{1, 2, 3}});
  CHECK(Q == Tableau{{1, 2, 3}});
  auto [P2, Q2] = rs_insert({3, 1, 2});
  CHECK(shape_of(P2) == Shape{2, 1});
  CHECK(shape_of(Q2) == Shape{2, 1});
  CHECK(P2 == Tableau{{1, 2}, {3}});
  CHECK(Q2 == Tableau{{1, 3}, {2}});

  for (int n = 0; n <= 6; ++n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::map<Shape, BigInt> by_shape;
    do {
      auto [a, b] = rs_insert(p);
      CHECK(shape_of(a) == shape_of(b));
      CHECK(rs_inverse(a, b) == p);
      by_shape[shape_of(a)] += 1;
    } while (std::next_permutation(p.begin(), p.end()));
    for (auto& [s, c] : by_shape) CHECK(c == hook_dim(s) * hook_dim(s));
  }
}

TEST_CASE("branching bijection") {
  auto empty = branching_bijection({});
  REQUIRE(empty->size() == 1);
  CHECK(empty->forward(1, {}) == Tableau{{1}});
  CHECK(branching_bijection({1})->size() == 2);
  CHECK(branching_bijection({2, 1})->size() == 8);
  for (int m = 0; m <= 5; ++m)
    for (auto& nu : partitions_of(m)) {
      auto b = branching_bijection(nu);
      std::set<Tableau> images;
      for (auto& [k, U] : b->sources()) {
        auto T = b->forward(k, U);
        CHECK(b->backward(T) == std::make_pair(k, U));
        images.insert(T);
      }
      CHECK(images.size() == b->size());
      CHECK(images == std::set<Tableau>(b->targets().begin(), b->targets().end()));
    }
}

TEST_CASE("Bell bra-ket on the worked example") {
  auto p = parse_partition("{1,4,4'}|{2,3,1'}|{5,6,2',5'}|{3',6'}");
  auto [bra, ket] = bell_braket(12, p);
  CHECK(bra.sigma.nonprop.empty());
  CHECK(bra.sigma.prop == PlainPartition{{1, 4}, {2, 3}, {5, 6}});
  CHECK(ket.sigma.nonprop == PlainPartition{{3, 6}});
  CHECK(ket.sigma.prop == PlainPartition{{1}, {2, 5}, {4}});
  CHECK(rs_inverse(bra.T, ket.T) == Permutation{3, 1, 2});
  CHECK(bell_vertex(bra) == bell_vertex(ket));
  CHECK(bell_compose(12, bra, ket) == p);
  CHECK(parse_half(half_str(bra)) == bra);
  CHECK(parse_half(half_str(ket)) == ket);

  auto singles = parse_partition("{1}|{2}|{3}|{1'}|{2'}|{3'}");
  auto [a, b] = bell_braket(6, singles);
  CHECK(a.sigma.prop.empty());
  CHECK(b.sigma.prop.empty());
  CHECK(a.T.empty());
  CHECK(b.T.empty());
}

TEST_CASE("Bell and Brauer bra-ket round trips") {
  for (int n = 0; n <= 3; ++n) {
    for (auto& p : enum_cp(n)) {
      auto [a, b] = bell_braket(2 * n, p);
      CHECK(bell_vertex(a) == bell_vertex(b));
      CHECK(bell_compose(2 * n, a, b) == p);
    }
    for (auto& p : enum_cp_plus(n)) {
      auto [a, b] = bell_braket(2 * n + 1, p);
      CHECK(bell_vertex(a) == bell_vertex(b));
      CHECK(bell_compose(2 * n + 1, a, b) == p);
    }
  }
  CHECK(enum_cp(3).size() == 203);
  for (int n = 0; n <= 5; ++n)
    for (auto& p : enum_cbr(n)) {
      auto [a, b] = brauer_braket(n, p);
      CHECK(brauer_vertex(a) == brauer_vertex(b));
      CHECK(brauer_compose(n, a, b) == p);
    }
  CHECK_THROWS_AS(brauer_braket(1, parse_partition("{1}|{1'}")), DomainError);
}

TEST_CASE("Bell edge maps") {
  // lambda -> lambda+ adds the propagating block {n+1}
  HalfElement e;
  auto up = bell_edge(VertexLabel::partition({}), VertexLabel::partition({}, true), e);
  CHECK(up.sigma.prop == PlainPartition{{1}});
  // back down to lambda, the block of n+1 becomes non-propagating
  auto down = bell_edge(VertexLabel::partition({}, true), VertexLabel::partition({}), up);
  CHECK(down.sigma.nonprop == PlainPartition{{1}});
  CHECK(down.T == up.T);
  CHECK_THROWS_AS(bell_edge(VertexLabel::partition({1}), VertexLabel::partition({}), e), DomainError);
}

TEST_CASE("Bell and Brauer families verify") {
  auto bell_r = verify_family(*bell_family(), 10);
  CHECK(bell_r.ok());
  std::vector<BigInt> spine;
  for (int m = 0; m <= 10; m += 2) spine.push_back(layer_counts(double_young(), 10).at(m, VertexLabel::partition({})));
  std::vector<BigInt> expect{1, 1, 2, 5, 15, 52};
  CHECK(spine == expect);
  for (int m = 2; m <= 10; m += 2) {
    std::size_t over_empty = 0;
    for (auto& h : enum_bell_layer(m)) over_empty += bell_vertex(h) == VertexLabel::partition({});
    CHECK(BigInt(over_empty) == expect[static_cast<std::size_t>(m / 2)]);
  }
  CHECK(verify_family(*brauer_family(), 7).ok());
  CHECK(verify_catalan(*bell_sequence(), 7).ok());
  CHECK(verify_catalan(*brauer_sequence(), 5).ok());
}

TEST_CASE("weight lattice against the hook law") {
  for (int n = 0; n <= 8; ++n) CHECK(weight_dim_check(n).ok());
  auto r = weight_dim_check(3);
  bool seen = false;
  for (auto& row : r.rows)
    if (row.lambda == Shape{2, 1}) {
      CHECK(row.vertex == VertexLabel::weight({2, 1}));
      CHECK(row.walks == 2);
      CHECK(row.hooks == 2);
      seen = true;
    }
  CHECK(seen);

  BigInt hooks = 0;
  for (auto& s : partitions_of(5, 3)) hooks += hook_dim(s) * hook_dim(s);
  BigInt walks = 0;
  auto table = layer_counts(weight_plus(3), 5);
  for (auto& [v, c] : table.layer(5)) walks += c * c;
  CHECK(hooks == walks);
}
