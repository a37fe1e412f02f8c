#include <doctest.h>

#include "catpascal/errors.hpp"
#include "catpascal/typea.hpp"

#include <set>

using namespace catpascal;

namespace {

std::vector<std::shared_ptr<const PascalFamily>> five() {
  return {tl_family(), bracket_family(), tree_family(), interval_family(), ncp_family()};
}

Word w(std::string_view s) { return parse_word(s); }

}  // namespace

TEST_CASE("noncrossing perfect matchings") {
  CHECK(enum_ncpp(0).size() == 1);
  CHECK(enum_ncpp(3).size() == 5);
  CHECK(enum_ncpp(5).size() == 42);
  for (int n = 0; n <= 6; ++n) CHECK(BigInt(enum_ncpp(n).size()) == catalan(n));
}

TEST_CASE("TL cut and join") {
  for (int n = 0; n <= 7; ++n)
    for (auto& d : enum_ncpp(n)) {
      auto [a, b] = tl_cut(d);
      CHECK(a.propagating() == b.propagating());
      CHECK(a.size() == n);
      CHECK(tl_join(a, b) == d);
    }

  PairDiagram id;
  id.north = id.south = 3;
  id.partner = {5, 4, 3, 2, 1, 0};
  auto [a, b] = tl_cut(id);
  CHECK(a.propagating() == 3);
  CHECK(b.propagating() == 3);

  std::map<int, std::size_t> by_l;
  for (auto& h : enum_tl_halves(4)) ++by_l[h.propagating()];
  CHECK(by_l[0] * by_l[0] + by_l[2] * by_l[2] + by_l[4] * by_l[4] == 14);

  std::size_t over_one = 0;
  for (auto& d : enum_ncpp(3))
    if (tl_cut(d).first.propagating() == 1) ++over_one;
  CHECK(over_one == 4);
}

TEST_CASE("TL edge maps") {
  HalfDiagram empty;
  auto arc = tl_edge(TLEdge::down, tl_edge(TLEdge::up, empty));
  CHECK(arc.size() == 2);
  CHECK(arc.propagating() == 0);
  CHECK(arc.partner == std::vector<int>{1, 0});
  CHECK_THROWS_AS(tl_edge(TLEdge::down, empty), DomainError);

  std::size_t l1 = 0;
  for (auto& h : enum_tl_halves(5)) l1 += h.propagating() == 1;
  CHECK(l1 == 5);

  // every half of n+1 points is uniquely an up or a down image
  for (int n = 0; n < 8; ++n) {
    std::set<Word> images;
    std::size_t count = 0;
    for (auto& h : enum_tl_halves(n)) {
      images.insert(tl_edge(TLEdge::up, h).word());
      ++count;
      if (h.propagating() > 0) {
        images.insert(tl_edge(TLEdge::down, h).word());
        ++count;
      }
    }
    std::set<Word> next;
    for (auto& h : enum_tl_halves(n + 1)) next.insert(h.word());
    CHECK(images.size() == count);
    CHECK(images == next);
  }
}

TEST_CASE("bracket sequences") {
  std::set<std::string> c3;
  for (auto& x : balanced_words(3)) c3.insert(format_word(x));
  CHECK(c3 == std::set<std::string>{"()()()", "(())()", "()(())", "(()())", "((()))"});
  auto [l, r] = bracket_decompose(w("()()"));
  CHECK(format_word(l) == "()");
  CHECK(format_word(r) == "()");
  auto [l0, r0] = bracket_decompose(Word{});
  CHECK(l0.empty());
  CHECK(r0.empty());
  CHECK_THROWS_AS(bracket_edge(BracketEdge::close, w("()")), DomainError);
  for (int m = 0; m <= 8; ++m)
    for (auto& s : balanced_words(m)) {
      auto [a, b] = bracket_decompose(s);
      CHECK(unmatched(a) == unmatched(b));
      CHECK(bracket_compose(a, b) == s);
    }
}

TEST_CASE("planar trees") {
  CHECK(enum_planar_trees(3).size() == 5);
  // 112122 with 1 = away from the root
  auto t = tree_decode(w("(()())"));
  CHECK(t.edges() == 3);
  REQUIRE(t.children.size() == 1);
  CHECK(t.children[0].children.size() == 2);
  CHECK(format_word(tree_encode(t)) == "(()())");
  CHECK(tree_encode(PlanarTree{}).empty());
  CHECK_THROWS_AS(halftree_edge(TreeEdge::minus, HalfTree{}), DomainError);

  for (int e = 0; e <= 7; ++e)
    for (auto& x : enum_planar_trees(e)) {
      CHECK(tree_decode(tree_encode(x)) == x);
      auto [a, b] = tree_cut(x);
      CHECK(a.trunk() == b.trunk());
      CHECK(tree_splice(a, b) == x);
    }
  for (int n = 0; n <= 8; ++n)
    for (auto& h : enum_half_trees(n)) CHECK(halftree_decode(halftree_encode(h)) == h);
}

TEST_CASE("region dual tree agrees with transport") {
  auto tl = tl_family();
  auto trees = tree_family();
  for (int m = 0; m <= 6; ++m)
    for (auto& s : balanced_words(m)) {
      auto d = PairDiagram::from_word(s, 2 * m);
      auto region = tl_region_tree(d);
      CHECK(region.edges() == m);
      auto moved = transport(*tl, *trees, tl->make(format_word(s)));
      auto h = halftree_decode(parse_word(moved.payload));
      REQUIRE(h.trunk() == 0);
      CHECK(h.branches[0] == region.children);
    }
}

TEST_CASE("unit interval-point orders") {
  auto x = interval_from_brackets(w("()()"));
  CHECK(x.intervals() == 2);
  CHECK(x.points() == 0);
  CHECK((x.less[0][1] || x.less[1][0]));
  CHECK(is_uipo(x));
  CHECK(interval_from_brackets(Word{}).size() == 0);
  CHECK(enum_interval_orders(3).size() == 5);
  CHECK(enum_interval_orders(4).size() == 14);
  for (int n = 0; n <= 8; ++n)
    for (auto& y : enum_interval_layer(n)) {
      CHECK(is_uipo(y));
      CHECK(y.degree() == n);
      auto back = interval_from_brackets(interval_to_brackets(y));
      CHECK(interval_to_brackets(back) == interval_to_brackets(y));
    }

  // the five orders of three intervals
  std::set<std::string> shapes;
  for (auto& y : enum_interval_orders(3)) shapes.insert(interval_str(y));
  CHECK(shapes.size() == 5);
  CHECK(shapes.count("()") == 1);
}

TEST_CASE("interval combine glues two halves") {
  auto f = interval_family();
  for (int n = 0; n <= 6; ++n)
    for (auto& a : enum_interval_layer(n))
      for (auto& b : enum_interval_layer(n)) {
        if (a.points() != b.points()) {
          CHECK_THROWS_AS(interval_combine(a, b), DomainError);
          continue;
        }
        auto c = interval_combine(a, b);
        CHECK(c.points() == 0);
        CHECK(c.intervals() == n);
        CHECK(is_uipo(c));
      }
}

TEST_CASE("noncrossing partitions") {
  NoncrossingPartition p{{1, 2}, {3, 4, 5}, {6}};
  auto d = ncpp_from_ncp(p, 6);
  CHECK(d.size() == 12);
  CHECK(ncp_from_ncpp(d) == p);
  CHECK(ncp_str(p) == "{1,2}|{3,4,5}|{6}");
  CHECK(parse_ncp("{1,2}|{3,4,5}|{6}") == p);

  PairDiagram arc;
  arc.north = 2;
  arc.partner = {1, 0};
  CHECK(ncp_from_ncpp(arc) == NoncrossingPartition{{1}});
  CHECK(enum_noncrossing_partitions(3).size() == 5);
  for (int n = 0; n <= 7; ++n) {
    auto all = enum_noncrossing_partitions(n);
    CHECK(BigInt(all.size()) == catalan(n));
    for (auto& q : all) CHECK(ncp_from_ncpp(ncpp_from_ncp(q, n)) == q);
  }
}

TEST_CASE("the five type-A families verify with equal layers") {
  std::vector<VerificationReport> rs;
  for (auto& f : five()) {
    rs.push_back(verify_family(*f, 8));
    CHECK_MESSAGE(rs.back().ok(), f->id());
  }
  for (int n = 1; n <= 8; ++n)
    for (auto& r : rs) CHECK(r.layer_sizes(n) == rs[0].layer_sizes(n));
}

TEST_CASE("transport between the five families is mutually inverse") {
  auto fs = five();
  for (auto& f1 : fs)
    for (auto& f2 : fs) {
      if (f1 == f2) continue;
      for (int n = 0; n <= 8; ++n) {
        std::set<std::string> seen;
        auto layer = f1->enumerate_layer(n);
        for (auto& x : layer) {
          auto y = transport(*f1, *f2, x);
          CHECK(y.family == f2->id());
          CHECK(y.n == x.n);
          CHECK(y.vertex == x.vertex);
          CHECK(transport(*f2, *f1, y) == x);
          seen.insert(y.payload);
        }
        CHECK(seen.size() == layer.size());
      }
    }
}

TEST_CASE("type-A sequences round trip") {
  for (auto cs : {tl_sequence(), bracket_sequence(), tree_sequence(), interval_sequence(), ncp_sequence()}) {
    auto r = verify_catalan(*cs, 7);
    CHECK_MESSAGE(r.ok(), cs->id());
  }
}
