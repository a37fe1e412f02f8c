#include <doctest.h>

#include "catpascal/decorated.hpp"
#include "catpascal/errors.hpp"

#include <set>

using namespace catpascal;

namespace {

std::vector<std::size_t> sizes(const VerificationReport& r, int n) { return r.layer_sizes(n); }

std::vector<std::size_t> row(std::initializer_list<std::size_t> xs) { return xs; }

}  // namespace

TEST_CASE("blob diagrams") {
  auto r = verify_family(*blob_family(), 8);
  CHECK(r.ok());
  CHECK(sizes(r, 3) == row({1, 3, 3, 1}));
  CHECK(enum_blob(2).size() == 6);
  for (int n = 0; n <= 6; ++n) CHECK(BigInt(enum_blob(n).size()) == binomial(2 * n, n));
  for (int n = 0; n <= 6; ++n)
    for (auto& d : enum_blob(n)) {
      auto [a, b] = blob_cut(d);
      CHECK(blob_vertex(a) == blob_vertex(b));
      CHECK(blob_join(a, b) == d);
    }
  CHECK(blob_mark_str(kBlob) == "•");
  CHECK(blob_mark_parse("□") == kSquare);
  // a west-exposed arc must be decorated
  CHECK_THROWS_AS(blob_vertex(parse_word("()", blob_mark_parse)), DomainError);
  CHECK(blob_vertex(parse_word("(•(", blob_mark_parse)) == 2);
  CHECK(blob_vertex(parse_word("(□(", blob_mark_parse)) == -2);
}

TEST_CASE("lambda-ary brackets") {
  std::set<std::string> shown;
  for (auto& w : enum_lambda_bracket_full({2, 1}, 2)) shown.insert(render_lambda_brackets({2, 1}, w));
  CHECK(shown == std::set<std::string>{"(())", "()()", "[]()", "()[]", "[][]", "[[]]"});

  std::vector<std::size_t> counts;
  for (int m = 0; m <= 4; ++m) counts.push_back(enum_lambda_bracket_full({2, 2, 1}, m).size());
  CHECK(counts == row({1, 2, 8, 36, 168}));

  auto [l, r] = lambda_bracket_decompose(Word{});
  CHECK(l.empty());
  CHECK(r.empty());
  for (int m = 0; m <= 4; ++m)
    for (auto& w : enum_lambda_bracket_full({2, 2, 1}, m)) {
      auto [a, b] = lambda_bracket_decompose(w);
      CHECK(lambda_vertex({2, 2, 1}, a) == lambda_vertex({2, 2, 1}, b));
      CHECK(lambda_bracket_compose(a, b) == w);
    }
  for (auto lambda : std::vector<std::vector<int>>{{2, 1}, {2, 2, 1}, {3, 1}, {1, 2}}) {
    auto r2 = verify_family(*lambda_bracket_family(lambda), 7);
    CHECK(r2.ok());
  }
}

TEST_CASE("contour diagrams") {
  for (int n = 0; n <= 6; ++n) CHECK(BigInt(enum_contour(n, 0, 1).size()) == catalan(n));
  CHECK(enum_contour(2, 1, 2).size() == 6);
  auto r = verify_family(*contour_family(3, 2), 6);
  CHECK(r.ok());
  CHECK(sizes(r, 1) == row({1, 1}));
  // vertices (), (1,1), (1,2), (2,1), (2,2) in label order
  CHECK(sizes(r, 2) == row({2, 1, 1, 1, 1}));
  for (auto [k, d] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 2}})
    for (int n = 0; n <= 5; ++n)
      for (auto& w : enum_contour(n, k, d)) {
        CHECK(is_contour(w, k, d));
        auto [a, b] = contour_cut(w);
        CHECK(contour_stitch(a, b) == w);
      }
  // a blob on an arc that is too deeply covered
  CHECK_FALSE(is_contour(parse_word("((1))"), 1, 2));
  CHECK(is_contour(parse_word("(1())"), 1, 2));
  CHECK(is_contour(parse_word("((1))"), 2, 2));
  CHECK(cover_levels(parse_word("(()())")) == std::vector<int>{0, 1, 1, 1, 1, 0});
}

TEST_CASE("D-type blob diagrams") {
  CHECK(enum_dblob(2).size() == 3);
  auto walks = catalan_numbers(d_inf(), 6);
  for (int n = 0; n <= 6; ++n) {
    auto all = enum_dblob(n);
    CHECK(BigInt(all.size()) == walks[static_cast<std::size_t>(n)]);
    for (auto& d : all) {
      int blobs = 0;
      for (auto& s : d) blobs += s.mark;
      CHECK(blobs % 2 == 0);
      auto [a, b] = dblob_cut(d);
      CHECK(dblob_vertex(a) == dblob_vertex(b));
      CHECK(dblob_join(a, b) == d);
    }
  }
  CHECK(verify_family(*dblob_family(), 8).ok());

  CHECK(dblob_vertex(parse_word("(b)", dblob_mark_parse)) == VertexLabel::primed(0));
  CHECK(dblob_vertex(parse_word("()", dblob_mark_parse)) == VertexLabel::integer(0));

  // folding a blobbed line into the 0' cell cancels the blob against the bend
  int checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (auto& h : enum_dblob_halves(n)) {
      if (dblob_vertex(h) != VertexLabel::integer(1)) continue;
      auto u = unmatched_positions(h);
      if (h[static_cast<std::size_t>(u.back())].mark == 0) continue;
      auto g = dblob_edge(VertexLabel::integer(1), VertexLabel::primed(0), h);
      CHECK(g[static_cast<std::size_t>(u.back())].mark == 0);
      ++checked;
    }
  CHECK(checked > 0);
  CHECK_THROWS_AS(dblob_edge(VertexLabel::integer(2), VertexLabel::primed(0),
                             parse_word("((", dblob_mark_parse)),
                  DomainError);
}

TEST_CASE("coloured trees") {
  CHECK(enum_coloured_trees({2, 1}, 2).size() == 6);
  CHECK(enum_coloured_trees({2, 2, 1}, 3).size() == 36);
  for (int e = 0; e <= 6; ++e) CHECK(enum_coloured_trees({1}, e) == enum_planar_trees(e));

  // the boundary bijection intertwines the edge maps
  auto g = a_tree({2, 2, 1});
  for (int n = 0; n <= 5; ++n)
    for (auto& h : enum_coloured_half_trees({2, 2, 1}, n)) {
      auto w = coloured_tree_bijection(h);
      auto v = lambda_vertex({2, 2, 1}, w);
      for (auto& e : g.out(v)) {
        auto moved = coloured_tree_edge(v, e.target, h);
        CHECK(coloured_tree_bijection(moved) == lambda_bracket_edge(v, e.target, w));
      }
    }
  CHECK(verify_family(*coloured_tree_family({2, 2, 1}), 7).ok());
}

TEST_CASE("decorated sequences satisfy the sum of squares") {
  std::vector<std::shared_ptr<const CatalanSequence>> all{
      blob_sequence(), dblob_sequence(), lambda_bracket_sequence({2, 2, 1}), contour_sequence(3, 2),
      coloured_tree_sequence({2, 1})};
  for (auto& cs : all) {
    auto r = verify_catalan(*cs, std::min(cs->cap(), 5));
    CHECK_MESSAGE(r.ok(), cs->id());
    for (auto& l : r.layers) CHECK(BigInt(l.members) == l.closed_walks);
  }
}
