#include <doctest.h>
#include <nlohmann/json.hpp>

#include "catpascal/decorated.hpp"
#include "catpascal/errors.hpp"
#include "catpascal/registry.hpp"
#include "catpascal/typea.hpp"

using namespace catpascal;

namespace {

// Brackets with a faulty edge map: every element of layer 3 over vertex 1
// comes out as the same word.
class CollapsingBrackets : public PascalFamily {
 public:
  std::string id() const override { return "collapsing"; }
  const RootedGraph& graph() const override { return base_->graph(); }
  int cap() const override { return base_->cap(); }
  Element origin() const override { return relabel(base_->origin()); }
  std::vector<Element> enumerate_layer(int n) const override {
    auto xs = base_->enumerate_layer(n);
    for (auto& x : xs) x = relabel(x);
    return xs;
  }
  Element edge_map(const VertexLabel& source, int key, const Element& x) const override {
    auto y = relabel(base_->edge_map(source, key, relabel_back(x)));
    if (y.n == 3 && y.vertex == VertexLabel::integer(1)) y.payload = "()(";
    return y;
  }
  std::pair<int, VertexLabel> classify(const std::string& p) const override {
    return base_->classify(p);
  }

 private:
  Element relabel(Element e) const {
    e.family = id();
    return e;
  }
  Element relabel_back(Element e) const {
    e.family = base_->id();
    return e;
  }
  std::shared_ptr<const PascalFamily> base_ = bracket_family();
};

std::vector<std::size_t> sizes(std::initializer_list<std::size_t> xs) { return xs; }

}  // namespace

TEST_CASE("TL family verifies with Catalan-triangle layer sizes") {
  auto r = verify_family(*tl_family(), 6);
  CHECK(r.ok());
  CHECK(r.origin_ok);
  CHECK(r.layer_sizes(4) == sizes({2, 3, 1}));
  CHECK(r.layer_sizes(5) == sizes({5, 4, 1}));
  CHECK(r.layer_sizes(6) == sizes({5, 9, 5, 1}));
  for (auto& c : r.cells) CHECK(BigInt(c.enumerated) == c.walks);
}

TEST_CASE("blob layers form the ordinary Pascal triangle") {
  auto r = verify_family(*blob_family(), 4);
  CHECK(r.ok());
  CHECK(r.layer_sizes(1) == sizes({1, 1}));
  CHECK(r.layer_sizes(2) == sizes({1, 2, 1}));
  CHECK(r.layer_sizes(3) == sizes({1, 3, 3, 1}));
  CHECK(r.layer_sizes(4) == sizes({1, 4, 6, 4, 1}));
}

TEST_CASE("a colliding edge map is caught with a witness") {
  CollapsingBrackets bad;
  auto r = verify_family(bad, 4);
  CHECK_FALSE(r.ok());
  bool found = false;
  for (auto& c : r.cells)
    if (!c.ok()) {
      CHECK(c.n == 3);
      CHECK(c.vertex == VertexLabel::integer(1));
      CHECK_FALSE(c.disjoint);
      CHECK(c.witness.has_value());
      found = true;
    }
  CHECK(found);
  CHECK_THROWS_AS(WalkIndex(bad, 4), CorruptFamily);
  CHECK(r.table().find("FAIL") != std::string::npos);
}

TEST_CASE("serial and parallel verification agree") {
  for (auto spec : {"tl", "blob", "clusters"}) {
    auto f = make_family(spec);
    auto a = verify_family(*f, 6, Exec::serial);
    auto b = verify_family(*f, 6, Exec::parallel);
    CHECK(a.ok() == b.ok());
    CHECK(a.table() == b.table());
  }
}

TEST_CASE("walks and elements") {
  auto b = bracket_family();
  CHECK(element_of(*b, Walk{"a_inf", {0, 0}}).payload == "()");
  CHECK(element_of(*b, Walk{"a_inf", {}}) == b->origin());
  CHECK(walk_of(*b, b->make("()")).steps == std::vector<int>{0, 0});
  CHECK(walk_of(*b, b->origin()).length() == 0);

  auto tl = tl_family();
  // 0 -> 1 -> 2 -> 1 -> 0
  auto x = element_of(*tl, Walk{"a_inf", {0, 1, 0, 0}});
  CHECK(transport(*tl, *b, x).payload == "(())");
  CHECK(walk_of(*tl, x).steps == std::vector<int>{0, 1, 0, 0});
}

TEST_CASE("walk index covers every layer") {
  WalkIndex idx(*tree_family(), 6);
  for (int n = 0; n <= 6; ++n) {
    CHECK(BigInt(idx.layer(n).size()) == layer_counts(a_inf(), 6).layer_total(n));
    for (auto& [e, w] : idx.layer(n)) CHECK(idx.walk_of(e) == w);
  }
}

TEST_CASE("transport between unrelated graphs is refused") {
  CHECK_THROWS_AS(transport(*tl_family(), *blob_family(), tl_family()->make("()")),
                  IncompatibleFamilies);
}

TEST_CASE("layers are ordered by walk order") {
  auto b = bracket_family();
  auto l = b->layer(4, VertexLabel::integer(0));
  REQUIRE(l.size() == 2);
  CHECK(l[0].payload == "()()");
  CHECK(l[1].payload == "(())");
}

TEST_CASE("element json") {
  auto j = nlohmann::json::parse(to_json(tl_family()->make("(()")));
  CHECK(j["family"] == "tl");
  CHECK(j["n"] == 3);
  CHECK(j["vertex"] == 1);
  CHECK(j["payload"] == "(()");
  auto k = nlohmann::json::parse(to_json(dblob_family()->make("(b)")));
  CHECK(k["vertex"] == "0'");
}

TEST_CASE("bracket decomposition examples") {
  auto s = bracket_sequence();
  auto [l, r] = catalan_decompose(*s, 2, "(())");
  CHECK(l.payload == "((");
  CHECK(r.payload == "((");
  auto [l2, r2] = catalan_decompose(*s, 2, "()()");
  CHECK(l2.payload == "()");
  CHECK(r2.payload == "()");
  auto [l0, r0] = catalan_decompose(*s, 0, "");
  CHECK(l0.payload.empty());
  CHECK(r0.payload.empty());
  CHECK(catalan_compose(*s, 2, l, r) == "(())");
}

TEST_CASE("every registered sequence is a bijection on small sizes") {
  for (auto spec : family_specs()) {
    auto cs = make_sequence(spec);
    auto r = verify_catalan(*cs, std::min(cs->cap(), 4));
    CHECK_MESSAGE(r.ok(), spec);
  }
}

TEST_CASE("registry rejects unknown specs") {
  CHECK_THROWS_AS(make_family("nonsense"), InvalidSpec);
  CHECK_THROWS_AS(make_sequence("lbrackets:"), InvalidSpec);
  CHECK_THROWS_AS(make_family("contour:1"), InvalidSpec);
}
