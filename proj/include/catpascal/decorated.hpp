#pragma once

#include "catpascal/pascal.hpp"
#include "catpascal/typea.hpp"
#include "catpascal/words.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace catpascal {

// ---- blob diagrams on (A_inf^inf, 0).  Every west-exposed arc carries a
// blob (mark 1, "•") or a square (mark 2, "□").
inline constexpr int kBlob = 1;
inline constexpr int kSquare = 2;

std::string blob_mark_str(int m);
int blob_mark_parse(std::string_view tok);
// +l, -l or 0; throws DomainError on an illegal decoration.
long blob_vertex(const Word& h);
Word blob_edge(long from, long to, const Word& h);
std::vector<Word> enum_blob_halves(int n);
std::vector<Word> enum_blob(int n);
std::pair<Word, Word> blob_cut(const Word& d);
Word blob_join(const Word& north, const Word& south);

// ---- lambda-ary brackets on (A(lambda), root).  Mark = bracket type - 1;
// an open at nesting depth t has lambda_{t+1} possible types.
std::string type_mark_str(int m);
int type_mark_parse(std::string_view tok);
VertexLabel lambda_vertex(const std::vector<int>& lambda, const Word& h);
Word lambda_bracket_edge(const VertexLabel& from, const VertexLabel& to, const Word& h);
std::vector<Word> enum_lambda_brackets(const std::vector<int>& lambda, int n);
std::vector<Word> enum_lambda_bracket_full(const std::vector<int>& lambda, int pairs);
std::pair<Word, Word> lambda_bracket_decompose(const Word& s);
Word lambda_bracket_compose(const Word& left, const Word& right);
// Glyphs ()[]{}<> by type; a layer with a single type inherits the glyph
// of the enclosing bracket.
std::string render_lambda_brackets(const std::vector<int>& lambda, const Word& w);

// ---- level-k d-colour contour diagrams on (A(d^k,1), root).  Mark =
// number of blobs on the arc.
std::vector<int> contour_lambda(int k, int d);
std::vector<int> cover_levels(const Word& w);
bool is_contour(const Word& w, int k, int d);
std::vector<Word> enum_contour_halves(int n, int k, int d);
std::vector<Word> enum_contour(int n, int k, int d);
Word contour_edge(const VertexLabel& from, const VertexLabel& to, const Word& h);
std::pair<Word, Word> contour_cut(const Word& d);
Word contour_stitch(const Word& north, const Word& south);

// ---- D-type blob diagrams on (D_inf, 0).  Mark 1 ("b") is a blob on a
// west-exposed arc; full diagrams carry an even number of blobs.
std::string dblob_mark_str(int m);
int dblob_mark_parse(std::string_view tok);
VertexLabel dblob_vertex(const Word& h);
Word dblob_edge(const VertexLabel& from, const VertexLabel& to, const Word& h);
std::vector<Word> enum_dblob_halves(int n);
std::vector<Word> enum_dblob(int n);
// Each half keeps the blob parity of its own exposed arcs on its
// westernmost propagating line; joining adds the two line blobs.
std::pair<Word, Word> dblob_cut(const Word& d);
Word dblob_join(const Word& north, const Word& south);

// ---- coloured half-trees on (A(lambda), root).  A vertex in layer i has
// one of lambda_i colours (0-based).
std::vector<HalfTree> enum_coloured_half_trees(const std::vector<int>& lambda, int n);
std::vector<PlanarTree> enum_coloured_trees(const std::vector<int>& lambda, int edges);
HalfTree coloured_tree_edge(const VertexLabel& from, const VertexLabel& to, const HalfTree& h);
// Anticlockwise boundary traversal; colours become bracket types.
Word coloured_tree_bijection(const HalfTree& h);

std::shared_ptr<const PascalFamily> blob_family();
std::shared_ptr<const PascalFamily> dblob_family();
std::shared_ptr<const PascalFamily> lambda_bracket_family(const std::vector<int>& lambda);
std::shared_ptr<const PascalFamily> contour_family(int k, int d);
std::shared_ptr<const PascalFamily> coloured_tree_family(const std::vector<int>& lambda);

std::shared_ptr<const CatalanSequence> blob_sequence();
std::shared_ptr<const CatalanSequence> dblob_sequence();
std::shared_ptr<const CatalanSequence> lambda_bracket_sequence(const std::vector<int>& lambda);
std::shared_ptr<const CatalanSequence> contour_sequence(int k, int d);
std::shared_ptr<const CatalanSequence> coloured_tree_sequence(const std::vector<int>& lambda);

}  // namespace catpascal
