#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace catpascal {

// Vertex of one of the catalog graphs.  Integers cover the chain graphs
// (signed for the doubly infinite chain, primed for the 0' vertex of the
// D-type graph), sequences label the trees A(lambda), partitions label the
// Young graphs (with an optional "+" copy), weights label the dominant
// weight lattices and walks label directed covers.
class VertexLabel {
 public:
  enum class Kind : unsigned char { Integer, Sequence, Partition, Weight, Walk };

  VertexLabel() = default;

  static VertexLabel integer(long v);
  static VertexLabel primed(long v);
  static VertexLabel sequence(std::vector<int> d);
  static VertexLabel partition(std::vector<int> parts, bool plus = false);
  static VertexLabel weight(std::vector<int> coords);
  static VertexLabel walk(std::vector<int> steps);

  Kind kind() const { return kind_; }
  long value() const;
  bool marked() const { return mark_; }
  const std::vector<int>& data() const { return data_; }
  std::size_t size() const { return data_.size(); }

  std::string str() const;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
  friend std::strong_ordering operator<=>(const VertexLabel& a, const VertexLabel& b);

 private:
  Kind kind_ = Kind::Integer;
  bool mark_ = false;
  std::vector<int> data_{0};
};

struct VertexLabelHash {
  std::size_t operator()(const VertexLabel& v) const noexcept;
};

// Parses the textual form produced by str() for a label of the given kind.
VertexLabel parse_label(std::string_view text, VertexLabel::Kind kind);

}  // namespace catpascal
