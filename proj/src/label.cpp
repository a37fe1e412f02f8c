#include "catpascal/label.hpp"

#include "catpascal/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace catpascal {

VertexLabel VertexLabel::integer(long v) {
  VertexLabel l;
  l.kind_ = Kind::Integer;
  l.data_ = {static_cast<int>(v)};
  return l;
}

VertexLabel VertexLabel::primed(long v) {
  VertexLabel l = integer(v);
  l.mark_ = true;
  return l;
}

VertexLabel VertexLabel::sequence(std::vector<int> d) {
  VertexLabel l;
  l.kind_ = Kind::Sequence;
  l.data_ = std::move(d);
  return l;
}

VertexLabel VertexLabel::partition(std::vector<int> parts, bool plus) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (!std::is_sorted(parts.rbegin(), parts.rend()))
    throw DomainError("partition parts must be weakly decreasing");
  VertexLabel l;
  l.kind_ = Kind::Partition;
  l.mark_ = plus;
  l.data_ = std::move(parts);
  return l;
}

VertexLabel VertexLabel::weight(std::vector<int> coords) {
  VertexLabel l;
  l.kind_ = Kind::Weight;
  l.data_ = std::move(coords);
  return l;
}

VertexLabel VertexLabel::walk(std::vector<int> steps) {
  VertexLabel l;
  l.kind_ = Kind::Walk;
  l.data_ = std::move(steps);
  return l;
}

long VertexLabel::value() const {
  if (kind_ != Kind::Integer) throw DomainError("label is not an integer: " + str());
  return data_.front();
}

std::strong_ordering operator<=>(const VertexLabel& a, const VertexLabel& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.data_ <=> b.data_; c != 0) return c;
  return a.mark_ <=> b.mark_;
}

namespace {

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::vector<int> split_ints(std::string_view body) {
  std::vector<int> out;
  while (!body.empty()) {
    auto comma = body.find(',');
    auto tok = body.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw InvalidSpec("bad integer in label: " + std::string(tok));
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::string_view unwrap(std::string_view s, char open, char close) {
  if (s.size() < 2 || s.front() != open || s.back() != close)
    throw InvalidSpec("bad label: " + std::string(s));
  return s.substr(1, s.size() - 2);
}

}  // namespace

std::string VertexLabel::str() const {
  switch (kind_) {
    case Kind::Integer:
      return std::to_string(data_.front()) + (mark_ ? "'" : "");
    case Kind::Sequence:
      return "(" + join(data_) + ")";
    case Kind::Partition:
      return (data_.empty() ? std::string("∅") : "(" + join(data_) + ")") + (mark_ ? "+" : "");
    case Kind::Weight:
      return "[" + join(data_) + "]";
    case Kind::Walk:
      return "<" + join(data_) + ">";
  }
  return {};
}

std::size_t VertexLabelHash::operator()(const VertexLabel& v) const noexcept {
  std::size_t h = static_cast<std::size_t>(v.kind()) * 31u + (v.marked() ? 7u : 0u);
  for (int x : v.data()) h = h * 1000003u ^ std::hash<int>{}(x);
  return h;
}

VertexLabel parse_label(std::string_view text, VertexLabel::Kind kind) {
  auto s = strip(text);
  switch (kind) {
    case VertexLabel::Kind::Integer: {
      bool primed = !s.empty() && s.back() == '\'';
      if (primed) s.remove_suffix(1);
      auto v = split_ints(s);
      if (v.size() != 1) throw InvalidSpec("bad integer label: " + std::string(text));
      return primed ? VertexLabel::primed(v[0]) : VertexLabel::integer(v[0]);
    }
    case VertexLabel::Kind::Sequence:
      return VertexLabel::sequence(split_ints(unwrap(s, '(', ')')));
    case VertexLabel::Kind::Partition: {
      bool plus = !s.empty() && s.back() == '+';
      if (plus) s.remove_suffix(1);
      if (s == "∅" || s == "()" || s.empty()) return VertexLabel::partition({}, plus);
      return VertexLabel::partition(split_ints(unwrap(s, '(', ')')), plus);
    }
    case VertexLabel::Kind::Weight:
      return VertexLabel::weight(split_ints(unwrap(s, '[', ']')));
    case VertexLabel::Kind::Walk:
      return VertexLabel::walk(split_ints(unwrap(s, '<', '>')));
  }
  throw InvalidSpec("bad label");
}

}  // namespace catpascal
