#include "catpascal/registry.hpp"

#include "catpascal/clusters.hpp"
#include "catpascal/decorated.hpp"
#include "catpascal/errors.hpp"
#include "catpascal/partitions.hpp"
#include "catpascal/typea.hpp"

#include <charconv>
#include <functional>
#include <map>

namespace catpascal {

namespace {

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    int v = 0;
    auto [p, ec] = std::from_chars(s.data() + start, s.data() + comma, v);
    if (ec != std::errc() || p != s.data() + comma || comma == start)
      throw InvalidSpec("bad integer list '" + s + "'");
    out.push_back(v);
    start = comma + 1;
  }
  return out;
}

template <class T>
struct Table {
  std::map<std::string, std::function<std::shared_ptr<const T>()>> plain;
  std::map<std::string, std::function<std::shared_ptr<const T>(const std::vector<int>&)>> with_args;

  std::shared_ptr<const T> make(const std::string& spec) const {
    if (auto it = plain.find(spec); it != plain.end()) return it->second();
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
      if (auto it = with_args.find(spec.substr(0, colon)); it != with_args.end())
        return it->second(int_list(spec.substr(colon + 1)));
    }
    throw InvalidSpec("unknown family '" + spec + "'");
  }
};

std::pair<int, int> two(const std::vector<int>& v) {
  if (v.size() != 2) throw InvalidSpec("contour takes k,d");
  return {v[0], v[1]};
}

const Table<PascalFamily>& families() {
  static const Table<PascalFamily> t{
      {{"tl", tl_family},
       {"brackets", bracket_family},
       {"trees", tree_family},
       {"intervals", interval_family},
       {"ncp", ncp_family},
       {"blob", blob_family},
       {"dblob", dblob_family},
       {"bell", bell_family},
       {"brauer", brauer_family},
       {"clusters", cluster_family}},
      {{"lbrackets", lambda_bracket_family},
       {"ctrees", coloured_tree_family},
       {"contour", [](const std::vector<int>& v) {
          auto [k, d] = two(v);
          return contour_family(k, d);
        }}}};
  return t;
}

const Table<CatalanSequence>& sequences() {
  static const Table<CatalanSequence> t{
      {{"tl", tl_sequence},
       {"brackets", bracket_sequence},
       {"trees", tree_sequence},
       {"intervals", interval_sequence},
       {"ncp", ncp_sequence},
       {"blob", blob_sequence},
       {"dblob", dblob_sequence},
       {"bell", bell_sequence},
       {"brauer", brauer_sequence},
       {"clusters", cluster_sequence}},
      {{"lbrackets", lambda_bracket_sequence},
       {"ctrees", coloured_tree_sequence},
       {"contour", [](const std::vector<int>& v) {
          auto [k, d] = two(v);
          return contour_sequence(k, d);
        }}}};
  return t;
}

}  // namespace

std::shared_ptr<const PascalFamily> make_family(const std::string& spec) { return families().make(spec); }

std::shared_ptr<const CatalanSequence> make_sequence(const std::string& spec) { return sequences().make(spec); }

std::vector<std::string> family_specs() {
  return {"tl",   "brackets", "trees",          "intervals",   "ncp",  "blob",   "dblob",
          "lbrackets:2,2,1", "contour:3,2", "ctrees:2,2,1", "bell", "brauer", "clusters"};
}

}  // namespace catpascal
