#pragma once

#include "catpascal/pascal.hpp"

#include <memory>
#include <string>
#include <vector>

namespace catpascal {

// Family and sequence specs: tl, brackets, trees, intervals, ncp, blob, dblob,
// lbrackets:<lambda>, contour:<k>,<d>, ctrees:<lambda>, bell, brauer, clusters.
std::shared_ptr<const PascalFamily> make_family(const std::string& spec);
std::shared_ptr<const CatalanSequence> make_sequence(const std::string& spec);

// One representative spec per registered family, in a fixed order.
std::vector<std::string> family_specs();

}  // namespace catpascal
