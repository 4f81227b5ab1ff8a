#pragma once

#include <stdexcept>
#include <string>

#include "cquiver/geometry.hpp"
#include "cquiver/quiver.hpp"

namespace cquiver {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Quiver documents use 0-based vertices:
//   {"m": 3, "vertices": 3,
//    "arrows": [{"from": 0, "to": 1, "colour": 0, "mult": 1}, ...]}
// Both directions of every pair are listed; reading validates symmetry.
std::string quiver_to_json(const ColouredQuiver& q);
ColouredQuiver quiver_from_json(const std::string& text);

// Angulation documents use 1-based polygon labels:
//   {"N": 3, "m": 2, "diagonals": [[1, 4], [1, 6]]}
std::string angulation_to_json(const Angulation& a);
Angulation angulation_from_json(const std::string& text);

}  // namespace cquiver
