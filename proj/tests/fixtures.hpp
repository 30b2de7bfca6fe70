#pragma once

#include "grpn/group.hpp"
#include "grpn/notation.hpp"
#include "grpn/tableau.hpp"

namespace fixtures {

// [z 5, 1, z^2 3, 6, z^2 7, z 4, 2, 8] in G(4,1,8).
inline grpn::GroupElement running_example() {
  return grpn::make_element(grpn::GroupParams::make(4, 1, 8), {5, 1, 3, 6, 7, 4, 2, 8},
                            {1, 0, 2, 0, 2, 1, 0, 0});
}

// Its ascending representative [1,3,2,4,z 6,z 5,z^2 7,z^2 8].
inline grpn::GroupElement ascending_example() {
  return grpn::make_element(grpn::GroupParams::make(4, 1, 8), {1, 3, 2, 4, 6, 5, 7, 8},
                            {0, 0, 0, 0, 1, 1, 2, 2});
}

inline grpn::Multitableau mt(const char* json) {
  return grpn::multitableau_from_json(nlohmann::json::parse(json));
}

inline grpn::StandardTableau st(std::vector<std::vector<int>> rows) {
  return grpn::StandardTableau(std::move(rows));
}

}  // namespace fixtures
