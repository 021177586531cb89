#pragma once

#include <string>

#include "cclab/catalogue.hpp"
#include "cclab/parser.hpp"
#include "cclab/system.hpp"

namespace testing {

inline const cclab::Catalogue& catalogue() {
  static const cclab::Catalogue cat = cclab::Catalogue::load(CCLAB_TEST_DATA_DIR);
  return cat;
}

inline cclab::PlanarSystem system(const std::string& key) {
  return cclab::parse_system(catalogue().at(key).source);
}

inline cclab::PlanarSystem make_system(const std::string& dx, const std::string& dy,
                                       const cclab::VarNames& vars = {"x", "y"}) {
  cclab::SystemSource src;
  src.raw_dx = dx;
  src.raw_dy = dy;
  src.varnames = vars;
  return cclab::parse_system(src);
}

}  // namespace testing
