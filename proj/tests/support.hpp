#pragma once

#include <algorithm>
#include <sstream>
#include <string>

#include "hyperlaw/io.hpp"
#include "oracle.hpp"

namespace support {

inline hyperlaw::HyperTable load(std::string const& name) {
  return hyperlaw::load_table(oracle::fixture(name + ".tbl"));
}

inline hyperlaw::Element at(hyperlaw::HyperTable const& t,
                            std::string const& label) {
  auto const& l = t.labels();
  return static_cast<hyperlaw::Element>(
      std::find(l.begin(), l.end(), label) - l.begin());
}

// Mask from a comma-separated list of labels, e.g. "z,w".
inline hyperlaw::SubsetMask set(hyperlaw::HyperTable const& t,
                                std::string const& labels) {
  hyperlaw::SubsetMask out;
  std::stringstream    in(labels);
  std::string          item;
  while (std::getline(in, item, ',')) {
    out |= hyperlaw::SubsetMask::singleton(at(t, item));
  }
  return out;
}

}  // namespace support
