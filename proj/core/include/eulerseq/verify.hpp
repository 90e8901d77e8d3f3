#pragma once

#include <string>
#include <vector>

namespace eulerseq::verify {

struct Item {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The built-in reference suite: the conic and ICIS examples across
// characteristics, plus the floor-identity sweep. Every item is an exact
// equality check.
std::vector<Item> run_suite();

}  // namespace eulerseq::verify
