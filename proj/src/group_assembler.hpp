#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finann/finite_group.hpp"

namespace finann {

// Internal constructor access for code that produces tables which are groups
// by construction (closures, products, quotients).
class GroupAssembler {
 public:
  static FiniteGroup make(std::string name, std::size_t order, std::vector<Elem> table) {
    return FiniteGroup(std::move(name), order, std::move(table));
  }
};

}  // namespace finann
