#pragma once

#include <doctest.h>

#include <memory>
#include <stdexcept>
#include <string>

#include "bca/harness/catalog.hpp"

namespace testutil {

inline const std::vector<bca::harness::CatalogEntry>& catalog() {
  static const auto c = bca::harness::catalog_default();
  return c;
}

inline std::shared_ptr<const bca::grp::Group> shared(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e.group;
  throw std::logic_error("no catalog group " + name);
}

inline const bca::grp::Group& named(const std::string& name) { return *shared(name); }

}  // namespace testutil
