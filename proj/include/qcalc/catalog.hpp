#pragma once

#include <string>
#include <vector>

#include "qcalc/dsl.hpp"

namespace qcalc {

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::string source;  ///< `.alg` text as stored
};

/// heisenberg, g1, g2, prop31_family, in that order.
const std::vector<CatalogEntry>& catalog();

/// Throws LookupError for unknown names.
const CatalogEntry& catalog_entry(const std::string& name);
AlgebraDocument catalog_document(const std::string& name);

}  // namespace qcalc
