#pragma once

#include <string>
#include <vector>

#include "modcat/fusion.hpp"

namespace modcat {

/// Known properties of a catalog entry. Every field is re-derived by the test
/// suites through the generic pipeline; nothing here is trusted as an oracle.
struct CatalogExpected {
    bool modular = false;
    bool prime = false;
    double dim_numeric = 0.0; // compared against numeric_eval of the exact dim
    int center_size = 1;
    int subcat_count = 1;
};

struct CatalogEntry {
    std::string key;
    PremodularData data;
    CatalogExpected expected;
};

/// Keys in canonical order: vec, semion, fib, ising, rep-z2-sym, toric, dz3,
/// dz4, dz5, dz9, fib-x-ising.
const std::vector<std::string>& catalog_keys();

/// Finalized data for a key. Throws UnknownKey.
PremodularData catalog_get(const std::string& key);

const CatalogEntry& catalog_entry(const std::string& key);

} // namespace modcat
