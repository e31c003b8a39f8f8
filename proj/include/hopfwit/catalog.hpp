#pragma once

#include "deform.hpp"

namespace hopfwit {

// Built-in example instances and the consistency suites run over them.
// Expected outcomes are recorded only where they have a derivation; anything
// else is Unspecified and merely logged.

enum class Expected { Exists, NotExists, Unspecified };

struct CatalogAssertion {
    std::string entry;
    std::string solver;   // solver name or consistency-check name
    std::string outcome;  // Exists / NotExists / pass / fail / agree / disagree
    std::string expected; // Exists / NotExists / Unspecified / pass / agree
    bool pass = true;
};

struct CatalogReport {
    std::vector<CatalogAssertion> rows;
    bool ok() const;
    nlohmann::json to_json() const;
    std::string pretty() const;
};

std::vector<std::string> catalog_entry_names();

// Runs every entry whose name contains `filter` (all when empty): solvers
// against expected outcomes, equivalence-chain agreements, transport
// round-trips, deformation invariants, and re-verification of every witness.
CatalogReport catalog_run(const std::string& filter = "", uint64_t seed = 0xC0FFEEull);

} // namespace hopfwit
