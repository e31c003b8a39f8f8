#pragma once

#include <optional>
#include <string>

#include "catalog.hpp"

namespace hopfwit::api {

// String-level entry points shared by the command line tool and the python
// module.  Inputs and outputs are the JSON documents described on each
// structure type; errors surface as the usual exception types.

std::string check(const std::string& level, const std::string& input_json);
std::optional<std::string> solve(const std::string& kind, const std::string& input_json);
std::string verify(const std::string& kind, const std::string& input_json,
                   const std::string& witness_json); // ParseError on context mismatch
std::string transport(const std::string& direction, const std::string& input_json,
                      const std::string& witness_json);
std::string deform_theta(const std::string& theta_witness_json, const std::string& map_json);
std::string deform_fieldext(const std::string& fieldext_json, const std::string& map_json);
std::string catalog(const std::string& filter = "", uint64_t seed = 0xC0FFEEull);
std::vector<std::string> catalog_entries();

std::string group_algebra_json(const std::vector<std::vector<size_t>>& table,
                               const std::string& field_json);
std::string sweedler_h4_json(const std::string& field_json);
std::string dual_of_json(const std::string& presentation_json);
std::string yetter_drinfeld_entwining_json(const std::string& hopf_json);
std::string relative_hopf_entwining_json(const std::string& relhopf_input_json);

} // namespace hopfwit::api
