#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "gcf/continued_fraction.hpp"
#include "gcf/matrix2.hpp"
#include "gcf/reduction.hpp"
#include "gcf/sails.hpp"

namespace gcf {

// Matrix text form is row-major "m11 m12; m21 m22"; JSON form is
// [[m11,m12],[m21,m22]] (rows).
IntMatrix2 parse_matrix(const std::string& text);
nlohmann::json matrix_to_json(const IntMatrix2& M);
IntMatrix2 matrix_from_json(const nlohmann::json& j);

// Comma-separated positive integers, e.g. "2,1,1,3".
std::vector<Int> parse_int_list(const std::string& text);

// "(2,1,1,3)"
std::string period_to_string(const std::vector<Int>& word);

nlohmann::json trace_to_json(const ReductionTrace& trace);
nlohmann::json sail_to_json(const SailPeriod& sail);

}  // namespace gcf
