#ifndef HILBERT_JSON_IO_HPP
#define HILBERT_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hilbert/curve.hpp"
#include "hilbert/enumerator.hpp"
#include "hilbert/index_map.hpp"
#include "hilbert/verifier.hpp"

namespace hilbert {

inline constexpr const char* kSchemaTag = "hilbert-atlas/1";

/// {"schema","family","order","entry","exit","cells"} with [col,row] pairs,
/// origin at the lower left.
nlohmann::ordered_json curve_to_json(const Curve& c);

/// One "col,row" line per cell.
std::string curve_to_csv(const Curve& c);

nlohmann::ordered_json report_to_json(const CheckReport& r);
nlohmann::ordered_json reports_to_json(const std::vector<CheckReport>& reports, int max_order);

nlohmann::ordered_json locality_to_json(const LocalityReport& r);

}  // namespace hilbert

#endif
