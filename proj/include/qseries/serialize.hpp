#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qseries/oracle.hpp"
#include "qseries/selberg.hpp"
#include "qseries/series.hpp"

namespace qseries {

using Json = nlohmann::ordered_json;

// Malformed or non-canonical serialized input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"x_order": R, "q_order": N, "terms": [[a, b, "c"], ...]}: nonzero
// terms only, sorted by (a, b), coefficients as decimal strings.
Json series_to_json(const BiSeries& s);
BiSeries series_from_json(const Json& j);

// {"k": k, "x_order": R, "q_order": N, "F": [<series>, ...]}
Json family_to_json(const RecursionFamily& fam);
RecursionFamily family_from_json(const Json& j);

// Compact dump followed by a newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);

// Header "i\ta\tb\tcoeff", then one line per nonzero coefficient.
void write_family_tsv(std::ostream& out, const RecursionFamily& fam);

// Header "m\tw\tdim", then one line per cell in (m, w) order.
void write_table_tsv(std::ostream& out, const DimensionTable& table);
// The table's series image in the series JSON form.
Json table_to_json(const DimensionTable& table);

}  // namespace qseries
