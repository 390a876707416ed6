#include "qseries/serialize.hpp"

#include <ostream>
#include <utility>

namespace qseries {

namespace {

int read_order(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw FormatError(std::string("missing integer field \"") + key + "\"");
  }
  const auto v = j.at(key).get<long long>();
  if (v < 0 || v > 100000) throw FormatError(std::string("field \"") + key + "\" out of range");
  return static_cast<int>(v);
}

Coefficient read_coefficient(const Json& j) {
  if (!j.is_string()) throw FormatError("coefficient must be a decimal string");
  const auto& text = j.get_ref<const std::string&>();
  Coefficient c;
  // Canonical decimal only: optional '-', no leading zeros, no '+'.
  const std::size_t digits_at = (!text.empty() && text[0] == '-') ? 1 : 0;
  const bool ok = text.size() > digits_at &&
                  text.find_first_not_of("0123456789", digits_at) == std::string::npos &&
                  (text[digits_at] != '0' || text.size() == digits_at + 1) &&
                  c.set_str(text, 10) == 0;
  if (!ok) throw FormatError("bad coefficient \"" + text + "\"");
  if (c == 0) throw FormatError("zero coefficients must be omitted");
  return c;
}

}  // namespace

Json series_to_json(const BiSeries& s) {
  Json terms = Json::array();
  for (int a = 0; a <= s.x_order(); ++a) {
    for (int b = 0; b <= s.q_order(); ++b) {
      const Coefficient& c = s.at(a, b);
      if (c != 0) terms.push_back(Json::array({a, b, c.get_str()}));
    }
  }
  Json j;
  j["x_order"] = s.x_order();
  j["q_order"] = s.q_order();
  j["terms"] = std::move(terms);
  return j;
}

BiSeries series_from_json(const Json& j) {
  const int R = read_order(j, "x_order");
  const int N = read_order(j, "q_order");
  if (!j.contains("terms") || !j.at("terms").is_array()) {
    throw FormatError("missing array field \"terms\"");
  }
  BiSeries s(R, N);
  long long last = -1;
  for (const auto& term : j.at("terms")) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer() ||
        !term[1].is_number_integer()) {
      throw FormatError("term must be [a, b, \"c\"]");
    }
    const auto a = term[0].get<long long>();
    const auto b = term[1].get<long long>();
    if (a < 0 || b < 0 || a > R || b > N) throw FormatError("term outside declared window");
    const long long key = a * (N + 1) + b;
    if (key <= last) throw FormatError("terms must be strictly sorted by (a, b)");
    last = key;
    s.at(static_cast<int>(a), static_cast<int>(b)) = read_coefficient(term[2]);
  }
  return s;
}

Json family_to_json(const RecursionFamily& fam) {
  Json members = Json::array();
  for (const auto& f : fam.members) members.push_back(series_to_json(f));
  Json j;
  j["k"] = fam.k;
  j["x_order"] = fam.x_order;
  j["q_order"] = fam.q_order;
  j["F"] = std::move(members);
  return j;
}

RecursionFamily family_from_json(const Json& j) {
  RecursionFamily fam;
  fam.k = read_order(j, "k");
  fam.x_order = read_order(j, "x_order");
  fam.q_order = read_order(j, "q_order");
  if (fam.k < 1) throw FormatError("k must be >= 1");
  if (!j.contains("F") || !j.at("F").is_array() ||
      j.at("F").size() != static_cast<std::size_t>(fam.k + 1)) {
    throw FormatError("\"F\" must be an array of k+1 series");
  }
  for (const auto& member : j.at("F")) {
    BiSeries f = series_from_json(member);
    if (f.x_order() != fam.x_order || f.q_order() != fam.q_order) {
      throw FormatError("member window differs from family window");
    }
    fam.members.push_back(std::move(f));
  }
  return fam;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

void write_family_tsv(std::ostream& out, const RecursionFamily& fam) {
  out << "i\ta\tb\tcoeff\n";
  for (int i = 0; i <= fam.k; ++i) {
    const BiSeries& f = fam[i];
    for (int a = 0; a <= f.x_order(); ++a) {
      for (int b = 0; b <= f.q_order(); ++b) {
        if (f.at(a, b) != 0) out << i << '\t' << a << '\t' << b << '\t' << f.at(a, b) << '\n';
      }
    }
  }
}

void write_table_tsv(std::ostream& out, const DimensionTable& table) {
  out << "m\tw\tdim\n";
  for (int m = 0; m <= table.max_charge(); ++m) {
    for (int w = 0; w <= table.max_weight(); ++w) {
      out << m << '\t' << w << '\t' << table.at(m, w) << '\n';
    }
  }
}

Json table_to_json(const DimensionTable& table) { return series_to_json(table.to_series()); }

}  // namespace qseries
