#include "glnq/serialize.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace glnq {

namespace {

using Json = nlohmann::ordered_json;

Json poly_to_json(const PolyQ& poly) {
  Json coeffs = Json::array();
  for (const Rat& c : poly.coefficients()) coeffs.push_back(rat_to_string(c));
  return coeffs;
}

PolyQ poly_from_json(const Json& coeffs) {
  if (!coeffs.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Rat> values;
  values.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (!c.is_string()) throw std::invalid_argument("polynomial coefficients must be strings");
    values.push_back(rat_from_string(c.get<std::string>()));
  }
  return PolyQ(std::move(values));
}

Json parse(const std::string& text) {
  Json value = Json::parse(text, nullptr, false);
  if (value.is_discarded()) throw std::invalid_argument("malformed JSON: " + text);
  return value;
}

std::vector<PatternEntry> entries_from_json(const Json& array, const char* degree_key) {
  if (!array.is_array()) throw std::invalid_argument("colored pattern JSON must be an array");
  std::vector<PatternEntry> entries;
  for (const auto& item : array) {
    if (!item.is_object() || !item.contains(degree_key) || !item.contains("parts")) {
      throw std::invalid_argument(std::string("pattern entry needs '") + degree_key +
                                  "' and 'parts'");
    }
    PatternEntry entry;
    entry.degree = item.at(degree_key).get<int>();
    std::vector<int> parts;
    for (const auto& p : item.at("parts")) parts.push_back(p.get<int>());
    entry.parts = Partition(std::move(parts));
    entries.push_back(std::move(entry));
  }
  return entries;
}

Json entries_to_json(const std::vector<PatternEntry>& entries, const char* degree_key) {
  Json array = Json::array();
  for (const PatternEntry& e : entries) {
    Json item;
    item[degree_key] = e.degree;
    item["parts"] = e.parts.parts();
    array.push_back(std::move(item));
  }
  return array;
}

}  // namespace

std::string ratfun_to_json(const RatFun& value) {
  Json object;
  object["num"] = poly_to_json(value.numerator());
  object["den"] = poly_to_json(value.denominator());
  return object.dump();
}

RatFun ratfun_from_json(const std::string& text) {
  Json object = parse(text);
  if (!object.is_object() || !object.contains("num") || !object.contains("den")) {
    throw std::invalid_argument("rational function JSON needs 'num' and 'den'");
  }
  return RatFun(poly_from_json(object.at("num")), poly_from_json(object.at("den")));
}

std::string pattern_to_json(const ColoredPattern& pattern) {
  return entries_to_json(pattern.entries(), "d").dump();
}

ColoredPattern pattern_from_json(const std::string& text) {
  return ColoredPattern(entries_from_json(parse(text), "d"));
}

std::string class_type_to_json(const ClassType& class_type) {
  return entries_to_json(class_type.entries(), "f_deg").dump();
}

ClassType class_type_from_json(const std::string& text) {
  return ClassType(entries_from_json(parse(text), "f_deg"));
}

std::string partition_to_string(const Partition& mu) {
  std::string out;
  for (std::size_t i = 0; i < mu.parts().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(mu.parts()[i]);
  }
  return out;
}

Partition partition_from_string(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty()) throw std::invalid_argument("empty part in partition: '" + text + "'");
    std::size_t used = 0;
    int value = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad partition part: '" + item + "'");
    parts.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace glnq
