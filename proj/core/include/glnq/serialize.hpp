#pragma once

#include <string>

#include "glnq/colored.hpp"
#include "glnq/ratfun.hpp"

namespace glnq {

/// JSON forms used by the CLI and the cache. All serializations are
/// canonical and round-trip bit-exactly:
///   RatFun        {"num": ["1", "-1/2", ...], "den": [...]}   (ascending powers)
///   ColoredPattern [{"d": 1, "parts": [2, 1]}, ...]           (canonical order)
///   ClassType      [{"f_deg": 1, "parts": [1, 1]}, ...]

std::string ratfun_to_json(const RatFun& value);
RatFun ratfun_from_json(const std::string& text);

std::string pattern_to_json(const ColoredPattern& pattern);
ColoredPattern pattern_from_json(const std::string& text);

std::string class_type_to_json(const ClassType& class_type);
ClassType class_type_from_json(const std::string& text);

/// Comma-separated partition, e.g. "3,1,1"; empty string = empty partition.
std::string partition_to_string(const Partition& mu);
Partition partition_from_string(const std::string& text);

}  // namespace glnq
