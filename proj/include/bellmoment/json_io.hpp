#pragma once

#include <string>

#include <json.hpp>

#include "bellmoment/measure.hpp"
#include "bellmoment/moment.hpp"

namespace bellmoment::json {

using nlohmann::json;

// Encoders emit the documented schemas; decoders validate them and throw
// FormatError with the path of the offending field.

json encode(const Scalar& z);
json encode(const Exponential& m);
json encode(const AdditiveFn& a);
json encode(const TabulatedFn& t);
json encode(const FinMeasure& mu);
json encode(const MomentSpec& spec);
json encode(const TabulatedSequence& seq);
json encode(const VerifyReport& report);

Scalar decode_scalar(const json& j, const std::string& path = "$");
Exponential decode_exponential(const json& j, const std::string& path = "$");
AdditiveFn decode_additive(const json& j, const std::string& path = "$");
TabulatedFn decode_table(const json& j, const std::string& path = "$");
FinMeasure decode_measure(const json& j, std::size_t dim,
                          const std::string& path = "$");
MomentSpec decode_spec(const json& j, const std::string& path = "$");
TabulatedSequence decode_sequence(const json& j, const std::string& path = "$");

/// Parses JSON text; syntax errors become FormatError carrying the byte
/// position reported by the parser.
json parse(const std::string& text);
json read_file(const std::string& path);

std::string status_name(VerifyStatus s);

}  // namespace bellmoment::json
