#pragma once

#include <json.hpp>

#include <span>
#include <string>

#include "qhborel/exactla.hpp"

namespace qhb::json_codec {

using nlohmann::json;

/// Integers with |x| <= 2^53 - 1 become JSON numbers, larger ones decimal
/// strings.
json encode(const Int& x);
/// Integral rationals as encode(Int); otherwise the string "p/q".
json encode(const Rat& q);
json encode(std::span<const Int> v);
json encode(std::span<const Rat> v);
json encode(const IntMat& m);

/// Accepts JSON integers and decimal strings; throws Error(Schema) naming
/// `where` otherwise.
Int decode_int(const json& j, const std::string& where);

}  // namespace qhb::json_codec
