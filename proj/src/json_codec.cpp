#include "qhborel/json_codec.hpp"

#include <cstdint>

#include "qhborel/errors.hpp"

namespace qhb::json_codec {

namespace {

const Int& safe_limit() {
  static const Int limit("9007199254740991");  // 2^53 - 1
  return limit;
}

bool is_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

json encode(const Int& x) {
  if (abs(x) <= safe_limit()) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

json encode(const Rat& q) {
  if (is_integral(q)) return encode(Int(q.get_num()));
  return json(q.get_str());
}

json encode(std::span<const Int> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

json encode(std::span<const Rat> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

json encode(const IntMat& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(encode(m.row(i)));
  return out;
}

Int decode_int(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    Int x = j.is_number_unsigned() ? Int(std::to_string(j.get<std::uint64_t>()))
                                   : Int(std::to_string(j.get<std::int64_t>()));
    if (abs(x) > safe_limit())
      throw Error(ErrorCode::Schema, where + ": integers above 2^53-1 must be written as "
                                             "decimal strings");
    return x;
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (is_decimal(s)) return Int(s[0] == '+' ? s.substr(1) : s);
  }
  throw Error(ErrorCode::Schema, where + ": expected an integer or a decimal string, got " + j.dump());
}

}  // namespace qhb::json_codec
