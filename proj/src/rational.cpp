#include "randomplay/rational.hpp"

#include <cstdio>

namespace randomplay {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string approx_string(const Rational& q, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, q.get_d());
  return buf;
}

nlohmann::json rational_to_json(const Rational& q) {
  return {{"num", q.get_num().get_str()},
          {"den", q.get_den().get_str()},
          {"approx", approx_string(q)}};
}

}  // namespace randomplay
