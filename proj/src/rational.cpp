#include "tama/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tama {

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (num[0] == '+') num = num.substr(1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

}  // namespace tama
