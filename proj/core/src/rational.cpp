#include "gcmr/rational.hpp"

#include <cctype>

#include "gcmr/error.hpp"

namespace gcmr {

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return r.numerator().str();
  return r.numerator().str() + "/" + r.denominator().str();
}

Rat parse_rational(const std::string& text) {
  auto bad = [&] { throw Error(ErrorKind::BadInput, "not a rational: '" + text + "'"); };
  if (text.empty()) bad();
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) -> BigInt {
    if (s.empty() || (s.size() == 1 && (s[0] == '+' || s[0] == '-'))) bad();
    for (size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad();
    }
    return BigInt(s);
  };
  if (slash == std::string::npos) return Rat(parse_int(text), 1);
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) bad();
  return Rat(num, den);
}

}  // namespace gcmr
