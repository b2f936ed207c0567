#include "rainbow/rational.hpp"

#include <cassert>
#include <cmath>

namespace rainbow {

std::string fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string decimal_string(const Rational& q, int max_frac_digits) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  bool negative = num < 0;
  if (negative) num = -num;

  BigInt scale = 1;
  for (int i = 0; i < max_frac_digits; ++i) scale *= 10;

  // round(num/den * scale), half away from zero
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  BigInt int_part = scaled / scale;
  BigInt frac_part = scaled % scale;

  std::string out = int_part.str();
  if (frac_part != 0) {
    std::string digits = frac_part.str();
    digits.insert(digits.begin(),
                  static_cast<std::size_t>(max_frac_digits) - digits.size(),
                  '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return negative ? "-" + out : out;
}

double ratio_as_double(const BigInt& num, const BigInt& den) {
  assert(den > 0);
  if (num == 0) return 0.0;
  assert(num > 0);

  // Bring both operands into 63 bits, track the dropped scale.
  auto top_bits = [](const BigInt& x, int& shift) {
    int bit = static_cast<int>(boost::multiprecision::msb(x));
    shift = bit - 62;
    BigInt t = shift > 0 ? BigInt(x >> shift) : BigInt(x << -shift);
    return t.convert_to<double>();
  };

  int sn = 0, sd = 0;
  double dn = top_bits(num, sn);
  double dd = top_bits(den, sd);
  return std::ldexp(dn / dd, sn - sd);
}

}  // namespace rainbow
