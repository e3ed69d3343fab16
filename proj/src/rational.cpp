#include "temperley/rational.hpp"

#include "temperley/error.hpp"

namespace temperley {

std::string rational_str(const Rational& r) {
  Int n = numerator(r), d = denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw Error(Errc::ParseError, "empty rational");
  auto bad = [&] { return Error(Errc::ParseError, "bad rational '" + s + "'"); };
  std::size_t slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      Int n(s.substr(0, slash));
      Int d(s.substr(slash + 1));
      if (d == 0) throw bad();
      return Rational(n, d);
    }
    std::size_t dot = s.find('.');
    if (dot == std::string::npos) return Rational(Int(s));
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (fp.empty()) throw bad();
    bool neg = !ip.empty() && ip[0] == '-';
    Int scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    Int whole = ip.empty() || ip == "-" ? Int(0) : Int(ip);
    Rational frac = Rational(Int(fp), scale);
    return neg ? Rational(whole) - frac : Rational(whole) + frac;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

}  // namespace temperley
