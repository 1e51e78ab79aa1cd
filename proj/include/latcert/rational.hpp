#pragma once

// Exact integer and rational scalars. All arithmetic in this library is
// exact; floating point types are deliberately absent.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace latcert {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

inline Int to_int(const Rat& q) {
  if (!is_integer(q))
    throw std::domain_error("to_int: not an integer: " + q.str());
  return num(q);
}

inline bool is_even(const Int& n) { return n % 2 == 0; }
inline bool is_even_integer(const Rat& q) { return is_integer(q) && is_even(num(q)); }

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int rat_floor(const Rat& q) { return floor_div(num(q), den(q)); }
inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline std::optional<Int> exact_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = boost::multiprecision::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

inline std::optional<Rat> exact_sqrt(const Rat& q) {
  auto n = exact_sqrt(num(q));
  if (!n) return std::nullopt;
  auto d = exact_sqrt(den(q));
  if (!d) return std::nullopt;
  return Rat(*n, *d);
}

inline std::string rat_str(const Rat& q) {
  if (is_integer(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

inline Rat parse_rat(const std::string& s) {
  auto parse_int = [](const std::string& t) -> Int {
    std::string u = t;
    if (!u.empty() && u.front() == '+') u.erase(0, 1);
    if (u.empty() || (u.size() == 1 && u[0] == '-'))
      throw std::invalid_argument("parse_rat: bad integer: '" + t + "'");
    for (size_t i = (u[0] == '-') ? 1 : 0; i < u.size(); ++i)
      if (u[i] < '0' || u[i] > '9')
        throw std::invalid_argument("parse_rat: bad integer: '" + t + "'");
    return Int(u);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int d = parse_int(s.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("parse_rat: zero denominator: '" + s + "'");
  return Rat(parse_int(s.substr(0, slash)), d);
}

}  // namespace latcert
