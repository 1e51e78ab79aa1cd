#pragma once

// Dense univariate polynomials over an exact coefficient ring. Gram matrix
// entries live in Z[x] for a single named unknown per lattice; pairings of
// rational divisor classes live in Q[x]. Only degree <= 2 root finding is
// provided, and it is exact.

#include "rational.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace latcert {

template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(T constant) {
    if (constant != T(0)) c_.push_back(std::move(constant));
  }
  Polynomial(int constant) : Polynomial(T(constant)) {}
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial var() { return Polynomial(std::vector<T>{T(0), T(1)}); }

  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  T coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return T(0);
    return c_[i];
  }
  T constant_value() const {
    if (!is_constant())
      throw std::domain_error("polynomial is not constant: " + to_string());
    return coeff(0);
  }
  const std::vector<T>& coeffs() const { return c_; }

  Polynomial& operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
    return acc;
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      T c = coeff(i);
      if (c == T(0)) continue;
      bool neg = c < T(0);
      T a = neg ? T(-c) : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      bool unit = (a == T(1));
      if (!unit || i == 0) out += coeff_str(a);
      if (i >= 1) {
        if (!unit) out += "*";
        out += var;
        if (i >= 2) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  static std::string coeff_str(const T& c) {
    if constexpr (std::is_same_v<T, Rat>)
      return rat_str(c);
    else
      return c.str();
  }
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

inline RatPoly to_rat_poly(const IntPoly& p) {
  std::vector<Rat> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

inline std::optional<IntPoly> to_int_poly(const RatPoly& p) {
  std::vector<Int> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) {
    if (!is_integer(x)) return std::nullopt;
    c.push_back(num(x));
  }
  return IntPoly(std::move(c));
}

namespace detail {
inline std::optional<Int> coeff_div(const Int& a, const Int& b) {
  if (a % b != 0) return std::nullopt;
  return Int(a / b);
}
inline std::optional<Rat> coeff_div(const Rat& a, const Rat& b) { return Rat(a / b); }
}  // namespace detail

// Exact polynomial division: returns a/b when b divides a in T[x], otherwise
// nullopt. Division by zero throws.
template <class T>
std::optional<Polynomial<T>> divide_exact(const Polynomial<T>& a,
                                          const Polynomial<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return Polynomial<T>();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<T> rem(a.coeffs());
  std::vector<T> quot(a.degree() - b.degree() + 1, T(0));
  const T& lead = b.coeff(b.degree());
  for (int i = a.degree(); i >= b.degree(); --i) {
    T cur = rem[i];
    if (cur == T(0)) continue;
    auto q = detail::coeff_div(cur, lead);
    if (!q) return std::nullopt;
    quot[i - b.degree()] = *q;
    for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= *q * b.coeff(j);
  }
  for (const auto& r : rem)
    if (r != T(0)) return std::nullopt;
  return Polynomial<T>(std::move(quot));
}

// Rational roots of a polynomial of degree <= 2, sorted ascending, without
// multiplicity. The zero polynomial is rejected.
inline std::vector<Rat> rational_roots(const RatPoly& p) {
  if (p.is_zero())
    throw std::domain_error("rational_roots: zero polynomial");
  if (p.degree() > 2)
    throw std::domain_error("rational_roots: degree > 2 unsupported: " +
                            p.to_string());
  if (p.degree() == 0) return {};
  if (p.degree() == 1) return {-p.coeff(0) / p.coeff(1)};
  Rat a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
  Rat disc = b * b - 4 * a * c;
  auto root = exact_sqrt(disc);
  if (!root) return {};
  if (*root == 0) return {-b / (2 * a)};
  Rat r1 = (-b - *root) / (2 * a), r2 = (-b + *root) / (2 * a);
  if (r2 < r1) std::swap(r1, r2);
  return {r1, r2};
}

inline std::vector<Rat> rational_roots(const IntPoly& p) {
  return rational_roots(to_rat_poly(p));
}

}  // namespace latcert
