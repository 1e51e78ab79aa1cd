#pragma once

// Numerical divisor lattices. A Space is a finite list of class symbols
// together with a partial symmetric Gram form. Entries are integers, or
// degree-one polynomials in the (at most one) named unknown of the space.
// Pairs may be left undeclared; reading an undeclared pair is an error, so
// scripts that never touch an undetermined intersection number still run.
//
// A PairingEnv threads replay state through the pairing: a resolved value
// for the unknown, and symbol substitutions coming from forced numerical
// relations.

#include "matrix.hpp"

#include <map>
#include <optional>
#include <string>

namespace latcert {

struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UndeclaredPairing : LatticeError {
  UndeclaredPairing(const std::string& a, const std::string& b)
      : LatticeError("undeclared pairing: " + a + "." + b), sym_a(a), sym_b(b) {}
  std::string sym_a, sym_b;
};

class ClassExpr {
 public:
  ClassExpr() = default;

  static ClassExpr symbol(const std::string& name, Rat coeff = Rat(1)) {
    ClassExpr e;
    if (coeff != 0) e.c_[name] = coeff;
    return e;
  }

  bool is_zero() const { return c_.empty(); }
  Rat coeff(const std::string& name) const {
    auto it = c_.find(name);
    return it == c_.end() ? Rat(0) : it->second;
  }
  const std::map<std::string, Rat>& terms() const { return c_; }

  ClassExpr& operator+=(const ClassExpr& o) {
    for (const auto& [s, c] : o.c_) {
      Rat v = coeff(s) + c;
      if (v == 0)
        c_.erase(s);
      else
        c_[s] = v;
    }
    return *this;
  }
  ClassExpr& operator-=(const ClassExpr& o) { return *this += -o; }
  ClassExpr operator-() const {
    ClassExpr r = *this;
    for (auto& [s, c] : r.c_) c = -c;
    return r;
  }
  friend ClassExpr operator+(ClassExpr a, const ClassExpr& b) { return a += b; }
  friend ClassExpr operator-(ClassExpr a, const ClassExpr& b) { return a -= b; }
  friend ClassExpr operator*(const Rat& s, const ClassExpr& e) {
    ClassExpr r;
    if (s == 0) return r;
    for (const auto& [sym, c] : e.c_) r.c_[sym] = s * c;
    return r;
  }
  friend bool operator==(const ClassExpr& a, const ClassExpr& b) {
    return a.c_ == b.c_;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : c_) {
      bool neg = c < 0;
      Rat a = neg ? Rat(-c) : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (a != 1) out += rat_str(a) + "*";
      out += s;
    }
    return out;
  }

 private:
  std::map<std::string, Rat> c_;
};

class Space {
 public:
  Space() = default;
  Space(std::vector<std::string> symbols, std::optional<std::string> unknown = {})
      : symbols_(std::move(symbols)), unknown_(std::move(unknown)) {
    for (size_t i = 0; i < symbols_.size(); ++i) {
      if (index_.count(symbols_[i]))
        throw LatticeError("duplicate symbol: " + symbols_[i]);
      index_[symbols_[i]] = i;
    }
    if (unknown_ && index_.count(*unknown_))
      throw LatticeError("unknown name collides with symbol: " + *unknown_);
  }

  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::optional<std::string>& unknown() const { return unknown_; }
  bool has_symbol(const std::string& s) const { return index_.count(s) > 0; }

  size_t index_of(const std::string& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw LatticeError("unknown symbol: " + s);
    return it->second;
  }

  void set_pair(const std::string& a, const std::string& b, IntPoly value) {
    if (value.degree() > 1)
      throw LatticeError("gram entry degree > 1: " + value.to_string());
    if (value.degree() == 1 && !unknown_)
      throw LatticeError("gram entry uses an unknown but space declares none");
    gram_[key(a, b)] = std::move(value);
  }

  std::optional<IntPoly> gram_entry(const std::string& a,
                                    const std::string& b) const {
    auto it = gram_.find(key(a, b));
    if (it == gram_.end()) return std::nullopt;
    return it->second;
  }

  bool fully_declared() const {
    for (size_t i = 0; i < symbols_.size(); ++i)
      for (size_t j = i; j < symbols_.size(); ++j)
        if (!gram_.count({i, j})) return false;
    return true;
  }

 private:
  std::pair<size_t, size_t> key(const std::string& a, const std::string& b) const {
    size_t i = index_of(a), j = index_of(b);
    return {std::min(i, j), std::max(i, j)};
  }

  std::vector<std::string> symbols_;
  std::optional<std::string> unknown_;
  std::map<std::string, size_t> index_;
  std::map<std::pair<size_t, size_t>, IntPoly> gram_;
};

struct PairingEnv {
  std::optional<Rat> unknown_value;
  std::map<std::string, ClassExpr> substitutions;
};

// Expands forced substitutions until only unsubstituted symbols remain.
inline ClassExpr resolve(const ClassExpr& e, const PairingEnv* env) {
  if (!env || env->substitutions.empty()) return e;
  ClassExpr cur = e;
  for (int round = 0; round < 64; ++round) {
    ClassExpr next;
    bool changed = false;
    for (const auto& [s, c] : cur.terms()) {
      auto it = env->substitutions.find(s);
      if (it == env->substitutions.end()) {
        next += ClassExpr::symbol(s, c);
      } else {
        next += c * it->second;
        changed = true;
      }
    }
    if (!changed) return next;
    cur = std::move(next);
  }
  throw LatticeError("cyclic substitution while resolving " + e.str());
}

inline RatPoly pair(const Space& sp, const ClassExpr& a, const ClassExpr& b,
                    const PairingEnv* env = nullptr) {
  ClassExpr ra = resolve(a, env), rb = resolve(b, env);
  RatPoly acc;
  for (const auto& [sa, ca] : ra.terms())
    for (const auto& [sb, cb] : rb.terms()) {
      auto g = sp.gram_entry(sa, sb);
      if (!g) throw UndeclaredPairing(sa, sb);
      acc += RatPoly(ca * cb) * to_rat_poly(*g);
    }
  if (env && env->unknown_value) return RatPoly(acc.eval(*env->unknown_value));
  return acc;
}

// Pairing that must come out constant (no surviving unknown).
inline Rat pair_value(const Space& sp, const ClassExpr& a, const ClassExpr& b,
                      const PairingEnv* env = nullptr) {
  RatPoly p = pair(sp, a, b, env);
  if (!p.is_constant())
    throw LatticeError("pairing is not determined: " + p.to_string());
  return p.constant_value();
}

inline Matrix<RatPoly> gram_matrix(const Space& sp,
                                   const std::vector<ClassExpr>& classes,
                                   const PairingEnv* env = nullptr) {
  Matrix<RatPoly> m(classes.size(), classes.size());
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = i; j < classes.size(); ++j) {
      m.at(i, j) = pair(sp, classes[i], classes[j], env);
      m.at(j, i) = m.at(i, j);
    }
  return m;
}

inline RatPoly gram_det(const Space& sp, const std::vector<ClassExpr>& classes,
                        const PairingEnv* env = nullptr) {
  auto m = gram_matrix(sp, classes, env);
  if (m.rows() < 6) return det_cofactor(m);
  return det_bareiss(std::move(m));
}

inline Matrix<Rat> constant_gram(const Space& sp,
                                 const std::vector<ClassExpr>& classes,
                                 const PairingEnv* env = nullptr) {
  Matrix<Rat> m(classes.size(), classes.size());
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = i; j < classes.size(); ++j) {
      m.at(i, j) = pair_value(sp, classes[i], classes[j], env);
      m.at(j, i) = m.at(i, j);
    }
  return m;
}

inline Inertia signature(const Space& sp, const std::vector<ClassExpr>& classes,
                         const PairingEnv* env = nullptr) {
  return inertia(constant_gram(sp, classes, env));
}

inline Inertia signature(const Space& sp, const PairingEnv* env = nullptr) {
  std::vector<ClassExpr> basis;
  for (const auto& s : sp.symbols()) basis.push_back(ClassExpr::symbol(s));
  return signature(sp, basis, env);
}

// A class lies in the radical when it pairs to zero with every symbol,
// identically in the unknown if one is still unresolved.
inline bool radical_member(const Space& sp, const ClassExpr& v,
                           const PairingEnv* env = nullptr) {
  for (const auto& s : sp.symbols())
    if (!pair(sp, v, ClassExpr::symbol(s), env).is_zero()) return false;
  return true;
}

struct SolveInBasis {
  bool solvable = false;
  std::vector<Rat> coeffs;
  Rat residual_norm;  // (v - sum coeffs[i]*basis[i])^2, only when solvable
};

// Least-structure expression of v against a basis: solve the normal
// equations of the intersection form and report the self-intersection of
// the defect. residual_norm == 0 on a nondegenerate lattice means v is
// numerically equal to the combination.
inline SolveInBasis solve_in_basis(const Space& sp, const ClassExpr& v,
                                   const std::vector<ClassExpr>& basis,
                                   const PairingEnv* env = nullptr) {
  Matrix<Rat> g = constant_gram(sp, basis, env);
  std::vector<Rat> p(basis.size());
  for (size_t j = 0; j < basis.size(); ++j)
    p[j] = pair_value(sp, v, basis[j], env);
  auto sol = gauss_solve(g, p);
  SolveInBasis out;
  if (!sol.consistent) return out;
  out.solvable = true;
  out.coeffs = sol.particular;
  Rat cp(0);
  for (size_t j = 0; j < basis.size(); ++j) cp += sol.particular[j] * p[j];
  out.residual_norm = pair_value(sp, v, v, env) - cp;
  return out;
}

struct HodgeBound {
  Rat pp, pe, ee;
  bool applies = false;   // pp > 0
  bool violated = false;  // applies and ee*pp > pe*pe
  bool equality = false;  // applies and ee*pp == pe*pe
};

// Index bound on a lattice of signature (1, n-1): if pp > 0 then
// ee*pp <= pe*pe, with equality only when e is proportional to p.
inline HodgeBound hodge_bound(const Space& sp, const ClassExpr& p,
                              const ClassExpr& e,
                              const PairingEnv* env = nullptr) {
  HodgeBound h;
  h.pp = pair_value(sp, p, p, env);
  h.pe = pair_value(sp, p, e, env);
  h.ee = pair_value(sp, e, e, env);
  if (h.pp <= 0) return h;
  h.applies = true;
  Rat lhs = h.ee * h.pp, rhs = h.pe * h.pe;
  h.violated = lhs > rhs;
  h.equality = lhs == rhs;
  return h;
}

}  // namespace latcert
