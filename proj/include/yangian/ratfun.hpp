#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yangian/lie_data.hpp"
#include "yangian/rational.hpp"

namespace yangian {

/// An exact point coeff * param + constant, where param is an optional formal
/// parameter (a1, a2, ...) and the constant is a Gaussian rational.
class SymbolicPoint {
 public:
  SymbolicPoint() = default;
  SymbolicPoint(GaussianRational constant) : constant_(std::move(constant)) {}
  SymbolicPoint(std::optional<std::string> param, Rational coeff, GaussianRational constant);

  /// The bare parameter, 1 * name + 0.
  static SymbolicPoint parameter(std::string name);

  bool is_numeric() const { return !param_.has_value(); }
  const std::optional<std::string>& param() const { return param_; }
  const Rational& param_coeff() const { return coeff_; }
  const GaussianRational& constant() const { return constant_; }

  SymbolicPoint operator+(const GaussianRational& c) const;
  SymbolicPoint operator-(const GaussianRational& c) const { return *this + (-c); }
  /// Divides both the parameter coefficient and the constant.
  SymbolicPoint operator/(const Rational& k) const;

  friend bool operator==(const SymbolicPoint& a, const SymbolicPoint& b) {
    return a.param_ == b.param_ && a.coeff_ == b.coeff_ && a.constant_ == b.constant_;
  }
  friend bool operator<(const SymbolicPoint& a, const SymbolicPoint& b);

 private:
  std::optional<std::string> param_;
  Rational coeff_;
  GaussianRational constant_;
};

/// "a1", "a1/2+3/2", "2+i", "1/2".
std::string to_string(const SymbolicPoint& p);

/// A rational function of u given by its factorization prod (u - root)^mult.
/// The empty factorization is the constant 1; the zero function is not representable.
class FactoredRational {
 public:
  using Factors = std::map<SymbolicPoint, int>;

  FactoredRational() = default;
  /// Rejects zero multiplicities.
  explicit FactoredRational(Factors factors);

  /// The single factor (u - root).
  static FactoredRational linear(SymbolicPoint root, int mult = 1);

  const Factors& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  bool is_polynomial() const;
  bool is_numeric() const;
  /// Sum of multiplicities.
  int degree() const;
  int multiplicity(const SymbolicPoint& root) const;

  FactoredRational& operator*=(const FactoredRational& o);
  friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) { return a *= b; }
  FactoredRational inverse() const;

  friend bool operator==(const FactoredRational&, const FactoredRational&) = default;

 private:
  void add(const SymbolicPoint& root, int mult);
  Factors factors_;
};

/// f(u - c): every root moves by +c.
FactoredRational shift_argument(const FactoredRational& f, const GaussianRational& c);

/// Replaces every root x by x/d.
FactoredRational tilde_normalize(const FactoredRational& f, int d);

std::string to_string(const FactoredRational& f);

/// An l-tuple of factored rational functions for one Lie type.
class RationalTuple {
 public:
  /// The identity tuple (1, ..., 1).
  explicit RationalTuple(LieType type);
  RationalTuple(LieType type, std::vector<FactoredRational> components);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const FactoredRational& operator[](Node i) const;
  FactoredRational& operator[](Node i);
  const std::vector<FactoredRational>& components() const { return components_; }

  bool is_identity() const;
  /// All components are polynomials, i.e. this is a Drinfeld tuple.
  bool is_polynomial() const;

  friend bool operator==(const RationalTuple&, const RationalTuple&) = default;

 private:
  LieType type_;
  std::vector<FactoredRational> components_;
};

/// Component i is (u - a), all others 1.
RationalTuple fundamental_tuple(const LieDatum& datum, Node i, const SymbolicPoint& a);

/// Component i has the string of roots a, a+1, ..., a+m-1.
RationalTuple kr_tuple(const LieDatum& datum, Node i, const SymbolicPoint& a, int m);

RationalTuple multiply(const RationalTuple& p, const RationalTuple& q);
RationalTuple invert(const RationalTuple& p);

std::string to_string(const RationalTuple& p);

}  // namespace yangian
