#include "yangian/ratfun.hpp"

#include <numeric>

namespace yangian {

SymbolicPoint::SymbolicPoint(std::optional<std::string> param, Rational coeff,
                             GaussianRational constant)
    : param_(std::move(param)), coeff_(std::move(coeff)), constant_(std::move(constant)) {
  if (param_ && param_->empty()) throw Error("empty parameter name");
  if (param_ && sgn(coeff_) == 0) throw Error("parameter '" + *param_ + "' with zero coefficient");
  if (!param_ && sgn(coeff_) != 0) throw Error("nonzero parameter coefficient without a parameter");
}

SymbolicPoint SymbolicPoint::parameter(std::string name) {
  return SymbolicPoint(std::move(name), Rational(1), GaussianRational());
}

SymbolicPoint SymbolicPoint::operator+(const GaussianRational& c) const {
  SymbolicPoint p = *this;
  p.constant_ += c;
  return p;
}

SymbolicPoint SymbolicPoint::operator/(const Rational& k) const {
  if (sgn(k) == 0) throw Error("division of a point by zero");
  SymbolicPoint p = *this;
  p.coeff_ /= k;
  p.constant_ /= k;
  return p;
}

bool operator<(const SymbolicPoint& a, const SymbolicPoint& b) {
  if (a.param_ != b.param_) return a.param_ < b.param_;
  if (a.coeff_ != b.coeff_) return a.coeff_ < b.coeff_;
  return a.constant_ < b.constant_;
}

std::string to_string(const SymbolicPoint& p) {
  if (p.is_numeric()) return to_string(p.constant());
  // Coefficient num/den renders as "num name/den", dropping unit numerators.
  const Rational& k = p.param_coeff();
  const mpz_class num = k.get_num();
  std::string out = num == 1 ? "" : num == -1 ? "-" : num.get_str();
  out += *p.param();
  if (k.get_den() != 1) out += "/" + k.get_den().get_str();
  const auto& c = p.constant();
  if (c == GaussianRational()) return out;
  std::string tail = to_string(c);
  if (!c.is_real() && sgn(c.re) != 0) tail = "(" + tail + ")";
  if (tail.front() != '-') out += '+';
  return out + tail;
}

FactoredRational::FactoredRational(Factors factors) : factors_(std::move(factors)) {
  for (const auto& [root, mult] : factors_)
    if (mult == 0) throw Error("zero multiplicity for root " + to_string(root));
}

FactoredRational FactoredRational::linear(SymbolicPoint root, int mult) {
  return FactoredRational(Factors{{std::move(root), mult}});
}

bool FactoredRational::is_polynomial() const {
  for (const auto& [root, mult] : factors_)
    if (mult < 0) return false;
  return true;
}

bool FactoredRational::is_numeric() const {
  for (const auto& [root, mult] : factors_)
    if (!root.is_numeric()) return false;
  return true;
}

int FactoredRational::degree() const {
  return std::accumulate(factors_.begin(), factors_.end(), 0,
                         [](int acc, const auto& f) { return acc + f.second; });
}

int FactoredRational::multiplicity(const SymbolicPoint& root) const {
  auto it = factors_.find(root);
  return it == factors_.end() ? 0 : it->second;
}

void FactoredRational::add(const SymbolicPoint& root, int mult) {
  auto [it, inserted] = factors_.try_emplace(root, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) factors_.erase(it);
  }
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& o) {
  for (const auto& [root, mult] : o.factors_) add(root, mult);
  return *this;
}

FactoredRational FactoredRational::inverse() const {
  FactoredRational out = *this;
  for (auto& [root, mult] : out.factors_) mult = -mult;
  return out;
}

FactoredRational shift_argument(const FactoredRational& f, const GaussianRational& c) {
  FactoredRational::Factors moved;
  for (const auto& [root, mult] : f.factors()) moved.emplace(root + c, mult);
  return FactoredRational(std::move(moved));
}

FactoredRational tilde_normalize(const FactoredRational& f, int d) {
  if (d <= 0) throw Error("normalization needs a positive symmetrizer");
  FactoredRational::Factors scaled;
  for (const auto& [root, mult] : f.factors()) scaled.emplace(root / Rational(d), mult);
  return FactoredRational(std::move(scaled));
}

std::string to_string(const FactoredRational& f) {
  if (f.is_one()) return "1";
  std::string out;
  for (const auto& [root, mult] : f.factors()) {
    if (!out.empty()) out += ' ';
    out += "(u-(" + to_string(root) + "))";
    if (mult != 1) out += "^" + std::to_string(mult);
  }
  return out;
}

RationalTuple::RationalTuple(LieType type)
    : type_(type), components_(static_cast<std::size_t>(type.rank)) {}

RationalTuple::RationalTuple(LieType type, std::vector<FactoredRational> components)
    : type_(type), components_(std::move(components)) {
  if (static_cast<int>(components_.size()) != type_.rank)
    throw Error("tuple has " + std::to_string(components_.size()) + " components, " +
                type_.name() + " needs " + std::to_string(type_.rank));
}

const FactoredRational& RationalTuple::operator[](Node i) const {
  if (i < 1 || i > rank()) throw Error("tuple component " + std::to_string(i) + " out of range");
  return components_[i - 1];
}

FactoredRational& RationalTuple::operator[](Node i) {
  if (i < 1 || i > rank()) throw Error("tuple component " + std::to_string(i) + " out of range");
  return components_[i - 1];
}

bool RationalTuple::is_identity() const {
  for (const auto& c : components_)
    if (!c.is_one()) return false;
  return true;
}

bool RationalTuple::is_polynomial() const {
  for (const auto& c : components_)
    if (!c.is_polynomial()) return false;
  return true;
}

RationalTuple fundamental_tuple(const LieDatum& datum, Node i, const SymbolicPoint& a) {
  datum.require_node(i);
  RationalTuple p(datum.type());
  p[i] = FactoredRational::linear(a);
  return p;
}

RationalTuple kr_tuple(const LieDatum& datum, Node i, const SymbolicPoint& a, int m) {
  datum.require_node(i);
  if (m < 1) throw Error("KR string length must be >= 1");
  RationalTuple p(datum.type());
  for (int s = 0; s < m; ++s) p[i] *= FactoredRational::linear(a + GaussianRational(s));
  return p;
}

RationalTuple multiply(const RationalTuple& p, const RationalTuple& q) {
  if (p.type() != q.type())
    throw Error("cannot multiply tuples of types " + p.type().name() + " and " + q.type().name());
  RationalTuple out = p;
  for (Node i = 1; i <= p.rank(); ++i) out[i] *= q[i];
  return out;
}

RationalTuple invert(const RationalTuple& p) {
  RationalTuple out = p;
  for (Node i = 1; i <= p.rank(); ++i) out[i] = p[i].inverse();
  return out;
}

std::string to_string(const RationalTuple& p) {
  std::string out = "(";
  for (Node i = 1; i <= p.rank(); ++i) {
    if (i > 1) out += ", ";
    out += to_string(p[i]);
  }
  return out + ")";
}

}  // namespace yangian
