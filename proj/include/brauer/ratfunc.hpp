#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace brauer {

// Dense univariate polynomial over Q, coefficients from degree 0 upward.
class Poly {
 public:
  Poly() = default;
  Poly(const mpq_class& c);  // NOLINT: constants convert implicitly
  Poly(int c) : Poly(mpq_class(c)) {}
  explicit Poly(std::vector<mpq_class> coeffs);
  static Poly linear(const mpq_class& a, const mpq_class& b);  // a*u + b

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const mpq_class& coeff(int i) const;
  const mpq_class& leading() const { return c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly monic() const;

  mpq_class eval(const mpq_class& u) const;
  // Multiplicity of (u - r) and the quotient with that power removed.
  std::pair<int, Poly> strip_root(const mpq_class& r) const;

  std::string str(const std::string& var = "u") const;
  bool operator==(const Poly&) const = default;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

Poly gcd(Poly a, Poly b);

// num/den with gcd cancelled and monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(const Poly& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(int c) : num_(c), den_(1) {}          // NOLINT
  RationalFunction(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;

  bool has_pole(const mpq_class& u) const;
  mpq_class eval(const mpq_class& u) const;  // throws on a pole
  // Order of vanishing at r (negative for a pole) and the value of
  // f / (u - r)^order at r.
  std::pair<int, mpq_class> expand_at(const mpq_class& r) const;

  std::string str() const;
  bool operator==(const RationalFunction&) const = default;

 private:
  void reduce();
  Poly num_, den_;
};

}  // namespace brauer
