#include "brauer/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace brauer {

Poly::Poly(const mpq_class& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::linear(const mpq_class& a, const mpq_class& b) { return Poly(std::vector<mpq_class>{b, a}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& Poly::coeff(int i) const {
  static const mpq_class zero(0);
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  auto r = c_;
  for (auto& x : r) x = -x;
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<mpq_class> rem = c_, quo;
  int dd = d.degree();
  if (degree() >= dd) quo.assign(degree() - dd + 1, 0);
  for (int k = degree(); k >= dd; --k) {
    mpq_class f = rem[k] / d.leading();
    if (f == 0) continue;
    quo[k - dd] = f;
    for (int t = 0; t <= dd; ++t) rem[k - dd + t] -= f * d.coeff(t);
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  auto r = c_;
  mpq_class l = leading();
  for (auto& x : r) x /= l;
  return Poly(std::move(r));
}

mpq_class Poly::eval(const mpq_class& u) const {
  mpq_class v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * u + *it;
  return v;
}

std::pair<int, Poly> Poly::strip_root(const mpq_class& r) const {
  if (is_zero()) throw std::domain_error("zero polynomial has no finite root order");
  Poly p = *this;
  int k = 0;
  Poly lin = linear(1, -r);
  while (p.eval(r) == 0) {
    p = p.divmod(lin).first;
    ++k;
  }
  return {k, p};
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpq_class& a = c_[k];
    if (a == 0) continue;
    mpq_class mag = abs(a);
    os << (a < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (k == 0 || mag != 1) os << mag.get_str() << (k ? "*" : "");
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? Poly(1) : a.monic();
}

RationalFunction::RationalFunction(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  mpq_class l = den_.leading();
  num_ = num_ * Poly(1 / l);
  den_ = den_ * Poly(1 / l);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }
RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}
RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}
RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

bool RationalFunction::has_pole(const mpq_class& u) const { return den_.eval(u) == 0; }

mpq_class RationalFunction::eval(const mpq_class& u) const {
  mpq_class d = den_.eval(u);
  if (d == 0) throw std::domain_error("pole at u = " + u.get_str());
  return num_.eval(u) / d;
}

std::pair<int, mpq_class> RationalFunction::expand_at(const mpq_class& r) const {
  if (is_zero()) throw std::domain_error("zero function has no leading term");
  auto [kn, pn] = num_.strip_root(r);
  auto [kd, pd] = den_.strip_root(r);
  return {kn - kd, pn.eval(r) / pd.eval(r)};
}

std::string RationalFunction::str() const {
  if (den_ == Poly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace brauer
