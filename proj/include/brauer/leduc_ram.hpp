#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "brauer/geometry.hpp"
#include "brauer/partition.hpp"
#include "brauer/ratfunc.hpp"

namespace brauer {

// constant * prod (u - r)^k, constant > 0, no zero exponents.
struct Radicand {
  mpq_class constant = 1;
  std::map<mpq_class, int> roots;

  RationalFunction as_function() const;
  Radicand operator*(const Radicand& o) const;
};

// coeff(u) * sqrt(radicand(u)), or just coeff(u) without a radicand.
struct LREntry {
  RationalFunction coeff;
  std::optional<Radicand> radicand;

  RationalFunction square() const;
  bool is_zero() const { return coeff.is_zero(); }
};

// u_coeff * u + constant, u_coeff in {-1, 0, 1}.
struct DiamondValue {
  int u_coeff = 0;
  int constant = 0;

  RationalFunction as_function() const { return RationalFunction(Poly::linear(u_coeff, constant)); }
  mpq_class at(const mpq_class& u) const { return u_coeff * u + constant; }
  bool operator==(const DiamondValue&) const = default;
};

// S and T agree away from position m (1 <= m < length - 1).
DiamondValue diamond(const Walk& S, const Walk& T, int m);

struct GeometricDiamond {
  std::string kind;  // "1", "2" or "3"
  mpq_class value;
};
GeometricDiamond geometric_diamond(const Walk& S, const Walk& T, int m, int delta);

using EntryMap = std::map<std::pair<int, int>, LREntry>;

struct GenericMatrices {
  Partition lambda;
  int n = 0;
  std::vector<Walk> basis;
  std::vector<EntryMap> sigma;  // sigma[m-1], sparse
  std::vector<EntryMap> e;
};

GenericMatrices generic_matrices(const Partition& lambda, int n);
GenericMatrices generic_matrices(const Partition& lambda, int n, std::vector<Walk> basis);

enum class Branch {
  Unitary,    // positive square root of the value; negative value is an error
  Continued,  // each sqrt(u - r) continued from large u, then gauged to real
};

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};
struct NegativeRadicandError : std::domain_error {
  using std::domain_error::domain_error;
};
struct GaugeError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NumericMatrices {
  std::vector<Walk> basis;
  std::vector<Eigen::MatrixXd> sigma, e;
  std::vector<int> gauge;  // basis vector b was rescaled by i^gauge[b]
};

// Value of one entry at u0; real times i^phase with phase in 0..3.
struct EntryValue {
  double magnitude = 0;  // signed real part before the phase
  int phase = 0;
};
EntryValue evaluate_entry(const LREntry& x, const mpq_class& u0, Branch branch);

NumericMatrices evaluate_at(const GenericMatrices& g, const mpq_class& u0, Branch branch = Branch::Unitary);

// Matrices of L_n(lambda) on the delta-restricted walks.
NumericMatrices simple_matrices(const Partition& lambda, int n, int delta);

// Largest |entry| at u = delta coupling a restricted walk to a non-restricted one.
double decoupling_residual(const GenericMatrices& g, int delta);

struct RelationReport {
  std::vector<std::pair<std::string, double>> residuals;
  double tolerance = 1e-9;

  double max() const;
  bool pass() const { return max() <= tolerance; }
};

RelationReport check_relations(const NumericMatrices& mats, double delta, double tol = 1e-9);

}  // namespace brauer
