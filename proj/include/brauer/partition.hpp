#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace brauer {

// A weakly decreasing sequence of positive integers. Rows and columns are
// 1-based everywhere; row(i) and col(j) return 0 outside the diagram.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // "10,10,9" or "-" for the empty partition.
  static Partition parse(std::string_view text);
  std::string str() const;

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int row(int i) const;
  int col(int j) const;
  bool contains(int i, int j) const { return i >= 1 && j >= 1 && j <= row(i); }
  Partition transpose() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

// Orders by size first, then lexicographically on the parts.
bool size_lex_less(const Partition& a, const Partition& b);

struct Neighbors {
  std::vector<Partition> addable;    // by row of the new box, ascending
  std::vector<Partition> removable;  // by row of the removed box, ascending
};

Neighbors box_neighbors(const Partition& p);

// Partitions of k in reverse lexicographic order, (k) first.
std::vector<Partition> partitions_of(int k);

// Lambda_n: partitions of n, n-2, n-4, ...
std::vector<Partition> lambda_set(int n);

int d_value(const Partition& p, int i, int j);
int hook_length(const Partition& p, int i, int j);

// P(u) = prod (u - r) / denominator, kept factored.
struct KingPolynomial {
  std::vector<int> roots;
  mpz_class denominator = 1;

  mpq_class eval(const mpq_class& u) const;
  double eval(double u) const;
};

KingPolynomial king_polynomial(const Partition& p);
int king_root_multiplicity(const Partition& p, int delta);

}  // namespace brauer
