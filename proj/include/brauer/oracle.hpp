#pragma once

#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "brauer/linalg.hpp"
#include "brauer/partition.hpp"

namespace brauer {

// Perfect matching on 2n points: 0..n-1 on top, n..2n-1 on the bottom.
struct BrauerDiagram {
  int n = 0;
  std::vector<int> partner;

  static BrauerDiagram identity(int n);
  static BrauerDiagram sigma(int i, int n);  // swaps strands i, i+1 (0-based)
  static BrauerDiagram e(int i, int n);      // cup and cap on i, i+1 (0-based)
  BrauerDiagram embed() const;               // extra vertical strand on the right

  auto operator<=>(const BrauerDiagram&) const = default;
};

// a stacked on top of b; the second value is the number of closed loops.
std::pair<BrauerDiagram, int> multiply(const BrauerDiagram& a, const BrauerDiagram& b);
std::vector<BrauerDiagram> all_diagrams(int n);

using Tableau = std::vector<std::vector<int>>;
std::vector<Tableau> standard_tableaux(const Partition& p);

// Young's natural representation, spanned by polytabloids.
class SpechtModule {
 public:
  explicit SpechtModule(const Partition& p);
  int dim() const { return static_cast<int>(vecs_.size()); }
  // perm[a-1] is the image of label a.
  const QMatrix& act_perm(const std::vector<int>& perm);
  QMatrix form() const;

 private:
  using Tabloid = std::vector<int>;  // row of each entry
  std::vector<mpq_class> coords(std::map<Tabloid, mpq_class> vec) const;

  int size_ = 0;
  std::vector<std::map<Tabloid, mpq_class>> vecs_;
  std::map<Tabloid, int> lead_;
  std::map<std::vector<int>, QMatrix> cache_;
};

struct HalfDiagram {
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> free;
  auto operator<=>(const HalfDiagram&) const = default;
};
std::vector<HalfDiagram> half_diagrams(int n, int arcs);

// Standard module Delta_n(lambda) as half diagrams tensor the Specht module.
class CellModule {
 public:
  CellModule(const Partition& lambda, int n, const mpq_class& delta);
  int dim() const { return dim_; }
  QMatrix act(const BrauerDiagram& d);
  QMatrix gram();

 private:
  Partition lambda_;
  int n_, r_, dim_;
  mpq_class delta_;
  std::vector<HalfDiagram> H_;
  std::map<HalfDiagram, int> index_;
  SpechtModule specht_;
};

int cell_dimension(const Partition& lambda, int n);
int gram_rank(const Partition& lambda, int n, const mpq_class& delta);

// A random central element of B_m(delta) and its scalar on each Delta_m(mu).
class CenterOracle {
 public:
  CenterOracle(int m, const mpq_class& delta, unsigned seed = 1);
  const std::map<Partition, mpq_class>& characters() const { return chars_; }
  const std::vector<BrauerDiagram>& diagrams() const { return diagrams_; }
  const std::vector<mpq_class>& element() const { return z_; }
  int center_dimension() const { return center_dim_; }

 private:
  std::vector<BrauerDiagram> diagrams_;
  std::vector<mpq_class> z_;
  std::map<Partition, mpq_class> chars_;
  int center_dim_ = 0;
};

struct RestrictionDims {
  std::map<mpq_class, int> by_character;  // dim of res L_n(lambda) per central character
  std::map<Partition, mpq_class> characters;
};

// Restriction of L_n(lambda) to B_{n-1}(delta), split by the central character.
RestrictionDims oracle_restriction_dims(const Partition& lambda, int n, const mpq_class& delta,
                                        const CenterOracle& center);

}  // namespace brauer
