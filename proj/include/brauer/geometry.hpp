#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "brauer/partition.hpp"

namespace brauer {

// e_delta(lambda) = lambda^T + rho_delta, stored as doubled integers 2*x_i.
// Entries from tail_start on follow 2*x_i = -delta - 2*(i-1).
struct EmbeddedPoint {
  std::vector<long> doubled;  // 2*x_1, 2*x_2, ... (prefix, covers the tail start)
  int delta = 0;
  int tail_start = 1;         // 1-based

  long entry2(int i) const;
  bool contains2(long w) const;
};

EmbeddedPoint embed(const Partition& p, int delta);
int degree_of_singularity(const EmbeddedPoint& x);
int degree(const Partition& p, int delta);
int rho_degree(int delta);
bool is_delta_regular(const Partition& p, int delta);
bool in_A_delta(const Partition& p, int delta);
std::vector<Partition> restricted_neighbors(const Partition& p, int delta);

// Partitions of size <= max_size reached from the empty partition by box
// moves through delta-regular partitions (walking up to max_size + 1).
std::set<Partition> A_delta_bfs(int delta, int max_size);

using Walk = std::vector<Partition>;

// Box moves in walk order: additions by row, then removals by row.
std::vector<Partition> moves(const Partition& p);

// restricted: keep every step inside A_delta.
std::uint64_t count_walks(const Partition& p, int n, std::optional<int> restrict_delta = {});
std::vector<Walk> enumerate_walks(const Partition& p, int n, std::optional<int> restrict_delta = {});

// Sign and 1-based row of the box changed between adjacent steps.
struct Step {
  int sign;
  int row;
  int column;
};
Step step_between(const Partition& a, const Partition& b);

}  // namespace brauer
