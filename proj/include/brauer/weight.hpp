#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauer/partition.hpp"

namespace brauer {

enum class Label : char { Circ = 'o', Times = 'x', Down = 'v', Up = '^' };

// Labels on the vertices 0,1,2,... (delta even) or 1/2,3/2,... (delta odd,
// slot k meaning vertex k+1/2). Everything past the stored prefix is Down.
// For even delta a zero entry puts Down on vertex 0; Up there is normalised
// to Down since the two choices are interchangeable.
class WeightDiagram {
 public:
  WeightDiagram(int delta, std::vector<Label> labels);

  static WeightDiagram parse(int delta, const std::string& text);

  int delta() const { return delta_; }
  bool odd() const { return delta_ % 2 != 0; }
  int m() const;  // delta = 2m or 2m+1
  bool zero_flag() const { return !odd() && at(0) != Label::Circ; }
  Label at(int k) const;
  int prefix() const { return static_cast<int>(labels_.size()); }
  const std::vector<Label>& labels() const { return labels_; }
  WeightDiagram with(int k, Label l) const;
  int count(Label l) const;
  long doubled_value(int k) const { return 2L * k + (odd() ? 1 : 0); }
  // True if vertex k is vertex 0 for even delta, where Down and Up coincide.
  bool wildcard(int k) const { return !odd() && k == 0; }
  std::string str(int min_width = 0) const;

  bool operator==(const WeightDiagram&) const = default;

 private:
  void normalise();
  int delta_;
  std::vector<Label> labels_;
};

WeightDiagram weight_diagram(const Partition& p, int delta);

// Two independent readings of the Young diagram back from the labels.
// The column reading counts missing points below each present one; the row
// reading counts present points above each missing one.
Partition reading_columns(const WeightDiagram& x);
Partition reading_rows(const WeightDiagram& x);
Partition partition_from_weight(const WeightDiagram& x);

enum class BoxMoveCase { I = 1, II, III, IV, V, VI, VII, VIII, IX };

struct BoxMove {
  BoxMoveCase tag;
  int vertex;  // left slot of the changed pair (or the single changed slot)
  int degree_change;
};

std::string roman(BoxMoveCase c);
BoxMove classify_box_move(const Partition& lambda, const Partition& mu, int delta);

struct PairWitness {
  int vertex;  // slot index
  int i, j;
  bool in_diagram;
  bool condition;  // the left-count criterion for membership
};

std::vector<PairWitness> times_pairs(const Partition& p, int delta);
std::vector<PairWitness> circ_pairs(const Partition& p, int delta);

bool same_block(const Partition& a, const Partition& b, int delta);
bool order_leq(const Partition& a, const Partition& b, int delta);

}  // namespace brauer
