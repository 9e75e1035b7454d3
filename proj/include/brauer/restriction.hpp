#pragma once

#include <map>
#include <string>
#include <vector>

#include "brauer/cap.hpp"
#include "brauer/partition.hpp"

namespace brauer {

enum class ModuleKind { Simple, Standard, Projective };

struct ModuleLabel {
  ModuleKind kind;
  Partition partition;
  int n;
  int delta;
  std::string str() const;
  bool operator==(const ModuleLabel&) const = default;
};

// A module with a single Loewy layer lists its factors under head only;
// middle and socle are then empty.
struct LoewyStructure {
  std::vector<ModuleLabel> head, middle, socle;
  std::vector<ModuleLabel> factors() const;
};

bool in_lambda(const Partition& p, int n);

std::vector<ModuleLabel> restrict_standard(const Partition& p, int n, int delta);
std::vector<ModuleLabel> induce_standard(const Partition& p, int n, int delta);

struct LambdaPM {
  Partition plus, minus;
  int vertex;  // i: lambda' has o x or x o at (i-1, i)
};

std::vector<LambdaPM> lambda_pm_all(const Partition& lambda_prime, int delta);
LambdaPM lambda_pm(const Partition& lambda_prime, int delta);

struct ISetEntry {
  int vertex;
  int rule;  // 10, 11 or 12
};

std::vector<ISetEntry> I_set(const Partition& lambda_prime, const Partition& lambda_plus, int delta);
Partition lambda_prime_j(const Partition& lambda_prime, int i, const ISetEntry& j, int delta);

// First partition of the block in (size, lex) order among Lambda_m.
Partition block_key(const Partition& p, int m, int delta);

std::map<Partition, LoewyStructure> restrict_simple(const Partition& p, int n, int delta);

}  // namespace brauer
