#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crn/matrix.hpp"
#include "crn/network.hpp"

namespace crn {

/// A parts string or partition that does not partition the reaction set.
class MalformedPartition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class DecompositionKind { Unchecked, Independent, IncidenceIndependent, BiIndependent };

std::string to_string(DecompositionKind kind);

/* A decomposition: a partition of the reaction index set. Parts are kept
 * canonical (members ascending, parts ordered by smallest member). */
struct Decomposition {
  std::vector<std::vector<int>> parts;
  DecompositionKind kind = DecompositionKind::Unchecked;

  int length() const { return static_cast<int>(parts.size()); }
  bool trivial() const { return parts.size() == 1; }

  /// Validates that `parts` partitions {0..r-1} and canonicalizes.
  /// Throws MalformedPartition otherwise.
  static Decomposition of(const Network& net, std::vector<std::vector<int>> parts,
                          DecompositionKind kind = DecompositionKind::Unchecked);

  /// The single-part decomposition.
  static Decomposition trivial_for(const Network& net);

  bool same_partition(const Decomposition& other) const { return parts == other.parts; }

  /// True iff every part of `finer` is contained in one part of *this.
  bool is_coarsening_of(const Decomposition& finer) const;
};

/* The coordinate graph of a list of vectors (rows of a matrix): one vertex
 * per greedily chosen basis row; an edge joins two basis rows whenever a
 * dependent row uses both with nonzero coefficients. The connected
 * components induce the finest independent decomposition of the rows. */
struct CoordinateGraph {
  std::vector<Index> vertices;                  // basis row indices, increasing
  std::vector<std::pair<Index, Index>> edges;   // vertex pairs (by row index), deduplicated
  std::vector<int> component_of;                // per vertex position
  int component_count = 0;
};

CoordinateGraph coordinate_graph(const RationalMatrix& vectors);

/// Partition of all row indices induced by the coordinate graph: each
/// component takes its basis rows plus every dependent row whose coordinate
/// support lies in it. Rows must be nonzero.
std::vector<std::vector<int>> coordinate_partition(const RationalMatrix& vectors);

/* A subnetwork induced by a reaction subset, with index maps back into the
 * parent network. */
struct Subnetwork {
  Network network;
  std::vector<int> species_map;   // local species -> parent species
  std::vector<int> complex_map;   // local complex -> parent complex
  std::vector<int> reaction_map;  // local reaction -> parent reaction
};

Subnetwork subnetwork(const Network& net, const std::vector<int>& part);

struct PartStats {
  std::vector<int> reactions;
  NetworkStats stats;
};

struct SubnetworkReport {
  std::vector<PartStats> parts;
};

SubnetworkReport subnetwork_report(const Network& net, const Decomposition& d);

/// Finest independent decomposition via the coordinate graph of the
/// transposed stoichiometric matrix. Trivial when the graph is connected.
std::pair<Decomposition, SubnetworkReport> finest_independent(const Network& net);

/// Finest incidence-independent decomposition: the coordinate-graph method
/// applied to the transposed incidence matrix restricted to each linkage
/// class, unioned over classes.
std::pair<Decomposition, SubnetworkReport> finest_incidence_independent(const Network& net);

/// Rank additivity of the stoichiometric columns: sum of part ranks equals
/// the network rank.
bool is_independent(const Network& net, const Decomposition& d);

/// n - l = sum (n_i - l_i); cross-checked against incidence rank additivity.
bool is_incidence_independent(const Network& net, const Decomposition& d);

bool is_bi_independent(const Network& net, const Decomposition& d);

/* delta versus the part deficiencies: independent decompositions satisfy
 * delta <= sum, incidence-independent ones delta >= sum, bi-independent
 * ones equality. Violations throw std::logic_error. */
struct DeficiencyRelation {
  int delta = 0;
  std::vector<int> part_deltas;
  int sum = 0;
  int cmp = 0;  // -1: delta < sum, 0: equal, +1: delta > sum
  bool independent = false;
  bool incidence_independent = false;
  bool bi_independent = false;
};

DeficiencyRelation deficiency_relation(const Network& net, const Decomposition& d);

/// Bell number of the finest length: the number of independent (incidence-
/// independent) decompositions, via B_p = sum_k C(p-1, k-1) B_{p-k}.
Integer count_decompositions(int finest_length);

/* Set partitions of {0..n-1} streamed in restricted-growth-string order.
 * next() returns nullopt when exhausted. */
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(int n);
  std::optional<std::vector<std::vector<int>>> next();

 private:
  int n_;
  bool first_ = true;
  bool done_ = false;
  std::vector<int> rgs_;
};

/* Coarsenings of a finest decomposition, streamed lazily in restricted-
 * growth-string order over the finest parts; Bell(length) in total. */
class CoarseningEnumerator {
 public:
  explicit CoarseningEnumerator(Decomposition finest);
  std::optional<Decomposition> next();

 private:
  Decomposition finest_;
  PartitionEnumerator blocks_;
};

/* Exhaustive test oracle: every partition of the reaction set, filtered by
 * the definitional independence test. Verifies that a unique maximal-length
 * element exists and that every surviving partition is its coarsening.
 * Never consults the coordinate graph. Throws std::invalid_argument when
 * r exceeds `bound` (Bell(8) = 4140 partitions). */
struct OracleResult {
  std::vector<Decomposition> decompositions;  // enumeration order
  Decomposition finest;
};

OracleResult brute_force_independent_decompositions(const Network& net, int bound = 8);
OracleResult brute_force_incidence_independent_decompositions(const Network& net, int bound = 8);

struct PartReversibility {
  std::vector<bool> weakly_reversible;
  std::vector<bool> reversible;
  bool all_weakly_reversible = false;
  bool all_reversible = false;
};

PartReversibility weak_reversibility_of_decomposition(const Network& net,
                                                      const Decomposition& d);

/// Parses "1,2,3;4,5" (1-based indices or reaction labels; labels win, a
/// conflicting numeric label is an error) into a decomposition.
Decomposition parse_parts(const Network& net, const std::string& text);

}  // namespace crn
