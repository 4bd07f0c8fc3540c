#pragma once

#include <vector>

#include "crn/network.hpp"

namespace crn {

/* Connectivity structure of the complex digraph: undirected components
 * (linkage classes), strongly connected components, and the strong
 * components with no outgoing edge (terminal). Classes are listed by
 * smallest contained complex index; members are sorted. */
struct LinkageClasses {
  std::vector<std::vector<int>> classes;
  std::vector<std::vector<int>> strong;
  std::vector<int> terminal_strong;  // indices into `strong`

  std::vector<int> class_of;   // complex -> linkage class
  std::vector<int> strong_of;  // complex -> strong class

  bool is_terminal(int strong_index) const;
};

LinkageClasses linkage_structure(const Network& net);

/// True iff every linkage class is a single strong class (sl == l).
bool is_weakly_reversible(const Network& net);

/// True iff every reaction has its reverse in the network.
bool is_reversible(const Network& net);

/// Directed reachability between complexes; every complex reaches itself.
bool reachable(const Network& net, int from_complex, int to_complex);

/// Full reachability closure; entry [i][j] mirrors reachable(net, i, j).
std::vector<std::vector<bool>> reachability_closure(const Network& net);

}  // namespace crn
