#include "crn/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace crn {

namespace {

std::vector<std::vector<int>> successors(const Network& net) {
  std::vector<std::vector<int>> adj(net.complex_count());
  for (const Reaction& rx : net.reactions()) adj[rx.reactant].push_back(rx.product);
  return adj;
}

// Tarjan; networks are desk-scale, recursion depth is not a concern.
void tarjan_dfs(int v, const std::vector<std::vector<int>>& adj, int& counter,
                std::vector<int>& number, std::vector<int>& low, std::vector<int>& stack,
                std::vector<bool>& on_stack, std::vector<int>& scc_of, int& scc_count) {
  number[v] = low[v] = counter++;
  stack.push_back(v);
  on_stack[v] = true;
  for (int w : adj[v]) {
    if (number[w] < 0) {
      tarjan_dfs(w, adj, counter, number, low, stack, on_stack, scc_of, scc_count);
      low[v] = std::min(low[v], low[w]);
    } else if (on_stack[w]) {
      low[v] = std::min(low[v], number[w]);
    }
  }
  if (low[v] == number[v]) {
    int id = scc_count++;
    int w;
    do {
      w = stack.back();
      stack.pop_back();
      on_stack[w] = false;
      scc_of[w] = id;
    } while (w != v);
  }
}

// Groups vertex indices by label, classes ordered by smallest member.
std::vector<std::vector<int>> group_by(const std::vector<int>& label, int count) {
  std::vector<std::vector<int>> groups(count);
  for (int v = 0; v < static_cast<int>(label.size()); ++v) groups[label[v]].push_back(v);
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return groups;
}

}  // namespace

bool LinkageClasses::is_terminal(int strong_index) const {
  return std::find(terminal_strong.begin(), terminal_strong.end(), strong_index) !=
         terminal_strong.end();
}

LinkageClasses linkage_structure(const Network& net) {
  const int n = net.complex_count();
  const auto adj = successors(net);

  // Undirected components via union-find.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Reaction& rx : net.reactions()) parent[find(rx.reactant)] = find(rx.product);
  std::vector<int> comp_label(n);
  std::map<int, int> root_to_label;
  for (int v = 0; v < n; ++v) {
    int root = find(v);
    auto [it, inserted] = root_to_label.emplace(root, static_cast<int>(root_to_label.size()));
    comp_label[v] = it->second;
  }

  LinkageClasses out;
  out.classes = group_by(comp_label, static_cast<int>(root_to_label.size()));

  // Strong components.
  int counter = 0, scc_count = 0;
  std::vector<int> number(n, -1), low(n, 0), stack, scc_of(n, -1);
  std::vector<bool> on_stack(n, false);
  for (int v = 0; v < n; ++v)
    if (number[v] < 0)
      tarjan_dfs(v, adj, counter, number, low, stack, on_stack, scc_of, scc_count);
  out.strong = group_by(scc_of, scc_count);

  // Relabel in the sorted order and rebuild the per-complex maps.
  out.class_of.assign(n, -1);
  for (int c = 0; c < static_cast<int>(out.classes.size()); ++c)
    for (int v : out.classes[c]) out.class_of[v] = c;
  out.strong_of.assign(n, -1);
  for (int c = 0; c < static_cast<int>(out.strong.size()); ++c)
    for (int v : out.strong[c]) out.strong_of[v] = c;

  // Terminal strong classes: no arc leaves the class.
  std::vector<bool> has_exit(out.strong.size(), false);
  for (const Reaction& rx : net.reactions())
    if (out.strong_of[rx.reactant] != out.strong_of[rx.product])
      has_exit[out.strong_of[rx.reactant]] = true;
  for (int c = 0; c < static_cast<int>(out.strong.size()); ++c)
    if (!has_exit[c]) out.terminal_strong.push_back(c);

  return out;
}

bool is_weakly_reversible(const Network& net) {
  LinkageClasses lc = linkage_structure(net);
  return lc.strong.size() == lc.classes.size();
}

bool is_reversible(const Network& net) {
  std::set<std::pair<int, int>> arcs;
  for (const Reaction& rx : net.reactions()) arcs.emplace(rx.reactant, rx.product);
  for (const Reaction& rx : net.reactions())
    if (!arcs.count({rx.product, rx.reactant})) return false;
  return true;
}

bool reachable(const Network& net, int from_complex, int to_complex) {
  const int n = net.complex_count();
  if (from_complex < 0 || from_complex >= n || to_complex < 0 || to_complex >= n)
    throw std::out_of_range("reachable: complex index out of range");
  if (from_complex == to_complex) return true;  // empty path
  const auto adj = successors(net);
  std::vector<bool> seen(n, false);
  std::vector<int> queue{from_complex};
  seen[from_complex] = true;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int w : adj[v]) {
      if (w == to_complex) return true;
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return false;
}

std::vector<std::vector<bool>> reachability_closure(const Network& net) {
  const int n = net.complex_count();
  const auto adj = successors(net);
  std::vector<std::vector<bool>> closure(n, std::vector<bool>(n, false));
  for (int start = 0; start < n; ++start) {
    auto& row = closure[start];
    row[start] = true;
    std::vector<int> queue{start};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int w : adj[v]) {
        if (!row[w]) {
          row[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return closure;
}

}  // namespace crn
