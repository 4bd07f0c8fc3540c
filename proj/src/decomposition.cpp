#include "crn/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "crn/graph.hpp"

namespace crn {

namespace {

void canonicalize(std::vector<std::vector<int>>& parts) {
  for (auto& part : parts) std::sort(part.begin(), part.end());
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

// Small union-find over 0..n-1.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

// Distinct complexes and linkage-class count of a reaction subset, without
// building a subnetwork.
std::pair<int, int> complexes_and_classes(const Network& net, const std::vector<int>& part) {
  std::map<int, int> local;  // parent complex -> local id
  for (int rx : part) {
    local.emplace(net.reaction_at(rx).reactant, static_cast<int>(local.size()));
    local.emplace(net.reaction_at(rx).product, static_cast<int>(local.size()));
  }
  UnionFind uf(static_cast<int>(local.size()));
  for (int rx : part)
    uf.unite(local.at(net.reaction_at(rx).reactant), local.at(net.reaction_at(rx).product));
  std::set<int> roots;
  for (const auto& [parent, id] : local) roots.insert(uf.find(id));
  return {static_cast<int>(local.size()), static_cast<int>(roots.size())};
}

Index rank_of_columns(const RationalMatrix& m, const std::vector<int>& cols) {
  SpanBuilder span(m.rows());
  for (int c : cols) span.offer(m.col(c).transpose());
  return span.basis_size();
}

Index rank_of_columns(const IntMatrix& m, const std::vector<int>& cols) {
  SpanBuilder span(m.rows());
  RationalRowVector row(m.rows());
  for (int c : cols) {
    for (Index i = 0; i < m.rows(); ++i) row(i) = Rational(m(i, c));
    span.offer(row);
  }
  return span.basis_size();
}

}  // namespace

std::string to_string(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::Unchecked: return "unchecked";
    case DecompositionKind::Independent: return "independent";
    case DecompositionKind::IncidenceIndependent: return "incidence_independent";
    case DecompositionKind::BiIndependent: return "bi_independent";
  }
  return "unchecked";
}

Decomposition Decomposition::of(const Network& net, std::vector<std::vector<int>> parts,
                                DecompositionKind kind) {
  const int r = net.reaction_count();
  std::vector<bool> seen(r, false);
  int covered = 0;
  for (const auto& part : parts) {
    if (part.empty()) throw MalformedPartition("empty part");
    for (int rx : part) {
      if (rx < 0 || rx >= r)
        throw MalformedPartition("reaction index " + std::to_string(rx + 1) + " out of range");
      if (seen[rx])
        throw MalformedPartition("reaction " + net.reaction_name(rx) +
                                 " appears in more than one part");
      seen[rx] = true;
      ++covered;
    }
  }
  if (covered != r) throw MalformedPartition("parts do not cover every reaction");
  canonicalize(parts);
  return Decomposition{std::move(parts), kind};
}

Decomposition Decomposition::trivial_for(const Network& net) {
  std::vector<int> all(net.reaction_count());
  std::iota(all.begin(), all.end(), 0);
  return Decomposition{{all}, DecompositionKind::Unchecked};
}

bool Decomposition::is_coarsening_of(const Decomposition& finer) const {
  std::map<int, int> owner;
  for (int p = 0; p < length(); ++p)
    for (int rx : parts[p]) owner[rx] = p;
  for (const auto& part : finer.parts) {
    auto it = owner.find(part.front());
    if (it == owner.end()) return false;
    for (int rx : part) {
      auto jt = owner.find(rx);
      if (jt == owner.end() || jt->second != it->second) return false;
    }
  }
  return true;
}

CoordinateGraph coordinate_graph(const RationalMatrix& vectors) {
  RowBasis basis = row_basis(vectors);
  CoordinateGraph g;
  g.vertices = basis.basis_rows;

  const int rho = static_cast<int>(basis.basis_rows.size());
  UnionFind uf(rho);
  std::set<std::pair<Index, Index>> edges;
  for (const auto& [row, coords] : basis.coords) {
    std::vector<int> support;
    for (Index j = 0; j < coords.size(); ++j)
      if (coords(j) != 0) support.push_back(static_cast<int>(j));
    for (size_t a = 0; a < support.size(); ++a) {
      for (size_t b = a + 1; b < support.size(); ++b) {
        edges.emplace(basis.basis_rows[support[a]], basis.basis_rows[support[b]]);
        uf.unite(support[a], support[b]);
      }
    }
  }
  g.edges.assign(edges.begin(), edges.end());

  g.component_of.assign(rho, -1);
  std::map<int, int> root_to_component;
  for (int v = 0; v < rho; ++v) {
    auto [it, inserted] = root_to_component.emplace(uf.find(v), static_cast<int>(root_to_component.size()));
    g.component_of[v] = it->second;
  }
  g.component_count = static_cast<int>(root_to_component.size());
  return g;
}

std::vector<std::vector<int>> coordinate_partition(const RationalMatrix& vectors) {
  RowBasis basis = row_basis(vectors);
  const int rho = static_cast<int>(basis.basis_rows.size());

  UnionFind uf(rho);
  for (const auto& [row, coords] : basis.coords) {
    int first = -1;
    for (Index j = 0; j < coords.size(); ++j) {
      if (coords(j) != 0) {
        if (first < 0)
          first = static_cast<int>(j);
        else
          uf.unite(first, static_cast<int>(j));
      }
    }
    if (first < 0)
      throw std::invalid_argument("coordinate_partition: zero row has no component");
  }

  std::map<int, int> root_to_part;
  std::vector<int> part_of_position(rho, -1);
  for (int v = 0; v < rho; ++v) {
    auto [it, inserted] = root_to_part.emplace(uf.find(v), static_cast<int>(root_to_part.size()));
    part_of_position[v] = it->second;
  }

  std::vector<std::vector<int>> parts(root_to_part.size());
  for (int v = 0; v < rho; ++v)
    parts[part_of_position[v]].push_back(static_cast<int>(basis.basis_rows[v]));
  for (const auto& [row, coords] : basis.coords) {
    for (Index j = 0; j < coords.size(); ++j) {
      if (coords(j) != 0) {
        parts[part_of_position[static_cast<int>(j)]].push_back(static_cast<int>(row));
        break;
      }
    }
  }
  canonicalize(parts);
  return parts;
}

Subnetwork subnetwork(const Network& net, const std::vector<int>& part) {
  NetworkBuilder builder;
  Subnetwork out;

  auto translate = [&](const Complex& c) {
    Complex local;
    for (const auto& [s, coeff] : c.coeffs()) {
      const std::string& name = net.species_at(s).name;
      if (!builder.has_species(name)) out.species_map.push_back(s);
      local.add(builder.species(name), coeff);
    }
    return local;
  };

  std::set<int> seen_complexes;
  for (int rx : part) {
    const Reaction& reaction = net.reaction_at(rx);
    Complex from = translate(net.complex_at(reaction.reactant));  // reactant species first
    Complex to = translate(net.complex_at(reaction.product));
    builder.reaction(from, to, reaction.label);
    out.reaction_map.push_back(rx);
    if (seen_complexes.insert(reaction.reactant).second)
      out.complex_map.push_back(reaction.reactant);
    if (seen_complexes.insert(reaction.product).second)
      out.complex_map.push_back(reaction.product);
  }
  out.network = builder.build();
  return out;
}

SubnetworkReport subnetwork_report(const Network& net, const Decomposition& d) {
  SubnetworkReport report;
  for (const auto& part : d.parts) {
    Subnetwork sub = subnetwork(net, part);
    report.parts.push_back(PartStats{part, network_stats(sub.network)});
  }
  return report;
}

std::pair<Decomposition, SubnetworkReport> finest_independent(const Network& net) {
  auto parts = coordinate_partition(stoichiometric_rows(net));
  Decomposition d = Decomposition::of(net, std::move(parts), DecompositionKind::Independent);
  return {d, subnetwork_report(net, d)};
}

std::pair<Decomposition, SubnetworkReport> finest_incidence_independent(const Network& net) {
  LinkageClasses lc = linkage_structure(net);

  std::vector<std::vector<int>> parts;
  for (const auto& cls : lc.classes) {
    // Reactions of this linkage class, in index order.
    std::vector<int> reactions;
    for (const Reaction& rx : net.reactions())
      if (lc.class_of[rx.reactant] == lc.class_of[cls.front()]) reactions.push_back(rx.index);

    // Transposed incidence matrix restricted to the class: one row per
    // reaction, one column per class complex.
    std::map<int, int> col_of;
    for (int c : cls) col_of.emplace(c, static_cast<int>(col_of.size()));
    RationalMatrix rows = RationalMatrix::Zero(static_cast<Index>(reactions.size()),
                                               static_cast<Index>(cls.size()));
    for (size_t i = 0; i < reactions.size(); ++i) {
      const Reaction& rx = net.reaction_at(reactions[i]);
      rows(static_cast<Index>(i), col_of.at(rx.reactant)) = -1;
      rows(static_cast<Index>(i), col_of.at(rx.product)) = 1;
    }

    for (const auto& local_part : coordinate_partition(rows)) {
      std::vector<int> part;
      part.reserve(local_part.size());
      for (int local : local_part) part.push_back(reactions[local]);
      parts.push_back(std::move(part));
    }
  }
  Decomposition d =
      Decomposition::of(net, std::move(parts), DecompositionKind::IncidenceIndependent);
  return {d, subnetwork_report(net, d)};
}

bool is_independent(const Network& net, const Decomposition& d) {
  NetworkMatrices matrices = build_matrices(net);
  std::vector<int> all(net.reaction_count());
  std::iota(all.begin(), all.end(), 0);
  Index total = rank_of_columns(matrices.N, all);
  Index sum = 0;
  for (const auto& part : d.parts) sum += rank_of_columns(matrices.N, part);
  return sum == total;
}

bool is_incidence_independent(const Network& net, const Decomposition& d) {
  LinkageClasses lc = linkage_structure(net);
  const int n_minus_l = net.complex_count() - static_cast<int>(lc.classes.size());

  int sum = 0;
  for (const auto& part : d.parts) {
    auto [n_i, l_i] = complexes_and_classes(net, part);
    sum += n_i - l_i;
  }
  bool by_counts = sum == n_minus_l;

  // Rank form of the same statement: incidence rank additivity.
  NetworkMatrices matrices = build_matrices(net);
  std::vector<int> all(net.reaction_count());
  std::iota(all.begin(), all.end(), 0);
  Index rank_sum = 0;
  for (const auto& part : d.parts) rank_sum += rank_of_columns(matrices.Ia, part);
  bool by_ranks = rank_sum == rank_of_columns(matrices.Ia, all);
  if (by_counts != by_ranks)
    throw std::logic_error("incidence independence: count and rank criteria disagree");
  return by_counts;
}

bool is_bi_independent(const Network& net, const Decomposition& d) {
  return is_independent(net, d) && is_incidence_independent(net, d);
}

DeficiencyRelation deficiency_relation(const Network& net, const Decomposition& d) {
  DeficiencyRelation rel;
  rel.delta = network_stats(net).deficiency;
  SubnetworkReport report = subnetwork_report(net, d);
  for (const PartStats& part : report.parts) {
    rel.part_deltas.push_back(part.stats.deficiency);
    rel.sum += part.stats.deficiency;
  }
  rel.cmp = rel.delta < rel.sum ? -1 : rel.delta > rel.sum ? 1 : 0;
  rel.independent = is_independent(net, d);
  rel.incidence_independent = is_incidence_independent(net, d);
  rel.bi_independent = rel.independent && rel.incidence_independent;

  if (rel.independent && rel.cmp > 0)
    throw std::logic_error("independent decomposition with delta > sum of part deficiencies");
  if (rel.incidence_independent && rel.cmp < 0)
    throw std::logic_error(
        "incidence-independent decomposition with delta < sum of part deficiencies");
  if (rel.bi_independent && rel.cmp != 0)
    throw std::logic_error("bi-independent decomposition without deficiency equality");
  return rel;
}

Integer count_decompositions(int finest_length) {
  if (finest_length < 0) throw std::invalid_argument("negative length");
  // B_p = sum_{k=1..p} C(p-1, k-1) B_{p-k}, B_0 = 1.
  std::vector<Integer> bell(static_cast<size_t>(finest_length) + 1);
  bell[0] = 1;
  for (int p = 1; p <= finest_length; ++p) {
    Integer total = 0;
    for (int k = 1; k <= p; ++k) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(p - 1),
                   static_cast<unsigned long>(k - 1));
      total += binom * bell[static_cast<size_t>(p - k)];
    }
    bell[static_cast<size_t>(p)] = total;
  }
  return bell[static_cast<size_t>(finest_length)];
}

PartitionEnumerator::PartitionEnumerator(int n) : n_(n), rgs_(static_cast<size_t>(n), 0) {
  if (n <= 0) throw std::invalid_argument("PartitionEnumerator needs n >= 1");
}

std::optional<std::vector<std::vector<int>>> PartitionEnumerator::next() {
  if (done_) return std::nullopt;
  if (!first_) {
    // Lexicographic successor of the restricted growth string.
    int i = n_ - 1;
    for (; i >= 1; --i) {
      int max_prefix = 0;
      for (int j = 0; j < i; ++j) max_prefix = std::max(max_prefix, rgs_[static_cast<size_t>(j)]);
      if (rgs_[static_cast<size_t>(i)] <= max_prefix) break;
    }
    if (i < 1) {
      done_ = true;
      return std::nullopt;
    }
    ++rgs_[static_cast<size_t>(i)];
    for (int j = i + 1; j < n_; ++j) rgs_[static_cast<size_t>(j)] = 0;
  }
  first_ = false;

  int blocks = 1 + *std::max_element(rgs_.begin(), rgs_.end());
  std::vector<std::vector<int>> partition(static_cast<size_t>(blocks));
  for (int v = 0; v < n_; ++v) partition[static_cast<size_t>(rgs_[static_cast<size_t>(v)])].push_back(v);
  return partition;
}

CoarseningEnumerator::CoarseningEnumerator(Decomposition finest)
    : finest_(std::move(finest)), blocks_(finest_.length()) {}

std::optional<Decomposition> CoarseningEnumerator::next() {
  auto grouping = blocks_.next();
  if (!grouping) return std::nullopt;
  std::vector<std::vector<int>> parts;
  parts.reserve(grouping->size());
  for (const auto& block : *grouping) {
    std::vector<int> merged;
    for (int part_index : block) {
      const auto& part = finest_.parts[static_cast<size_t>(part_index)];
      merged.insert(merged.end(), part.begin(), part.end());
    }
    std::sort(merged.begin(), merged.end());
    parts.push_back(std::move(merged));
  }
  canonicalize(parts);
  return Decomposition{std::move(parts), finest_.kind};
}

namespace {

OracleResult brute_force(const Network& net, int bound, DecompositionKind kind,
                         bool (*test)(const Network&, const Decomposition&)) {
  if (net.reaction_count() > bound)
    throw std::invalid_argument("brute-force oracle bound exceeded: r = " +
                                std::to_string(net.reaction_count()) + " > " +
                                std::to_string(bound));
  OracleResult out;
  PartitionEnumerator partitions(net.reaction_count());
  while (auto parts = partitions.next()) {
    Decomposition d{*parts, kind};
    canonicalize(d.parts);
    if (test(net, d)) out.decompositions.push_back(std::move(d));
  }

  // A unique maximal-length survivor must exist, and every other survivor
  // must be one of its coarsenings.
  size_t best = 0;
  int best_length = -1;
  int best_count = 0;
  for (size_t i = 0; i < out.decompositions.size(); ++i) {
    int len = out.decompositions[i].length();
    if (len > best_length) {
      best_length = len;
      best = i;
      best_count = 1;
    } else if (len == best_length) {
      ++best_count;
    }
  }
  if (best_count != 1)
    throw std::logic_error("oracle: maximal-length decomposition is not unique");
  out.finest = out.decompositions[best];
  for (const Decomposition& d : out.decompositions) {
    if (!d.is_coarsening_of(out.finest))
      throw std::logic_error("oracle: a surviving partition is not a coarsening of the finest");
  }
  return out;
}

}  // namespace

OracleResult brute_force_independent_decompositions(const Network& net, int bound) {
  return brute_force(net, bound, DecompositionKind::Independent, &is_independent);
}

OracleResult brute_force_incidence_independent_decompositions(const Network& net, int bound) {
  return brute_force(net, bound, DecompositionKind::IncidenceIndependent,
                     &is_incidence_independent);
}

PartReversibility weak_reversibility_of_decomposition(const Network& net,
                                                      const Decomposition& d) {
  PartReversibility out;
  out.all_weakly_reversible = true;
  out.all_reversible = true;
  for (const auto& part : d.parts) {
    Subnetwork sub = subnetwork(net, part);
    bool wr = is_weakly_reversible(sub.network);
    bool rev = is_reversible(sub.network);
    out.weakly_reversible.push_back(wr);
    out.reversible.push_back(rev);
    out.all_weakly_reversible = out.all_weakly_reversible && wr;
    out.all_reversible = out.all_reversible && rev;
  }
  return out;
}

Decomposition parse_parts(const Network& net, const std::string& text) {
  std::map<std::string, int> by_label;
  for (const Reaction& rx : net.reactions())
    if (!rx.label.empty()) by_label.emplace(rx.label, rx.index);

  auto as_index = [&](const std::string& token) -> int {  // 0-based, -1 if not an index
    if (token.empty() || token.size() > 9) return -1;
    for (char c : token)
      if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
    int index = std::stoi(token) - 1;
    return index >= 0 && index < net.reaction_count() ? index : -1;
  };

  auto resolve = [&](const std::string& token) -> int {
    auto it = by_label.find(token);
    int index = as_index(token);
    if (it != by_label.end()) {
      if (index >= 0 && index != it->second)
        throw MalformedPartition("ambiguous reaction reference '" + token +
                                 "': label and index disagree");
      return it->second;
    }
    if (index < 0)
      throw MalformedPartition("unknown reaction '" + token + "'");
    return index;
  };

  auto split = [](const std::string& s, char a, char b) {
    std::vector<std::string> out{""};
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c == a || c == b)
        out.emplace_back();
      else
        out.back() += c;
    }
    return out;
  };

  std::vector<std::vector<int>> parts;
  for (const std::string& group : split(text, ';', '|')) {
    std::vector<int> part;
    for (const std::string& token : split(group, ',', ',')) {
      if (token.empty()) throw MalformedPartition("empty reaction reference in parts string");
      part.push_back(resolve(token));
    }
    parts.push_back(std::move(part));
  }
  return Decomposition::of(net, std::move(parts));
}

}  // namespace crn
