#include "crn/kinetics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "crn/graph.hpp"

namespace crn {

namespace {

// base^e with exact canonical result.
Rational pow_exact(const Rational& base, unsigned long e) {
  if (e == 0) return 1;
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  return out;
}

unsigned long integral_exponent(const Rational& coeff) {
  if (coeff.get_den() != 1)
    throw std::domain_error(
        "exact mass-action evaluation needs integer reactant coefficients; got " +
        to_string(coeff));
  if (!coeff.get_num().fits_ulong_p())
    throw std::domain_error("reactant coefficient too large: " + to_string(coeff));
  return coeff.get_num().get_ui();
}

void check_point(const MassActionSystem& sys, Index size) {
  if (size != sys.network.species_count())
    throw std::invalid_argument("concentration vector has wrong dimension");
}

}  // namespace

MassActionSystem MassActionSystem::of(const NetworkDocument& doc) {
  if (!doc.rates)
    throw MissingRates("the document carries no rate constants ([k=...] annotations)");
  return MassActionSystem{doc.network, *doc.rates};
}

MassActionSystem MassActionSystem::of(Network network, std::vector<Rational> rates) {
  if (static_cast<int>(rates.size()) != network.reaction_count())
    throw MissingRates("one rate constant per reaction required");
  for (const Rational& k : rates)
    if (k <= 0) throw MissingRates("rate constants must be positive");
  return MassActionSystem{std::move(network), std::move(rates)};
}

RationalVector evaluate_rates(const MassActionSystem& sys, const RationalVector& x) {
  check_point(sys, x.size());
  for (Index i = 0; i < x.size(); ++i)
    if (x(i) < 0) throw std::domain_error("negative concentration");

  const Network& net = sys.network;
  RationalVector k(net.reaction_count());
  for (int r = 0; r < net.reaction_count(); ++r) {
    Rational value = sys.rates[r];
    for (const auto& [s, coeff] : net.complex_at(net.reaction_at(r).reactant).coeffs())
      value *= pow_exact(x(s), integral_exponent(coeff));
    k(r) = value;
  }
  return k;
}

RationalVector sfrf(const MassActionSystem& sys, const RationalVector& x) {
  RationalVector k = evaluate_rates(sys, x);
  RationalMatrix rows = stoichiometric_rows(sys.network);  // r x m
  RationalVector f = RationalVector::Zero(sys.network.species_count());
  for (int r = 0; r < sys.network.reaction_count(); ++r)
    for (Index s = 0; s < f.size(); ++s) f(s) += k(r) * rows(r, s);
  return f;
}

bool is_equilibrium(const MassActionSystem& sys, const RationalVector& x) {
  return exactly_zero(sfrf(sys, x));
}

bool is_complex_balanced_at(const MassActionSystem& sys, const RationalVector& x) {
  check_point(sys, x.size());
  for (Index i = 0; i < x.size(); ++i)
    if (x(i) <= 0) throw std::domain_error("complex balance is defined at positive points");
  RationalVector k = evaluate_rates(sys, x);
  RationalVector balance = RationalVector::Zero(sys.network.complex_count());
  for (const Reaction& rx : sys.network.reactions()) {
    balance(rx.reactant) -= k(rx.index);
    balance(rx.product) += k(rx.index);
  }
  return exactly_zero(balance);
}

Eigen::VectorXd evaluate_rates_approx(const MassActionSystem& sys, const Eigen::VectorXd& x) {
  check_point(sys, x.size());
  const Network& net = sys.network;
  Eigen::VectorXd k(net.reaction_count());
  for (int r = 0; r < net.reaction_count(); ++r) {
    double value = sys.rates[r].get_d();
    for (const auto& [s, coeff] : net.complex_at(net.reaction_at(r).reactant).coeffs())
      value *= std::pow(x(s), coeff.get_d());
    k(r) = value;
  }
  return k;
}

Eigen::VectorXd sfrf_approx(const MassActionSystem& sys, const Eigen::VectorXd& x) {
  Eigen::VectorXd k = evaluate_rates_approx(sys, x);
  RationalMatrix rows = stoichiometric_rows(sys.network);
  Eigen::VectorXd f = Eigen::VectorXd::Zero(sys.network.species_count());
  for (int r = 0; r < sys.network.reaction_count(); ++r)
    for (Index s = 0; s < f.size(); ++s) f(s) += k(r) * rows(r, s).get_d();
  return f;
}

bool is_equilibrium_approx(const MassActionSystem& sys, const Eigen::VectorXd& x,
                           double tolerance) {
  return sfrf_approx(sys, x).lpNorm<Eigen::Infinity>() <= tolerance;
}

EquilibriumCheck equilibrium_intersection_check(const MassActionSystem& sys,
                                                const Decomposition& d,
                                                const RationalVector& x) {
  RationalVector k = evaluate_rates(sys, x);
  RationalMatrix rows = stoichiometric_rows(sys.network);
  const Index m = sys.network.species_count();

  EquilibriumCheck out;
  out.all_parts_at_equilibrium = true;
  RationalVector whole = RationalVector::Zero(m);
  for (const auto& part : d.parts) {
    RationalVector f = RationalVector::Zero(m);
    for (int r : part)
      for (Index s = 0; s < m; ++s) f(s) += k(r) * rows(r, s);
    whole += f;
    bool at_eq = exactly_zero(f);
    out.part_at_equilibrium.push_back(at_eq);
    out.all_parts_at_equilibrium = out.all_parts_at_equilibrium && at_eq;
  }
  out.whole_at_equilibrium = exactly_zero(whole);
  if (out.all_parts_at_equilibrium && !out.whole_at_equilibrium)
    throw std::logic_error("all parts at equilibrium but the whole network is not");

  out.independent = is_independent(sys.network, d);
  out.positive_point = true;
  for (Index i = 0; i < x.size(); ++i) out.positive_point = out.positive_point && x(i) > 0;
  out.equality_clause_applies = out.independent && out.positive_point;
  return out;
}

namespace {

/* Shared state of the support fixed point. Rules add facts monotonically;
 * the log records each new fact once. */
struct SupportState {
  const Network& net;
  const Decomposition& d;
  RationalMatrix stoich_rows;                 // r x m
  std::vector<std::vector<bool>> closure;     // complex reachability
  SupportFacts facts;

  bool unsupported(int complex_index) const {
    return facts.unsupported_complexes.count(complex_index) != 0;
  }

  bool mark_unsupported(int complex_index, const std::string& rule, const std::string& detail) {
    if (!facts.unsupported_complexes.insert(complex_index).second) return false;
    facts.derivation_log.push_back(DerivationStep{rule, detail});
    return true;
  }

  bool mark_zero(int species, const std::string& rule, const std::string& detail) {
    if (!facts.zero_species.insert(species).second) return false;
    facts.derivation_log.push_back(DerivationStep{rule, detail});
    return true;
  }
};

void seed_terminal_rule(SupportState& st) {
  // R1: deficiency-zero parts, complexes outside every terminal strong
  // linkage class of the part's own digraph.
  for (int p = 0; p < st.d.length(); ++p) {
    Subnetwork sub = subnetwork(st.net, st.d.parts[p]);
    NetworkStats stats = network_stats(sub.network);
    if (stats.deficiency != 0) continue;
    LinkageClasses lc = linkage_structure(sub.network);
    for (int local = 0; local < sub.network.complex_count(); ++local) {
      if (lc.is_terminal(lc.strong_of[local])) continue;
      int parent = sub.complex_map[local];
      st.mark_unsupported(
          parent, "R1",
          "complex '" + st.net.complex_text(parent) + "' lies outside every terminal strong "
          "linkage class of deficiency-zero part " + std::to_string(p + 1) +
          " (whole-network steady states restrict to the part)");
    }
  }
}

bool zero_species_rule(SupportState& st) {  // R2
  bool changed = false;
  for (int c = 0; c < st.net.complex_count(); ++c) {
    if (st.unsupported(c)) continue;
    for (const auto& [s, coeff] : st.net.complex_at(c).coeffs()) {
      if (st.facts.zero_species.count(s)) {
        changed |= st.mark_unsupported(
            c, "R2",
            "complex '" + st.net.complex_text(c) + "' contains zero species '" +
                st.net.species_at(s).name + "'");
        break;
      }
    }
  }
  return changed;
}

bool reach_rule(SupportState& st) {  // R3
  bool changed = false;
  for (int i = 0; i < st.net.complex_count(); ++i) {
    if (st.unsupported(i)) continue;
    for (int j : st.facts.unsupported_complexes) {
      if (i != j && st.closure[i][j]) {
        changed |= st.mark_unsupported(
            i, "R3",
            "complex '" + st.net.complex_text(i) + "' has a directed path to unsupported '" +
                st.net.complex_text(j) + "'");
        break;
      }
    }
  }
  return changed;
}

bool singleton_rule(SupportState& st) {  // R4
  bool changed = false;
  for (int c : st.facts.unsupported_complexes) {
    const auto& coeffs = st.net.complex_at(c).coeffs();
    if (coeffs.size() != 1) continue;
    int s = coeffs.begin()->first;
    changed |= st.mark_zero(
        s, "R4",
        "unsupported complex '" + st.net.complex_text(c) + "' has single-species support");
  }
  return changed;
}

bool balance_rule(SupportState& st) {  // R5
  bool changed = false;
  const int m = st.net.species_count();
  const int r = st.net.reaction_count();
  for (int s = 0; s < m; ++s) {
    bool production_vanishes = true;
    for (int rx = 0; rx < r && production_vanishes; ++rx)
      if (st.stoich_rows(rx, s) > 0 && !st.unsupported(st.net.reaction_at(rx).reactant))
        production_vanishes = false;
    if (!production_vanishes) continue;
    for (int rx = 0; rx < r; ++rx) {
      if (st.stoich_rows(rx, s) < 0) {
        int reactant = st.net.reaction_at(rx).reactant;
        if (!st.unsupported(reactant)) {
          changed |= st.mark_unsupported(
              reactant, "R5",
              "no reaction can produce species '" + st.net.species_at(s).name +
                  "' at a steady state, so consuming reaction '" + st.net.reaction_name(rx) +
                  "' must have rate zero");
        }
      }
    }
  }
  return changed;
}

SupportState make_state(const Network& net, const Decomposition& d) {
  SupportState st{net, d, stoichiometric_rows(net), reachability_closure(net), SupportFacts{}};
  st.facts.decomposition_independent = is_independent(net, d);
  if (!st.facts.decomposition_independent) {
    st.facts.derivation_log.push_back(DerivationStep{
        "note",
        "the decomposition is not independent; steady states of the whole system need not "
        "restrict to the parts, so R1 conclusions are conditional"});
  }
  return st;
}

}  // namespace

SupportFacts zero_support_analysis(const Network& net, const Decomposition& d) {
  SupportState st = make_state(net, d);
  seed_terminal_rule(st);
  // Rounds of R2 -> R3 -> R4 -> R5 until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    changed |= zero_species_rule(st);
    changed |= reach_rule(st);
    changed |= singleton_rule(st);
    changed |= balance_rule(st);
  }
  return st.facts;
}

SupportFacts zero_support_analysis_randomized(const Network& net, const Decomposition& d,
                                              std::uint64_t seed) {
  SupportState st = make_state(net, d);
  seed_terminal_rule(st);
  std::mt19937_64 rng(seed);
  std::vector<int> order{0, 1, 2, 3};
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    for (int rule : order) {
      switch (rule) {
        case 0: changed |= zero_species_rule(st); break;
        case 1: changed |= reach_rule(st); break;
        case 2: changed |= singleton_rule(st); break;
        case 3: changed |= balance_rule(st); break;
      }
    }
  }
  return st.facts;
}

std::vector<int> embedded_deficiency_zero_parts(const SubnetworkReport& report) {
  std::vector<int> out;
  for (int p = 0; p < static_cast<int>(report.parts.size()); ++p)
    if (report.parts[p].stats.deficiency == 0) out.push_back(p);
  return out;
}

RationalVector parse_point(const Network& net, const std::string& text) {
  std::map<std::string, int> by_name;
  for (const Species& s : net.species()) by_name.emplace(s.name, s.index);

  RationalVector x(net.species_count());
  std::vector<bool> assigned(net.species_count(), false);

  std::vector<std::string> items{""};
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',')
      items.emplace_back();
    else
      items.back() += c;
  }
  for (const std::string& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw MalformedPartition("expected SPECIES=VALUE, got '" + item + "'");
    std::string name = item.substr(0, eq);
    auto it = by_name.find(name);
    if (it == by_name.end()) throw MalformedPartition("unknown species '" + name + "'");
    if (assigned[it->second]) throw MalformedPartition("species '" + name + "' assigned twice");
    auto value = parse_rational(item.substr(eq + 1));
    if (!value || *value < 0)
      throw MalformedPartition("invalid concentration for '" + name + "': must be a "
                               "nonnegative rational");
    x(it->second) = *value;
    assigned[it->second] = true;
  }
  for (int s = 0; s < net.species_count(); ++s)
    if (!assigned[s])
      throw MalformedPartition("species '" + net.species_at(s).name + "' has no value");
  return x;
}

}  // namespace crn
