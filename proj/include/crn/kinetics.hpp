#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "crn/decomposition.hpp"
#include "crn/network.hpp"
#include "crn/parser.hpp"

namespace crn {

/// A kinetics operation was requested on a document without rate constants.
class MissingRates : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/* Mass-action kinetics: K_r(x) = k_r * prod_s x_s^{y_s} with y the reactant
 * complex of r. Every reaction carries a positive rational rate constant. */
struct MassActionSystem {
  Network network;
  std::vector<Rational> rates;  // indexed by reaction, all > 0

  static MassActionSystem of(const NetworkDocument& doc);
  static MassActionSystem of(Network network, std::vector<Rational> rates);
};

/* Exact rate evaluation at a nonnegative rational point. Reactant
 * coefficients must be integers (x^(p/q) has no exact rational value);
 * fractional reactant coefficients throw std::domain_error. Satisfies the
 * positivity property: K_r(x) > 0 iff supp(reactant) is contained in
 * supp(x). */
RationalVector evaluate_rates(const MassActionSystem& sys, const RationalVector& x);

/// Species formation rate f(x) = N * K(x), exactly.
RationalVector sfrf(const MassActionSystem& sys, const RationalVector& x);

/// f(x) = 0, exactly.
bool is_equilibrium(const MassActionSystem& sys, const RationalVector& x);

/// Ia * K(x) = 0 at a strictly positive point; complex balance implies
/// equilibrium since N = Y * Ia. Throws std::domain_error unless x > 0.
bool is_complex_balanced_at(const MassActionSystem& sys, const RationalVector& x);

// Floating-point convenience entry points (tolerance 1e-9); these never
// back any exact contract.
Eigen::VectorXd evaluate_rates_approx(const MassActionSystem& sys, const Eigen::VectorXd& x);
Eigen::VectorXd sfrf_approx(const MassActionSystem& sys, const Eigen::VectorXd& x);
bool is_equilibrium_approx(const MassActionSystem& sys, const Eigen::VectorXd& x,
                           double tolerance = 1e-9);

/* Per-part equilibrium report: with N_i and K_i restricted to part i, all
 * parts at equilibrium always forces the whole network to equilibrium; for
 * an independent decomposition at a positive point the converse holds too. */
struct EquilibriumCheck {
  std::vector<bool> part_at_equilibrium;
  bool all_parts_at_equilibrium = false;
  bool whole_at_equilibrium = false;
  bool independent = false;
  bool positive_point = false;
  bool equality_clause_applies = false;  // independent decomposition, x > 0
};

EquilibriumCheck equilibrium_intersection_check(const MassActionSystem& sys,
                                                const Decomposition& d,
                                                const RationalVector& x);

struct DerivationStep {
  std::string rule;  // "R1".."R5", or "note"
  std::string detail;

  bool operator==(const DerivationStep&) const = default;
};

/* Least fixed point of the steady-state support rules:
 *   R1  complexes of a deficiency-zero part outside its terminal strong
 *       linkage classes are unsupported (seed, applied once);
 *   R2  a complex containing a zero species is unsupported;
 *   R3  a complex with a directed path to an unsupported complex is
 *       unsupported;
 *   R4  the species of a singleton unsupported complex is zero;
 *   R5  when every reaction net-producing a species has an unsupported
 *       reactant, the reactants of all reactions net-consuming it are
 *       unsupported.
 * "Unsupported" means: no nonnegative steady state of the whole system has
 * full support on that complex. */
struct SupportFacts {
  std::set<int> zero_species;
  std::set<int> unsupported_complexes;
  std::vector<DerivationStep> derivation_log;
  bool decomposition_independent = true;  // R1 seeding is conditional otherwise
};

SupportFacts zero_support_analysis(const Network& net, const Decomposition& d);

/// Same rules under a randomized rule schedule; the fixed point must match
/// the canonical one (used to check order independence).
SupportFacts zero_support_analysis_randomized(const Network& net, const Decomposition& d,
                                              std::uint64_t seed);

/// Indices of deficiency-zero parts; nonempty iff the network has an
/// embedded deficiency-zero subnetwork under the given (finest) decomposition.
std::vector<int> embedded_deficiency_zero_parts(const SubnetworkReport& report);

/// Parses "A=2,B=1,C=2" into a concentration vector; every species exactly
/// once, values nonnegative rationals. Throws MalformedPartition on errors.
RationalVector parse_point(const Network& net, const std::string& text);

}  // namespace crn
