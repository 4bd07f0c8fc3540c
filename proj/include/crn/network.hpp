#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "crn/matrix.hpp"
#include "crn/rational.hpp"

namespace crn {

/// Violation of a reaction-network invariant (self-loop, duplicate
/// reaction, unused species, ...).
class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Species {
  int index = 0;
  std::string name;
};

/* A complex: a formal combination of species with positive rational
 * coefficients. Zero coefficients are never stored; the empty map is the
 * zero complex "0". Two complexes are equal iff their coefficient maps
 * are. */
class Complex {
 public:
  Complex() = default;

  /// Adds `coeff` of species `s`; coefficients accumulate ("A + A" is "2A").
  /// The accumulated coefficient must stay positive.
  Complex& add(int species, const Rational& coeff = 1);

  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int species) const;
  std::vector<int> support() const;

  bool operator==(const Complex& other) const { return coeffs_ == other.coeffs_; }
  bool operator<(const Complex& other) const { return coeffs_ < other.coeffs_; }

 private:
  std::map<int, Rational> coeffs_;
};

struct Reaction {
  int index = 0;
  std::string label;  // empty = unlabeled
  int reactant = 0;   // complex index
  int product = 0;    // complex index
};

/* A chemical reaction network over m species, n complexes, and r
 * reactions. Immutable after construction; species and complexes are
 * ordered by first appearance, every complex occurs in some reaction,
 * every species in some complex, no self-loops, no duplicate reactions. */
class Network {
 public:
  int species_count() const { return static_cast<int>(species_.size()); }
  int complex_count() const { return static_cast<int>(complexes_.size()); }
  int reaction_count() const { return static_cast<int>(reactions_.size()); }

  const std::vector<Species>& species() const { return species_; }
  const std::vector<Complex>& complexes() const { return complexes_; }
  const std::vector<Reaction>& reactions() const { return reactions_; }

  const Species& species_at(int i) const { return species_.at(i); }
  const Complex& complex_at(int i) const { return complexes_.at(i); }
  const Reaction& reaction_at(int i) const { return reactions_.at(i); }

  /// Display name of reaction i: its label, or the 1-based index.
  std::string reaction_name(int i) const;

  /// Renders a complex as "2 A + B"; the zero complex as "0".
  std::string complex_text(int i) const;
  std::string complex_text(const Complex& c) const;

  /// Renders reaction i as "A + B -> C".
  std::string reaction_text(int i) const;

 private:
  friend class NetworkBuilder;
  std::vector<Species> species_;
  std::vector<Complex> complexes_;
  std::vector<Reaction> reactions_;
};

/* Incremental construction with first-appearance ordering of species and
 * complexes. build() enforces the network invariants. */
class NetworkBuilder {
 public:
  /// Index of the named species, registering it on first use.
  int species(const std::string& name);

  /// True if the name is already registered.
  bool has_species(const std::string& name) const;

  /// Appends a reaction; complexes are deduplicated by value.
  /// Throws NetworkError on a self-loop or duplicate reaction.
  NetworkBuilder& reaction(const Complex& reactant, const Complex& product,
                           std::string label = "");

  int reaction_count() const { return static_cast<int>(reactions_.size()); }

  /// Validates and returns the finished network.
  Network build();

 private:
  int complex_index(const Complex& c);

  std::vector<Species> species_;
  std::map<std::string, int> species_by_name_;
  std::vector<Complex> complexes_;
  std::map<Complex, int> complex_by_value_;
  std::vector<Reaction> reactions_;
  std::map<std::pair<int, int>, int> reaction_by_pair_;
};

/* Y (m x n molecularity), Ia (n x r incidence, one -1 and one +1 per
 * column), N = Y * Ia (m x r stoichiometric), all exact. */
struct NetworkMatrices {
  RationalMatrix Y;
  IntMatrix Ia;
  RationalMatrix N;
};

NetworkMatrices build_matrices(const Network& net);

/// Transposed stoichiometric matrix: row k is the reaction vector of
/// reaction k (product minus reactant over species).
RationalMatrix stoichiometric_rows(const Network& net);

struct NetworkStats {
  int n = 0;   // complexes
  int r = 0;   // reactions
  int m = 0;   // species
  int l = 0;   // linkage classes
  int sl = 0;  // strong linkage classes
  int t = 0;   // terminal strong linkage classes
  int s = 0;   // rank of N
  int deficiency = 0;  // n - l - s, always >= 0
  bool weakly_reversible = false;
  bool reversible = false;
};

NetworkStats network_stats(const Network& net);

}  // namespace crn
