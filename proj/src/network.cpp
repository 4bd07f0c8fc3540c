#include "crn/network.hpp"

#include <algorithm>

#include "crn/graph.hpp"

namespace crn {

Complex& Complex::add(int species, const Rational& coeff) {
  if (coeff <= 0) throw NetworkError("complex coefficients must be positive");
  auto [it, inserted] = coeffs_.emplace(species, coeff);
  if (!inserted) it->second += coeff;
  return *this;
}

Rational Complex::coeff(int species) const {
  auto it = coeffs_.find(species);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::vector<int> Complex::support() const {
  std::vector<int> out;
  out.reserve(coeffs_.size());
  for (const auto& [s, c] : coeffs_) out.push_back(s);
  return out;
}

std::string Network::reaction_name(int i) const {
  const Reaction& rx = reactions_.at(i);
  return rx.label.empty() ? std::to_string(i + 1) : rx.label;
}

std::string Network::complex_text(const Complex& c) const {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [s, coeff] : c.coeffs()) {
    if (!out.empty()) out += " + ";
    if (coeff != 1) {
      out += to_string(coeff);
      out += ' ';
    }
    out += species_.at(s).name;
  }
  return out;
}

std::string Network::complex_text(int i) const { return complex_text(complexes_.at(i)); }

std::string Network::reaction_text(int i) const {
  const Reaction& rx = reactions_.at(i);
  return complex_text(rx.reactant) + " -> " + complex_text(rx.product);
}

int NetworkBuilder::species(const std::string& name) {
  auto it = species_by_name_.find(name);
  if (it != species_by_name_.end()) return it->second;
  int index = static_cast<int>(species_.size());
  species_.push_back(Species{index, name});
  species_by_name_.emplace(name, index);
  return index;
}

bool NetworkBuilder::has_species(const std::string& name) const {
  return species_by_name_.count(name) != 0;
}

int NetworkBuilder::complex_index(const Complex& c) {
  auto it = complex_by_value_.find(c);
  if (it != complex_by_value_.end()) return it->second;
  int index = static_cast<int>(complexes_.size());
  complexes_.push_back(c);
  complex_by_value_.emplace(c, index);
  return index;
}

NetworkBuilder& NetworkBuilder::reaction(const Complex& reactant, const Complex& product,
                                         std::string label) {
  if (reactant == product)
    throw NetworkError("self-loop reaction: reactant equals product");
  int from = complex_index(reactant);
  int to = complex_index(product);
  auto [it, inserted] =
      reaction_by_pair_.emplace(std::make_pair(from, to), static_cast<int>(reactions_.size()));
  if (!inserted) throw NetworkError("duplicate reaction");
  reactions_.push_back(
      Reaction{static_cast<int>(reactions_.size()), std::move(label), from, to});
  return *this;
}

Network NetworkBuilder::build() {
  if (reactions_.empty()) throw NetworkError("a network needs at least one reaction");

  std::vector<bool> used(species_.size(), false);
  for (const Complex& c : complexes_)
    for (const auto& [s, coeff] : c.coeffs()) used.at(s) = true;
  for (size_t s = 0; s < used.size(); ++s) {
    if (!used[s])
      throw NetworkError("species '" + species_[s].name + "' appears in no complex");
  }

  Network net;
  net.species_ = species_;
  net.complexes_ = complexes_;
  net.reactions_ = reactions_;
  return net;
}

NetworkMatrices build_matrices(const Network& net) {
  const int m = net.species_count();
  const int n = net.complex_count();
  const int r = net.reaction_count();

  NetworkMatrices out;
  out.Y = RationalMatrix::Zero(m, n);
  for (int j = 0; j < n; ++j)
    for (const auto& [s, coeff] : net.complex_at(j).coeffs()) out.Y(s, j) = coeff;

  out.Ia = IntMatrix::Zero(n, r);
  for (int j = 0; j < r; ++j) {
    const Reaction& rx = net.reaction_at(j);
    out.Ia(rx.reactant, j) = -1;
    out.Ia(rx.product, j) = 1;
  }

  out.N = out.Y * to_rational(out.Ia);
  return out;
}

RationalMatrix stoichiometric_rows(const Network& net) {
  const int m = net.species_count();
  const int r = net.reaction_count();
  RationalMatrix rows = RationalMatrix::Zero(r, m);
  for (int k = 0; k < r; ++k) {
    const Reaction& rx = net.reaction_at(k);
    for (const auto& [s, coeff] : net.complex_at(rx.product).coeffs()) rows(k, s) += coeff;
    for (const auto& [s, coeff] : net.complex_at(rx.reactant).coeffs()) rows(k, s) -= coeff;
  }
  return rows;
}

NetworkStats network_stats(const Network& net) {
  NetworkStats stats;
  stats.n = net.complex_count();
  stats.r = net.reaction_count();
  stats.m = net.species_count();

  LinkageClasses lc = linkage_structure(net);
  stats.l = static_cast<int>(lc.classes.size());
  stats.sl = static_cast<int>(lc.strong.size());
  stats.t = static_cast<int>(lc.terminal_strong.size());

  stats.s = static_cast<int>(rank(stoichiometric_rows(net)));
  stats.deficiency = stats.n - stats.l - stats.s;
  if (stats.deficiency < 0)
    throw NetworkError("internal: negative deficiency");

  stats.weakly_reversible = stats.sl == stats.l;
  stats.reversible = is_reversible(net);
  return stats;
}

}  // namespace crn
