#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crn/network.hpp"

namespace crn {

/// Syntax or semantic error in the text format, with 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line(line),
        column(column) {}

  int line;
  int column;
};

/* A parsed network plus its rate annotations. Rates are all-or-nothing:
 * either every reaction carries a positive rate constant or none does. */
struct NetworkDocument {
  Network network;
  std::optional<std::vector<Rational>> rates;  // indexed by reaction

  /// Original label text per labeled reaction.
  std::map<int, std::string> source_labels() const;
};

/* Plain-text reaction format, one reaction per line:
 *
 *     LABEL: COMPLEX -> COMPLEX [k=VALUE]
 *
 * LABEL and [k=...] are optional. Complexes are "+"-separated terms
 * "coefficient species" (default coefficient 1); coefficients are positive
 * integers or fractions "p/q"; "0" alone is the empty complex. "<->" lines
 * expand into a forward and a reverse reaction (labels suffixed "_f"/"_b",
 * rates "[k=FWD,BWD]"). "#" starts a comment. */
NetworkDocument parse_network(std::string_view text);

NetworkDocument parse_network_file(const std::string& path);

/// Canonical text form; parse_network(format_network(doc)) reproduces the
/// document exactly (species order, reaction order, labels, rates).
std::string format_network(const NetworkDocument& doc);

}  // namespace crn
