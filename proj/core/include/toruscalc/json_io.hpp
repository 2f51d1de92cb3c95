#pragma once

// JSON forms of lattices, characteristic functions, Betti vectors, CDGAs and
// rings. Readers throw FormatError on malformed input.

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "toruscalc/betti.hpp"
#include "toruscalc/cdga.hpp"
#include "toruscalc/charfun.hpp"
#include "toruscalc/polytope.hpp"
#include "toruscalc/toricring.hpp"

namespace toruscalc {

class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Json = nlohmann::ordered_json;

Json lattice_to_json(const FaceLattice& p);
FaceLattice lattice_from_json(const Json& j);

Json charfun_to_json(const CharacteristicFunction& xi);
CharacteristicFunction charfun_from_json(const Json& j);

/// {"left_face", "right_face", "pairing": [[left facet, right facet], ...]}
Json surgery_to_json(const SurgerySpec& s);
SurgerySpec surgery_from_json(const Json& j);

Json betti_to_json(int n, int k, const std::string& method, const BettiVector& b);
Json betti_array(const BettiVector& b);

std::string rational_string(const Rational& q);
Json cdga_to_json(const Cdga& x);
/// The unit is the basis element labelled "1", else the only degree-0 one.
/// Axioms are checked.
CdgaPtr cdga_from_json(const Json& j);
Json ring_to_json(const FiniteGradedRing& r);
FiniteGradedRing ring_from_json(const Json& j);

/// Parses text, mapping parse failures to FormatError.
Json parse_json(const std::string& text, const std::string& what);

}  // namespace toruscalc
