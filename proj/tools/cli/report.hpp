#pragma once

#include <json.hpp>

#include "gincs/combinatorics.hpp"
#include "gincs/hilbert.hpp"
#include "gincs/kpolynomial.hpp"
#include "gincs/multigrading.hpp"

namespace gincs::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "gincs-report/1";

/// A monomial as a list of [row, col] pairs, repeated by exponent.
Json to_json(const Monomial& m, const Ring& ring);
/// {"rendered": ..., "generators": [...]}
Json to_json(const MonomialIdeal& ideal);
/// List of {"exponents": [...], "coeff": c}, plus the rendered form.
Json to_json(const KPolynomial& k);
Json to_json(const BoundedMonomialIdeal& ideal);
Json to_json(const GinReport& report);
Json to_json(const CsVerdict& verdict);
Json to_json(const LabelCycle& cycle);
Json to_json(const ForestTrace& trace);
Json to_json(const ClassifyReport& report);
Json to_json(const Hypergraph& h);

}  // namespace gincs::cli
