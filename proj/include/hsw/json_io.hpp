#pragma once

#include "hsw/qanalogue.hpp"
#include "hsw/soergel_oracle.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hsw {

/// Insertion-ordered JSON, so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

/// {exponent: coefficient}, lowest exponent first. Coefficients that do not
/// fit in 64 bits are written as decimal strings.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const Weight& w);
/// {"w": matrix rows, "lambda": vector}.
Json to_json(const AffineWeylGroup& g, const AffineElt& x);
/// [{"kind": "finite"|"affine", "index": n}], n 1-based.
Json word_to_json(const AffineWeylGroup& g, const std::vector<int>& word);
/// [{"element": ..., "coefficient": ...}] in (length, element) order.
Json to_json(const HeckeAlgebra& h, const HeckeElt& a);
/// [{"lambda": ..., "coefficient": ...}] in decreasing l(w_lambda).
Json to_json(const SphericalModule& m, const SphElt& a);
/// {"(a,b)": laurent} keyed by weight.
Json decomposition_to_json(const std::map<Weight, LaurentPoly>& d);
Json to_json(const KatoResult& r);
Json to_json(const CheckReport& r);

Json datum_to_json(const RootDatum& d);
/// A single {name, rank, simple_roots, simple_coroots} block or a list of
/// blocks combined block-diagonally.
RootDatum datum_from_json(const Json& j);
/// A path to a JSON datum file if one exists, otherwise a preset name.
RootDatum load_datum(std::string_view preset_or_path);

/// "1,-2" or "(1,-2)" or "[1,-2]"; the rank must match.
Weight parse_weight(std::string_view text, int rank);

}  // namespace hsw
