#pragma once

#include <nlohmann/json.hpp>

#include "csa/forms.hpp"
#include "csa/frieze.hpp"
#include "csa/quiver.hpp"
#include "csa/sequences.hpp"
#include "csa/superring.hpp"

namespace csa {

using Json = nlohmann::json;

// Indices in JSON are 1-based, as in the text form.
// Poly: {"text": "...", "terms": [{"coef": "p/q", "even": [exps], "odd": [indices]}]}
Json to_json(const Poly& p);
// Accepts the object form or a plain string in the text syntax.
Poly poly_from_json(const Json& j, int n, int m);

Json to_json(const SRational& f);

// Quiver: {"n", "m", "B": [[...]], "N": [[[...]]], "frozen": [...]}.
// Input may instead give "arrows": [[i, j, mult?]] and "paths": [[i, k, j, mult?]].
Json to_json(const ExtendedQuiver& q);
ExtendedQuiver quiver_from_json(const Json& j);

Json to_json(const Violation& v);
Json to_json(const Seed& s);
Seed seed_from_json(const Json& j);  // {"quiver": ..., "labels": [...]?}

Json to_json(const Form& w);

// {"width", "range": [first, last], "evens": [{"i","j","value"}], "odds": [...]}
Json to_json(const SuperFrieze& f);

Json to_json(const DualNumber& x);
Json to_json(const Dual<LinearForm>& x);

}  // namespace csa
