#pragma once

#include <string>

#include "perdoub/classifier.hpp"
#include "perdoub/factorization.hpp"
#include "perdoub/fife.hpp"
#include "perdoub/goodness.hpp"

#include "json.hpp"

namespace perdoub {

// Stable-field-order JSON forms of the externally visible results.
using Json = nlohmann::ordered_json;

// {"kind": "factor11"|"factor1001"|"fourth_power"|"p00010100",
//  "start": int, "X": string, "Y": string|null}
// For the two literal-factor kinds X is the forbidden factor itself.
Json violation_json(const Violation& v);

// {"start": int, "X": string|null, "Y": string|null}
Json witness_json(const PatternWitness& w);

// {"word": ..., "good": bool, "violation": {...}|null}
Json good_verdict_json(const Word& w);

// {"a": str, "core": str, "b": str}
Json factorization_json(const Factorization& f);
Json decomposition_json(const Decomposition& dec);

std::string reason_name(Reason r);

// {"pattern": str, "encountered": bool, "reason": str, "complemented": bool,
//  "witness": {...}|null}
Json classification_json(const Word& p, const Classification& c);

}  // namespace perdoub
