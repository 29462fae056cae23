#include "perdoub/serialize.hpp"

namespace perdoub {

namespace {

Json optional_word(const std::optional<Word>& w) {
  if (!w) return nullptr;
  return *w;
}

}  // namespace

Json violation_json(const Violation& v) {
  Json j;
  switch (v.kind) {
    case ViolationKind::factor_11:
      j["kind"] = "factor11";
      break;
    case ViolationKind::factor_1001:
      j["kind"] = "factor1001";
      break;
    case ViolationKind::fourth_power:
      j["kind"] = "fourth_power";
      break;
    case ViolationKind::pattern_00010100:
      j["kind"] = "p00010100";
      break;
  }
  j["start"] = v.start;
  if (v.kind == ViolationKind::factor_11) {
    j["X"] = "11";
  } else if (v.kind == ViolationKind::factor_1001) {
    j["X"] = "1001";
  } else {
    j["X"] = optional_word(v.image0);
  }
  j["Y"] = optional_word(v.image1);
  return j;
}

Json witness_json(const PatternWitness& w) {
  Json j;
  j["start"] = w.start;
  j["X"] = optional_word(w.image0);
  j["Y"] = optional_word(w.image1);
  return j;
}

Json good_verdict_json(const Word& w) {
  Json j;
  j["word"] = w;
  const auto v = goodness_violation(w);
  j["good"] = !v.has_value();
  j["violation"] = v ? violation_json(*v) : Json(nullptr);
  return j;
}

Json factorization_json(const Factorization& f) {
  Json j;
  j["a"] = f.a;
  j["core"] = f.core;
  j["b"] = f.b;
  return j;
}

Json decomposition_json(const Decomposition& dec) {
  Json layers = Json::array();
  for (const auto& [a, b] : dec.layers) {
    Json layer;
    layer["a"] = a;
    layer["b"] = b;
    layers.push_back(std::move(layer));
  }
  Json j;
  j["layers"] = std::move(layers);
  j["final_core"] = dec.core;
  return j;
}

std::string reason_name(Reason r) {
  switch (r) {
    case Reason::none: return "none";
    case Reason::factor_of_d: return "factor_of_d";
    case Reason::factor_of_p1_preimage: return "factor_of_p1_preimage";
    case Reason::factor_of_p2_preimage: return "factor_of_p2_preimage";
    case Reason::sporadic: return "sporadic";
  }
  return "none";
}

Json classification_json(const Word& p, const Classification& c) {
  Json j;
  j["pattern"] = p;
  j["encountered"] = c.encountered;
  j["reason"] = reason_name(c.reason);
  j["complemented"] = c.complemented;
  j["witness"] = c.witness ? witness_json(*c.witness) : Json(nullptr);
  return j;
}

}  // namespace perdoub
