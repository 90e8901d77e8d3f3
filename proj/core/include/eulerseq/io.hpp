#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "eulerseq/derivations.hpp"
#include "eulerseq/divisor.hpp"
#include "eulerseq/extclass.hpp"
#include "eulerseq/sheaf.hpp"

namespace eulerseq::io {

using nlohmann::json;

// {"kind":"Q"} or {"kind":"Fp","p":2}
Field field_from_json(const json& j);

// Ring document:
// {"field":{...},"variables":["x","z","y"],"weights":[1,1,1],"relations":["z^2 - x*y"]}
WeightedPresentation load_ring(const json& j);

// Divisor document:
// {"field":{...},"places":[{"poly":"t","num":1,"den":1},{"poly":"inf","num":1,"den":1}]}
// `field_override` re-reads the place polynomials over another field.
QDivisorP1 load_divisor(const json& j, const std::optional<Field>& field_override = {});

json field_to_json(const Field& f);
json derivation_entry(const GradedRing& ring, const DerivationSpace& space);
json classification_table(const QDivisorP1& d, long degree);
json euler_report_to_json(const QDivisorP1& d, const EulerReport& r);
json cech_class_to_json(const Field& f, const CechClass& c, bool splits);
json section_ring_to_json(const QDivisorP1& d, const std::vector<SectionSpace>& pieces);
json model_to_json(const SectionRingModel& model);

}  // namespace eulerseq::io
