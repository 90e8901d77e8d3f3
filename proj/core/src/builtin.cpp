#include "eulerseq/builtin.hpp"

#include "eulerseq/parser.hpp"

namespace eulerseq::builtin {

using io::json;

json conic_ring_doc(const Field& f) {
  return json{{"field", io::field_to_json(f)},
              {"variables", {"x", "z", "y"}},
              {"weights", {1, 1, 1}},
              {"relations", {"z^2 - x*y"}}};
}

json icis_ring_doc() {
  return json{{"field", {{"kind", "Q"}}},
              {"variables", {"x1", "x2", "x3", "x4", "x5", "x6"}},
              {"weights", {8, 8, 5, 2, 2, 2}},
              {"relations",
               {"x1*x4 + x2*x5 + x3^2 - x4^5", "x1*x5 + x2*x6 + x3^2 + x6^5"}}};
}

json icis_reduced_ring_doc() {
  return json{{"field", {{"kind", "Q"}}},
              {"variables", {"x1", "x2", "x4", "x5", "x6"}},
              {"weights", {4, 4, 1, 1, 1}},
              {"relations", {"x1*x4 - x1*x5 + x2*x5 - x2*x6 - x4^5 - x6^5"}}};
}

json conic_divisor_doc(const Field& f) {
  return json{{"field", io::field_to_json(f)},
              {"places",
               {json{{"poly", "t"}, {"num", 1}, {"den", 1}},
                json{{"poly", "inf"}, {"num", 1}, {"den", 1}}}}};
}

json point_divisor_doc(const Field& f) {
  return json{{"field", io::field_to_json(f)},
              {"places", {json{{"poly", "t"}, {"num", 1}, {"den", 1}}}}};
}

json half_point_divisor_doc(const Field& f) {
  return json{{"field", io::field_to_json(f)},
              {"places", {json{{"poly", "t"}, {"num", 1}, {"den", 2}}}}};
}

json half_third_divisor_doc(const Field& f) {
  return json{{"field", io::field_to_json(f)},
              {"places",
               {json{{"poly", "t"}, {"num", 1}, {"den", 2}},
                json{{"poly", "inf"}, {"num", 1}, {"den", 3}}}}};
}

HomogeneousDerivation icis_eta(const GradedRing& ring) {
  const Field& f = ring.field();
  const auto& vars = ring.pres().variables;
  HomogeneousDerivation eta;
  eta.degree = -1;
  eta.images.push_back(parse_polynomial(f, vars, "2*x3*(x5 - x6)"));
  eta.images.push_back(parse_polynomial(f, vars, "-2*x3*(x4 - x5)"));
  eta.images.push_back(parse_polynomial(f, vars, "x4*x6 - x5^2"));
  for (int i = 0; i < 3; ++i) eta.images.push_back(MPoly::zero(f, vars.size()));
  return eta;
}

}  // namespace eulerseq::builtin
