#include "eulerseq/io.hpp"

#include "eulerseq/parser.hpp"

namespace eulerseq::io {

Field field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ParseError("field must be an object with a \"kind\"", 0);
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "Q") return Field::rationals();
  if (kind == "Fp") {
    if (!j.contains("p")) throw ParseError("prime field needs \"p\"", 0);
    long long p = j.at("p").get<long long>();
    if (p < 2 || p >= (1LL << 31)) throw InvalidInputError("modulus out of range");
    return Field::prime(static_cast<std::uint32_t>(p));
  }
  throw ParseError("unknown field kind \"" + kind + "\"", 0);
}

json field_to_json(const Field& f) {
  if (f.is_rationals()) return json{{"kind", "Q"}};
  return json{{"kind", "Fp"}, {"p", f.characteristic()}};
}

WeightedPresentation load_ring(const json& j) {
  Field f = field_from_json(j.at("field"));
  std::vector<std::string> vars = j.at("variables").get<std::vector<std::string>>();
  std::vector<long> weights = j.at("weights").get<std::vector<long>>();
  std::vector<MPoly> relations;
  if (j.contains("relations"))
    for (const auto& r : j.at("relations"))
      relations.push_back(parse_polynomial(f, vars, r.get<std::string>()));
  return make_presentation(f, std::move(vars), std::move(weights), std::move(relations));
}

QDivisorP1 load_divisor(const json& j, const std::optional<Field>& field_override) {
  Field f = field_override ? *field_override : field_from_json(j.at("field"));
  std::vector<DivisorTerm> terms;
  for (const auto& p : j.at("places")) {
    long long num = p.at("num").get<long long>();
    long long den = p.contains("den") ? p.at("den").get<long long>() : 1;
    std::string poly = p.at("poly").get<std::string>();
    Place place = poly == "inf" ? Place{true, Poly1::zero(f, "t")}
                                : Place{false, parse_poly1(f, "t", poly)};
    terms.push_back({std::move(place), num, den});
  }
  return QDivisorP1(f, std::move(terms));
}

json derivation_entry(const GradedRing& ring, const DerivationSpace& space) {
  json basis = json::array();
  for (const auto& b : space.basis) {
    json images = json::object();
    for (std::size_t i = 0; i < b.images.size(); ++i)
      images[ring.pres().variables[i]] = b.images[i].str(ring.pres().variables);
    basis.push_back(std::move(images));
  }
  return json{{"degree", space.degree}, {"dimension", space.dimension}, {"basis", basis}};
}

json classification_table(const QDivisorP1& d, long degree) {
  long long w = d.field().characteristic();
  json components = json::array();
  for (const auto& term : d.terms()) {
    components.push_back(json{{"place", term.place.str()},
                              {"p", term.num},
                              {"q", term.den},
                              {"s", s_value(term.num, term.den, degree)},
                              {"class", to_string(classify_component(term.num, term.den,
                                                                     degree, w))}});
  }
  WLDivisors wl = build_WL(d, degree, w);
  return json{{"components", components}, {"W", wl.W.str()}, {"L", wl.L.str()}};
}

json euler_report_to_json(const QDivisorP1& d, const EulerReport& r) {
  json components = json::array();
  for (const auto& c : r.components)
    components.push_back(json{{"place", c.place},
                              {"p", c.p},
                              {"q", c.q},
                              {"s", c.s},
                              {"class", to_string(c.cls)}});
  json out{{"divisor", d.str()},
           {"characteristic", d.field().characteristic()},
           {"components", components},
           {"W", r.W.str()},
           {"L", r.L.str()},
           {"a", r.a},
           {"b", r.b},
           {"splitting", json::array({r.splitting.a1, r.splitting.a2})},
           {"det_exponent", r.det_exponent},
           {"h0_M", r.h0},
           {"presentation_complete", r.presentation_complete},
           {"consistent", r.consistent}};
  if (r.derivation_dim)
    out["der_dim"] = *r.derivation_dim;
  else
    out["der_dim"] = nullptr;
  return out;
}

json cech_class_to_json(const Field& f, const CechClass& c, bool splits) {
  return json{{"cocycle", c.cocycle.str()},
              {"residue", f.str(c.residue)},
              {"splits", splits},
              {"log_trivial", c.log_trivial}};
}

json section_ring_to_json(const QDivisorP1& d, const std::vector<SectionSpace>& pieces) {
  json out{{"divisor", d.str()}, {"pieces", json::array()}};
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    json basis = json::array();
    for (const auto& b : pieces[i].basis) basis.push_back(b.str());
    out["pieces"].push_back(json{{"degree", i},
                                 {"dimension", pieces[i].basis.size()},
                                 {"floor_divisor", pieces[i].divisor.str()},
                                 {"basis", basis}});
  }
  return out;
}

json model_to_json(const SectionRingModel& model) {
  json gens = json::array();
  std::vector<std::string> names;
  for (const auto& g : model.generators) names.push_back(g.name);
  for (const auto& g : model.generators)
    gens.push_back(json{{"name", g.name}, {"degree", g.degree}, {"function", g.function.str()}});
  json rels = json::array();
  for (std::size_t r = 0; r < model.relations.size(); ++r)
    rels.push_back(json{{"degree", model.relation_degrees[r]},
                        {"polynomial", model.relations[r].str(names)}});
  return json{{"divisor", model.divisor.str()},
              {"maxdeg", model.maxdeg},
              {"generators", gens},
              {"relations", rels},
              {"complete", model.complete}};
}

}  // namespace eulerseq::io
