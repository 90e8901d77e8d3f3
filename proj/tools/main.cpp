#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "eulerseq/builtin.hpp"
#include "eulerseq/derivations.hpp"
#include "eulerseq/extclass.hpp"
#include "eulerseq/io.hpp"
#include "eulerseq/sheaf.hpp"
#include "eulerseq/verify.hpp"

namespace {

using eulerseq::io::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitPrecondition = 4;

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw eulerseq::ParseError("cannot open " + path, 0);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw eulerseq::ParseError(std::string("bad JSON in ") + path + ": " + e.what(),
                               static_cast<std::size_t>(e.byte));
  }
  return j;
}

long parse_long(const std::string& text) {
  try {
    std::size_t used = 0;
    long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw eulerseq::ParseError("expected an integer, got '" + text + "'", 0);
  }
}

std::pair<long, long> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    long a = parse_long(text);
    return {a, a};
  }
  long a = parse_long(text.substr(0, dots));
  long b = parse_long(text.substr(dots + 2));
  if (a > b) throw eulerseq::InvalidInputError("empty degree range " + text);
  return {a, b};
}

std::vector<long> parse_chars(const std::string& text) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(parse_long(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (out.empty()) throw eulerseq::InvalidInputError("empty characteristic list");
  return out;
}

eulerseq::Field field_of_char(long c) {
  if (c == 0) return eulerseq::Field::rationals();
  return eulerseq::Field::prime(static_cast<std::uint32_t>(c));
}

struct Options {
  bool json_out = false;
  bool quiet = false;
};

void emit(const Options& opt, const json& doc, const std::string& pretty) {
  if (opt.json_out) {
    std::cout << doc.dump(2) << "\n";
  } else if (!opt.quiet) {
    std::cout << pretty;
  }
}

int run_derivations(const Options& opt, const std::string& ring_path, const std::string& range) {
  using namespace eulerseq;
  auto [lo, hi] = parse_range(range);
  GradedRing ring(io::load_ring(load_document(ring_path)));
  json table = json::array();
  std::string pretty;
  for (long d = lo; d <= hi; ++d) {
    DerivationSpace space = solve_degree(ring, d);
    table.push_back(io::derivation_entry(ring, space));
    pretty += "degree " + std::to_string(d) + ": dimension " + std::to_string(space.dimension) + "\n";
    for (const auto& b : space.basis) {
      pretty += "  ";
      for (std::size_t i = 0; i < b.images.size(); ++i) {
        if (i) pretty += ", ";
        pretty += ring.pres().variables[i] + " -> " + b.images[i].str(ring.pres().variables);
      }
      pretty += "\n";
    }
  }
  if (ring.pres().weight_gcd != 1 && !opt.quiet && !opt.json_out)
    pretty += "note: generator degrees have gcd " + std::to_string(ring.pres().weight_gcd) + "\n";
  emit(opt, json{{"degrees", table}}, pretty);
  return kExitOk;
}

int run_sectionring(const Options& opt, const std::string& divisor_path, long maxdeg,
                    bool present) {
  using namespace eulerseq;
  QDivisorP1 d = io::load_divisor(load_document(divisor_path));
  std::string pretty;
  json out;
  if (present) {
    SectionRingModel model = present_section_ring(d, maxdeg);
    out = io::model_to_json(model);
    pretty += "divisor " + d.str() + "\n";
    for (const auto& g : model.generators)
      pretty += "generator " + g.name + " of degree " + std::to_string(g.degree) + ": " +
                g.function.str() + "\n";
    std::vector<std::string> names;
    for (const auto& g : model.generators) names.push_back(g.name);
    for (std::size_t r = 0; r < model.relations.size(); ++r)
      pretty += "relation of degree " + std::to_string(model.relation_degrees[r]) + ": " +
                model.relations[r].str(names) + "\n";
    pretty += std::string("presentation complete: ") + (model.complete ? "yes" : "no") + "\n";
  } else {
    auto pieces = section_ring(d, maxdeg);
    out = io::section_ring_to_json(d, pieces);
    pretty += "divisor " + d.str() + "\n";
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      pretty += "degree " + std::to_string(i) + " (dim " + std::to_string(pieces[i].basis.size()) + "):";
      for (const auto& b : pieces[i].basis) pretty += " " + b.str();
      pretty += "\n";
    }
  }
  emit(opt, out, pretty);
  return kExitOk;
}

int run_euler(const Options& opt, const std::string& divisor_path, long d,
              const std::optional<std::string>& chars) {
  using namespace eulerseq;
  json doc = load_document(divisor_path);
  std::vector<long> char_list;
  if (chars) {
    char_list = parse_chars(*chars);
  } else {
    char_list.push_back(io::field_from_json(doc.at("field")).characteristic());
  }
  json out = json::array();
  std::string pretty;
  for (long c : char_list) {
    QDivisorP1 dv = io::load_divisor(doc, field_of_char(c));
    EulerReport r = euler_report(dv, d);
    json entry = io::euler_report_to_json(dv, r);
    WLDivisors wl = build_WL(dv, d, c);
    if (wl.W.is_zero()) {
      CechClass cc = cech_cocycle(dv, d);
      entry["ext_class"] = io::cech_class_to_json(dv.field(), cc, splits(dv, d));
    } else {
      entry["ext_class"] = nullptr;
    }
    out.push_back(entry);
    pretty += "characteristic " + std::to_string(c) + ": splitting (" +
              std::to_string(r.splitting.a1) + "," + std::to_string(r.splitting.a2) + "), a=" +
              std::to_string(r.a) + ", b=" + std::to_string(r.b) + ", W=" + r.W.str() + ", L=" +
              r.L.str() + ", h0=" + std::to_string(r.h0);
    if (r.derivation_dim) pretty += ", der_dim=" + std::to_string(*r.derivation_dim);
    pretty += r.consistent ? ", consistent" : ", INCONSISTENT";
    if (!r.presentation_complete) pretty += " (presentation incomplete: derivation check advisory)";
    pretty += "\n";
  }
  emit(opt, out, pretty);
  return kExitOk;
}

int run_extclass(const Options& opt, const std::string& divisor_path, long d) {
  using namespace eulerseq;
  QDivisorP1 dv = io::load_divisor(load_document(divisor_path));
  CechClass cc = cech_cocycle(dv, d);
  bool sp = splits(dv, d);
  json out = io::cech_class_to_json(dv.field(), cc, sp);
  std::string pretty = "cocycle " + cc.cocycle.str() + " dt, residue " +
                       dv.field().str(cc.residue) + ", " + (sp ? "splits" : "does not split") +
                       "\n";
  emit(opt, out, pretty);
  return kExitOk;
}

int run_verify(const Options& opt) {
  auto items = eulerseq::verify::run_suite();
  bool all = true;
  json out = json::array();
  for (const auto& item : items) {
    all = all && item.pass;
    out.push_back(json{{"name", item.name}, {"pass", item.pass}, {"detail", item.detail}});
    if (!opt.quiet && !opt.json_out) {
      std::cout << (item.pass ? "PASS  " : "FAIL  ") << item.name;
      if (!item.detail.empty()) std::cout << "  [" << item.detail << "]";
      std::cout << "\n";
    }
  }
  if (opt.json_out || opt.quiet) std::cout << out.dump(2) << "\n";
  if (!opt.quiet && !opt.json_out)
    std::cout << (all ? "all items passed" : "SOME ITEMS FAILED") << "\n";
  return all ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"derivation modules of graded rings and divisor section rings on the projective line"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  app.add_flag("--json", opt.json_out, "machine-readable JSON output");
  app.add_flag("--quiet", opt.quiet, "suppress pretty output");

  auto* derivations = app.add_subcommand("derivations", "homogeneous derivation spaces of a presented ring");
  std::string ring_path, range = "0..0";
  derivations->add_option("--ring", ring_path, "ring document (JSON)")->required();
  derivations->add_option("--degrees", range, "degree range A..B")->required();

  auto* sectionring = app.add_subcommand("sectionring", "section spaces of a Q-divisor, optionally with a presentation");
  std::string divisor_path;
  long maxdeg = 8;
  bool present = false;
  sectionring->add_option("--divisor", divisor_path, "divisor document (JSON)")->required();
  sectionring->add_option("--maxdeg", maxdeg, "top degree");
  sectionring->add_flag("--present", present, "discover generators and relations");

  auto* euler = app.add_subcommand("euler", "splitting type, correction divisors and degree report");
  std::string euler_divisor;
  long euler_d = 0;
  std::optional<std::string> chars;
  euler->add_option("--divisor", euler_divisor, "divisor document (JSON)")->required();
  euler->add_option("-d", euler_d, "twist degree")->required();
  euler->add_option("--chars", chars, "comma-separated characteristics, e.g. 0,2,3");

  auto* extclass = app.add_subcommand("extclass", "Cech extension class and splitness");
  std::string ext_divisor;
  long ext_d = 0;
  extclass->add_option("--divisor", ext_divisor, "divisor document (JSON)")->required();
  extclass->add_option("-d", ext_d, "twist degree")->required();

  auto* verify = app.add_subcommand("verify-paper", "run the built-in reference example suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitParse;
  }

  try {
    if (derivations->parsed()) return run_derivations(opt, ring_path, range);
    if (sectionring->parsed()) return run_sectionring(opt, divisor_path, maxdeg, present);
    if (euler->parsed()) return run_euler(opt, euler_divisor, euler_d, chars);
    if (extclass->parsed()) return run_extclass(opt, ext_divisor, ext_d);
    if (verify->parsed()) return run_verify(opt);
  } catch (const eulerseq::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const eulerseq::NonAmpleError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const eulerseq::HypothesisViolatedError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const eulerseq::InvalidInputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
