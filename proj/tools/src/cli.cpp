#include "fanmoduli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "fanmoduli/errors.hpp"
#include "fanmoduli/io.hpp"
#include "fanmoduli/linalg.hpp"

namespace fanmoduli::cli {

namespace {

using io::Json;

// Malformed command line or input document (exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in, out, type, calibration, base, kernel, rows, from, to, first, second, chart;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<int> i, j;
};

Json parse_document(std::istream& stream, const std::string& what) {
  try {
    return Json::parse(stream);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(what + ": " + e.what());
  }
}

// Inputs come from dedicated file flags or, when a flag is absent, from the
// same-named key of the --in document (or stdin). Single-input commands
// read the whole --in document.
class Inputs {
 public:
  Inputs(const Options& o, std::istream& in) : o_(o), in_(in) {}

  const Json& main() {
    if (!main_) {
      if (o_.in.empty() || o_.in == "-") {
        main_ = parse_document(in_, "stdin");
      } else {
        std::ifstream f(o_.in);
        if (!f) throw InputError("cannot open " + o_.in);
        main_ = parse_document(f, o_.in);
      }
    }
    return *main_;
  }

  Json get(const std::string& flag_value, const std::string& key) {
    if (!flag_value.empty()) {
      std::ifstream f(flag_value);
      if (!f) throw InputError("cannot open " + flag_value);
      return parse_document(f, flag_value);
    }
    const Json& doc = main();
    if (!doc.is_object() || !doc.contains(key))
      throw InputError("missing input \"" + key + "\" (use --" + key + " or a key of --in)");
    return doc.at(key);
  }

 private:
  const Options& o_;
  std::istream& in_;
  std::optional<Json> main_;
};

Subset parse_index_list(const std::string& text, const char* flag) {
  if (text.empty()) throw InputError(std::string("missing --") + flag);
  Subset s;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      s.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw InputError(std::string("--") + flag + " must be a comma-separated index list");
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

Json error_json(const std::string& code, const std::string& message) {
  return Json{{"error", code}, {"message", message}};
}

void require_valid(const CombinatorialType& type) {
  if (const auto v = validate(type)) throw PreconditionError("invalid_type", v->axiom + ": " + v->message);
}

std::string run_command(const std::string& name, const Options& o, Inputs& inputs, int& code) {
  auto type = [&] { return io::type_from_json(inputs.get(o.type, "type")); };
  auto calibration = [&] { return io::calibration_from_json(inputs.get(o.calibration, "calibration")); };
  auto base = [&] { return io::calibration_from_json(inputs.get(o.base, "base")); };
  auto dump = [](const Json& j) { return j.dump(2) + "\n"; };

  if (name == "validate") {
    const auto t = io::type_from_json(inputs.main());
    if (const auto v = validate(t)) {
      code = 1;
      return dump(Json{{"error", v->axiom}, {"witness", io::to_json(v->witness)}, {"message", v->message}});
    }
    return dump(Json{{"ok", true}, {"maximal", is_maximal_type(t)}});
  }
  if (name == "admissible") {
    const auto t = type();
    require_valid(t);
    const auto h = calibration();
    const bool adm = is_admissible(h, t);
    Json out{{"admissible", adm}, {"in_U", in_U(h, t)}};
    if (h.d() == 2) out["complete"] = is_complete(h, t);
    return dump(out);
  }
  if (name == "signs") {
    const auto t = type();
    return dump(Json{{"signs", io::to_json(det_signs(calibration(), t), t.n())}});
  }
  if (name == "inequalities") {
    const auto t = type();
    require_valid(t);
    return dump(io::to_json(component_inequalities(t, base())));
  }
  if (name == "autgroup") {
    const auto t = io::type_from_json(inputs.main());
    require_valid(t);
    Json elements = Json::array();
    const auto group = automorphism_group(t);
    for (const auto& p : group) elements.push_back(p.image);
    return dump(Json{{"order", group.size()}, {"rays", io::to_json(t.rays())}, {"elements", elements}});
  }
  if (name == "orbit") {
    const auto t = type();
    require_valid(t);
    Json points = Json::array();
    const auto orb = orbit(calibration(), t);
    for (const auto& h : orb) points.push_back(io::to_json(h));
    return dump(Json{{"size", orb.size()}, {"orbit", points}});
  }
  if (name == "canonical") {
    const auto t = type();
    require_valid(t);
    return dump(io::to_json(canonical_form(calibration(), t)));
  }
  if (name == "isomorphic") {
    const auto t = type();
    require_valid(t);
    const auto h1 = io::calibration_from_json(inputs.get(o.first, "first"));
    const auto h2 = io::calibration_from_json(inputs.get(o.second, "second"));
    const auto r = isomorphic(h1, h2, t);
    return dump(Json{{"isomorphic", r.isomorphic},
                     {"witness", r.witness ? io::to_json(*r.witness) : Json(nullptr)}});
  }
  if (name == "gale") {
    const auto h = o.calibration.empty() ? io::calibration_from_json(inputs.main()) : calibration();
    return dump(Json{{"kernel", io::to_json(gale(h))}});
  }
  auto kernel = [&]() -> RationalMatrix {
    if (!o.kernel.empty()) return io::matrix_from_json(inputs.get(o.kernel, "kernel"));
    if (!o.calibration.empty()) return gale(calibration());
    const Json& doc = inputs.main();
    if (doc.is_object() && doc.contains("kernel")) return io::matrix_from_json(doc.at("kernel"));
    if (doc.is_object() && doc.contains("calibration"))
      return gale(io::calibration_from_json(doc.at("calibration")));
    if (doc.is_object() && doc.contains("columns")) return gale(io::calibration_from_json(doc));
    return io::matrix_from_json(doc);
  };
  if (name == "plucker") return dump(io::to_json(plucker(kernel())));
  if (name == "chart") {
    const Subset rows = parse_index_list(o.rows, "rows");
    const auto k = kernel();
    const auto ck = chart_normalize(k, rows);
    return dump(Json{{"chart", io::to_json(ck.chart)},
                     {"complement", io::to_json(complement(ck.chart, static_cast<int>(k.rows())))},
                     {"kernel", io::to_json(ck.k)}});
  }
  if (name == "transition") {
    const Subset from = parse_index_list(o.from, "from");
    const Subset to = parse_index_list(o.to, "to");
    return dump(Json{{"from", io::to_json(from)}, {"to", io::to_json(to)},
                     {"matrix", io::to_json(transition(kernel(), from, to))}});
  }
  if (name == "closure") {
    const auto t = type();
    require_valid(t);
    const auto h0 = base();
    const auto conds = closure_conditions(t, h0);
    Json out{{"conditions", io::to_json(conds, t.n())}, {"base_point", io::to_json(plucker(gale(h0)))}};
    if (!o.calibration.empty() || !o.kernel.empty()) {
      const auto p = plucker(o.kernel.empty() ? gale(calibration()) : kernel());
      out["point"] = io::to_json(p);
      out["in_closure"] = in_closure(p, conds);
    }
    return dump(out);
  }
  if (name == "degenerate") {
    const auto t = type();
    require_valid(t);
    const auto h = calibration();
    const Stratum s{SignVector{}, degenerate_type(h, t), h};
    Json removed = Json::array();
    for (const auto& c : s.removed_cones(t)) removed.push_back(io::to_json(c));
    return dump(Json{{"degenerate_type", io::to_json(s.degenerate_type)}, {"removed_cones", removed}});
  }
  if (name == "zeropatterns") {
    const auto t = io::type_from_json(inputs.main());
    require_valid(t);
    return dump(io::to_json(zero_patterns(t)));
  }
  if (name == "classify") {
    const auto t = type();
    require_valid(t);
    return dump(io::to_json(classify(calibration(), t, base()), t));
  }
  if (name == "strata-scan") {
    if (!o.seed) throw InputError("strata-scan requires --seed");
    const auto t = type();
    require_valid(t);
    const auto h0 = base();
    ScanOptions opts;
    opts.samples = o.samples.value_or(10000);
    opts.seed = *o.seed;
    if (!o.chart.empty()) opts.chart = parse_index_list(o.chart, "chart");
    const auto strata = strata_scan(t, h0, opts);
    Json list = Json::array();
    std::size_t boundary = 0;
    for (const auto& s : strata) {
      list.push_back(io::to_json(s, t));
      if (!s.interior()) ++boundary;
    }
    return dump(Json{{"samples", opts.samples},
                     {"seed", opts.seed},
                     {"chart", io::to_json(opts.chart.empty() ? standard_chart(h0.d()) : opts.chart)},
                     {"observed", strata.size()},
                     {"boundary", boundary},
                     {"strata", list}});
  }
  if (name == "project") {
    if (!o.i || !o.j) throw InputError("project requires --i and --j");
    const auto h = o.calibration.empty() ? io::calibration_from_json(inputs.main()) : calibration();
    return dump(io::to_json(projected_calibration(h, *o.i, *o.j)));
  }
  if (name == "render") {
    const auto t = type();
    require_valid(t);
    return io::render_svg(calibration(), t);
  }
  throw InputError("unknown subcommand " + name);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Moduli of simplicial fans with exact arithmetic", "fanmoduli"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "check the axioms of a combinatorial type (--in)"},
      {"admissible", "geometric admissibility of a calibration"},
      {"signs", "determinant signs on the maximal cones"},
      {"inequalities", "sign system of the component of a base point"},
      {"autgroup", "automorphism group of a type (--in)"},
      {"orbit", "orbit of a calibration under the symmetry group"},
      {"canonical", "lexicographically least orbit element"},
      {"isomorphic", "decide isomorphism of two calibrations (--first, --second)"},
      {"gale", "kernel basis of a calibration"},
      {"plucker", "normalized Plucker coordinates of a kernel"},
      {"chart", "normalize a kernel in the chart given by --rows"},
      {"transition", "transition matrix between the charts --from and --to"},
      {"closure", "sign conditions of the closure in the Grassmannian"},
      {"degenerate", "degenerate type of a boundary calibration"},
      {"zeropatterns", "allowed zero sets of a type (--in)"},
      {"classify", "stratum of a boundary calibration"},
      {"strata-scan", "sample the boundary strata (--samples, --seed, --chart)"},
      {"project", "projected calibration of an opposite pair (--i, --j)"},
      {"render", "SVG drawing of a planar fan"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--in", o.in, "input JSON document (default: stdin)");
    sub->add_option("--out", o.out, "output file (default: stdout)");
    sub->add_option("--type", o.type, "combinatorial type JSON file");
    sub->add_option("--calibration", o.calibration, "calibration JSON file");
    sub->add_option("--base", o.base, "base calibration JSON file");
    sub->add_option("--kernel", o.kernel, "kernel matrix JSON file");
    sub->add_option("--rows", o.rows, "chart rows, e.g. 3,4");
    sub->add_option("--from", o.from, "source chart rows");
    sub->add_option("--to", o.to, "target chart rows");
    sub->add_option("--first", o.first, "first calibration JSON file");
    sub->add_option("--second", o.second, "second calibration JSON file");
    sub->add_option("--samples", o.samples, "number of samples");
    sub->add_option("--seed", o.seed, "random seed (required by strata-scan)");
    sub->add_option("--chart", o.chart, "sampling chart columns, e.g. 1,2");
    sub->add_option("--i", o.i, "first index of the opposite pair");
    sub->add_option("--j", o.j, "second index of the opposite pair");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    out << error_json("usage", e.what()).dump(2) << "\n";
    return 2;
  }
  const std::string name = app.get_subcommands().front()->get_name();

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out.empty() && o.out != "-") {
    file.open(o.out);
    if (!file) {
      out << error_json("malformed_input", "cannot write " + o.out).dump(2) << "\n";
      return 2;
    }
    sink = &file;
  }

  int code = 0;
  std::string result;
  try {
    Inputs inputs(o, in);
    result = run_command(name, o, inputs, code);
  } catch (const InputError& e) {
    out << error_json("malformed_input", e.what()).dump(2) << "\n";
    return 2;
  } catch (const ParseError& e) {
    out << error_json("malformed_input", e.what()).dump(2) << "\n";
    return 2;
  } catch (const Error& e) {
    out << error_json(e.code(), e.what()).dump(2) << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    out << error_json("malformed_input", e.what()).dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    out << error_json("internal", e.what()).dump(2) << "\n";
    return 1;
  }
  *sink << result;
  return code;
}

}  // namespace fanmoduli::cli
