#include "fanmoduli/io.hpp"

#include <algorithm>
#include <sstream>

#include "fanmoduli/errors.hpp"

namespace fanmoduli::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) throw ParseError(std::string(what) + " is out of range");
  return static_cast<int>(v);
}

void require_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
}

RayPermutation permutation_from_json(const Json& j, const Subset& domain, const char* what) {
  require_array(j, what);
  RayPermutation p{domain, {}};
  for (const auto& v : j) p.image.push_back(int_from_json(v, what));
  if (p.image.size() != domain.size())
    throw ParseError(std::string(what) + " has the wrong length");
  return p;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  throw ParseError("rational must be a string \"p/q\" or an integer");
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

Vector vector_from_json(const Json& j) {
  require_array(j, "vector");
  Vector v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(to_json(m.column(c)));
  return out;
}

RationalMatrix matrix_from_json(const Json& j, std::size_t rows) {
  require_array(j, "matrix");
  std::vector<Vector> cols;
  for (const auto& c : j) {
    cols.push_back(vector_from_json(c));
    if (cols.back().size() != rows) throw ParseError("matrix columns have unequal lengths");
  }
  return RationalMatrix::from_columns(cols, rows);
}

RationalMatrix matrix_from_json(const Json& j) {
  require_array(j, "matrix");
  if (j.empty()) throw ParseError("matrix must have at least one column");
  require_array(j.front(), "matrix column");
  return matrix_from_json(j, j.front().size());
}

Json to_json(const Subset& s) {
  Json out = Json::array();
  for (int i : s) out.push_back(i);
  return out;
}

Subset subset_from_json(const Json& j) {
  require_array(j, "index set");
  Subset s;
  for (const auto& v : j) s.push_back(int_from_json(v, "index"));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Json to_json(const CombinatorialType& type) {
  Json cones = Json::array();
  for (const auto& c : type.cones())
    if (!c.empty()) cones.push_back(to_json(c));
  Json out{{"d", type.d()}, {"n", type.n()}, {"cones", cones},
           {"virtual", to_json(type.virtual_set())}};
  if (type.complete()) out["complete"] = true;
  return out;
}

CombinatorialType type_from_json(const Json& j) {
  const int d = int_from_json(field(j, "d"), "d");
  const int n = int_from_json(field(j, "n"), "n");
  const Json& cj = field(j, "cones");
  require_array(cj, "cones");
  std::vector<Subset> cones;
  for (const auto& c : cj) cones.push_back(subset_from_json(c));
  Subset virt;
  if (j.contains("virtual") && !j.at("virtual").is_null()) virt = subset_from_json(j.at("virtual"));
  bool complete = false;
  if (j.contains("complete")) {
    if (!j.at("complete").is_boolean()) throw ParseError("complete must be a boolean");
    complete = j.at("complete").get<bool>();
  }
  return CombinatorialType(d, n, std::move(cones), std::move(virt), complete);
}

Json to_json(const Calibration& h) {
  Json out{{"d", h.d()}, {"n", h.n()}, {"columns", to_json(h.matrix())}};
  if (!h.standard()) out["chart"] = to_json(h.chart());
  return out;
}

Calibration calibration_from_json(const Json& j) {
  const int d = int_from_json(field(j, "d"), "d");
  const int n = int_from_json(field(j, "n"), "n");
  if (d < 1 || n < d) throw ParseError("calibration needs 1 <= d <= n");
  const RationalMatrix m = matrix_from_json(field(j, "columns"), static_cast<std::size_t>(d));
  if (m.cols() != static_cast<std::size_t>(n)) throw ParseError("calibration must have n columns");
  if (j.contains("chart")) return Calibration(m, subset_from_json(j.at("chart")));
  return Calibration(m);
}

std::string subset_key(const Subset& s, int n) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (n >= 10 && k > 0) out += ',';
    out += std::to_string(s[k]);
  }
  return out;
}

Subset subset_from_key(const std::string& key, int n) {
  Subset s;
  if (n < 10) {
    for (char c : key) {
      if (c < '1' || c > '9') throw ParseError("bad index key \"" + key + "\"");
      s.push_back(c - '0');
    }
  } else {
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        s.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw ParseError("bad index key \"" + key + "\"");
      }
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

Json to_json(const SignVector& s, int n) {
  Json out = Json::object();
  for (const auto& [cone, v] : s) out[subset_key(cone, n)] = v;
  return out;
}

SignVector sign_vector_from_json(const Json& j, int n) {
  if (!j.is_object()) throw ParseError("sign vector must be an object");
  SignVector s;
  for (const auto& [key, v] : j.items()) {
    const int x = int_from_json(v, "sign");
    if (x < -1 || x > 1) throw ParseError("sign must be -1, 0 or 1");
    s[subset_from_key(key, n)] = x;
  }
  return s;
}

Json to_json(const GroupElement& g) {
  Json out{{"tau", g.tau.image}, {"sigma", g.sigma.image}, {"alpha", nullptr}, {"A", nullptr}};
  if (g.alpha) out["alpha"] = to_json(*g.alpha);
  if (g.A) out["A"] = to_json(*g.A);
  return out;
}

GroupElement group_element_from_json(const Json& j, const CombinatorialType& type) {
  GroupElement g;
  g.tau = permutation_from_json(field(j, "tau"), type.rays(), "tau");
  g.sigma = j.contains("sigma") && !j.at("sigma").is_null()
                ? permutation_from_json(j.at("sigma"), type.virtual_set(), "sigma")
                : RayPermutation{type.virtual_set(), type.virtual_set()};
  const std::size_t nj = type.free_set().size();
  if (j.contains("alpha") && !j.at("alpha").is_null())
    g.alpha = matrix_from_json(j.at("alpha"), type.rays().size());
  if (j.contains("A") && !j.at("A").is_null()) g.A = matrix_from_json(j.at("A"), nj);
  return g;
}

Json to_json(const PluckerVector& p) {
  Json coords = Json::object();
  const auto subsets = k_subsets(static_cast<int>(p.n), static_cast<int>(p.rank));
  for (std::size_t k = 0; k < subsets.size(); ++k)
    coords[subset_key(subsets[k], static_cast<int>(p.n))] = to_json(p.coords[k]);
  return Json{{"rank", p.rank}, {"n", p.n}, {"coords", coords}};
}

PluckerVector plucker_from_json(const Json& j) {
  const int rank = int_from_json(field(j, "rank"), "rank");
  const int n = int_from_json(field(j, "n"), "n");
  if (rank < 0 || n < rank || n > 30) throw ParseError("Plucker vector needs 0 <= rank <= n");
  const Json& cj = field(j, "coords");
  if (!cj.is_object()) throw ParseError("coords must be an object");
  PluckerVector p{static_cast<std::size_t>(rank), static_cast<std::size_t>(n), {}};
  for (const auto& s : k_subsets(n, rank)) {
    const std::string key = subset_key(s, n);
    if (!cj.contains(key)) throw ParseError("missing Plucker coordinate " + key);
    p.coords.push_back(rational_from_json(cj.at(key)));
  }
  if (cj.size() != p.coords.size()) throw ParseError("unexpected Plucker coordinates");
  return p;
}

Json to_json(const std::vector<SignCondition>& system) {
  Json out = Json::array();
  for (const auto& c : system) out.push_back(Json{{"cone", to_json(c.cone)}, {"sign", c.sign}});
  return out;
}

Json to_json(const std::vector<ClosureCondition>& conditions, int n) {
  Json out = Json::array();
  for (const auto& c : conditions)
    out.push_back(Json{{"first", to_json(c.first)},
                       {"second", to_json(c.second)},
                       {"coords", Json::array({subset_key(complement(c.first, n), n),
                                               subset_key(complement(c.second, n), n)})},
                       {"sign", c.sign}});
  return out;
}

Json to_json(const ZeroPatternFamily& f) {
  Json allowed = Json::array();
  for (const auto& s : f.allowed) allowed.push_back(to_json(s));
  return Json{{"n", f.n}, {"allowed", allowed}};
}

ZeroPatternFamily zero_patterns_from_json(const Json& j) {
  ZeroPatternFamily f{int_from_json(field(j, "n"), "n"), {}};
  const Json& a = field(j, "allowed");
  require_array(a, "allowed");
  for (const auto& s : a) f.allowed.push_back(subset_from_json(s));
  std::sort(f.allowed.begin(), f.allowed.end(), shortlex_less);
  return f;
}

Json to_json(const Stratum& s, const CombinatorialType& type) {
  Json removed = Json::array();
  for (const auto& c : s.removed_cones(type)) removed.push_back(to_json(c));
  return Json{{"signs", to_json(s.signs, type.n())},
              {"interior", s.interior()},
              {"removed_cones", removed},
              {"degenerate_type", to_json(s.degenerate_type)},
              {"witness", to_json(s.witness)}};
}

Stratum stratum_from_json(const Json& j, const CombinatorialType& type) {
  return Stratum{sign_vector_from_json(field(j, "signs"), type.n()),
                 type_from_json(field(j, "degenerate_type")),
                 calibration_from_json(field(j, "witness"))};
}

Json to_json(const ProjectedCalibration& p) {
  return Json{{"w", to_json(p.w)}, {"alpha", to_json(p.alpha)}, {"row", to_json(p.row)}};
}

std::string render_svg(const Calibration& h, const CombinatorialType& type) {
  if (h.d() != 2) throw UnsupportedError("render needs d = 2");
  const CombinatorialType dd = degenerate_type(h, type);
  const Rational center(500);
  const Rational radius(400);

  // Endpoint of ray i: direction scaled to max-norm 400, y axis pointing up.
  auto endpoint = [&](int i) {
    const Vector v = h.column(i);
    const Rational m = std::max(Rational(abs(v[0])), Rational(abs(v[1])));
    return std::pair<Rational, Rational>{center + radius * v[0] / m, center - radius * v[1] / m};
  };
  auto fmt = [](const Rational& q) { return to_decimal(q, 6); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n";
  out << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  for (const auto& c : dd.cones()) {
    if (c.size() != 2) continue;
    const auto a = endpoint(c[0]);
    const auto b = endpoint(c[1]);
    out << "<polygon class=\"cone\" data-cone=\"" << subset_key(c, type.n())
        << "\" points=\"500.000000,500.000000 " << fmt(a.first) << ',' << fmt(a.second) << ' '
        << fmt(b.first) << ',' << fmt(b.second)
        << "\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
  }
  for (const auto& c : dd.cones()) {
    if (c.size() != 1) continue;
    const auto p = endpoint(c[0]);
    out << "<line class=\"ray\" data-ray=\"" << c[0]
        << "\" x1=\"500.000000\" y1=\"500.000000\" x2=\"" << fmt(p.first) << "\" y2=\""
        << fmt(p.second) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << fmt(p.first) << "\" y=\"" << fmt(p.second)
        << "\" font-size=\"24\">" << c[0] << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace fanmoduli::io
