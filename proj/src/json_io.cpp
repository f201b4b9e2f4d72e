#include "spw/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace spw {

namespace {

[[noreturn]] void fail(const std::string& what) { throw JsonError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

long integer_of(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_number_float()) {
    double x = j.get<double>();
    if (std::floor(x) == x && std::abs(x) < 1e15) return static_cast<long>(x);
  }
  fail(std::string(what) + " must be an integer");
}

Rational rational_of(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      fail("bad rational '" + j.get<std::string>() + "'");
    }
  }
  fail("expected a rational");
}

Json rational_json(const Rational& q) { return rational_to_string(q); }

Json gaussian_json(const GaussianRational& g) { return Json{{"re", rational_json(g.re())}, {"im", rational_json(g.im())}}; }

bool is_float_part(const Json& j) { return j.is_number_float(); }

GaussianRational gaussian_of(const Json& j) {
  return {rational_of(field(j, "re")), j.contains("im") ? rational_of(j.at("im")) : Rational(0)};
}

std::vector<std::string> names_of(const Json& j, const char* what) {
  std::vector<std::string> out;
  if (j.is_null()) return out;
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  for (const auto& x : j) out.push_back(string_of(x, what));
  return out;
}

std::vector<int> pairing_of(const Json& j, const std::vector<std::string>& names, const char* what) {
  std::vector<int> p(names.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = static_cast<int>(k);
  if (j.is_null()) return p;
  auto index = [&](const Json& x) {
    auto name = string_of(x, what);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) fail(std::string(what) + ": unknown generator '" + name + "'");
    return static_cast<int>(it - names.begin());
  };
  for (const auto& pr : j) {
    if (!pr.is_array() || pr.size() != 2) fail(std::string(what) + " entries must be pairs");
    int a = index(pr[0]);
    int b = index(pr[1]);
    p[a] = b;
    p[b] = a;
  }
  return p;
}

Terms terms_of(const GeneratorSet& gens, const Json& j) {
  if (!j.is_array()) fail("an element must be an array of terms");
  Terms terms;
  for (const auto& t : j) {
    Monomial mono{std::vector<int>(gens.even_count(), 0), 0};
    std::vector<int> order;
    if (t.contains("mono"))
      for (const auto& name : names_of(t.at("mono"), "mono")) {
        int k = gens.odd_index(name);
        if (k < 0) fail("unknown odd generator '" + name + "'");
        order.push_back(k);
      }
    if (t.contains("exp")) {
      if (!t.at("exp").is_object()) fail("exp must be an object");
      for (const auto& [name, e] : t.at("exp").items()) {
        int k = gens.even_index(name);
        if (k < 0) fail("unknown even generator '" + name + "'");
        mono.exps[k] += static_cast<int>(integer_of(e, "exponent"));
      }
    }
    // Sort the odd factors, tracking the sign; repeated factors vanish.
    int sign = 1;
    for (std::size_t a = 0; a < order.size(); ++a)
      for (std::size_t b = a + 1; b < order.size(); ++b)
        if (order[a] > order[b]) sign = -sign;
    std::sort(order.begin(), order.end());
    if (std::adjacent_find(order.begin(), order.end()) != order.end()) continue;
    for (int k : order) mono.odd |= 1u << k;
    Scalar c = scalar_from_json(field(t, "coef"));
    if (sign < 0) c = -c;
    auto it = terms.find(mono);
    if (it == terms.end())
      terms.emplace(mono, c);
    else
      it->second += c;
  }
  return terms;
}

Json terms_json(const GeneratorSet& gens, const Terms& terms) {
  Json out = Json::array();
  for (const auto& [mono, c] : terms) {
    Json t = Json::object();
    Json m = Json::array();
    for (std::size_t k = 0; k < gens.odd_count(); ++k)
      if (mono.odd & (1u << k)) m.push_back(gens.odd_names[k]);
    t["mono"] = m;
    Json e = Json::object();
    for (std::size_t k = 0; k < gens.even_count(); ++k)
      if (mono.exps[k] != 0) e[gens.even_names[k]] = mono.exps[k];
    if (!e.empty()) t["exp"] = e;
    t["coef"] = to_json(c);
    out.push_back(t);
  }
  return out;
}

Json matrix_rows(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::string> mono_names(AlgebraTag group, unsigned mask) {
  std::vector<std::string> out;
  if (mask & kTheta) out.push_back("theta");
  if (mask & kEta) out.push_back("eta");
  (void)group;
  return out;
}

}  // namespace

// ---------------------------------------------------------------- scalars

Json to_json(const Scalar& x) {
  if (!x.is_exact()) {
    auto z = x.to_complex();
    return Json{{"re", z.real()}, {"im", z.imag()}};
  }
  const ExtendedScalar& e = x.exact();
  Json j = gaussian_json(e.c0());
  if (!e.c1().is_zero()) {
    j["s"] = gaussian_json(e.c1());
    j["m"] = e.m();
  }
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_number_float()) return Scalar(FloatScalar{{j.get<double>(), 0.0}});
  if (j.is_string()) return Scalar(GaussianRational(rational_of(j), Rational(0)));
  if (!j.is_object()) fail("bad scalar");
  const Json& re = field(j, "re");
  const Json im = j.contains("im") ? j.at("im") : Json(0);
  if (is_float_part(re) || is_float_part(im)) {
    if (j.contains("s")) fail("float scalars cannot carry an extension part");
    if (!re.is_number() || !im.is_number()) fail("float scalar parts must be numbers");
    return Scalar(FloatScalar{{re.get<double>(), im.get<double>()}});
  }
  GaussianRational c0 = gaussian_of(j);
  if (!j.contains("s")) return Scalar(c0);
  GaussianRational c1 = gaussian_of(j.at("s"));
  long m = integer_of(field(j, "m"), "m");
  if (m == 0) fail("extension with m = 0");
  return Scalar(c0) + Scalar(c1) * sqrt_neg_im(m);
}

Json to_json(const Matrix& m) { return matrix_rows(m); }

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) fail("a matrix must be an array of rows");
  std::size_t r = j.size();
  std::size_t c = r == 0 ? 0 : j.at(0).size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) fail("matrix rows must have equal length");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = scalar_from_json(j[i][k]);
  }
  return m;
}

// ---------------------------------------------------------------- algebras and elements

Json to_json(const Algebra& alg) {
  Json j = Json::object();
  j["odd"] = alg->odd_names;
  if (!alg->even_names.empty()) j["even"] = alg->even_names;
  j["star"] = alg->has_star;
  auto pairs = [](const std::vector<int>& p, const std::vector<std::string>& names) {
    Json out = Json::array();
    for (std::size_t k = 0; k < p.size(); ++k)
      if (static_cast<std::size_t>(p[k]) > k) out.push_back(Json::array({names[k], names[p[k]]}));
    return out;
  };
  if (alg->has_star) {
    Json op = pairs(alg->odd_pairing, alg->odd_names);
    if (!op.empty()) j["odd_pairs"] = op;
    Json ep = pairs(alg->even_pairing, alg->even_names);
    if (!ep.empty()) j["even_pairs"] = ep;
    if (!alg->odd_star_rules.empty()) {
      Json r = Json::object();
      for (const auto& [k, t] : alg->odd_star_rules) r[alg->odd_names[k]] = terms_json(*alg, t);
      j["odd_star"] = r;
    }
    if (!alg->even_star_rules.empty()) {
      Json r = Json::object();
      for (const auto& [k, t] : alg->even_star_rules) r[alg->even_names[k]] = terms_json(*alg, t);
      j["even_star"] = r;
    }
  }
  return j;
}

Algebra algebra_from_json(const Json& j) {
  if (!j.is_object()) fail("algebra must be an object");
  GeneratorSet g;
  g.odd_names = names_of(j.contains("odd") ? j.at("odd") : Json(), "odd");
  g.even_names = names_of(j.contains("even") ? j.at("even") : Json(), "even");
  g.has_star = j.value("star", false) || j.contains("odd_pairs") || j.contains("even_pairs");
  if (g.has_star) {
    g.odd_pairing = pairing_of(j.contains("odd_pairs") ? j.at("odd_pairs") : Json(), g.odd_names, "odd_pairs");
    g.even_pairing = pairing_of(j.contains("even_pairs") ? j.at("even_pairs") : Json(), g.even_names, "even_pairs");
  }
  auto rules = [&](const char* key, bool odd) {
    std::map<int, Terms> out;
    if (!j.contains(key)) return out;
    for (const auto& [name, t] : j.at(key).items()) {
      int k = odd ? g.odd_index(name) : g.even_index(name);
      if (k < 0) fail(std::string(key) + ": unknown generator '" + name + "'");
      out[k] = terms_of(g, t);
    }
    return out;
  };
  g.odd_star_rules = rules("odd_star", true);
  g.even_star_rules = rules("even_star", false);
  try {
    return make_algebra(std::move(g));
  } catch (const AlgebraError& e) {
    fail(std::string("bad algebra: ") + e.what());
  }
}

Json to_json(const GrassmannElement& x) { return terms_json(*x.algebra(), x.terms()); }

GrassmannElement element_from_json(const Algebra& alg, const Json& j) {
  try {
    return GrassmannElement(alg, terms_of(*alg, j));
  } catch (const AlgebraError& e) {
    fail(std::string("bad element: ") + e.what());
  }
}

// ---------------------------------------------------------------- points

Json to_json(const GL11Point& g) {
  return Json{{"algebra", to_json(g.algebra())},
              {"a", to_json(g.a)},
              {"beta", to_json(g.beta)},
              {"gamma", to_json(g.gamma)},
              {"d", to_json(g.d)}};
}

GL11Point gl11_point_from_json(const Json& j) {
  Algebra alg = algebra_from_json(field(j, "algebra"));
  return {element_from_json(alg, field(j, "a")), element_from_json(alg, field(j, "beta")),
          element_from_json(alg, field(j, "gamma")), element_from_json(alg, field(j, "d"))};
}

Json to_json(const S11Point& p) {
  return Json{{"algebra", to_json(p.w.algebra())}, {"w", to_json(p.w)}, {"eta", to_json(p.eta)}};
}

S11Point s11_point_from_json(const Json& j) {
  Algebra alg = algebra_from_json(field(j, "algebra"));
  return {element_from_json(alg, field(j, "w")), element_from_json(alg, field(j, "eta"))};
}

Json to_json(const FactorizationTriple& f) {
  return Json{{"algebra", to_json(f.t.algebra())}, {"t", to_json(f.t)}, {"theta", to_json(f.theta)}, {"eta", to_json(f.eta)}};
}

// ---------------------------------------------------------------- representations

Json to_json(const Representation& rep) {
  Json basis = Json::array();
  for (const auto& b : rep.basis) basis.push_back(Json{{"parity", b.parity}, {"weight", b.weight}});
  Json gens = Json::object();
  for (const auto& name : odd_generator_names(rep.algebra)) gens[name] = to_json(rep.gen(name));
  return Json{{"algebra", algebra_name(rep.algebra)}, {"basis", basis}, {"generators", gens}};
}

Representation representation_from_json(const Json& j) {
  Representation rep;
  try {
    rep.algebra = parse_algebra(string_of(field(j, "algebra"), "algebra"));
  } catch (const RepresentationError& e) {
    fail(e.what());
  }
  const Json& basis = field(j, "basis");
  if (!basis.is_array()) fail("basis must be an array");
  for (const auto& b : basis) {
    long p = integer_of(field(b, "parity"), "parity");
    if (p != 0 && p != 1) fail("parity must be 0 or 1");
    rep.basis.push_back({static_cast<int>(p), integer_of(field(b, "weight"), "weight")});
  }
  const Json& gens = field(j, "generators");
  for (const auto& name : odd_generator_names(rep.algebra)) {
    Matrix m = matrix_from_json(field(gens, name.c_str()));
    if (m.rows() != rep.dim() || (rep.dim() > 0 && m.cols() != rep.dim()))
      fail("generator " + name + " has the wrong size");
    if (rep.dim() == 0) m = Matrix(0, 0);
    rep.generators[name] = m;
  }
  return rep;
}

Json to_json(const DecompositionReport& r) {
  Json body = Json::object();
  if (r.algebra == AlgebraTag::s11) {
    Json v = Json::array();
    for (const auto& [m, c] : r.v_counts) v.push_back(Json{{"m", m}, {"count", c}});
    body["V"] = v;
    body["trivial"] = Json{{"even", r.trivial_even}, {"odd", r.trivial_odd}};
    body["Ad"] = r.ad;
    body["PiAd"] = r.pi_ad;
  } else {
    Json pi = Json::array();
    for (const auto& [m, c] : r.pi_plus) pi.push_back(Json{{"m", m}, {"sign", "+"}, {"count", c}});
    for (const auto& [m, c] : r.pi_minus) pi.push_back(Json{{"m", m}, {"sign", "-"}, {"count", c}});
    body["pi"] = pi;
    if (r.weight_zero) {
      auto [p, q] = r.weight_zero->superdim();
      body["weight_zero"] = Json{{"even", p}, {"odd", q}, {"representation", to_json(*r.weight_zero)}};
    } else {
      body["weight_zero"] = Json{{"even", 0}, {"odd", 0}};
    }
  }
  Json blocks = Json::array();
  for (const auto& b : r.blocks) blocks.push_back(Json{{"label", b.label.to_string()}, {"columns", b.columns}});
  return Json{{algebra_name(r.algebra), body}, {"labels", r.labels()}, {"blocks", blocks},
              {"basis_change", to_json(r.basis_change)}};
}

// ---------------------------------------------------------------- sections

Json to_json(const Section& s) {
  Json terms = Json::array();
  for (const auto& [k, c] : s.terms())
    terms.push_back(Json{{"m", k.first}, {"mono", mono_names(s.group(), k.second)}, {"coef", to_json(c)}});
  return Json{{"group", algebra_name(s.group())}, {"terms", terms}};
}

Section section_from_json(const Json& j) {
  AlgebraTag group;
  try {
    group = parse_algebra(string_of(field(j, "group"), "group"));
  } catch (const RepresentationError& e) {
    fail(e.what());
  }
  Section s(group);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) fail("terms must be an array");
  for (const auto& t : terms) {
    long m = integer_of(field(t, "m"), "m");
    std::vector<std::string> mono = names_of(t.contains("mono") ? t.at("mono") : Json(), "mono");
    unsigned mask = 0;
    int sign = 1;
    for (const auto& name : mono) {
      unsigned bit = name == "theta" ? kTheta : name == "eta" ? kEta : 0;
      if (bit == 0) fail("unknown odd coordinate '" + name + "'");
      if (mask & bit) {
        mask = ~0u;
        break;
      }
      if (bit == kTheta && (mask & kEta)) sign = -sign;
      mask |= bit;
    }
    if (mask == ~0u) continue;
    Scalar c = scalar_from_json(field(t, "coef"));
    try {
      s.add(m, mask, sign < 0 ? -c : c);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  return s;
}

Json to_json(const ExpansionResult& r) {
  Json coeffs = Json::array();
  for (const auto& [key, c] : r.coefficients) {
    const auto& [label, i, j] = key;
    coeffs.push_back(Json{{"rep", label.to_string()}, {"i", i}, {"j", j}, {"coef", to_json(c)}});
  }
  Json residual = to_json(r.residual);
  return Json{{"group", algebra_name(r.group)}, {"coefficients", coeffs}, {"residual", residual}};
}

// ---------------------------------------------------------------- files

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    fail("'" + path + "' is not valid JSON: " + e.what());
  }
}

Representation converted(const Representation& rep, const FieldOptions& opts) {
  Representation r = rep;
  for (auto& [name, m] : r.generators) m = m.converted(opts);
  return r;
}

}  // namespace spw
