#include "spw/cli.hpp"

#include <fstream>

#include "CLI11.hpp"
#include "spw/verify.hpp"

namespace spw {

namespace {

constexpr int kOk = 0;
constexpr int kMath = 1;
constexpr int kInput = 2;

struct Options {
  std::string scalar = "exact";
  double tol = -1;
  long weights = 10;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::string group = "su11";
  std::string out;
  std::string corrupt;
  std::string file;
  long m = 0;
  std::string sign;
  bool adjoint = false;
  bool m_given = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FieldOptions field_options(const Options& o) {
  FieldOptions f;
  if (o.scalar == "float") {
    if (o.tol <= 0) throw UsageError("--scalar float requires an explicit positive --tol");
    f.kind = ScalarKind::floating;
    f.tol = o.tol;
  }
  return f;
}

int emit(const Json& j, const Options& o, std::ostream& out) {
  std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream f(o.out);
  if (!f) throw JsonError("cannot write '" + o.out + "'");
  f << text;
  return kOk;
}

GL11Point converted(const GL11Point& g, const FieldOptions& f) {
  if (f.kind == ScalarKind::exact) return g;
  return {g.a.converted(f), g.beta.converted(f), g.gamma.converted(f), g.d.converted(f)};
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyConfig cfg;
  cfg.opts = field_options(o);
  cfg.weights = o.weights;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.corrupt = o.corrupt;
  VerifyReport r = run_verify(cfg);
  emit(r.json, o, out);
  return r.ok ? kOk : kMath;
}

int cmd_rep(const std::string& action, const Options& o, std::ostream& out) {
  FieldOptions f = field_options(o);
  Representation rep = representation_from_json(read_json_file(o.file));
  if (f.kind == ScalarKind::floating) rep = spw::converted(rep, f);
  auto bad = validate_representation(rep);
  if (action == "validate" || !bad.empty()) {
    Json j{{"valid", bad.empty()}, {"diagnostics", bad}};
    emit(j, o, out);
    return bad.empty() ? kOk : kMath;
  }
  return emit(to_json(decompose(rep, f)), o, out);
}

int cmd_point(const std::string& action, const Options& o, std::ostream& out) {
  FieldOptions f = field_options(o);
  Json in = read_json_file(o.file);
  if (action == "involute" && in.contains("w")) {
    S11Point p = s11_point_from_json(in);
    p.validate();
    return emit(to_json(rho_s11(p)), o, out);
  }
  if (action == "defactorize") {
    Algebra alg = algebra_from_json(in.at("algebra"));
    FactorizationTriple t{element_from_json(alg, in.at("t")), element_from_json(alg, in.at("theta")),
                          element_from_json(alg, in.at("eta"))};
    return emit(to_json(defactorize(t)), o, out);
  }
  GL11Point g = converted(gl11_point_from_json(in), f);
  g.validate();
  GroupTag group = parse_group(o.group);
  if (action == "check") {
    Membership mb = membership(g, group);
    Json j{{"group", group_name(group)}, {"member", mb.member}};
    if (!mb.member) j["diagnostic"] = mb.diagnostic;
    emit(j, o, out);
    return mb.member ? kOk : kMath;
  }
  if (action == "factorize") return emit(to_json(factorize(g)), o, out);
  return emit(to_json(sigma_su(g)), o, out);
}

int cmd_pw(const std::string& action, const Options& o, std::ostream& out) {
  FieldOptions f = field_options(o);
  if (action == "coeffs") {
    AlgebraTag group = o.group == "s11" ? AlgebraTag::s11 : AlgebraTag::su11;
    RepLabel label;
    if (o.adjoint) {
      label = {RepLabel::Kind::adjoint, 0};
    } else {
      if (!o.m_given) throw UsageError("pw coeffs needs --m (with --sign for su11) or --adjoint");
      if (group == AlgebraTag::s11) {
        label = {RepLabel::Kind::V, o.m};
      } else {
        if (o.sign != "+" && o.sign != "-") throw UsageError("--sign must be + or -");
        label = {o.sign == "+" ? RepLabel::Kind::pi_plus : RepLabel::Kind::pi_minus, o.m};
      }
    }
    Json entries = Json::array();
    for (const auto& [ij, s] : matrix_coefficients(labeled_representation(group, label, f)))
      entries.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"section", to_json(s)}});
    return emit(Json{{"rep", label.to_string()}, {"entries", entries}}, o, out);
  }
  Section s = section_from_json(read_json_file(o.file));
  ExpansionResult r = expand(s, f);
  Json j = to_json(r);
  if (!r.residual.is_zero()) j["note"] = "residual lies outside listed span";
  return emit(j, o, out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representations of S^{1|1} and SU(1|1)", "spw"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--scalar", o.scalar, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", o.tol, "comparison tolerance in float mode");
  app.add_option("--out", o.out, "write the report to a file");

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--weights", o.weights, "weight bound N")->check(CLI::Range(1L, 1000L));
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--trials", o.trials, "randomized decomposition trials");
  verify->add_option("--corrupt", o.corrupt)->group("");

  auto* rep = app.add_subcommand("rep", "representation files");
  rep->require_subcommand(1);
  for (const char* action : {"validate", "decompose"}) rep->add_subcommand(action)->add_option("file", o.file)->required();

  auto* point = app.add_subcommand("point", "group points");
  point->require_subcommand(1);
  for (const char* action : {"check", "factorize", "involute", "defactorize"}) {
    auto* sub = point->add_subcommand(action);
    sub->add_option("file", o.file)->required();
    sub->add_option("--group", o.group, "sl11, su11 or su11-minus")
        ->check(CLI::IsMember({"sl11", "su11", "su11-minus"}));
  }

  auto* pw = app.add_subcommand("pw", "matrix coefficients and expansion");
  pw->require_subcommand(1);
  auto* coeffs = pw->add_subcommand("coeffs");
  coeffs->add_option("--m", o.m, "weight")->each([&](const std::string&) { o.m_given = true; });
  coeffs->add_option("--sign", o.sign, "+ or -");
  coeffs->add_flag("--adjoint", o.adjoint);
  coeffs->add_option("--group", o.group, "su11 or s11")->check(CLI::IsMember({"su11", "s11"}));
  pw->add_subcommand("expand")->add_option("file", o.file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }

  auto chosen = [](CLI::App* a) { return a->get_subcommands().front()->get_name(); };
  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (rep->parsed()) return cmd_rep(chosen(rep), o, out);
    if (point->parsed()) return cmd_point(chosen(point), o, out);
    return cmd_pw(chosen(pw), o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const JsonError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMath;
  }
}

}  // namespace spw
