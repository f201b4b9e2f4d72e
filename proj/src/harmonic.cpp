#include "spw/harmonic.hpp"

#include <regex>
#include <vector>

namespace spw {

// ---------------------------------------------------------------- Section

Section Section::monomial(AlgebraTag group, long m, unsigned mask, const Scalar& c) {
  Section s(group);
  s.add(m, mask, c);
  return s;
}

Scalar Section::coefficient(long m, unsigned mask) const {
  auto it = terms_.find({m, mask});
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Section::add(long m, unsigned mask, const Scalar& c) {
  if (mask > (kTheta | kEta)) throw std::invalid_argument("bad odd monomial mask");
  if (group_ == AlgebraTag::s11 && (mask & kEta)) throw std::invalid_argument("s11 sections have no eta");
  if (c.is_zero()) return;
  Key k{m, mask};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::string Section::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (k.first != 0) out += "*t^" + std::to_string(k.first);
    if (k.second & kTheta) out += "*theta";
    if (k.second & kEta) out += "*eta";
  }
  return out;
}

Section Section::operator-() const {
  Section s(group_);
  for (const auto& [k, c] : terms_) s.terms_.emplace(k, -c);
  return s;
}

Section& Section::operator+=(const Section& o) {
  if (o.group_ != group_) throw std::invalid_argument("sections of different groups");
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

Section& Section::operator-=(const Section& o) { return *this += -o; }

Section& Section::operator*=(const Scalar& c) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

bool operator==(const Section& a, const Section& b) {
  if (a.group_ != b.group_) return false;
  return (a - b).is_zero();
}

// ---------------------------------------------------------------- matrix coefficients

std::map<std::pair<std::size_t, std::size_t>, Section> matrix_coefficients(const Representation& rep) {
  auto bad = validate_representation(rep);
  if (!bad.empty()) throw RepresentationError("validation failed: " + bad.front());
  std::size_t n = rep.dim();
  std::map<std::pair<std::size_t, std::size_t>, Section> out;
  bool su = rep.algebra == AlgebraTag::su11;
  const Matrix& x = rep.gen(su ? "U" : "Z");
  Matrix y = su ? rep.gen("S") : Matrix(n, n);
  Matrix xy = x * y;
  for (std::size_t i = 0; i < n; ++i) {
    long m = rep.basis[i].weight;
    for (std::size_t j = 0; j < n; ++j) {
      Section s(rep.algebra);
      if (i == j) s.add(m, 0, Scalar(1));
      s.add(m, kTheta, x(i, j));
      if (su) {
        s.add(m, kEta, y(i, j));
        s.add(m, kTheta | kEta, xy(i, j));
      }
      out.emplace(std::make_pair(i, j), std::move(s));
    }
  }
  return out;
}

// ---------------------------------------------------------------- labels

std::string RepLabel::to_string() const {
  switch (kind) {
    case Kind::trivial: return "trivial";
    case Kind::adjoint: return "adjoint";
    case Kind::V: return "V(" + std::to_string(m) + ")";
    case Kind::pi_plus: return "pi(" + std::to_string(m) + ",+)";
    case Kind::pi_minus: return "pi(" + std::to_string(m) + ",-)";
  }
  return "?";
}

RepLabel parse_rep_label(const std::string& text) {
  if (text == "trivial") return {RepLabel::Kind::trivial, 0};
  if (text == "adjoint") return {RepLabel::Kind::adjoint, 0};
  static const std::regex v(R"(V\((-?\d+)\))");
  static const std::regex pi(R"(pi\((-?\d+),([+-])\))");
  std::smatch mt;
  if (std::regex_match(text, mt, v)) return {RepLabel::Kind::V, std::stol(mt[1])};
  if (std::regex_match(text, mt, pi))
    return {mt[2] == "+" ? RepLabel::Kind::pi_plus : RepLabel::Kind::pi_minus, std::stol(mt[1])};
  throw RepresentationError("unknown representation label '" + text + "'");
}

Representation labeled_representation(AlgebraTag group, const RepLabel& label, const FieldOptions& opts) {
  bool su = group == AlgebraTag::su11;
  switch (label.kind) {
    case RepLabel::Kind::trivial:
      return su ? make_trivial_su11(1, 0) : make_weight_zero_s11(WeightZeroKind::trivial, 1, 0);
    case RepLabel::Kind::adjoint:
      return su ? make_adjoint_su11() : make_weight_zero_s11(WeightZeroKind::W);
    case RepLabel::Kind::V:
      if (su) break;
      return make_V_m(label.m, opts);
    case RepLabel::Kind::pi_plus:
    case RepLabel::Kind::pi_minus:
      if (!su) break;
      return make_pi_m(label.m, label.kind == RepLabel::Kind::pi_plus ? PiSign::plus : PiSign::minus, opts);
  }
  throw RepresentationError("label " + label.to_string() + " does not name a " + algebra_name(group) +
                            " representation");
}

// ---------------------------------------------------------------- expansion

namespace {

std::vector<unsigned> monomial_basis(AlgebraTag group) {
  if (group == AlgebraTag::s11) return {0, kTheta};
  return {0, kTheta, kEta, kTheta | kEta};
}

std::vector<CoefficientKey> spanning_entries(AlgebraTag group, long m) {
  using K = RepLabel::Kind;
  if (m == 0) {
    if (group == AlgebraTag::s11) return {{RepLabel{K::trivial, 0}, 0, 0}, {RepLabel{K::adjoint, 0}, 0, 1}};
    return {{RepLabel{K::trivial, 0}, 0, 0}, {RepLabel{K::adjoint, 0}, 0, 1}, {RepLabel{K::adjoint, 0}, 0, 2}};
  }
  if (group == AlgebraTag::s11) return {{RepLabel{K::V, m}, 0, 0}, {RepLabel{K::V, m}, 0, 1}};
  RepLabel p{K::pi_plus, m};
  return {{p, 0, 0}, {p, 0, 1}, {p, 1, 0}, {p, 1, 1}};
}

Section entry_section(AlgebraTag group, const CoefficientKey& key, const FieldOptions& opts) {
  const auto& [label, i, j] = key;
  auto coeffs = matrix_coefficients(labeled_representation(group, label, opts));
  auto it = coeffs.find({i, j});
  if (it == coeffs.end()) throw RepresentationError("entry out of range for " + label.to_string());
  return it->second;
}

}  // namespace

ExpansionResult expand(const Section& f, const FieldOptions& opts) {
  ExpansionResult result{f.group(), {}, Section(f.group())};
  std::map<long, std::map<unsigned, Scalar>> by_weight;
  for (const auto& [k, c] : f.terms()) by_weight[k.first][k.second] = c;
  auto monos = monomial_basis(f.group());
  std::size_t k = monos.size();

  for (const auto& [m, comp] : by_weight) {
    auto keys = spanning_entries(f.group(), m);
    std::vector<std::vector<Scalar>> cols;
    for (const auto& key : keys) {
      Section s = entry_section(f.group(), key, opts);
      std::vector<Scalar> col;
      for (unsigned mono : monos) col.push_back(s.coefficient(m, mono));
      cols.push_back(col);
    }
    std::size_t spanning = cols.size();
    auto matrix_of = [&](const std::vector<std::vector<Scalar>>& cs) {
      Matrix a(k, cs.size());
      for (std::size_t j = 0; j < cs.size(); ++j) a.set_col(j, cs[j]);
      return a;
    };
    if (rank(matrix_of(cols)) != spanning) throw RepresentationError("matrix coefficients are dependent");
    // Complete with standard monomials, first come first served.
    std::vector<unsigned> extra;
    for (std::size_t r = 0; r < k && cols.size() < k; ++r) {
      std::vector<Scalar> e(k, Scalar(0));
      e[r] = Scalar(1);
      cols.push_back(e);
      if (rank(matrix_of(cols)) == cols.size())
        extra.push_back(monos[r]);
      else
        cols.pop_back();
    }
    Matrix rhs(k, 1);
    for (std::size_t r = 0; r < k; ++r) {
      auto it = comp.find(monos[r]);
      if (it != comp.end()) rhs(r, 0) = it->second;
    }
    Matrix x = inverse(matrix_of(cols)) * rhs;
    for (std::size_t j = 0; j < spanning; ++j)
      if (!x(j, 0).is_zero()) result.coefficients.emplace(keys[j], x(j, 0));
    for (std::size_t j = 0; j < extra.size(); ++j) result.residual.add(m, extra[j], x(spanning + j, 0));
  }
  return result;
}

Section reconstruct(AlgebraTag group, const Coefficients& coefficients, const FieldOptions& opts) {
  Section out(group);
  for (const auto& [key, c] : coefficients) out += entry_section(group, key, opts) * c;
  return out;
}

}  // namespace spw
