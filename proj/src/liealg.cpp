#include "spw/liealg.hpp"

#include <algorithm>
#include <set>

namespace spw {

const char* algebra_name(AlgebraTag tag) { return tag == AlgebraTag::s11 ? "s11" : "su11"; }

AlgebraTag parse_algebra(const std::string& name) {
  if (name == "s11") return AlgebraTag::s11;
  if (name == "su11") return AlgebraTag::su11;
  throw RepresentationError("unknown algebra '" + name + "'");
}

const std::vector<std::string>& odd_generator_names(AlgebraTag tag) {
  static const std::vector<std::string> s11{"Z"};
  static const std::vector<std::string> su11{"U", "S"};
  return tag == AlgebraTag::s11 ? s11 : su11;
}

// ---------------------------------------------------------------- Representation

std::pair<std::size_t, std::size_t> Representation::superdim() const {
  std::size_t p = 0;
  for (const auto& b : basis) p += b.parity == 0;
  return {p, basis.size() - p};
}

const Matrix& Representation::gen(const std::string& name) const {
  auto it = generators.find(name);
  if (it == generators.end()) throw RepresentationError("missing generator " + name);
  return it->second;
}

Matrix Representation::rho_C() const {
  Matrix c(dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k) c(k, k) = Scalar::i() * Scalar(basis[k].weight);
  return c;
}

ScalarKind Representation::scalar_kind() const {
  for (const auto& [name, m] : generators)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_exact()) return ScalarKind::floating;
  return ScalarKind::exact;
}

std::vector<std::size_t> Representation::indices(long weight, int parity) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < dim(); ++k)
    if (basis[k].weight == weight && basis[k].parity == parity) out.push_back(k);
  return out;
}

std::vector<std::size_t> Representation::indices(long weight) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < dim(); ++k)
    if (basis[k].weight == weight) out.push_back(k);
  return out;
}

std::vector<long> Representation::weights() const {
  std::set<long> w;
  for (const auto& b : basis) w.insert(b.weight);
  return {w.begin(), w.end()};
}

// ---------------------------------------------------------------- structure constants

namespace {

using Vec = std::vector<GaussianRational>;

Vec unit(std::size_t n, std::size_t k) {
  Vec v(n);
  v[k] = GaussianRational(1);
  return v;
}

Vec bracket(const LieSuperAlgebra& alg, const Vec& x, const Vec& y) {
  std::size_t n = alg.names.size();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Vec& c = alg.brackets.at({static_cast<int>(i), static_cast<int>(j)});
      GaussianRational f = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += f * c[k];
    }
  }
  return out;
}

Vec add(Vec a, const Vec& b, const GaussianRational& f = GaussianRational(1)) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += f * b[k];
  return a;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

std::vector<std::string> check_structure_constants(const LieSuperAlgebra& alg) {
  std::vector<std::string> bad;
  std::size_t n = alg.names.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!alg.brackets.contains({static_cast<int>(i), static_cast<int>(j)}))
        bad.push_back("missing bracket [" + alg.names[i] + "," + alg.names[j] + "]");
  if (!bad.empty()) return bad;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      GaussianRational sign((alg.parities[i] && alg.parities[j]) ? 1 : -1);
      Vec lhs = bracket(alg, unit(n, i), unit(n, j));
      Vec rhs = bracket(alg, unit(n, j), unit(n, i));
      if (!is_zero(add(lhs, rhs, -sign)))
        bad.push_back("super-antisymmetry fails for [" + alg.names[i] + "," + alg.names[j] + "]");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = unit(n, i);
        Vec y = unit(n, j);
        Vec z = unit(n, k);
        GaussianRational sign((alg.parities[i] && alg.parities[j]) ? -1 : 1);
        Vec lhs = bracket(alg, x, bracket(alg, y, z));
        Vec rhs = add(bracket(alg, bracket(alg, x, y), z), bracket(alg, y, bracket(alg, x, z)), sign);
        if (!is_zero(add(lhs, rhs, GaussianRational(-1))))
          bad.push_back("graded Jacobi fails for (" + alg.names[i] + "," + alg.names[j] + "," + alg.names[k] + ")");
      }
    }
  }
  return bad;
}

std::vector<std::string> check_defining_matrices(const LieSuperAlgebra& alg) {
  std::vector<std::string> bad;
  if (alg.defining.empty()) return bad;
  std::size_t n = alg.names.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SuperMatrix& x = alg.defining.at(alg.names[i]);
      const SuperMatrix& y = alg.defining.at(alg.names[j]);
      SuperMatrix expected(x.algebra(), x.pdim(), x.qdim());
      const Vec& c = alg.brackets.at({static_cast<int>(i), static_cast<int>(j)});
      for (std::size_t k = 0; k < n; ++k)
        if (!c[k].is_zero()) expected += alg.defining.at(alg.names[k]) * Scalar(c[k]);
      bool ok = false;
      try {
        ok = supercommutator(x, y) == expected;
      } catch (const LinalgError&) {
        ok = false;
      }
      if (!ok) bad.push_back("defining matrices violate [" + alg.names[i] + "," + alg.names[j] + "]");
    }
  }
  return bad;
}

LieSuperAlgebra builtin_algebra(AlgebraTag tag) {
  LieSuperAlgebra alg{tag, {}, {}, {}, {}};
  GaussianRational minus_two(-2);
  if (tag == AlgebraTag::s11) {
    alg.names = {"C", "Z"};
    alg.parities = {0, 1};
  } else {
    alg.names = {"C", "U", "S"};
    alg.parities = {0, 1, 1};
  }
  std::size_t n = alg.names.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) alg.brackets[{static_cast<int>(i), static_cast<int>(j)}] = Vec(n);
  // [Z,Z] = -2C; [U,U] = [S,S] = -2C; everything else vanishes.
  for (std::size_t k = 1; k < n; ++k) alg.brackets[{static_cast<int>(k), static_cast<int>(k)}][0] = minus_two;
  if (tag == AlgebraTag::su11) {
    const Algebra& sc = scalar_algebra();
    Scalar i = Scalar::i();
    alg.defining.emplace("C", SuperMatrix::from_numeric(sc, 1, 1, Matrix{{i, 0}, {0, i}}));
    alg.defining.emplace("U", SuperMatrix::from_numeric(sc, 1, 1, Matrix{{0, 1}, {-i, 0}}));
    alg.defining.emplace("S", SuperMatrix::from_numeric(sc, 1, 1, Matrix{{0, i}, {-1, 0}}));
  }
  auto bad = check_structure_constants(alg);
  auto bad_def = check_defining_matrices(alg);
  bad.insert(bad.end(), bad_def.begin(), bad_def.end());
  if (!bad.empty()) throw RepresentationError("builtin algebra is inconsistent: " + bad.front());
  return alg;
}

// ---------------------------------------------------------------- validation

namespace {

/// Weights of rows where `m` has a nonzero entry.
std::set<long> offending_weights(const Representation& rep, const Matrix& m) {
  std::set<long> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out.insert(rep.basis[i].weight);
  return out;
}

void report(std::vector<std::string>& bad, const Representation& rep, const Matrix& residual,
            const std::string& relation) {
  for (long w : offending_weights(rep, residual)) bad.push_back(relation + " at weight m=" + std::to_string(w));
}

}  // namespace

std::vector<std::string> validate_representation(const Representation& rep) {
  std::vector<std::string> bad;
  std::size_t n = rep.dim();
  for (const auto& b : rep.basis)
    if (b.parity != 0 && b.parity != 1) bad.push_back("basis parity must be 0 or 1");
  for (const auto& name : odd_generator_names(rep.algebra)) {
    auto it = rep.generators.find(name);
    if (it == rep.generators.end()) {
      bad.push_back("missing generator " + name);
      continue;
    }
    if (it->second.rows() != n || it->second.cols() != n) bad.push_back("rho(" + name + ") has the wrong shape");
  }
  for (const auto& [name, m] : rep.generators) {
    const auto& allowed = odd_generator_names(rep.algebra);
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
      bad.push_back("unexpected generator " + name + " for " + algebra_name(rep.algebra));
  }
  if (!bad.empty()) return bad;

  for (const auto& name : odd_generator_names(rep.algebra)) {
    const Matrix& x = rep.gen(name);
    bool parity_ok = true;
    bool weight_ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (x(i, j).is_zero()) continue;
        parity_ok = parity_ok && rep.basis[i].parity != rep.basis[j].parity;
        weight_ok = weight_ok && rep.basis[i].weight == rep.basis[j].weight;
      }
    if (!parity_ok) bad.push_back("rho(" + name + ") is not odd");
    if (!weight_ok) bad.push_back("rho(" + name + ") does not commute with rho(C)");
  }
  Matrix c = rep.rho_C();
  if (rep.algebra == AlgebraTag::s11) {
    const Matrix& z = rep.gen("Z");
    report(bad, rep, z * z + c, "rho(Z)^2 != -rho(C)");
  } else {
    const Matrix& u = rep.gen("U");
    const Matrix& s = rep.gen("S");
    Matrix us = u * s;
    report(bad, rep, u * u + c, "rho(U)^2 != -rho(C)");
    report(bad, rep, s * s + c, "rho(S)^2 != -rho(C)");
    report(bad, rep, us + s * u, "rho(U)rho(S) + rho(S)rho(U) != 0");
    report(bad, rep, us * us + c * c, "(rho(U)rho(S))^2 != -rho(C)^2");
  }
  return bad;
}

std::vector<Matrix> find_even_intertwiners(const Representation& rep1, const Representation& rep2) {
  if (rep1.algebra != rep2.algebra) throw RepresentationError("intertwiners between different algebras");
  if (rep1.scalar_kind() != rep2.scalar_kind())
    throw RepresentationError("field mismatch: exact and floating representations");
  std::size_t n1 = rep1.dim();
  std::size_t n2 = rep2.dim();
  // Unknown F(a, b): rep2 index a, rep1 index b, same parity and weight.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  for (std::size_t a = 0; a < n2; ++a)
    for (std::size_t b = 0; b < n1; ++b)
      if (rep2.basis[a] == rep1.basis[b]) {
        slot[{a, b}] = unknowns.size();
        unknowns.emplace_back(a, b);
      }
  const auto& names = odd_generator_names(rep1.algebra);
  Matrix system(names.size() * n2 * n1, unknowns.size());
  std::size_t row = 0;
  for (const auto& name : names) {
    const Matrix& x1 = rep1.gen(name);
    const Matrix& x2 = rep2.gen(name);
    for (std::size_t i = 0; i < n2; ++i) {
      for (std::size_t j = 0; j < n1; ++j, ++row) {
        // (F x1)_{ij} - (x2 F)_{ij}
        for (std::size_t b = 0; b < n1; ++b) {
          auto it = slot.find({i, b});
          if (it != slot.end() && !x1(b, j).is_zero()) system(row, it->second) += x1(b, j);
        }
        for (std::size_t a = 0; a < n2; ++a) {
          auto it = slot.find({a, j});
          if (it != slot.end() && !x2(i, a).is_zero()) system(row, it->second) -= x2(i, a);
        }
      }
    }
  }
  Matrix kernel = nullspace(system);
  std::vector<Matrix> basis;
  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    Matrix f(n2, n1);
    for (std::size_t u = 0; u < unknowns.size(); ++u) f(unknowns[u].first, unknowns[u].second) = kernel(u, k);
    basis.push_back(std::move(f));
  }
  return basis;
}

}  // namespace spw
