#include "spw/reps.hpp"

#include <algorithm>

namespace spw {

namespace {

using Vecs = std::vector<std::vector<Scalar>>;

Vecs two(std::vector<Scalar> a, std::vector<Scalar> b) {
  Vecs v;
  v.push_back(std::move(a));
  v.push_back(std::move(b));
  return v;
}

Matrix swap_matrix(const Scalar& s) { return Matrix{{0, s}, {s, 0}}; }

Representation single_weight(AlgebraTag alg, long m, std::vector<int> parities) {
  Representation r;
  r.algebra = alg;
  for (int p : parities) r.basis.push_back({p, m});
  return r;
}

void require_nonzero(long m) {
  if (m == 0) throw RepresentationError("degenerate weight: m must be nonzero");
}

FieldOptions options_for(const Representation& rep, const FieldOptions& opts) {
  FieldOptions o = opts;
  o.kind = rep.scalar_kind();
  return o;
}

std::vector<Scalar> unit_vector(std::size_t n, std::size_t k) {
  std::vector<Scalar> v(n, Scalar(0));
  v[k] = Scalar(1);
  return v;
}

std::vector<Scalar> embed(std::size_t n, const std::vector<std::size_t>& idx, const std::vector<Scalar>& local) {
  std::vector<Scalar> v(n, Scalar(0));
  for (std::size_t k = 0; k < idx.size(); ++k) v[idx[k]] = local[k];
  return v;
}

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v) { return (m * Matrix::column(v)).col(0); }

std::vector<Scalar> scaled(std::vector<Scalar> v, const Scalar& c) {
  for (auto& x : v) x *= c;
  return v;
}

bool equal(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k] == b[k])) return false;
  return true;
}

void throw_if_invalid(const Representation& rep) {
  auto bad = validate_representation(rep);
  if (!bad.empty()) throw RepresentationError("validation failed: " + bad.front());
}

// Accumulates blocks, columns and models, then assembles the report.
struct Builder {
  const Representation& rep;
  FieldOptions opts;
  DecompositionReport report;
  std::vector<std::vector<Scalar>> columns;
  std::vector<Representation> models;

  void add(BlockLabel label, std::vector<std::vector<Scalar>> cols, Representation model) {
    DecompositionBlock block{label, {}};
    for (auto& c : cols) {
      block.columns.push_back(columns.size());
      columns.push_back(std::move(c));
    }
    report.blocks.push_back(std::move(block));
    models.push_back(std::move(model));
  }

  DecompositionReport finish() {
    report.algebra = rep.algebra;
    std::size_t n = rep.dim();
    if (columns.size() != n)
      throw RepresentationError("decomposition produced " + std::to_string(columns.size()) + " vectors for dimension " +
                                std::to_string(n));
    report.basis_change = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) report.basis_change.set_col(j, columns[j]);
    if (models.empty()) {
      report.model.algebra = rep.algebra;
      for (const auto& name : odd_generator_names(rep.algebra)) report.model.generators[name] = Matrix();
    } else {
      report.model = direct_sum(models);
    }
    return std::move(report);
  }
};

// Ad / PiAd pairs and the trivial complement of the weight-zero part.
void weight_zero_blocks(Builder& b, const std::vector<std::size_t>& idx) {
  const Representation& rep = b.rep;
  std::size_t n = rep.dim();
  const Matrix& zfull = rep.gen("Z");
  Matrix z = zfull.submatrix(idx, idx);
  if (!(z * z).is_zero()) throw RepresentationError("rho(Z)^2 != 0 on the weight-zero part");

  std::vector<std::vector<Scalar>> image_by_parity[2];
  for (std::size_t j : row_reduce(z).pivots) {
    std::size_t src = idx[j];
    auto w = unit_vector(n, src);
    auto zw = mat_vec(zfull, w);
    if (rep.basis[src].parity == 1) {
      b.add({BlockLabel::Kind::Ad}, two(zw, w), make_weight_zero_s11(WeightZeroKind::W));
      ++b.report.ad;
      image_by_parity[0].push_back(zw);
    } else {
      b.add({BlockLabel::Kind::PiAd}, two(w, zw), make_weight_zero_s11(WeightZeroKind::PiW));
      ++b.report.pi_ad;
      image_by_parity[1].push_back(zw);
    }
  }

  std::vector<std::vector<Scalar>> trivial[2];
  for (int p = 0; p < 2; ++p) {
    std::vector<std::size_t> local;
    std::vector<std::size_t> global;
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (rep.basis[idx[k]].parity == p) {
        local.push_back(k);
        global.push_back(idx[k]);
      }
    if (global.empty()) continue;
    std::vector<std::size_t> all(idx.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    Matrix ker = nullspace(z.submatrix(all, local));
    std::vector<std::vector<Scalar>> span = image_by_parity[p];
    auto rank_of = [&](const std::vector<std::vector<Scalar>>& vs) {
      if (vs.empty()) return std::size_t{0};
      Matrix m(n, vs.size());
      for (std::size_t j = 0; j < vs.size(); ++j) m.set_col(j, vs[j]);
      return rank(m);
    };
    std::size_t r = rank_of(span);
    for (std::size_t j = 0; j < ker.cols(); ++j) {
      auto v = embed(n, global, ker.col(j));
      span.push_back(v);
      std::size_t r2 = rank_of(span);
      if (r2 > r) {
        r = r2;
        trivial[p].push_back(v);
      } else {
        span.pop_back();
      }
    }
  }
  std::size_t p = trivial[0].size();
  std::size_t q = trivial[1].size();
  b.report.trivial_even += p;
  b.report.trivial_odd += q;
  if (p + q == 0) return;
  std::vector<std::vector<Scalar>> cols = trivial[0];
  cols.insert(cols.end(), trivial[1].begin(), trivial[1].end());
  b.add({BlockLabel::Kind::trivial, 0, p, q}, std::move(cols), make_weight_zero_s11(WeightZeroKind::trivial, p, q));
}

void require_weight_zero_only(const Representation& rep) {
  for (const auto& v : rep.basis)
    if (v.weight != 0) throw RepresentationError("nonzero weight present");
}

}  // namespace

// ---------------------------------------------------------------- constructors

Representation make_V_m(long m, const FieldOptions& opts) {
  require_nonzero(m);
  Representation r = single_weight(AlgebraTag::s11, m, {0, 1});
  r.generators["Z"] = swap_matrix(sqrt_neg_im(m, opts));
  return r;
}

Representation make_weight_zero_s11(WeightZeroKind kind, std::size_t p, std::size_t q) {
  Representation r;
  r.algebra = AlgebraTag::s11;
  switch (kind) {
    case WeightZeroKind::W:
      r = single_weight(AlgebraTag::s11, 0, {0, 1});
      r.generators["Z"] = Matrix{{0, 1}, {0, 0}};
      break;
    case WeightZeroKind::PiW:
      r = single_weight(AlgebraTag::s11, 0, {0, 1});
      r.generators["Z"] = Matrix{{0, 0}, {1, 0}};
      break;
    case WeightZeroKind::trivial:
      for (std::size_t k = 0; k < p; ++k) r.basis.push_back({0, 0});
      for (std::size_t k = 0; k < q; ++k) r.basis.push_back({1, 0});
      r.generators["Z"] = Matrix(p + q, p + q);
      break;
  }
  return r;
}

Representation make_pi_m(long m, PiSign sign, const FieldOptions& opts) {
  require_nonzero(m);
  Scalar s = sqrt_neg_im(m, opts);
  Scalar c = Scalar(m) / s;
  if (sign == PiSign::minus) c = -c;
  Representation r = single_weight(AlgebraTag::su11, m, {0, 1});
  r.generators["U"] = swap_matrix(s);
  r.generators["S"] = Matrix{{0, -c}, {c, 0}};
  return r;
}

Representation make_adjoint_su11() {
  Representation r = single_weight(AlgebraTag::su11, 0, {0, 1, 1});
  r.generators["U"] = Matrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}};
  r.generators["S"] = Matrix{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}};
  return r;
}

Representation make_trivial_su11(std::size_t p, std::size_t q) {
  Representation r;
  r.algebra = AlgebraTag::su11;
  for (std::size_t k = 0; k < p; ++k) r.basis.push_back({0, 0});
  for (std::size_t k = 0; k < q; ++k) r.basis.push_back({1, 0});
  r.generators["U"] = Matrix(p + q, p + q);
  r.generators["S"] = Matrix(p + q, p + q);
  return r;
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw RepresentationError("direct sum of no representations");
  Representation r;
  r.algebra = parts.front().algebra;
  std::size_t n = 0;
  for (const auto& p : parts) {
    if (p.algebra != r.algebra) throw RepresentationError("direct sum mixes algebras");
    n += p.dim();
  }
  for (const auto& name : odd_generator_names(r.algebra)) r.generators[name] = Matrix(n, n);
  std::size_t off = 0;
  for (const auto& p : parts) {
    r.basis.insert(r.basis.end(), p.basis.begin(), p.basis.end());
    for (const auto& name : odd_generator_names(r.algebra)) {
      const Matrix& x = p.gen(name);
      Matrix& y = r.generators[name];
      for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = 0; j < p.dim(); ++j) y(off + i, off + j) = x(i, j);
    }
    off += p.dim();
  }
  return r;
}

Representation change_basis(const Representation& rep, const Matrix& q) {
  if (q.rows() != rep.dim() || q.cols() != rep.dim()) throw RepresentationError("basis change has wrong size");
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      if (!q(i, j).is_zero() && !(rep.basis[i] == rep.basis[j]))
        throw RepresentationError("basis change mixes parities or weights");
  Matrix qinv = inverse(q);
  Representation r = rep;
  for (auto& [name, x] : r.generators) x = qinv * x * q;
  return r;
}

Representation permute_basis(const Representation& rep, const std::vector<std::size_t>& perm) {
  std::size_t n = rep.dim();
  if (perm.size() != n) throw RepresentationError("permutation has wrong size");
  std::vector<bool> seen(n, false);
  for (std::size_t k : perm) {
    if (k >= n || seen[k]) throw RepresentationError("not a permutation");
    seen[k] = true;
  }
  Representation r = rep;
  for (std::size_t k = 0; k < n; ++k) r.basis[k] = rep.basis[perm[k]];
  for (auto& [name, x] : r.generators) x = rep.gen(name).submatrix(perm, perm);
  return r;
}

// ---------------------------------------------------------------- labels

std::string BlockLabel::to_string() const {
  auto pq = [&] { return "(" + std::to_string(p) + "|" + std::to_string(q) + ")"; };
  switch (kind) {
    case Kind::V: return "V(" + std::to_string(m) + ")";
    case Kind::trivial: return "trivial" + pq();
    case Kind::Ad: return "Ad";
    case Kind::PiAd: return "PiAd";
    case Kind::pi_plus: return "pi(" + std::to_string(m) + ",+)";
    case Kind::pi_minus: return "pi(" + std::to_string(m) + ",-)";
    case Kind::weight_zero: return "weight0" + pq();
  }
  return "?";
}

std::vector<std::string> DecompositionReport::labels() const {
  std::vector<std::string> out;
  for (const auto& b : blocks) out.push_back(b.label.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- decomposition

DecompositionReport decompose_weight_zero_s11(const Representation& rep, const FieldOptions& opts) {
  if (rep.algebra != AlgebraTag::s11) throw RepresentationError("expected an s11 representation");
  require_weight_zero_only(rep);
  Builder b{rep, options_for(rep, opts), {}, {}, {}};
  std::vector<std::size_t> all(rep.dim());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  weight_zero_blocks(b, all);
  return b.finish();
}

DecompositionReport decompose_s11(const Representation& rep, const FieldOptions& opts) {
  if (rep.algebra != AlgebraTag::s11) throw RepresentationError("expected an s11 representation");
  throw_if_invalid(rep);
  Builder b{rep, options_for(rep, opts), {}, {}, {}};
  std::size_t n = rep.dim();
  const Matrix& z = rep.gen("Z");
  for (long m : rep.weights()) {
    if (m == 0) continue;
    auto even = rep.indices(m, 0);
    if (even.size() != rep.indices(m, 1).size())
      throw RepresentationError("weight " + std::to_string(m) + " is not balanced between parities");
    Scalar sinv = sqrt_neg_im(m, b.opts).inverse();
    for (std::size_t k : even) {
      auto f = unit_vector(n, k);
      auto phi = scaled(mat_vec(z, f), sinv);
      b.add({BlockLabel::Kind::V, m}, two(f, phi), make_V_m(m, b.opts));
      ++b.report.v_counts[m];
    }
  }
  auto zero = rep.indices(0);
  if (!zero.empty()) weight_zero_blocks(b, zero);
  return b.finish();
}

DecompositionReport decompose_su11(const Representation& rep, const FieldOptions& opts) {
  if (rep.algebra != AlgebraTag::su11) throw RepresentationError("expected an su11 representation");
  throw_if_invalid(rep);
  Builder b{rep, options_for(rep, opts), {}, {}, {}};
  std::size_t n = rep.dim();
  const Matrix& u = rep.gen("U");
  const Matrix& s = rep.gen("S");
  Matrix us = u * s;
  for (long m : rep.weights()) {
    if (m == 0) continue;
    auto even = rep.indices(m, 0);
    if (even.size() != rep.indices(m, 1).size())
      throw RepresentationError("weight " + std::to_string(m) + " is not balanced between parities");
    Matrix a = us.submatrix(even, even);
    Matrix id = Matrix::identity(even.size());
    Matrix kp = nullspace(a - id * Scalar(m));
    Matrix km = nullspace(a + id * Scalar(m));
    if (kp.cols() + km.cols() != even.size())
      throw RepresentationError("eigenvalue of US outside {+m, -m} at weight " + std::to_string(m));
    Scalar sinv = sqrt_neg_im(m, b.opts).inverse();
    for (long lambda : {m, -m}) {
      const Matrix& k = lambda == m ? kp : km;
      for (std::size_t j = 0; j < k.cols(); ++j) {
        auto f = embed(n, even, k.col(j));
        auto uf = mat_vec(u, f);
        auto sf = mat_vec(s, f);
        if (!equal(sf, scaled(uf, Scalar::i() * Scalar(lambda) / Scalar(m))))
          throw RepresentationError("S f != (i lambda/m) U f at weight " + std::to_string(m));
        bool plus = lambda == m;
        PiSign sign = plus ? PiSign::plus : PiSign::minus;
        b.add({plus ? BlockLabel::Kind::pi_plus : BlockLabel::Kind::pi_minus, m}, two(f, scaled(uf, sinv)),
              make_pi_m(m, sign, b.opts));
        ++(plus ? b.report.pi_plus : b.report.pi_minus)[m];
      }
    }
  }
  auto zero = rep.indices(0);
  if (!zero.empty()) {
    Representation w0;
    w0.algebra = AlgebraTag::su11;
    for (std::size_t k : zero) w0.basis.push_back(rep.basis[k]);
    for (const auto& name : odd_generator_names(AlgebraTag::su11)) w0.generators[name] = rep.gen(name).submatrix(zero, zero);
    auto [p, q] = w0.superdim();
    std::vector<std::vector<Scalar>> cols;
    for (std::size_t k : zero) cols.push_back(unit_vector(n, k));
    b.add({BlockLabel::Kind::weight_zero, 0, p, q}, std::move(cols), w0);
    b.report.weight_zero = w0;
  }
  return b.finish();
}

DecompositionReport decompose(const Representation& rep, const FieldOptions& opts) {
  return rep.algebra == AlgebraTag::s11 ? decompose_s11(rep, opts) : decompose_su11(rep, opts);
}

std::vector<std::string> check_report(const Representation& rep, const DecompositionReport& report) {
  std::vector<std::string> bad;
  const Matrix& p = report.basis_change;
  if (p.rows() != rep.dim() || p.cols() != rep.dim() || report.model.dim() != rep.dim()) {
    bad.push_back("basis change has wrong size");
    return bad;
  }
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (!p(i, j).is_zero() && !(rep.basis[i] == report.model.basis[j]))
        bad.push_back("column " + std::to_string(j) + " is not homogeneous of the model's parity and weight");
  if (!bad.empty()) return bad;
  if (rep.dim() == 0) return bad;
  Matrix pinv;
  try {
    pinv = inverse(p);
  } catch (const LinalgError&) {
    bad.push_back("basis change is singular");
    return bad;
  }
  for (const auto& name : odd_generator_names(rep.algebra))
    if (!(pinv * rep.gen(name) * p == report.model.gen(name)))
      bad.push_back("conjugated rho(" + name + ") differs from the model");
  return bad;
}

}  // namespace spw
