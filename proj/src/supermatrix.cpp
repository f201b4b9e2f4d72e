#include "spw/supermatrix.hpp"

#include <sstream>

namespace spw {

SuperMatrix::SuperMatrix(Algebra alg, std::size_t pdim, std::size_t qdim)
    : alg_(std::move(alg)), pdim_(pdim), qdim_(qdim), entries_((pdim + qdim) * (pdim + qdim), GrassmannElement(alg_)) {}

SuperMatrix::SuperMatrix(std::size_t pdim, std::size_t qdim, std::vector<GrassmannElement> entries)
    : pdim_(pdim), qdim_(qdim), entries_(std::move(entries)) {
  if (entries_.size() != size() * size()) throw LinalgError("supermatrix entry count mismatch");
  if (entries_.empty()) throw LinalgError("empty supermatrix needs an explicit algebra");
  alg_ = entries_.front().algebra();
  for (const auto& e : entries_)
    if (e.algebra() != alg_ && !e.algebra()->same_structure(*alg_))
      throw AlgebraError("supermatrix entries from different algebras");
}

SuperMatrix SuperMatrix::identity(const Algebra& alg, std::size_t pdim, std::size_t qdim) {
  SuperMatrix m(alg, pdim, qdim);
  for (std::size_t i = 0; i < m.size(); ++i) m(i, i) = GrassmannElement(alg, Scalar(1));
  return m;
}

SuperMatrix SuperMatrix::from_numeric(const Algebra& alg, std::size_t pdim, std::size_t qdim, const Matrix& n) {
  SuperMatrix m(alg, pdim, qdim);
  if (n.rows() != m.size() || n.cols() != m.size()) throw LinalgError("numeric matrix has wrong shape");
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m(i, j) = GrassmannElement(alg, n(i, j));
  return m;
}

bool SuperMatrix::has_parity(int p) const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      const auto& e = (*this)(i, j);
      if (e.is_zero()) continue;
      int block = (row_is_odd(i) != row_is_odd(j)) ? 1 : 0;
      Parity want = ((block + p) % 2) ? Parity::odd : Parity::even;
      if (e.parity() != want) return false;
    }
  }
  return true;
}

bool SuperMatrix::is_even() const { return has_parity(0); }
bool SuperMatrix::is_odd() const { return has_parity(1); }

Parity SuperMatrix::parity() const {
  if (is_even()) return Parity::even;
  if (is_odd()) return Parity::odd;
  return Parity::inhomogeneous;
}

bool SuperMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::string SuperMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < size(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < size(); ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

void SuperMatrix::check_same(const SuperMatrix& o) const {
  if (pdim_ != o.pdim_ || qdim_ != o.qdim_) throw LinalgError("supermatrix dimension mismatch");
}

SuperMatrix SuperMatrix::operator-() const {
  SuperMatrix r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
  check_same(o);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
  check_same(o);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

SuperMatrix& SuperMatrix::operator*=(const GrassmannElement& c) {
  for (auto& e : entries_) e = c * e;
  return *this;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
  a.check_same(b);
  SuperMatrix r(a.alg_, a.pdim_, a.qdim_);
  std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  return r;
}

SuperMatrix operator*(const GrassmannElement& c, const SuperMatrix& x) {
  SuperMatrix r = x;
  r *= c;
  return r;
}

SuperMatrix operator*(SuperMatrix x, const Scalar& c) {
  for (auto& e : x.entries_) e *= c;
  return x;
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.pdim_ != b.pdim_ || a.qdim_ != b.qdim_) return false;
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    if (!(a.entries_[k] == b.entries_[k])) return false;
  return true;
}

SuperMatrix supercommutator(const SuperMatrix& x, const SuperMatrix& y) {
  Parity px = x.parity();
  Parity py = y.parity();
  if (px == Parity::inhomogeneous || py == Parity::inhomogeneous)
    throw LinalgError("supercommutator of an inhomogeneous supermatrix");
  bool both_odd = px == Parity::odd && py == Parity::odd;
  return both_odd ? x * y + y * x : x * y - y * x;
}

GrassmannElement berezinian(const SuperMatrix& m) {
  if (m.pdim() != 1 || m.qdim() != 1) throw LinalgError("berezinian is implemented for 1|1 matrices only");
  if (!m.is_even()) throw LinalgError("berezinian of a non-even supermatrix");
  const auto& a = m(0, 0);
  const auto& beta = m(0, 1);
  const auto& gamma = m(1, 0);
  GrassmannElement dinv = m(1, 1).inverse();
  return dinv * (a - beta * dinv * gamma);
}

SuperMatrix inverse_1x1(const SuperMatrix& m) {
  if (m.pdim() != 1 || m.qdim() != 1) throw LinalgError("inverse_1x1 needs a 1|1 matrix");
  if (!m.is_even()) throw LinalgError("inverse of a non-even supermatrix");
  const auto& a = m(0, 0);
  const auto& beta = m(0, 1);
  const auto& gamma = m(1, 0);
  const auto& d = m(1, 1);
  GrassmannElement ainv = a.inverse();
  GrassmannElement dinv = d.inverse();
  GrassmannElement s_a = (a - beta * dinv * gamma).inverse();
  GrassmannElement s_d = (d - gamma * ainv * beta).inverse();
  SuperMatrix r(m.algebra(), 1, 1);
  r(0, 0) = s_a;
  r(0, 1) = -(ainv * beta * s_d);
  r(1, 0) = -(dinv * gamma * s_a);
  r(1, 1) = s_d;
  return r;
}

}  // namespace spw
