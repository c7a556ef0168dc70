#pragma once

#include <optional>
#include <vector>

#include "ribe/common.hpp"
#include "ribe/rng.hpp"

namespace ribe {

struct DimensionError : Error {
  using Error::Error;
};

// Vector over Z_q. Used for basis rows and for composing key/ciphertext
// exponents before lifting them into a group.
template <class S>
struct ExponentVector {
  std::vector<S> c;

  ExponentVector() = default;
  explicit ExponentVector(std::vector<S> coords) : c(std::move(coords)) {}

  size_t dim() const { return c.size(); }

  ExponentVector operator+(const ExponentVector& o) const {
    check_dim(o);
    ExponentVector r;
    r.c.reserve(dim());
    for (size_t i = 0; i < dim(); i++) r.c.push_back(c[i] + o.c[i]);
    return r;
  }

  ExponentVector operator-(const ExponentVector& o) const {
    check_dim(o);
    ExponentVector r;
    r.c.reserve(dim());
    for (size_t i = 0; i < dim(); i++) r.c.push_back(c[i] - o.c[i]);
    return r;
  }

  ExponentVector scale(const S& s) const {
    ExponentVector r;
    r.c.reserve(dim());
    for (const auto& x : c) r.c.push_back(x * s);
    return r;
  }

  S dot(const ExponentVector& o) const {
    check_dim(o);
    S acc = c[0] * o.c[0];
    for (size_t i = 1; i < dim(); i++) acc = acc + c[i] * o.c[i];
    return acc;
  }

  void check_dim(const ExponentVector& o) const {
    if (dim() != o.dim()) throw DimensionError("exponent vector dimension mismatch");
  }
};

// Vector of group elements g^v. The carrier type G fixes the side, so a
// side mismatch is a compile error; dimension mismatches throw.
template <class G>
struct GroupVector {
  std::vector<G> e;

  size_t dim() const { return e.size(); }
  friend bool operator==(const GroupVector&, const GroupVector&) = default;
};

// g_1^v and g_2^v.
template <class E, class S>
GroupVector<typename E::G1> vec_exp_g1(const E& eng, const ExponentVector<S>& v) {
  GroupVector<typename E::G1> r;
  r.e.reserve(v.dim());
  for (const auto& x : v.c) r.e.push_back(eng.exp_g1(x));
  return r;
}

template <class E, class S>
GroupVector<typename E::G2> vec_exp_g2(const E& eng, const ExponentVector<S>& v) {
  GroupVector<typename E::G2> r;
  r.e.reserve(v.dim());
  for (const auto& x : v.c) r.e.push_back(eng.exp_g2(x));
  return r;
}

// Componentwise group operation: realizes g^{v+w} = g^v * g^w.
template <class E, class G>
GroupVector<G> vec_mul(const E& eng, const GroupVector<G>& a,
                       const GroupVector<G>& b) {
  if (a.dim() != b.dim()) throw DimensionError("group vector dimension mismatch");
  GroupVector<G> r;
  r.e.reserve(a.dim());
  for (size_t i = 0; i < a.dim(); i++) r.e.push_back(eng.mul(a.e[i], b.e[i]));
  return r;
}

// Componentwise scalar power: realizes g^{a v}.
template <class E, class G, class S>
GroupVector<G> vec_pow(const E& eng, const GroupVector<G>& a, const S& s) {
  GroupVector<G> r;
  r.e.reserve(a.dim());
  for (const auto& x : a.e) r.e.push_back(eng.pow(x, s));
  return r;
}

// e(g1^v, g2^w) = prod_i e(g1^{v_i}, g2^{w_i}) = e(g1,g2)^{v.w}; performs
// exactly n component pairings (the per-decryption pairing counts in the
// schemes rest on this).
template <class E>
typename E::GT vec_pair(const E& eng, const GroupVector<typename E::G1>& x,
                        const GroupVector<typename E::G2>& y) {
  if (x.dim() != y.dim()) throw DimensionError("pairing dimension mismatch");
  typename E::GT acc = eng.pair(x.e[0], y.e[0]);
  for (size_t i = 1; i < x.dim(); i++)
    acc = eng.gt_mul(acc, eng.pair(x.e[i], y.e[i]));
  return acc;
}

// Matched bases (D, D*) with d_i . d_j* = 0 for i != j and = psi otherwise.
template <class S>
struct DualBases {
  size_t dim = 0;
  std::vector<ExponentVector<S>> d;
  std::vector<ExponentVector<S>> dstar;
  S psi;
};

namespace detail {

// Gauss-Jordan over Z_q; returns nullopt for singular input.
template <class S>
std::optional<std::vector<std::vector<S>>> invert_matrix(
    std::vector<std::vector<S>> m, const S& zero, const S& one) {
  size_t n = m.size();
  std::vector<std::vector<S>> inv(n, std::vector<S>(n, zero));
  for (size_t i = 0; i < n; i++) inv[i][i] = one;
  for (size_t col = 0; col < n; col++) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) pivot++;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    S pinv = m[col][col].inverse();
    for (size_t j = 0; j < n; j++) {
      m[col][j] = m[col][j] * pinv;
      inv[col][j] = inv[col][j] * pinv;
    }
    for (size_t row = 0; row < n; row++) {
      if (row == col || m[row][col].is_zero()) continue;
      S f = m[row][col];
      for (size_t j = 0; j < n; j++) {
        m[row][j] = m[row][j] - f * m[col][j];
        inv[row][j] = inv[row][j] - f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace detail

// Dual(Z_q^n): sample a uniform invertible matrix B, psi != 0, and set
// D = rows of B, D* = rows of psi * (B^-1)^T.
template <class E>
DualBases<typename E::Scalar> sample_dual_bases(const E& eng, size_t n,
                                                HashDrbg& rng) {
  using S = typename E::Scalar;
  if (n < 1) throw Error("dual basis dimension must be >= 1");

  std::vector<std::vector<S>> b;
  std::optional<std::vector<std::vector<S>>> binv;
  for (int attempt = 0; attempt < 100 && !binv; attempt++) {
    b.assign(n, {});
    for (auto& row : b) {
      row.reserve(n);
      for (size_t j = 0; j < n; j++) row.push_back(eng.random_scalar(rng));
    }
    binv = detail::invert_matrix(b, eng.scalar_zero(), eng.scalar_one());
  }
  if (!binv) throw InternalError("no invertible matrix in 100 attempts");

  DualBases<S> out;
  out.dim = n;
  out.psi = eng.random_nonzero_scalar(rng);
  for (size_t i = 0; i < n; i++) {
    out.d.emplace_back(b[i]);
    std::vector<S> row;
    row.reserve(n);
    for (size_t j = 0; j < n; j++) row.push_back((*binv)[j][i] * out.psi);
    out.dstar.emplace_back(std::move(row));
  }
  return out;
}

}  // namespace ribe
