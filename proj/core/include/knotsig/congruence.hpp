#pragma once

#include <cstddef>
#include <vector>

#include "knotsig/matrix.hpp"
#include "knotsig/number_field.hpp"

namespace knotsig {

/// Sylvester inertia of a symmetric matrix.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  [[nodiscard]] int signature() const { return positive - negative; }
  [[nodiscard]] int nullity() const { return zero; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

inline int sign_of(const Rational& x) { return sign(x); }
inline Rational inverse_of(const Rational& x) { return 1 / x; }
inline int sign_of(const FieldElement& x) { return x.sign(); }
inline FieldElement inverse_of(const FieldElement& x) { return x.inverse(); }

/// Cheap test that may miss zeros; used only to skip no-op updates.
inline bool is_structurally_zero(const Rational& x) { return x == 0; }
inline bool is_structurally_zero(const FieldElement& x) { return x.canonical_rep().is_zero(); }

/// Inertia of a symmetric matrix by exact congruence elimination.
///
/// Pivots on the first nonzero diagonal entry in index order. When the whole
/// remaining diagonal vanishes, the first nonzero off-diagonal entry m(i, j)
/// is removed together with rows i and j as a hyperbolic pair, contributing
/// one positive and one negative square. Whatever remains is zero.
template <class Scalar>
Inertia congruence_diagonalize(Matrix<Scalar> m) {
  Inertia inertia;
  std::vector<std::size_t> active(m.rows());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;

  auto erase = [&active](std::size_t index) {
    for (auto it = active.begin(); it != active.end(); ++it)
      if (*it == index) {
        active.erase(it);
        return;
      }
  };

  while (!active.empty()) {
    bool pivoted = false;
    for (std::size_t p : active) {
      int s = sign_of(m(p, p));
      if (s == 0) continue;
      (s > 0 ? inertia.positive : inertia.negative) += 1;
      erase(p);
      Scalar inv = inverse_of(m(p, p));
      for (std::size_t a = 0; a < active.size(); ++a) {
        std::size_t i = active[a];
        if (is_structurally_zero(m(i, p))) continue;
        Scalar factor = m(i, p) * inv;
        for (std::size_t b = a; b < active.size(); ++b) {
          std::size_t j = active[b];
          m(i, j) -= factor * m(p, j);
          m(j, i) = m(i, j);
        }
      }
      pivoted = true;
      break;
    }
    if (pivoted) continue;

    bool paired = false;
    for (std::size_t a = 0; a < active.size() && !paired; ++a) {
      for (std::size_t b = a + 1; b < active.size() && !paired; ++b) {
        std::size_t p = active[a], q = active[b];
        if (sign_of(m(p, q)) == 0) continue;
        inertia.positive += 1;
        inertia.negative += 1;
        Scalar inv = inverse_of(m(p, q));
        erase(p);
        erase(q);
        // Schur complement of the block [[0, c], [c, 0]].
        for (std::size_t x = 0; x < active.size(); ++x) {
          std::size_t i = active[x];
          for (std::size_t y = x; y < active.size(); ++y) {
            std::size_t j = active[y];
            m(i, j) -= (m(i, p) * m(q, j) + m(i, q) * m(p, j)) * inv;
            m(j, i) = m(i, j);
          }
        }
        paired = true;
      }
    }
    if (paired) continue;

    inertia.zero += static_cast<int>(active.size());
    active.clear();
  }
  return inertia;
}

}  // namespace knotsig
