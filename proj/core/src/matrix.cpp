#include "knotsig/matrix.hpp"

#include "knotsig/error.hpp"

namespace knotsig {

Integer determinant(Matrix<Integer> m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Integer previous = 1;
  int sign_flip = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign_flip = -sign_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign_flip * m(n - 1, n - 1));
}

}  // namespace knotsig
