#include "knotsig/seifert.hpp"

#include <cctype>
#include <sstream>

#include "knotsig/error.hpp"

namespace knotsig {
namespace {

Matrix<Integer> skew_part(const Matrix<Integer>& v) {
  Matrix<Integer> s(v.rows(), v.cols());
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j) s(i, j) = v(i, j) - v(j, i);
  return s;
}

/// Newton interpolation through (x_k, y_k), x_k = 0, 1, ..., returned over Q.
RatPolynomial interpolate(const std::vector<Integer>& values) {
  const std::size_t n = values.size();
  std::vector<Rational> diff(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k)
      diff[k] = (diff[k] - diff[k - 1]) / static_cast<long>(level);
  RatPolynomial result = RatPolynomial::constant(diff[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;)
    result = result * RatPolynomial{Rational(-static_cast<long>(k)), Rational(1)} +
             RatPolynomial::constant(diff[k]);
  return result;
}

class MatrixParser {
 public:
  explicit MatrixParser(std::string_view text) : text_(text) {}

  Matrix<Integer> parse() {
    skip_space();
    char open = peek();
    if (open != '[' && open != '{') fail("expected '[' or '{'");
    char close = open == '[' ? ']' : '}';
    ++pos_;
    std::vector<std::vector<Integer>> rows;
    skip_space();
    if (peek() == close) {
      ++pos_;
    } else {
      while (true) {
        skip_space();
        rows.push_back(parse_row(open, close));
        skip_space();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == close) {
          ++pos_;
          break;
        }
        fail("expected ',' or closing bracket between rows");
      }
    }
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    if (rows.size() == 1 && rows[0].empty()) rows.clear();
    const std::size_t n = rows.size();
    Matrix<Integer> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n)
        throw InputError("matrix is not square: row " + std::to_string(i + 1) + " has " +
                         std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

 private:
  std::vector<Integer> parse_row(char open, char close) {
    if (peek() != open) fail("expected row opening bracket");
    ++pos_;
    std::vector<Integer> row;
    skip_space();
    if (peek() == close) {
      ++pos_;
      return row;
    }
    while (true) {
      skip_space();
      row.push_back(parse_integer());
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == close) {
        ++pos_;
        return row;
      }
      fail("expected ',' or closing bracket in row");
    }
  }

  Integer parse_integer() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) fail("expected an integer");
    std::string token(text_.substr(start, pos_ - start));
    if (token[0] == '+') token.erase(0, 1);
    return Integer(token);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("matrix syntax error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SeifertMatrix SeifertMatrix::validate(Matrix<Integer> raw) {
  if (!raw.is_square()) throw InputError("Seifert matrix must be square");
  if (raw.rows() % 2 != 0)
    throw OddDimensionError("Seifert matrix has odd dimension " + std::to_string(raw.rows()));
  Integer det = determinant(skew_part(raw));
  if (det != 1)
    throw NotUnimodularError("det(V - V^T) = " + det.get_str() + ", expected 1");
  return SeifertMatrix(std::move(raw));
}

AlexanderPolynomial alexander(const SeifertMatrix& v) {
  const std::size_t n = v.dimension();
  // det(V - t V^T) has degree at most n; sample at t = 0, ..., n.
  std::vector<Integer> samples;
  for (std::size_t t = 0; t <= n; ++t) {
    Matrix<Integer> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = v(i, j) - Integer(static_cast<long>(t)) * v(j, i);
    samples.push_back(determinant(std::move(m)));
  }
  RatPolynomial interpolated = interpolate(samples);
  std::vector<Integer> coeffs;
  for (const auto& c : interpolated.coefficients()) {
    if (c.get_den() != 1) throw InternalError("Alexander interpolation is not integral");
    coeffs.push_back(c.get_num());
  }
  std::size_t shift = 0;
  while (shift < coeffs.size() && coeffs[shift] == 0) ++shift;
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(shift));
  IntPolynomial delta(std::move(coeffs));
  Integer at_one = delta.evaluate(Integer(1));
  if (at_one == -1) delta = -delta;
  else if (at_one != 1)
    throw InternalError("Alexander polynomial has Delta(1) = " + at_one.get_str());
  const auto& c = delta.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != c[c.size() - 1 - k]) throw InternalError("Alexander polynomial is not symmetric");
  return {delta};
}

TracePolynomial trace_polynomial(const AlexanderPolynomial& delta) {
  const IntPolynomial& p = delta.poly;
  if (p.is_zero()) throw InputError("zero Alexander polynomial");
  if (p.degree() % 2 != 0) throw InputError("Alexander polynomial has odd degree");
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != c[c.size() - 1 - k]) throw InputError("Alexander polynomial is not symmetric");
  const std::size_t d = static_cast<std::size_t>(p.degree() / 2);

  // t^k + t^-k = P_k(x): P_0 = 2, P_1 = x, P_{k+1} = x P_k - P_{k-1}.
  const IntPolynomial x{Integer(0), Integer(1)};
  IntPolynomial previous = IntPolynomial::constant(2), current = x;
  IntPolynomial q = IntPolynomial::constant(c[d]);
  for (std::size_t k = 1; k <= d; ++k) {
    q += c[d + k] * current;
    IntPolynomial next = x * current - previous;
    previous = std::move(current);
    current = std::move(next);
  }

  // Back-substitute: sum_j q_j (t^2 + 1)^j t^(d - j) must equal Delta.
  const IntPolynomial t_squared_plus_one{Integer(1), Integer(0), Integer(1)};
  IntPolynomial check, power = IntPolynomial::constant(1);
  for (std::size_t j = 0; j <= d; ++j) {
    check += IntPolynomial::monomial(q.coeff(j), d - j) * power;
    power *= t_squared_plus_one;
  }
  if (check != p) throw InternalError("trace polynomial back-substitution mismatch");
  return {q};
}

std::vector<RealAlgebraicNumber> circle_roots(const SeifertMatrix& v) {
  TracePolynomial q = trace_polynomial(alexander(v));
  if (q.poly.degree() < 1) return {};
  return isolate_real_roots(q.poly, Rational(-2), Rational(2));
}

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  const std::size_t n = a.dimension(), m = b.dimension();
  Matrix<Integer> s(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s(n + i, n + j) = b(i, j);
  return SeifertMatrix::validate(std::move(s));
}

SeifertMatrix mirror(const SeifertMatrix& v) {
  const std::size_t n = v.dimension();
  Matrix<Integer> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = -v(j, i);
  return SeifertMatrix::validate(std::move(m));
}

SeifertMatrix connected_sum_power(const SeifertMatrix& v, unsigned copies) {
  SeifertMatrix result;
  for (unsigned k = 0; k < copies; ++k) result = connected_sum(result, v);
  return result;
}

Matrix<Integer> parse_integer_matrix(std::string_view text) { return MatrixParser(text).parse(); }

std::string format_matrix(const Matrix<Integer>& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out << ", ";
    out << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ", ";
      out << m(i, j).get_str();
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace knotsig
