#include <cmath>
#include <string>
#include <vector>

#include "gatesmith/completeness.hpp"
#include "gatesmith/errors.hpp"

namespace gatesmith::completeness {

namespace {

using Matrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

Matrix identity(int n) {
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != Rational(0))
        for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Row-echelon reduction; returns (rank, determinant).
std::pair<int, Rational> eliminate(Matrix m) {
  const int n = static_cast<int>(m.size());
  int rank = 0;
  Rational det = 1;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (m[r][col] != Rational(0)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      std::swap(m[pivot], m[rank]);
      det = -det;
    }
    det *= m[rank][col];
    for (int r = rank + 1; r < n; ++r) {
      if (m[r][col] == Rational(0)) continue;
      const Rational f = m[r][col] / m[rank][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  if (rank < n) det = 0;
  return {rank, det};
}

Matrix shifted(const Matrix& m, int shift) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.size(); ++i) out[i][i] += shift;
  return out;
}

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix out(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Unnormalized Hadamard power: entries (-1)^{popcount(i & j)}.
IntMatrix hadamard_power(int n_qubits) {
  const int dim = 1 << n_qubits;
  IntMatrix h(dim, std::vector<std::int64_t>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) h[i][j] = (__builtin_popcount(i & j) % 2) ? -1 : 1;
  return h;
}

// Permutation matrix flipping the last qubit when all other qubits are 1.
IntMatrix controlled_flip(int n_qubits) {
  const int dim = 1 << n_qubits;
  const int controls = dim - 2;  // all bits but the lowest
  IntMatrix p(dim, std::vector<std::int64_t>(dim, 0));
  for (int i = 0; i < dim; ++i) {
    const int image = ((i & controls) == controls) ? (i ^ 1) : i;
    p[image][i] = 1;
  }
  return p;
}

RealOperator squared_over(const IntMatrix& m, std::int64_t denominator) {
  const IntMatrix sq = int_multiply(m, m);
  const auto dim = static_cast<Eigen::Index>(sq.size());
  RealOperator out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      out(i, j) = static_cast<double>(sq[i][j]) / static_cast<double>(denominator);
  return out;
}

}  // namespace

bool CharpolyCertificate::certifies_irrational_angle() const {
  return remaining == 2 && pair_sum && pair_product && !integral && irreducible;
}

CharpolyCertificate exact_rotation_certificate(const RealOperator& op, std::int64_t denominator) {
  if (op.rows() != op.cols() || op.rows() == 0) throw DimensionError("operator must be square");
  if (denominator <= 0) throw PreconditionError("denominator must be positive");
  const int n = static_cast<int>(op.rows());

  Matrix m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double scaled = op(i, j) * static_cast<double>(denominator);
      if (!std::isfinite(scaled) || scaled != std::nearbyint(scaled) || std::abs(scaled) > 9.0e15) {
        throw ExactnessError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") is not an integer multiple of 1/" + std::to_string(denominator));
      }
      m[i][j] = Rational(static_cast<std::int64_t>(scaled), denominator);
    }
  }

  Matrix mt(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mt[i][j] = m[j][i];
  if (multiply(mt, m) != identity(n)) throw ExactnessError("operator is not exactly orthogonal");

  CharpolyCertificate cert;
  cert.dim = n;
  cert.denominator = denominator;
  cert.trace = 0;
  for (int i = 0; i < n; ++i) cert.trace += m[i][i];
  // For an orthogonal (normal) operator, algebraic and geometric
  // multiplicities agree, so nullities give the +1 / -1 multiplicities.
  cert.plus_one_multiplicity = n - eliminate(shifted(m, -1)).first;
  cert.minus_one_multiplicity = n - eliminate(shifted(m, 1)).first;
  cert.remaining = n - cert.plus_one_multiplicity - cert.minus_one_multiplicity;

  if (cert.remaining == 2) {
    const Rational det = eliminate(m).second;
    const Rational sum = cert.trace - cert.plus_one_multiplicity + cert.minus_one_multiplicity;
    const Rational product = (cert.minus_one_multiplicity % 2 == 0) ? det : -det;
    cert.pair_sum = sum;
    cert.pair_product = product;
    cert.integral = sum.denominator() == 1 && product.denominator() == 1;
    // The pair is complex (disc < 0) whenever it is not +-1, so there is no
    // real, let alone rational, root.
    const Rational disc = sum * sum - Rational(4) * product;
    cert.irreducible = disc < Rational(0);
  }
  return cert;
}

RealOperator theorem4_exact_operator() {
  return squared_over(int_multiply(hadamard_power(3), controlled_flip(3)), 8);
}

RealOperator cnot_hadamard_exact_operator() {
  return squared_over(int_multiply(hadamard_power(2), controlled_flip(2)), 4);
}

bool check_theorem4_charpoly() {
  const CharpolyCertificate cert = exact_rotation_certificate(theorem4_exact_operator(), 8);
  return cert.trace == Rational(9, 2) && cert.plus_one_multiplicity == 6 && cert.remaining == 2 &&
         cert.pair_sum == Rational(-3, 2) && cert.pair_product == Rational(1) &&
         cert.certifies_irrational_angle();
}

}  // namespace gatesmith::completeness
