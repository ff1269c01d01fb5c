#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

/// Characteristic polynomial det(xI - M), leading coefficient first.
struct CharPoly {
  std::vector<mpz_class> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  /// Coefficient of x^power.
  const mpz_class& coefficient(std::size_t power) const { return coeffs[degree() - power]; }

  /// Space-separated decimal coefficients.
  std::string to_string() const;

  /// Canonical byte string: 4-byte big-endian degree, then per coefficient a
  /// sign byte (0 zero, 1 positive, 2 negative), 4-byte big-endian magnitude
  /// length and the big-endian magnitude bytes.
  std::string fingerprint() const;
  std::string fingerprint_hex() const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

std::string to_hex(std::string_view bytes);

/// Exact characteristic polynomial by Berkowitz's division-free algorithm.
/// Small inputs whose coefficients provably fit run on 128-bit integers; the
/// rest use GMP.
CharPoly charpoly_int(const IntMatrix& m);

/// Same algorithm, forced onto GMP arithmetic. Exposed for testing the
/// 128-bit fast path.
CharPoly charpoly_int_bignum(const IntMatrix& m);

enum class MatrixKind { distance, laplacian, other };

struct SpectrumReport {
  std::vector<double> eigenvalues;  // descending
  MatrixKind kind = MatrixKind::other;
};

/// Floating eigenvalues of a symmetric integer matrix (display only, never
/// used for equality decisions). Throws DomainError on non-symmetric input.
SpectrumReport sym_eigenvalues(const IntMatrix& m, MatrixKind kind = MatrixKind::other);

/// True iff the exact distance characteristic polynomials agree.
bool d_cospectral(const Graph& g, const Graph& h);

CharPoly distance_charpoly(const Graph& g);
CharPoly laplacian_charpoly(const Graph& g);

/// -c2/c1 of the Laplacian characteristic polynomial, which equals the sum of
/// reciprocals of the nonzero Laplacian eigenvalues.
mpq_class laplacian_reciprocal_sum(const Graph& g);

/// Evaluates p at x in extended precision.
long double evaluate(const CharPoly& p, long double x);

/// Real roots of p with multiplicity, descending. Repeated factors are split
/// off exactly (square-free decomposition over Q) before the numeric root
/// finding, so repeated eigenvalues do not lose accuracy.
std::vector<long double> real_roots(const CharPoly& p);

/// The same roots refined by Newton's method in `precision_bits`-bit
/// floating point. Residuals at long double roots can reach 1e-5 once
/// coefficients grow; these are accurate to the working precision.
std::vector<mpf_class> real_roots_mp(const CharPoly& p, unsigned long precision_bits = 256);

mpf_class evaluate(const CharPoly& p, const mpf_class& x);

/// Elementary symmetric functions e_0..e_n of the values.
std::vector<long double> elementary_symmetric(const std::vector<double>& values);

}  // namespace distspec
