#include "distspec/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace distspec {

namespace {

using i128 = __int128;

mpz_class to_mpz(const mpz_class& x) { return x; }

mpz_class to_mpz(i128 x) {
  bool negative = x < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

// Berkowitz: the characteristic polynomial of the leading (r+1)x(r+1)
// submatrix is a Toeplitz matrix built from a_rr, R*A_r^k*C applied to the
// polynomial of the leading r x r submatrix.
template <typename Int>
std::vector<Int> berkowitz(const IntMatrix& m) {
  const std::size_t n = m.n;
  std::vector<Int> poly{Int(1)};
  std::vector<Int> toeplitz, v, w;
  for (std::size_t r = 0; r < n; ++r) {
    toeplitz.assign(r + 2, Int(0));
    toeplitz[0] = 1;
    toeplitz[1] = -Int(m(r, r));
    v.assign(r, Int(0));
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Int dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += Int(m(r, i)) * v[i];
      toeplitz[k + 2] = -dot;
      if (k + 1 == r) break;
      w.assign(r, Int(0));
      for (std::size_t i = 0; i < r; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < r; ++j)
          if (m(i, j) != 0) acc += Int(m(i, j)) * v[j];
        w[i] = acc;
      }
      std::swap(v, w);
    }
    std::vector<Int> next(r + 2, Int(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += toeplitz[i - j] * poly[j];
    poly = std::move(next);
  }
  return poly;
}

// Every intermediate Berkowitz quantity is bounded by 2^n * n * (n*M)^(n+2)
// where M is the largest absolute entry; stay clear of 2^127.
bool fits_in_128(const IntMatrix& m) {
  std::int64_t max_entry = 1;
  for (auto x : m.data) max_entry = std::max<std::int64_t>(max_entry, x < 0 ? -x : x);
  const double n = static_cast<double>(m.n);
  if (n == 0) return true;
  const double bits = (n + 2) * std::log2(n * static_cast<double>(max_entry)) + n + std::log2(n);
  return bits < 120.0;
}

template <typename Int>
CharPoly to_charpoly(const std::vector<Int>& raw) {
  CharPoly p;
  p.coeffs.reserve(raw.size());
  for (const auto& c : raw) p.coeffs.push_back(to_mpz(c));
  return p;
}

void append_be32(std::string& out, std::uint32_t x) {
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<char>((x >> s) & 0xff));
}

// Dense polynomials over Q, index = power of x.
using QPoly = std::vector<mpq_class>;

void normalize(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  normalize(d);
  return d;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  normalize(a);
  if (a.size() < b.size()) return {QPoly{}, a};
  const std::size_t shift_max = a.size() - b.size();
  QPoly q(shift_max + 1);
  for (std::size_t shift = shift_max + 1; shift-- > 0;) {
    mpq_class factor = a[shift + b.size() - 1] / b.back();
    q[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= factor * b[j];
  }
  normalize(a);
  normalize(q);
  return {q, a};
}

QPoly monic(QPoly p) {
  normalize(p);
  if (p.empty()) return p;
  mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

QPoly gcd(QPoly a, QPoly b) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

QPoly exact_div(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }

QPoly subtract(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  normalize(a);
  return a;
}

long double eval_q(const std::vector<long double>& p, long double x, long double* deriv) {
  long double value = 0, d = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    d = d * x + value;
    value = value * x + p[i];
  }
  if (deriv) *deriv = d;
  return value;
}

std::vector<long double> roots_of_squarefree(const QPoly& f) {
  const std::size_t deg = f.size() - 1;
  std::vector<long double> coeffs;
  for (const auto& c : f) coeffs.push_back(static_cast<long double>(c.get_d()));
  if (deg == 1) return {static_cast<long double>(mpq_class(-f[0] / f[1]).get_d())};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(deg), static_cast<Eigen::Index>(deg));
  const double lead = f.back().get_d();
  for (std::size_t i = 0; i < deg; ++i) {
    companion(0, static_cast<Eigen::Index>(i)) = -f[deg - 1 - i].get_d() / lead;
    if (i + 1 < deg) companion(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<long double> roots;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    long double x = solver.eigenvalues()[i].real();
    for (int it = 0; it < 8; ++it) {
      long double d = 0;
      long double v = eval_q(coeffs, x, &d);
      if (d == 0) break;
      long double step = v / d;
      x -= step;
      if (std::fabs(step) <= 1e-18L * (1 + std::fabs(x))) break;
    }
    roots.push_back(x);
  }
  return roots;
}

// Yun's square-free decomposition over Q: (factor, multiplicity) pairs with
// nonconstant factors, coefficients indexed by power.
std::vector<std::pair<QPoly, std::size_t>> squarefree_parts(const CharPoly& p) {
  QPoly f;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) f.emplace_back(p.coeffs[i]);
  normalize(f);
  std::vector<std::pair<QPoly, std::size_t>> parts;
  if (f.size() <= 1) return parts;
  QPoly a = gcd(f, derivative(f));
  QPoly b = exact_div(f, a);
  QPoly c = exact_div(derivative(f), a);
  QPoly d = subtract(c, derivative(b));
  for (std::size_t multiplicity = 1; b.size() > 1; ++multiplicity) {
    QPoly factor = gcd(b, d);
    b = exact_div(b, factor);
    c = exact_div(d, factor);
    d = subtract(c, derivative(b));
    if (factor.size() > 1) parts.emplace_back(std::move(factor), multiplicity);
  }
  return parts;
}

}  // namespace

std::string CharPoly::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? " " : "") << coeffs[i].get_str();
  return out.str();
}

std::string CharPoly::fingerprint() const {
  std::string out;
  append_be32(out, static_cast<std::uint32_t>(degree()));
  for (const auto& c : coeffs) {
    int sign = sgn(c);
    out.push_back(static_cast<char>(sign == 0 ? 0 : (sign > 0 ? 1 : 2)));
    std::size_t count = 0;
    std::string mag;
    if (sign != 0) {
      mag.resize((mpz_sizeinbase(c.get_mpz_t(), 2) + 7) / 8);
      mpz_export(mag.data(), &count, 1, 1, 1, 0, c.get_mpz_t());
      mag.resize(count);
    }
    append_be32(out, static_cast<std::uint32_t>(mag.size()));
    out += mag;
  }
  return out;
}

std::string to_hex(std::string_view bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

std::string CharPoly::fingerprint_hex() const { return to_hex(fingerprint()); }

CharPoly charpoly_int_bignum(const IntMatrix& m) { return to_charpoly(berkowitz<mpz_class>(m)); }

CharPoly charpoly_int(const IntMatrix& m) {
  if (fits_in_128(m)) return to_charpoly(berkowitz<i128>(m));
  return charpoly_int_bignum(m);
}

SpectrumReport sym_eigenvalues(const IntMatrix& m, MatrixKind kind) {
  if (!m.symmetric()) throw DomainError("matrix is not symmetric");
  SpectrumReport report;
  report.kind = kind;
  if (m.n == 0) return report;
  const auto n = static_cast<Eigen::Index>(m.n);
  // Extended precision keeps p(lambda) small even where p' is large.
  using Matrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = static_cast<long double>(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::EigenvaluesOnly);
  for (long double x : solver.eigenvalues()) report.eigenvalues.push_back(static_cast<double>(x));
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(), std::greater<>());
  return report;
}

CharPoly distance_charpoly(const Graph& g) { return charpoly_int(distance_matrix(g).matrix()); }

CharPoly laplacian_charpoly(const Graph& g) { return charpoly_int(laplacian_matrix(g)); }

bool d_cospectral(const Graph& g, const Graph& h) {
  // Both connectivity checks run even when the orders differ.
  auto dg = distance_matrix(g);
  auto dh = distance_matrix(h);
  if (g.order() != h.order()) return false;
  return charpoly_int(dg.matrix()) == charpoly_int(dh.matrix());
}

mpq_class laplacian_reciprocal_sum(const Graph& g) {
  if (g.order() < 2) throw DomainError("laplacian reciprocal sum needs at least 2 vertices");
  if (!is_connected(g)) throw DomainError("graph not connected");
  CharPoly p = laplacian_charpoly(g);
  mpq_class out(-p.coefficient(2), p.coefficient(1));
  out.canonicalize();
  return out;
}

long double evaluate(const CharPoly& p, long double x) {
  long double value = 0;
  for (const auto& c : p.coeffs) value = value * x + static_cast<long double>(c.get_d());
  return value;
}

std::vector<long double> real_roots(const CharPoly& p) {
  std::vector<long double> roots;
  for (const auto& [factor, multiplicity] : squarefree_parts(p))
    for (long double r : roots_of_squarefree(factor)) roots.insert(roots.end(), multiplicity, r);
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

std::vector<mpf_class> real_roots_mp(const CharPoly& p, unsigned long precision_bits) {
  std::vector<std::pair<mpf_class, std::size_t>> found;
  for (const auto& [factor, multiplicity] : squarefree_parts(p)) {
    std::vector<mpf_class> f;
    for (const auto& c : factor) f.emplace_back(c, precision_bits);
    mpf_class tolerance(1, precision_bits);
    mpf_div_2exp(tolerance.get_mpf_t(), tolerance.get_mpf_t(), precision_bits - 8);
    for (long double start : roots_of_squarefree(factor)) {
      mpf_class x(static_cast<double>(start), precision_bits);
      x += mpf_class(static_cast<double>(start - static_cast<long double>(static_cast<double>(start))), precision_bits);
      for (int it = 0; it < 64; ++it) {
        mpf_class value(0, precision_bits), slope(0, precision_bits);
        for (std::size_t i = f.size(); i-- > 0;) {
          slope = slope * x + value;
          value = value * x + f[i];
        }
        if (slope == 0) break;
        mpf_class step(value / slope, precision_bits);
        x -= step;
        if (abs(step) <= tolerance * (1 + abs(x))) break;
      }
      found.emplace_back(x, multiplicity);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<mpf_class> roots;
  for (const auto& [x, multiplicity] : found) roots.insert(roots.end(), multiplicity, x);
  return roots;
}

mpf_class evaluate(const CharPoly& p, const mpf_class& x) {
  mpf_class acc(0, x.get_prec());
  for (const auto& c : p.coeffs) acc = acc * x + mpf_class(c, x.get_prec());
  return acc;
}

std::vector<long double> elementary_symmetric(const std::vector<double>& values) {
  std::vector<long double> e(values.size() + 1, 0.0L);
  e[0] = 1;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * values[i];
  return e;
}

}  // namespace distspec
