#include "oracle.hpp"

#include <gmpxx.h>

namespace bolalg::oracle {

namespace {

Vector e(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

}  // namespace

Vector product(const BolAlgebra& b, const Vector& x, const Vector& y) {
  const std::size_t n = b.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * b.bin(i, j, k);
  return out;
}

Vector triple(const BolAlgebra& b, const Vector& x, const Vector& y, const Vector& z) {
  const std::size_t n = b.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (z[k] == 0) continue;
        const Scalar w = x[i] * y[j] * z[k];
        for (std::size_t l = 0; l < n; ++l) out[l] += w * b.ter(i, j, k, l);
      }
    }
  }
  return out;
}

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y) {
  const std::size_t n = g.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * g.coef(i, j, k);
  return out;
}

bool satisfies_lts(const BolAlgebra& b, Profile profile) {
  const std::size_t n = b.dim();
  auto T = [&](const Vector& x, const Vector& y, const Vector& z) { return triple(b, x, y, z); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = e(n, i), y = e(n, j), z = e(n, k);
        const Vector skew = profile == Profile::literal ? T(x, y, z) + T(y, x, z)
                                                        : T(x, y, z) + T(x, z, y);
        if (!skew.is_zero()) return false;
        if (!(T(x, y, z) + T(y, z, x) + T(z, x, y)).is_zero()) return false;
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            const Vector a = e(n, p), c = e(n, q);
            const Vector lhs = T(T(x, y, z), a, c);
            const Vector rhs = T(T(x, a, c), y, z) + T(x, T(y, a, c), z) + T(x, y, T(z, a, c));
            if (lhs != rhs) return false;
          }
      }
  return true;
}

bool satisfies_axioms(const BolAlgebra& b, Profile profile) {
  if (!satisfies_lts(b, profile)) return false;
  const std::size_t n = b.dim();
  auto P = [&](const Vector& x, const Vector& y) { return product(b, x, y); };
  auto T = [&](const Vector& x, const Vector& y, const Vector& z) { return triple(b, x, y, z); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = e(n, i), y = e(n, j);
      if (!(P(x, y) + P(y, x)).is_zero()) return false;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const Vector a = e(n, p), c = e(n, q);
          const Vector lhs = T(P(x, y), a, c);
          const Vector rhs =
              P(T(x, a, c), y) + P(x, T(y, a, c)) + T(P(a, c), x, y) + P(P(x, y), P(a, c));
          if (lhs != rhs) return false;
        }
    }
  return true;
}

bool satisfies_jacobi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = e(n, i), y = e(n, j);
      if (!(bracket(g, x, y) + bracket(g, y, x)).is_zero()) return false;
      for (std::size_t k = 0; k < n; ++k) {
        const Vector z = e(n, k);
        const Vector s = bracket(g, x, bracket(g, y, z)) + bracket(g, y, bracket(g, z, x)) +
                         bracket(g, z, bracket(g, x, y));
        if (!s.is_zero()) return false;
      }
    }
  return true;
}

std::size_t rank(const Matrix& m) {
  // Clear denominators, then Bareiss elimination on integers.
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) l = lcm(l, m(r, c).get_den());
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  std::size_t rk = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < m.cols() && rk < m.rows(); ++c) {
    std::size_t piv = rk;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rk]);
    for (std::size_t r = rk + 1; r < m.rows(); ++r) {
      for (std::size_t k = c + 1; k < m.cols(); ++k)
        a[r][k] = (a[rk][c] * a[r][k] - a[r][c] * a[rk][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

bool is_morphism(const BolAlgebra& s, const BolAlgebra& t, const Matrix& f) {
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = e(n, i), y = e(n, j);
      if (f.apply(product(s, x, y)) != product(t, f.apply(x), f.apply(y))) return false;
      for (std::size_t k = 0; k < n; ++k) {
        const Vector z = e(n, k);
        if (f.apply(triple(s, x, y, z)) != triple(t, f.apply(x), f.apply(y), f.apply(z)))
          return false;
      }
    }
  return true;
}

BolAlgebra null_extension(const BolAlgebra& b, const BolModule& v) {
  const std::size_t n = b.dim(), m = v.mod_dim();
  BolAlgebra x(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        x.bin(i, j, l) = b.bin(i, j, l);
        for (std::size_t q = 0; q < n; ++q) x.ter(i, j, l, q) = b.ter(i, j, l, q);
      }
  // Column k of each action matrix is the image of the k-th module basis vector.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      const Vector lv = v.left(i).col(k), rv = v.right(i).col(k);
      for (std::size_t q = 0; q < m; ++q) {
        x.bin(i, n + k, n + q) = lv[q];
        x.bin(n + k, i, n + q) = rv[q];
      }
      for (std::size_t j = 0; j < n; ++j) {
        const Vector a = v.vbb(i, j).col(k), c = v.bvb(i, j).col(k), d = v.bbv(i, j).col(k);
        for (std::size_t q = 0; q < m; ++q) {
          x.ter(n + k, i, j, n + q) = a[q];
          x.ter(i, n + k, j, n + q) = c[q];
          x.ter(i, j, n + k, n + q) = d[q];
        }
      }
    }
  return x;
}

bool extension_is_bol(const BolAlgebra& b, const BolModule& v) {
  return satisfies_axioms(null_extension(b, v), Profile::consistent);
}

}  // namespace bolalg::oracle
