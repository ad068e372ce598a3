#include "bolalg/algebra.hpp"

#include <array>

namespace bolalg {

namespace {

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(want) +
                         ", got " + std::to_string(got));
}

/// Basis tables so the checkers only ever read precomputed vectors.
struct Tables {
  std::size_t n;
  std::vector<Vector> bin;  // n*n
  std::vector<Vector> ter;  // n*n*n

  explicit Tables(const BolAlgebra& a) : n(a.dim()) {
    bin.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) bin.push_back(a.basis_product(i, j));
    ter.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) ter.push_back(a.basis_triple(i, j, k));
  }

  const Vector& b(std::size_t i, std::size_t j) const { return bin[i * n + j]; }
  const Vector& t(std::size_t i, std::size_t j, std::size_t k) const {
    return ter[(i * n + j) * n + k];
  }

  // Products with one vector argument; the rest are basis vectors.
  Vector b_left(const Vector& x, std::size_t j) const {
    Vector out(n);
    for (std::size_t l = 0; l < n; ++l) out.add_scaled(x[l], b(l, j));
    return out;
  }
  Vector b_right(std::size_t i, const Vector& y) const {
    Vector out(n);
    for (std::size_t l = 0; l < n; ++l) out.add_scaled(y[l], b(i, l));
    return out;
  }
  Vector t_slot1(const Vector& x, std::size_t j, std::size_t k) const {
    Vector out(n);
    for (std::size_t l = 0; l < n; ++l) out.add_scaled(x[l], t(l, j, k));
    return out;
  }
  Vector t_slot2(std::size_t i, const Vector& y, std::size_t k) const {
    Vector out(n);
    for (std::size_t l = 0; l < n; ++l) out.add_scaled(y[l], t(i, l, k));
    return out;
  }
  Vector t_slot3(std::size_t i, std::size_t j, const Vector& z) const {
    Vector out(n);
    for (std::size_t l = 0; l < n; ++l) out.add_scaled(z[l], t(i, j, l));
    return out;
  }
};

/// Runs `residual` over tuples in lexicographic order and records the first
/// nonzero one.
template <std::size_t Arity, typename Accept, typename Residual>
void scan(Report& report, std::string_view name, std::size_t n, Accept accept, Residual residual) {
  std::array<std::size_t, Arity> idx{};
  if (n == 0) {
    report.add_pass(std::string(name));
    return;
  }
  while (true) {
    if (accept(idx)) {
      Vector r = residual(idx);
      if (!r.is_zero()) {
        Witness w;
        for (auto i : idx) w.indices.push_back(i + 1);
        w.residual = std::move(r);
        report.add_fail(std::string(name), std::move(w));
        return;
      }
    }
    std::size_t pos = Arity;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < n) break;
      idx[pos] = 0;
      if (pos == 0) {
        report.add_pass(std::string(name));
        return;
      }
    }
  }
}

template <std::size_t N>
constexpr auto all_tuples = [](const std::array<std::size_t, N>&) { return true; };

void check_ternary_identities(Report& report, const Tables& tb, Profile profile) {
  const std::size_t n = tb.n;
  if (profile == Profile::literal) {
    scan<3>(report, axiom::skew_first, n,
            [](const auto& a) { return a[0] <= a[1]; },
            [&](const auto& a) {
              if (a[0] == a[1]) return tb.t(a[0], a[0], a[2]);
              return tb.t(a[0], a[1], a[2]) + tb.t(a[1], a[0], a[2]);
            });
  } else {
    scan<3>(report, axiom::skew_last, n,
            [](const auto& a) { return a[1] <= a[2]; },
            [&](const auto& a) {
              if (a[1] == a[2]) return tb.t(a[0], a[1], a[1]);
              return tb.t(a[0], a[1], a[2]) + tb.t(a[0], a[2], a[1]);
            });
  }

  scan<3>(report, axiom::cyclic, n, all_tuples<3>, [&](const auto& a) {
    const auto [x, y, z] = a;
    return tb.t(x, y, z) + tb.t(z, x, y) + tb.t(y, z, x);
  });

  // ((x;y,z);a,b) = ((x;a,b);y,z) + (x;(y;a,b),z) + (x;y,(z;a,b))
  scan<5>(report, axiom::ternary_derivation, n, all_tuples<5>, [&](const auto& v) {
    const auto [x, y, z, a, b] = v;
    Vector r = tb.t_slot1(tb.t(x, y, z), a, b);
    r -= tb.t_slot1(tb.t(x, a, b), y, z);
    r -= tb.t_slot2(x, tb.t(y, a, b), z);
    r -= tb.t_slot3(x, y, tb.t(z, a, b));
    return r;
  });
}

void check_binary_identities(Report& report, const Tables& tb) {
  const std::size_t n = tb.n;
  scan<2>(report, axiom::binary_skew, n, [](const auto& a) { return a[0] <= a[1]; },
          [&](const auto& a) {
            if (a[0] == a[1]) return tb.b(a[0], a[0]);
            return tb.b(a[0], a[1]) + tb.b(a[1], a[0]);
          });

  // (x·y;a,b) = (x;a,b)·y + x·(y;a,b) + (a·b;x,y) + (x·y)·(a·b)
  scan<4>(report, axiom::pseudo_derivation, n, all_tuples<4>, [&](const auto& v) {
    const auto [x, y, a, b] = v;
    const Vector& xy = tb.b(x, y);
    const Vector& ab = tb.b(a, b);
    Vector r = tb.t_slot1(xy, a, b);
    r -= tb.b_left(tb.t(x, a, b), y);
    r -= tb.b_right(x, tb.t(y, a, b));
    r -= tb.t_slot1(ab, x, y);
    Vector last(n);
    for (std::size_t l = 0; l < n; ++l) last.add_scaled(xy[l], tb.b_right(l, ab));
    r -= last;
    return r;
  });
}

}  // namespace

// ---------------------------------------------------------------- BolAlgebra

BolAlgebra::BolAlgebra(std::size_t dim)
    : dim_(dim), binary_(dim * dim * dim), ternary_(dim * dim * dim * dim) {}

Vector BolAlgebra::basis_product(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = bin(i, j, k);
  return v;
}

Vector BolAlgebra::basis_triple(std::size_t i, std::size_t j, std::size_t k) const {
  Vector v(dim_);
  for (std::size_t l = 0; l < dim_; ++l) v[l] = ter(i, j, k, l);
  return v;
}

void BolAlgebra::set_product(std::size_t i, std::size_t j, const Vector& v) {
  require_dim(v.size(), dim_, "set_product");
  for (std::size_t k = 0; k < dim_; ++k) bin(i, j, k) = v[k];
}

void BolAlgebra::set_triple(std::size_t i, std::size_t j, std::size_t k, const Vector& v) {
  require_dim(v.size(), dim_, "set_triple");
  for (std::size_t l = 0; l < dim_; ++l) ter(i, j, k, l) = v[l];
}

Vector BolAlgebra::product(const Vector& x, const Vector& y) const {
  require_dim(x.size(), dim_, "product");
  require_dim(y.size(), dim_, "product");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (bin(i, j, k) != 0) out[k] += w * bin(i, j, k);
    }
  }
  return out;
}

Vector BolAlgebra::triple(const Vector& x, const Vector& y, const Vector& z) const {
  require_dim(x.size(), dim_, "triple");
  require_dim(y.size(), dim_, "triple");
  require_dim(z.size(), dim_, "triple");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (z[k] == 0) continue;
        const Scalar w = xy * z[k];
        for (std::size_t l = 0; l < dim_; ++l)
          if (ter(i, j, k, l) != 0) out[l] += w * ter(i, j, k, l);
      }
    }
  }
  return out;
}

bool BolAlgebra::binary_is_zero() const {
  for (const auto& q : binary_)
    if (q != 0) return false;
  return true;
}

bool BolAlgebra::ternary_is_zero() const {
  for (const auto& q : ternary_)
    if (q != 0) return false;
  return true;
}

BolAlgebra BolAlgebra::without_binary() const {
  BolAlgebra copy = *this;
  for (auto& q : copy.binary_) q = 0;
  return copy;
}

// ---------------------------------------------------------------- LieAlgebra

LieAlgebra::LieAlgebra(std::size_t dim) : dim_(dim), bracket_(dim * dim * dim) {}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = coef(i, j, k);
  return v;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& v) {
  require_dim(v.size(), dim_, "set_bracket");
  for (std::size_t k = 0; k < dim_; ++k) coef(i, j, k) = v[k];
}

void LieAlgebra::set_antisymmetric(std::size_t i, std::size_t j, const Vector& v) {
  set_bracket(i, j, v);
  set_bracket(j, i, -v);
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  require_dim(x.size(), dim_, "bracket");
  require_dim(y.size(), dim_, "bracket");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (coef(i, j, k) != 0) out[k] += w * coef(i, j, k);
    }
  }
  return out;
}

// ---------------------------------------------------------------- evaluation

Vector evaluate(const BolAlgebra& algebra, Operation op, std::span<const Vector> args) {
  const std::size_t want = op == Operation::binary ? 2 : 3;
  if (args.size() != want)
    throw DimensionError("operation expects " + std::to_string(want) + " arguments, got " +
                         std::to_string(args.size()));
  switch (op) {
    case Operation::binary:
      return algebra.product(args[0], args[1]);
    case Operation::ternary:
    case Operation::d_operator:
    case Operation::delta_operator:
      return algebra.triple(args[0], args[1], args[2]);
  }
  return {};
}

// ---------------------------------------------------------------- checkers

Report check_axioms(const BolAlgebra& algebra, Profile profile) {
  Report report;
  const Tables tb(algebra);
  check_ternary_identities(report, tb, profile);
  check_binary_identities(report, tb);
  return report;
}

Report check_lts(const BolAlgebra& algebra, Profile profile) {
  Report report;
  const Tables tb(algebra);
  check_ternary_identities(report, tb, profile);
  return report;
}

Vector axiom_residual(const BolAlgebra& a, std::string_view identity,
                      std::span<const std::size_t> idx) {
  const std::size_t n = a.dim();
  auto e = [n](std::size_t i) { return Vector::unit(n, i); };
  auto need = [&](std::size_t k) {
    if (idx.size() != k)
      throw DimensionError("identity '" + std::string(identity) + "' takes " +
                           std::to_string(k) + " indices");
  };
  auto T = [&](const Vector& x, const Vector& y, const Vector& z) { return a.triple(x, y, z); };
  auto P = [&](const Vector& x, const Vector& y) { return a.product(x, y); };

  if (identity == axiom::skew_first) {
    need(3);
    if (idx[0] == idx[1]) return T(e(idx[0]), e(idx[0]), e(idx[2]));
    return T(e(idx[0]), e(idx[1]), e(idx[2])) + T(e(idx[1]), e(idx[0]), e(idx[2]));
  }
  if (identity == axiom::skew_last) {
    need(3);
    if (idx[1] == idx[2]) return T(e(idx[0]), e(idx[1]), e(idx[1]));
    return T(e(idx[0]), e(idx[1]), e(idx[2])) + T(e(idx[0]), e(idx[2]), e(idx[1]));
  }
  if (identity == axiom::cyclic) {
    need(3);
    const Vector x = e(idx[0]), y = e(idx[1]), z = e(idx[2]);
    return T(x, y, z) + T(z, x, y) + T(y, z, x);
  }
  if (identity == axiom::ternary_derivation) {
    need(5);
    const Vector x = e(idx[0]), y = e(idx[1]), z = e(idx[2]), al = e(idx[3]), be = e(idx[4]);
    return T(T(x, y, z), al, be) - T(T(x, al, be), y, z) - T(x, T(y, al, be), z) -
           T(x, y, T(z, al, be));
  }
  if (identity == axiom::binary_skew) {
    need(2);
    if (idx[0] == idx[1]) return P(e(idx[0]), e(idx[0]));
    return P(e(idx[0]), e(idx[1])) + P(e(idx[1]), e(idx[0]));
  }
  if (identity == axiom::pseudo_derivation) {
    need(4);
    const Vector x = e(idx[0]), y = e(idx[1]), al = e(idx[2]), be = e(idx[3]);
    const Vector xy = P(x, y), ab = P(al, be);
    return T(xy, al, be) - P(T(x, al, be), y) - P(x, T(y, al, be)) - T(ab, x, y) - P(xy, ab);
  }
  throw PreconditionError("unknown identity '" + std::string(identity) + "'");
}

Report jacobi_check(const LieAlgebra& lie) {
  Report report;
  const std::size_t n = lie.dim();
  std::vector<Vector> br;
  br.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) br.push_back(lie.basis_bracket(i, j));
  auto b = [&](std::size_t i, std::size_t j) -> const Vector& { return br[i * n + j]; };
  // [e_i, v] from the table
  auto ad = [&](std::size_t i, const Vector& v) {
    Vector out(n);
    for (std::size_t l = 0; l < n; ++l) out.add_scaled(v[l], b(i, l));
    return out;
  };

  scan<2>(report, axiom::antisymmetry, n, [](const auto& a) { return a[0] <= a[1]; },
          [&](const auto& a) {
            if (a[0] == a[1]) return b(a[0], a[0]);
            return b(a[0], a[1]) + b(a[1], a[0]);
          });
  scan<3>(report, axiom::jacobi, n, all_tuples<3>, [&](const auto& a) {
    const auto [x, y, z] = a;
    return ad(x, b(y, z)) + ad(y, b(z, x)) + ad(z, b(x, y));
  });
  return report;
}

Vector jacobi_residual(const LieAlgebra& lie, std::string_view identity,
                       std::span<const std::size_t> idx) {
  const std::size_t n = lie.dim();
  auto e = [n](std::size_t i) { return Vector::unit(n, i); };
  if (identity == axiom::antisymmetry && idx.size() == 2) {
    if (idx[0] == idx[1]) return lie.bracket(e(idx[0]), e(idx[0]));
    return lie.bracket(e(idx[0]), e(idx[1])) + lie.bracket(e(idx[1]), e(idx[0]));
  }
  if (identity == axiom::jacobi && idx.size() == 3) {
    const Vector x = e(idx[0]), y = e(idx[1]), z = e(idx[2]);
    return lie.bracket(x, lie.bracket(y, z)) + lie.bracket(y, lie.bracket(z, x)) +
           lie.bracket(z, lie.bracket(x, y));
  }
  throw PreconditionError("unknown Lie identity '" + std::string(identity) + "'");
}

// ---------------------------------------------------------------- constructors

BolAlgebra opposite(const BolAlgebra& a, OppositeVariant variant) {
  const std::size_t n = a.dim();
  BolAlgebra out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.bin(i, j, k) = -a.bin(i, j, k);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t l = 0; l < n; ++l)
          out.ter(x, y, z, l) =
              variant == OppositeVariant::section2 ? -a.ter(z, x, y, l) : -a.ter(x, y, z, l);
  return out;
}

BolAlgebra from_lie_algebra(const LieAlgebra& lie) {
  const Report jac = jacobi_check(lie);
  if (!jac.passed())
    throw PreconditionError("from_lie_algebra: input is not a Lie algebra\n" + to_string(jac));
  const std::size_t n = lie.dim();
  BolAlgebra out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set_product(i, j, lie.basis_bracket(i, j));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vector ex = Vector::unit(n, x);
      for (std::size_t z = 0; z < n; ++z)
        out.set_triple(x, y, z, lie.bracket(ex, lie.basis_bracket(y, z)));
    }
  return out;
}

}  // namespace bolalg
