#include "bolalg/module.hpp"

#include <array>

namespace bolalg {

namespace {

void require_alg(const BolAlgebra& a, const BolModule& v, const char* what) {
  if (a.dim() != v.alg_dim())
    throw DimensionError(std::string(what) + ": module is over a " + std::to_string(v.alg_dim()) +
                         "-dimensional algebra, got dimension " + std::to_string(a.dim()));
}

/// Walks all basis tuples of the given arity in lexicographic order and
/// records the first nonzero operator residual.
template <std::size_t K, typename Residual>
void scan_ops(Report& report, std::string_view name, std::size_t n, Residual residual) {
  std::array<std::size_t, K> idx{};
  if (n == 0) {
    report.add_pass(std::string(name));
    return;
  }
  while (true) {
    const Matrix r = residual(idx);
    if (!r.is_zero()) {
      Witness w;
      for (auto i : idx) w.indices.push_back(i + 1);
      w.residual = flatten(r);
      report.add_fail(std::string(name), std::move(w));
      return;
    }
    std::size_t pos = K;
    while (true) {
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

/// Basis operators, cached once per check.
struct Ops {
  const BolAlgebra& a;
  const BolModule& v;
  std::size_t n;

  Ops(const BolAlgebra& alg, const BolModule& mod) : a(alg), v(mod), n(alg.dim()) {}

  Vector e(std::size_t i) const { return Vector::unit(n, i); }
  const Matrix& L(std::size_t i) const { return v.left(i); }
  const Matrix& R(std::size_t i) const { return v.right(i); }
  const Matrix& r(std::size_t i, std::size_t j) const { return v.vbb(i, j); }
  const Matrix& c(std::size_t i, std::size_t j) const { return v.bvb(i, j); }
  const Matrix& m(std::size_t i, std::size_t j) const { return v.bbv(i, j); }
};

Matrix axiom4(const Ops& o, std::size_t a, std::size_t b, std::size_t g, std::size_t t,
              bool printed) {
  const Vector x = printed ? o.a.basis_triple(g, a, b) : o.a.basis_triple(a, b, g);
  return o.v.c(x, o.e(t)) - o.m(a, b) * o.c(g, t) - o.c(a, g) * o.c(b, t) - o.r(b, g) * o.c(a, t);
}

Matrix axiom5(const Ops& o, std::size_t a, std::size_t b, std::size_t t, bool printed) {
  const Vector d = o.a.basis_triple(t, a, b);
  if (printed) {
    const Vector ba = o.a.basis_product(b, a);
    return o.m(a, b) * o.L(t) - o.v.L(d) - o.L(t) * o.r(a, b) - o.v.m(ba, o.e(t)) -
           o.v.L(ba) * o.L(t);
  }
  const Vector ab = o.a.basis_product(a, b);
  return o.r(a, b) * o.L(t) - o.v.L(d) - o.L(t) * o.r(a, b) - o.v.m(ab, o.e(t)) -
         o.v.R(ab) * o.L(t);
}

Matrix axiom3(const Ops& o, std::size_t a, std::size_t b, bool printed) {
  return o.m(a, b) + (printed ? o.c(a, b) : o.c(b, a)) + o.r(a, b);
}

Matrix combine(const Matrix& zero_like, std::size_t n, const Vector& coeffs,
               const std::vector<Matrix>& mats) {
  Matrix out = zero_like;
  for (std::size_t i = 0; i < n; ++i)
    if (coeffs[i] != 0) out.add_scaled(coeffs[i], mats[i]);
  return out;
}

Matrix combine2(std::size_t m, std::size_t n, const Vector& a, const Vector& b,
                const std::vector<Matrix>& mats) {
  Matrix out(m, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b[j] != 0) out.add_scaled(a[i] * b[j], mats[i * n + j]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- BolModule

BolModule::BolModule(std::size_t alg_dim, std::size_t mod_dim)
    : n_(alg_dim),
      m_(mod_dim),
      left_(alg_dim, Matrix(mod_dim, mod_dim)),
      right_(alg_dim, Matrix(mod_dim, mod_dim)),
      vbb_(alg_dim * alg_dim, Matrix(mod_dim, mod_dim)),
      bvb_(alg_dim * alg_dim, Matrix(mod_dim, mod_dim)),
      bbv_(alg_dim * alg_dim, Matrix(mod_dim, mod_dim)) {}

void BolModule::set_skew_action(std::size_t i, const Matrix& a) {
  left_[i] = a;
  right_[i] = Scalar(-1) * a;
}

Matrix BolModule::L(const Vector& tau) const {
  if (tau.size() != n_) throw DimensionError("L: argument dimension");
  return combine(Matrix(m_, m_), n_, tau, left_);
}

Matrix BolModule::R(const Vector& tau) const {
  if (tau.size() != n_) throw DimensionError("R: argument dimension");
  return combine(Matrix(m_, m_), n_, tau, right_);
}

Matrix BolModule::r(const Vector& alpha, const Vector& beta) const {
  if (alpha.size() != n_ || beta.size() != n_) throw DimensionError("r: argument dimension");
  return combine2(m_, n_, alpha, beta, vbb_);
}

Matrix BolModule::c(const Vector& alpha, const Vector& beta) const {
  if (alpha.size() != n_ || beta.size() != n_) throw DimensionError("c: argument dimension");
  return combine2(m_, n_, alpha, beta, bvb_);
}

Matrix BolModule::m(const Vector& alpha, const Vector& beta) const {
  if (alpha.size() != n_ || beta.size() != n_) throw DimensionError("m: argument dimension");
  return combine2(m_, n_, alpha, beta, bbv_);
}

Vector flatten(const Matrix& m) {
  Vector out(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r * m.cols() + c] = m(r, c);
  return out;
}

// ---------------------------------------------------------------- checks

Report check_module(const BolAlgebra& algebra, const BolModule& module, AxiomForm form) {
  require_alg(algebra, module, "check_module");
  const Ops o(algebra, module);
  const std::size_t n = o.n;
  const bool printed = form == AxiomForm::printed;
  Report report;
  namespace ax = module_axiom;
  scan_ops<1>(report, ax::action_skew, n, [&](const auto& i) { return o.L(i[0]) + o.R(i[0]); });
  scan_ops<2>(report, ax::r_skew, n,
              [&](const auto& i) { return o.r(i[0], i[1]) + o.r(i[1], i[0]); });
  scan_ops<2>(report, ax::cyclic, n,
              [&](const auto& i) { return axiom3(o, i[0], i[1], printed); });
  scan_ops<4>(report, ax::derivation, n,
              [&](const auto& i) { return axiom4(o, i[0], i[1], i[2], i[3], false); });
  scan_ops<3>(report, ax::pseudo_derivation, n,
              [&](const auto& i) { return axiom5(o, i[0], i[1], i[2], printed); });
  return report;
}

Report check_p_properties(const BolAlgebra& algebra, const BolModule& module, AxiomForm form) {
  require_alg(algebra, module, "check_p_properties");
  const Ops o(algebra, module);
  const std::size_t n = o.n;
  const bool printed = form == AxiomForm::printed;
  Report report;
  namespace ax = module_axiom;
  scan_ops<1>(report, ax::p1, n, [&](const auto& i) { return o.R(i[0]) + o.L(i[0]); });
  scan_ops<2>(report, ax::p2, n, [&](const auto& i) { return o.m(i[0], i[1]) + o.r(i[0], i[1]); });
  scan_ops<2>(report, ax::p3, n, [&](const auto& i) { return axiom3(o, i[0], i[1], printed); });
  scan_ops<4>(report, ax::p4, n,
              [&](const auto& i) { return axiom4(o, i[0], i[1], i[2], i[3], printed); });
  scan_ops<3>(report, ax::p5, n,
              [&](const auto& i) { return axiom5(o, i[0], i[1], i[2], printed); });
  return report;
}

Report check_prop_composite(const BolAlgebra& algebra, const BolModule& module, CompositeForm form) {
  require_alg(algebra, module, "check_prop_composite");
  const Ops o(algebra, module);
  const bool literal = form == CompositeForm::literal;
  Report report;
  scan_ops<4>(report, module_axiom::composite, o.n, [&](const auto& i) {
    const auto [a, b, g, t] = i;
    const Vector x = literal ? algebra.basis_triple(g, a, b) : algebra.basis_triple(a, b, g);
    const Matrix& slipped = literal ? o.r(b, a) : o.r(b, g);
    const Vector et = o.e(t);
    Matrix lhs = o.m(a, b) * o.m(g, t) + o.m(a, b) * o.r(g, t) + slipped * o.m(a, t) +
                 o.r(b, g) * o.r(a, t);
    Matrix rhs = module.m(x, et) + module.r(x, et) + o.m(a, g) * o.m(b, t) +
                 o.m(a, g) * o.r(b, t) + o.r(a, g) * o.m(b, t) + o.r(a, g) * o.r(b, t);
    return lhs - rhs;
  });
  return report;
}

// ---------------------------------------------------------------- builders

BolModule regular_module(const BolAlgebra& a) {
  const std::size_t n = a.dim();
  BolModule v(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      v.left(i).set_col(k, a.basis_product(i, k));
      v.right(i).set_col(k, a.basis_product(k, i));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        v.vbb(i, j).set_col(k, a.basis_triple(k, i, j));
        v.bvb(i, j).set_col(k, a.basis_triple(i, k, j));
        v.bbv(i, j).set_col(k, a.basis_triple(i, j, k));
      }
  return v;
}

BolModule zero_module(std::size_t alg_dim, std::size_t mod_dim) {
  return BolModule(alg_dim, mod_dim);
}

BolModule direct_sum(const BolModule& v, const BolModule& w) {
  if (v.alg_dim() != w.alg_dim())
    throw DimensionError("direct_sum: modules over algebras of different dimension");
  const std::size_t n = v.alg_dim();
  BolModule out(n, v.mod_dim() + w.mod_dim());
  for (std::size_t i = 0; i < n; ++i) {
    out.left(i) = block_diagonal(v.left(i), w.left(i));
    out.right(i) = block_diagonal(v.right(i), w.right(i));
    for (std::size_t j = 0; j < n; ++j) {
      out.vbb(i, j) = block_diagonal(v.vbb(i, j), w.vbb(i, j));
      out.bvb(i, j) = block_diagonal(v.bvb(i, j), w.bvb(i, j));
      out.bbv(i, j) = block_diagonal(v.bbv(i, j), w.bbv(i, j));
    }
  }
  return out;
}

Extension extension_algebra(const BolAlgebra& a, const BolModule& v, Profile profile,
                            IdealMode mode) {
  require_alg(a, v, "extension_algebra");
  const std::size_t n = a.dim(), m = v.mod_dim(), d = n + m;
  BolAlgebra e(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        e.bin(i, j, l) = a.bin(i, j, l);
        for (std::size_t q = 0; q < n; ++q) e.ter(i, j, l, q) = a.ter(i, j, l, q);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t q = 0; q < m; ++q) {
        e.bin(i, n + k, n + q) = v.left(i)(q, k);
        e.bin(n + k, i, n + q) = v.right(i)(q, k);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t q = 0; q < m; ++q) {
          e.ter(n + k, i, j, n + q) = v.vbb(i, j)(q, k);
          e.ter(i, n + k, j, n + q) = v.bvb(i, j)(q, k);
          e.ter(i, j, n + k, n + q) = v.bbv(i, j)(q, k);
        }

  Report report;
  report.append(check_axioms(e, profile), "extension:");
  std::vector<Vector> vb, bb;
  for (std::size_t k = 0; k < m; ++k) vb.push_back(Vector::unit(d, n + k));
  for (std::size_t i = 0; i < n; ++i) bb.push_back(Vector::unit(d, i));
  const Verdict ideal = is_ideal(e, Subspace::span(d, vb), mode);
  if (ideal) report.add_pass("module-is-ideal");
  else report.add_fail("module-is-ideal", *ideal.witness);
  const Verdict sub = is_subalgebra(e, Subspace::span(d, bb));
  if (sub) report.add_pass("algebra-is-subalgebra");
  else report.add_fail("algebra-is-subalgebra", *sub.witness);
  return Extension{std::move(e), std::move(report)};
}

}  // namespace bolalg
