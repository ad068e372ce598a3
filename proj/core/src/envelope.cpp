#include "bolalg/envelope.hpp"

namespace bolalg {

namespace {

/// Adds coef · (a ∧ b) to the wedge coordinates of `out`.
void add_wedge(Vector& out, const EnvelopingAlgebra& e, const Scalar& coef, const Vector& a,
               const Vector& b) {
  const std::size_t n = e.base.dim();
  for (std::size_t p = 0; p < n; ++p) {
    if (a[p] == 0) continue;
    for (std::size_t q = 0; q < n; ++q) {
      if (b[q] == 0 || p == q) continue;
      const Scalar w = coef * a[p] * b[q];
      if (p < q) out[e.wedge_index(p, q)] += w;
      else out[e.wedge_index(q, p)] -= w;
    }
  }
}

Vector embed_base(const Vector& v, std::size_t total) {
  Vector out(total);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

Vector base_part(const Vector& v, std::size_t n) {
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = v[i];
  return out;
}

}  // namespace

std::size_t EnvelopingAlgebra::wedge_index(std::size_t i, std::size_t j) const {
  const std::size_t n = base.dim();
  if (i >= j || j >= n) throw DimensionError("wedge_index: need i < j < n");
  // Pairs before row i: sum_{r<i} (n-1-r).
  return n + i * (2 * n - i - 1) / 2 + (j - i - 1);
}

EnvelopingAlgebra build_envelope(const BolAlgebra& algebra, EnvelopeScheme scheme) {
  const std::size_t n = algebra.dim();
  const std::size_t total = n + n * (n - 1) / 2;  // 0 when n == 0
  EnvelopingAlgebra e{algebra, LieAlgebra(total), {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.wedges.emplace_back(i, j);
  const Scalar s = scheme == EnvelopeScheme::lts_standard ? 1 : -1;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = embed_base(algebra.basis_product(i, j), total);
      add_wedge(v, e, 1, Vector::unit(n, i), Vector::unit(n, j));
      e.total.set_bracket(i, j, v);
    }

  for (std::size_t w = 0; w < e.wedges.size(); ++w) {
    const auto [i, j] = e.wedges[w];
    const std::size_t wi = n + w;
    for (std::size_t k = 0; k < n; ++k) {
      const Vector d = s * embed_base(algebra.basis_triple(k, i, j), total);
      e.total.set_bracket(k, wi, d);
      e.total.set_bracket(wi, k, -d);
    }
    for (std::size_t w2 = 0; w2 < e.wedges.size(); ++w2) {
      const auto [u, v] = e.wedges[w2];
      Vector out(total);
      const Vector eu = Vector::unit(n, u), ev = Vector::unit(n, v);
      add_wedge(out, e, -s, algebra.basis_triple(u, i, j), ev);
      add_wedge(out, e, -s, eu, algebra.basis_triple(v, i, j));
      e.total.set_bracket(wi, n + w2, out);
    }
  }
  return e;
}

Report verify_envelope(const EnvelopingAlgebra& e) {
  Report report = jacobi_check(e.total);
  const BolAlgebra& b = e.base;
  const std::size_t n = b.dim(), total = e.total.dim();
  auto unit = [total](std::size_t i) { return Vector::unit(total, i); };

  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i)
    for (std::size_t j = 0; j < n && ok; ++j) {
      Vector r = base_part(e.total.bracket(unit(i), unit(j)), n) - b.basis_product(i, j);
      if (!r.is_zero()) {
        report.add_fail(std::string(envelope_check::binary_retraction),
                        Witness{{i + 1, j + 1}, std::move(r), "B-part of [x,y] differs from x·y"});
        ok = false;
      }
    }
  if (ok) report.add_pass(std::string(envelope_check::binary_retraction));

  ok = true;
  for (std::size_t z = 0; z < n && ok; ++z)
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) {
        const Vector inner = e.total.bracket(unit(x), unit(y));
        Vector r = base_part(e.total.bracket(unit(z), inner), n) -
                   b.product(Vector::unit(n, z), b.basis_product(x, y)) - b.basis_triple(z, x, y);
        if (!r.is_zero()) {
          report.add_fail(std::string(envelope_check::ternary_retraction),
                          Witness{{z + 1, x + 1, y + 1}, std::move(r),
                                  "B-part of [z,[x,y]] - z·(x·y) differs from (z;x,y)"});
          ok = false;
        }
      }
  if (ok) report.add_pass(std::string(envelope_check::ternary_retraction));
  return report;
}

RoundTrip roundtrip(const BolAlgebra& algebra, EnvelopeScheme scheme) {
  const EnvelopingAlgebra e = build_envelope(algebra, scheme);
  const std::size_t n = algebra.dim(), total = e.total.dim();

  const Report verified = verify_envelope(e);
  for (const auto& c : verified.checks())
    if (!c.passed) throw RoundTripError("roundtrip: envelope check '" + c.name + "' fails", c);

  std::vector<Vector> bpart, hpart;
  for (std::size_t i = 0; i < n; ++i) bpart.push_back(Vector::unit(total, i));
  for (std::size_t i = n; i < total; ++i) hpart.push_back(Vector::unit(total, i));
  const Subspace bsub = Subspace::span(total, bpart), hsub = Subspace::span(total, hpart);
  const Report pre = lie_pair_preconditions(e.total, bsub, hsub);
  for (const auto& c : pre.checks())
    if (!c.passed) throw RoundTripError("roundtrip: Lie-pair precondition '" + c.name + "' fails", c);

  RoundTrip out{from_lie_pair(e.total, bsub, hsub), {}};
  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i)
    for (std::size_t j = 0; j < n && ok; ++j) {
      Vector r = out.recovered.basis_product(i, j) - algebra.basis_product(i, j);
      if (!r.is_zero()) {
        out.report.add_fail(std::string(envelope_check::binary_recovered),
                            Witness{{i + 1, j + 1}, std::move(r), "recovered minus original"});
        ok = false;
      }
    }
  if (ok) out.report.add_pass(std::string(envelope_check::binary_recovered));
  ok = true;
  for (std::size_t i = 0; i < n && ok; ++i)
    for (std::size_t j = 0; j < n && ok; ++j)
      for (std::size_t k = 0; k < n && ok; ++k) {
        Vector r = out.recovered.basis_triple(i, j, k) - algebra.basis_triple(i, j, k);
        if (!r.is_zero()) {
          out.report.add_fail(std::string(envelope_check::ternary_recovered),
                              Witness{{i + 1, j + 1, k + 1}, std::move(r), "recovered minus original"});
          ok = false;
        }
      }
  if (ok) out.report.add_pass(std::string(envelope_check::ternary_recovered));
  return out;
}

}  // namespace bolalg
