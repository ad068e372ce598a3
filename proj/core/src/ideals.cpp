#include "bolalg/ideals.hpp"

namespace bolalg {

namespace {

void require_ambient(const BolAlgebra& a, const Subspace& s, const char* what) {
  if (s.ambient_dim() != a.dim())
    throw DimensionError(std::string(what) + ": subspace ambient dimension " +
                         std::to_string(s.ambient_dim()) + " != algebra dimension " +
                         std::to_string(a.dim()));
}

/// One product with an element u of a subspace placed in a given slot and
/// basis vectors elsewhere. `slot` 0 is binary left, 1 binary right, 2..4
/// ternary slots 1..3.
struct SlotProduct {
  std::size_t slot;
  std::size_t j;
  std::size_t k;  // unused for binary
  Vector value;
};

const char* slot_name(std::size_t slot) {
  switch (slot) {
    case 0: return "I·B";
    case 1: return "B·I";
    case 2: return "(I;B,B)";
    case 3: return "(B;I,B)";
    default: return "(B;B,I)";
  }
}

template <typename Visit>
void for_each_slot_product(const BolAlgebra& a, const Vector& u, IdealMode mode, Visit visit) {
  const std::size_t n = a.dim();
  const bool strong = mode == IdealMode::strong;
  for (std::size_t j = 0; j < n; ++j) {
    const Vector ej = Vector::unit(n, j);
    if (!visit(SlotProduct{0, j, 0, a.product(u, ej)})) return;
    if (strong && !visit(SlotProduct{1, j, 0, a.product(ej, u)})) return;
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const Vector ej = Vector::unit(n, j), ek = Vector::unit(n, k);
      if (!visit(SlotProduct{2, j, k, a.triple(u, ej, ek)})) return;
      if (strong) {
        if (!visit(SlotProduct{3, j, k, a.triple(ej, u, ek)})) return;
        if (!visit(SlotProduct{4, j, k, a.triple(ej, ek, u)})) return;
      }
    }
}

/// First product of an I-basis vector that leaves `target`.
std::optional<Witness> first_escape(const BolAlgebra& a, const Subspace& ideal,
                                    const Subspace& target, IdealMode mode) {
  std::optional<Witness> found;
  for (std::size_t b = 0; b < ideal.dim() && !found; ++b) {
    for_each_slot_product(a, ideal.basis_vector(b), mode, [&](const SlotProduct& p) {
      if (target.contains(p.value)) return true;
      Witness w;
      w.indices = {b + 1, p.j + 1};
      if (p.slot >= 2) w.indices.push_back(p.k + 1);
      w.residual = p.value;
      w.detail = std::string(slot_name(p.slot)) + ": ideal basis vector " + std::to_string(b + 1) +
                 " with e" + std::to_string(p.j + 1) +
                 (p.slot >= 2 ? ", e" + std::to_string(p.k + 1) : std::string()) +
                 " gives " + to_string(p.value);
      found = std::move(w);
      return false;
    });
  }
  return found;
}

}  // namespace

// ---------------------------------------------------------------- Morphism

Morphism::Morphism(BolAlgebra source, BolAlgebra target, Matrix map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.rows() != target_.dim() || map_.cols() != source_.dim())
    throw DimensionError("morphism matrix is " + std::to_string(map_.rows()) + "x" +
                         std::to_string(map_.cols()) + ", expected " +
                         std::to_string(target_.dim()) + "x" + std::to_string(source_.dim()));
}

Morphism Morphism::identity(const BolAlgebra& a) {
  return Morphism(a, a, Matrix::identity(a.dim()));
}

Morphism Morphism::zero(const BolAlgebra& source, const BolAlgebra& target) {
  return Morphism(source, target, Matrix(target.dim(), source.dim()));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.target().dim() != g.source().dim())
    throw DimensionError("compose: target of f does not match source of g");
  return Morphism(f.source(), g.target(), g.matrix() * f.matrix());
}

// ---------------------------------------------------------------- ideals

Verdict is_ideal(const BolAlgebra& algebra, const Subspace& ideal, IdealMode mode) {
  require_ambient(algebra, ideal, "is_ideal");
  if (auto w = first_escape(algebra, ideal, ideal, mode)) return Verdict::no(std::move(*w));
  return Verdict::yes();
}

Subspace ideal_closure(const BolAlgebra& algebra, const Subspace& generators, IdealMode mode) {
  require_ambient(algebra, generators, "ideal_closure");
  Subspace current = generators;
  while (true) {
    std::vector<Vector> gens = current.basis();
    for (std::size_t b = 0; b < current.dim(); ++b)
      for_each_slot_product(algebra, current.basis_vector(b), mode, [&](const SlotProduct& p) {
        if (!p.value.is_zero()) gens.push_back(p.value);
        return true;
      });
    Subspace next = Subspace::span(algebra.dim(), gens);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

Verdict is_subalgebra(const BolAlgebra& algebra, const Subspace& sub) {
  require_ambient(algebra, sub, "is_subalgebra");
  const auto basis = sub.basis();
  const std::size_t k = basis.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vector p = algebra.product(basis[i], basis[j]);
      if (!sub.contains(p))
        return Verdict::no(Witness{{i + 1, j + 1}, std::move(p), "binary product leaves subspace"});
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        Vector t = algebra.triple(basis[i], basis[j], basis[l]);
        if (!sub.contains(t))
          return Verdict::no(
              Witness{{i + 1, j + 1, l + 1}, std::move(t), "ternary product leaves subspace"});
      }
  return Verdict::yes();
}

BolAlgebra restrict_to(const BolAlgebra& algebra, const Subspace& sub) {
  const Verdict closed = is_subalgebra(algebra, sub);
  if (!closed) throw PreconditionError("restrict_to: " + closed.witness->detail);
  const auto basis = sub.basis();
  const std::size_t k = basis.size();
  BolAlgebra out(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      out.set_product(i, j, *sub.coordinates(algebra.product(basis[i], basis[j])));
      for (std::size_t l = 0; l < k; ++l)
        out.set_triple(i, j, l, *sub.coordinates(algebra.triple(basis[i], basis[j], basis[l])));
    }
  return out;
}

Quotient quotient(const BolAlgebra& algebra, const Subspace& ideal, IdealMode mode) {
  require_ambient(algebra, ideal, "quotient");
  if (auto w = first_escape(algebra, ideal, ideal, mode))
    throw QuotientError("quotient: subspace is not an ideal (" + w->detail + ")", "not-an-ideal",
                        std::move(*w));
  // Changing a representative by u in I moves a product by that product with
  // u in one slot; all such products must vanish modulo I.
  if (auto w = first_escape(algebra, ideal, ideal, IdealMode::strong))
    throw QuotientError("quotient: operations are not well defined modulo the ideal (" +
                            w->detail + ")",
                        "ill-defined", std::move(*w));

  const std::size_t n = algebra.dim();
  const std::vector<std::size_t> comp = ideal.complement_indices();
  const std::size_t q = comp.size();

  Matrix proj(q, n);
  for (std::size_t col = 0; col < n; ++col) {
    const Vector r = ideal.reduce(Vector::unit(n, col));
    for (std::size_t a = 0; a < q; ++a) proj(a, col) = r[comp[a]];
  }
  auto project = [&](const Vector& v) { return proj.apply(v); };

  BolAlgebra out(q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      const Vector ea = Vector::unit(n, comp[a]), eb = Vector::unit(n, comp[b]);
      out.set_product(a, b, project(algebra.product(ea, eb)));
      for (std::size_t c = 0; c < q; ++c)
        out.set_triple(a, b, c, project(algebra.triple(ea, eb, Vector::unit(n, comp[c]))));
    }
  return Quotient{out, Morphism(algebra, out, std::move(proj))};
}

// ---------------------------------------------------------------- morphisms

Verdict is_morphism(const Morphism& f) {
  const BolAlgebra& s = f.source();
  const BolAlgebra& t = f.target();
  const std::size_t n = s.dim();
  std::vector<Vector> img;
  img.reserve(n);
  for (std::size_t i = 0; i < n; ++i) img.push_back(f.matrix().col(i));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector r = f.apply(s.basis_product(i, j)) - t.product(img[i], img[j]);
      if (!r.is_zero())
        return Verdict::no(Witness{{i + 1, j + 1}, std::move(r), "binary: f(x·y) != f(x)·f(y)"});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector r = f.apply(s.basis_triple(i, j, k)) - t.triple(img[i], img[j], img[k]);
        if (!r.is_zero())
          return Verdict::no(Witness{{i + 1, j + 1, k + 1}, std::move(r),
                                     "ternary: f((x;y,z)) != (f(x);f(y),f(z))"});
      }
  return Verdict::yes();
}

KernelImage kernel_image(const Morphism& f) {
  const Verdict m = is_morphism(f);
  if (!m) throw PreconditionError("kernel_image: map is not a morphism (" + m.witness->detail + ")");
  Subspace ker = nullspace(f.matrix());
  Subspace im = column_space(f.matrix());
  Verdict ker_ideal = is_ideal(f.source(), ker, IdealMode::literal);
  Verdict im_sub = is_subalgebra(f.target(), im);
  return KernelImage{std::move(ker), std::move(im), std::move(ker_ideal), std::move(im_sub)};
}

FirstIso first_iso(const Morphism& f) {
  const KernelImage ki = kernel_image(f);
  const Quotient quot = quotient(f.source(), ki.kernel, IdealMode::literal);
  const BolAlgebra image = restrict_to(f.target(), ki.image);

  const std::vector<std::size_t> comp = ki.kernel.complement_indices();
  Matrix induced(ki.image.dim(), comp.size());
  for (std::size_t a = 0; a < comp.size(); ++a)
    induced.set_col(a, *ki.image.coordinates(f.matrix().col(comp[a])));

  Morphism iso(quot.algebra, image, induced);
  const std::size_t rk = rank(induced);
  const bool bijective = rk == comp.size() && rk == ki.image.dim();
  Verdict morph = is_morphism(iso);
  return FirstIso{std::move(iso), bijective, std::move(morph)};
}

}  // namespace bolalg
