#pragma once

#include <string_view>
#include <vector>

#include "bolalg/ideals.hpp"

namespace bolalg {

/// Bol module V over an n-dimensional algebra, stored by action matrices on
/// basis elements (all m x m):
///   left(i)     v -> e_i · v        (L)
///   right(i)    v -> v · e_i        (R)
///   vbb(i, j)   v -> [v; e_i, e_j]  (r)
///   bvb(i, j)   v -> [e_i; v, e_j]  (c)
///   bbv(i, j)   v -> [e_i; e_j, v]  (m)
class BolModule {
 public:
  BolModule() = default;
  BolModule(std::size_t alg_dim, std::size_t mod_dim);

  std::size_t alg_dim() const noexcept { return n_; }
  std::size_t mod_dim() const noexcept { return m_; }

  const Matrix& left(std::size_t i) const { return left_[i]; }
  Matrix& left(std::size_t i) { return left_[i]; }
  const Matrix& right(std::size_t i) const { return right_[i]; }
  Matrix& right(std::size_t i) { return right_[i]; }
  const Matrix& vbb(std::size_t i, std::size_t j) const { return vbb_[i * n_ + j]; }
  Matrix& vbb(std::size_t i, std::size_t j) { return vbb_[i * n_ + j]; }
  const Matrix& bvb(std::size_t i, std::size_t j) const { return bvb_[i * n_ + j]; }
  Matrix& bvb(std::size_t i, std::size_t j) { return bvb_[i * n_ + j]; }
  const Matrix& bbv(std::size_t i, std::size_t j) const { return bbv_[i * n_ + j]; }
  Matrix& bbv(std::size_t i, std::size_t j) { return bbv_[i * n_ + j]; }

  /// left(i) = a and right(i) = -a, the skew convention of axiom (1).
  void set_skew_action(std::size_t i, const Matrix& a);

  // Operator views on arbitrary algebra elements.
  Matrix L(const Vector& tau) const;
  Matrix R(const Vector& tau) const;
  Matrix r(const Vector& alpha, const Vector& beta) const;
  Matrix c(const Vector& alpha, const Vector& beta) const;
  Matrix m(const Vector& alpha, const Vector& beta) const;

  friend bool operator==(const BolModule&, const BolModule&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Matrix> left_, right_, vbb_, bvb_, bbv_;
};

/// Which reading of the printed module identities to check.
///  normalized: (3) as the cyclic identity, (5) and p5 from axiom (iv) with
///              v in the second slot, p4 with (alpha;beta,gamma).
///  printed:    the identities exactly as stated.
enum class AxiomForm { normalized, printed };

namespace module_axiom {
inline constexpr std::string_view action_skew = "axiom-1-action-skew";
inline constexpr std::string_view r_skew = "axiom-2-r-skew";
inline constexpr std::string_view cyclic = "axiom-3-cyclic";
inline constexpr std::string_view derivation = "axiom-4-derivation";
inline constexpr std::string_view pseudo_derivation = "axiom-5-pseudo-derivation";
inline constexpr std::string_view p1 = "p1";
inline constexpr std::string_view p2 = "p2";
inline constexpr std::string_view p3 = "p3";
inline constexpr std::string_view p4 = "p4";
inline constexpr std::string_view p5 = "p5";
inline constexpr std::string_view composite = "composite";
}  // namespace module_axiom

/// Module identities (1)-(5) on all basis tuples. Witness indices are the
/// algebra basis indices in the identity's variable order, the residual is
/// the flattened operator difference.
Report check_module(const BolAlgebra& algebra, const BolModule& module,
                    AxiomForm form = AxiomForm::normalized);

/// p1-p5 as operator equations. p2 is always the printed m + r = 0.
Report check_p_properties(const BolAlgebra& algebra, const BolModule& module,
                          AxiomForm form = AxiomForm::normalized);

enum class CompositeForm {
  literal,  ///< as printed, with r(beta,alpha)∘m(alpha,tau)
  derived,  ///< p4 with c replaced by -m-r
};

Report check_prop_composite(const BolAlgebra& algebra, const BolModule& module, CompositeForm form);

BolModule regular_module(const BolAlgebra& algebra);
BolModule zero_module(std::size_t alg_dim, std::size_t mod_dim);
BolModule direct_sum(const BolModule& v, const BolModule& w);

struct Extension {
  BolAlgebra algebra;  ///< first n coordinates are B, the rest V
  Report report;
};

/// Split extension B (+) V. Binary (b+v)·(b'+v') = b·b' + b·v' + v·b';
/// exactly one module slot uses the matching action; two or more give 0.
Extension extension_algebra(const BolAlgebra& algebra, const BolModule& module,
                            Profile profile = Profile::consistent,
                            IdealMode mode = IdealMode::literal);

/// Flattens an operator difference into a witness residual.
Vector flatten(const Matrix& m);

}  // namespace bolalg
