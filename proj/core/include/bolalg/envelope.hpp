#pragma once

#include <utility>
#include <vector>

#include "bolalg/algebra.hpp"

namespace bolalg {

enum class EnvelopeScheme {
  /// [x,y] = x·y + x∧y, [z, x∧y] = (z;x,y),
  /// [x∧y, u∧v] = -(D_{x,y}u ∧ v + u ∧ D_{x,y}v)
  lts_standard,
  /// Same shape with the opposite sign on every ternary term:
  /// [x∧y, z] = (z;x,y), [x∧y, u∧v] = D_{x,y}u ∧ v + u ∧ D_{x,y}v
  printed,
};

/// G = B (+) Λ²B. Coordinates 0..n-1 are B; wedge e_i∧e_j (i < j) follows
/// in lexicographic order.
struct EnvelopingAlgebra {
  BolAlgebra base;
  LieAlgebra total;
  std::vector<std::pair<std::size_t, std::size_t>> wedges;  // 0-based (i, j), i < j

  std::size_t wedge_index(std::size_t i, std::size_t j) const;
};

EnvelopingAlgebra build_envelope(const BolAlgebra& algebra,
                                 EnvelopeScheme scheme = EnvelopeScheme::lts_standard);

namespace envelope_check {
inline constexpr std::string_view binary_retraction = "retraction-binary";
inline constexpr std::string_view ternary_retraction = "retraction-ternary";
inline constexpr std::string_view binary_recovered = "recovered-binary";
inline constexpr std::string_view ternary_recovered = "recovered-ternary";
}  // namespace envelope_check

/// Jacobi on all basis triples of G, then the retraction laws:
/// B-part of [x,y] is x·y, and B-part of [z,[x,y]] minus z·(x·y) is (z;x,y).
Report verify_envelope(const EnvelopingAlgebra& envelope);

class RoundTripError : public PreconditionError {
 public:
  RoundTripError(const std::string& what, Check failed)
      : PreconditionError(what), failed_(std::move(failed)) {}
  const Check& failed() const noexcept { return failed_; }

 private:
  Check failed_;
};

struct RoundTrip {
  BolAlgebra recovered;
  Report report;
};

/// from_lie_pair(G, B-part, Λ²-part) compared entrywise with the input.
/// Throws RoundTripError naming the first failed precondition.
RoundTrip roundtrip(const BolAlgebra& algebra, EnvelopeScheme scheme = EnvelopeScheme::lts_standard);

}  // namespace bolalg
