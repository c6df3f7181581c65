#ifndef Z2N_MORPHISM_HPP
#define Z2N_MORPHISM_HPP

#include <map>
#include <vector>

#include "z2n/diff_operator.hpp"
#include "z2n/series.hpp"

namespace z2n {

/// Chart-level Z_2^n-morphism, given by the pullbacks of the target
/// coordinates v = (y, theta) as series on the source chart.
///
/// Construction enforces that every image has the degree of its coordinate
/// (or is zero) and that images of nonzero-degree coordinates lie in ker epsilon.
class MorphismSpec {
 public:
  MorphismSpec(Chart source, Chart target, std::vector<GradedSeries> images);

  static MorphismSpec identity(Chart chart);

  const Chart& source() const noexcept { return source_; }
  const Chart& target() const noexcept { return target_; }
  const std::vector<GradedSeries>& images() const noexcept { return images_; }
  const GradedSeries& image(std::size_t target_coord) const { return images_.at(target_coord); }

  /// epsilon of the images of y^1..y^p: the underlying polynomial map.
  std::vector<Polynomial> base_map() const;

  friend bool operator==(const MorphismSpec& a, const MorphismSpec& b);

 private:
  Chart source_;
  Chart target_;
  std::vector<GradedSeries> images_;
};

/// phi^* f. Coefficients are pulled back by the finite Taylor expansion
/// f_k(y0 + w) = sum_l (d^l f_k)(y0) w^l / l! around the base map y0 = epsilon(phi^* y);
/// w lies in J, so the sum stops below the source truncation order.
GradedSeries pullback(const MorphismSpec& phi, const GradedSeries& f);

/// psi o phi, i.e. (psi o phi)^* = phi^* o psi^*. Requires target(phi) = source(psi).
MorphismSpec compose_morphisms(const MorphismSpec& phi, const MorphismSpec& psi);

struct IdentityReport {
  GradedSeries lhs;
  GradedSeries rhs;
  GradedSeries residual;
  bool holds;
};

/// Compares d_A(phi^* f) with sum_B d_A(phi^* v^B) phi^*(d_B f) modulo the
/// common trusted order.
IdentityReport chain_rule_check(const MorphismSpec& phi, const GradedSeries& f,
                                std::size_t source_coord);

/// d_u^alpha(phi^* f) = sum_gamma F_gamma phi^*(d_v^gamma f), built by iterating
/// the chain rule. factors holds the F_gamma.
struct FaaDiBrunoExpansion {
  std::map<MultiIndex, GradedSeries, DerivativeOrder> factors;
  GradedSeries value;
};

FaaDiBrunoExpansion faa_di_bruno_expand(const MorphismSpec& phi, const GradedSeries& f,
                                        const MultiIndex& alpha);

/// Expansion against direct differentiation of the pullback.
IdentityReport faa_di_bruno_check(const MorphismSpec& phi, const GradedSeries& f,
                                  const MultiIndex& alpha);

}  // namespace z2n

#endif  // Z2N_MORPHISM_HPP
