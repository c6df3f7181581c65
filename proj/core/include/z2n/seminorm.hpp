#ifndef Z2N_SEMINORM_HPP
#define Z2N_SEMINORM_HPP

#include <optional>
#include <span>
#include <vector>

#include "z2n/diff_operator.hpp"
#include "z2n/morphism.hpp"

namespace z2n {

using Point = std::vector<Rational>;

/// Closed rational box in the degree-zero coordinates with g sample points per
/// axis: a_i + j (b_i - a_i) / (g - 1).
class CompactBox {
 public:
  CompactBox(std::vector<Interval> intervals, unsigned grid);
  /// [-k, k]^p
  static CompactBox cube(std::size_t p, const Rational& k, unsigned grid);

  std::size_t dimension() const noexcept { return intervals_.size(); }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  unsigned grid() const noexcept { return grid_; }

  std::vector<Point> points() const;
  Domain domain() const { return Domain::box(intervals_); }
  bool contains(const CompactBox& other) const;

  friend bool operator==(const CompactBox&, const CompactBox&) = default;

 private:
  std::vector<Interval> intervals_;
  unsigned grid_;
};

/// max |p(x)| over the given points (0 for an empty set).
Rational grid_sup(const Polynomial& p, std::span<const Point> points);
Rational grid_sup(const Polynomial& p, const CompactBox& box);

enum class SeminormKind { CD, Cab, Rho, Base };

/// One member of a seminorm family.
///   CD:   sup_C |eps(D f)|
///   Cab:  sup_C |eps(d_xi^beta d_x^alpha f)|
///   Rho:  2^(m+mu) max_{|alpha|<=m, |beta|<=mu} Cab
///   Base: sup_C |Delta(f_beta)| for a base operator Delta (x-derivatives,
///         polynomial coefficients)
struct SeminormSpec {
  SeminormKind kind;
  CompactBox box;
  std::optional<DiffOperator> op;
  Exponents alpha;
  XiKey beta;
  unsigned m = 0;
  unsigned mu = 0;

  static SeminormSpec cd(CompactBox box, DiffOperator op);
  static SeminormSpec cab(CompactBox box, Exponents alpha, XiKey beta);
  static SeminormSpec rho(CompactBox box, unsigned m, unsigned mu);
  static SeminormSpec base(CompactBox box, DiffOperator op, XiKey beta);

  friend bool operator==(const SeminormSpec&, const SeminormSpec&) = default;
};

/// Grid-sup value of the seminorm on f. Throws on chart or domain mismatch.
Rational eval_seminorm(const SeminormSpec& s, const GradedSeries& f);

struct SubmultiplicativeReport {
  Rational product;  // rho(f g)
  Rational left;     // rho(f)
  Rational right;    // rho(g)
  bool holds;
};

SubmultiplicativeReport check_submultiplicative(const SeminormSpec& rho, const GradedSeries& f,
                                                const GradedSeries& g);

/// Constants bounding p_{C,D} by the p_{C_n,alpha,beta} with |alpha|+|beta| <= order(D).
/// Outer suprema run over the outer grid together with the inner grid, so every
/// point where the left side is sampled is also sampled on the right.
struct EquivalenceBound {
  DiffOperator op;
  CompactBox inner;
  CompactBox outer;
  std::vector<Point> outer_points;
  Rational constant;           // 1 + max sup |eps D_ab|
  Rational weighted_constant;  // 1 + max sup |beta! eps D_ab|
};

EquivalenceBound equivalence_constant(const DiffOperator& d, const CompactBox& inner,
                                      const CompactBox& outer);

struct EquivalenceCheck {
  Rational lhs;           // p_{C,D}(f)
  Rational rhs;           // sum of sup |eps(d_xi^beta d_x^alpha f)|
  Rational weighted_rhs;  // sum of sup |d_x^alpha f_beta|
  bool holds;             // both forms
};

EquivalenceCheck check_equivalence(const EquivalenceBound& bound, const GradedSeries& f);

struct MetricSpec {
  std::vector<SeminormSpec> family;
  unsigned terms = 16;
};

/// rho seminorms on the cubes [-k,k]^p ordered by (k-1)+m+mu, then k ascending,
/// then m descending; `terms` members.
MetricSpec default_metric(const Chart& chart, unsigned terms = 16, unsigned grid = 5);

struct Distance {
  Rational value;
  Rational tail_bound;  // bound on the omitted members of the full series
};

/// sum_{n < T} 2^-n p_n(f-g) / (1 + p_n(f-g)).
Distance metric_distance(const MetricSpec& metric, const GradedSeries& f, const GradedSeries& g);

/// rows: sequence elements, columns: family members.
std::vector<std::vector<Rational>> seminorm_table(std::span<const GradedSeries> sequence,
                                                  std::span<const SeminormSpec> family);

/// Derivative and integer point at which eps(d_xi^beta d_x^alpha f) is nonzero.
struct SeparationWitness {
  Exponents alpha;
  XiKey beta;
  Point point;
  Rational value;
};

/// Throws ValidationError for the zero series and Error if no point is found
/// within the search radius.
SeparationWitness separation_witness(const GradedSeries& f, unsigned radius_cap = 64);

/// Seminorm p_{C,(1/beta!) d_xi^beta o Delta} matching a Base spec.
SeminormSpec product_partner(const SeminormSpec& base);

/// sup_C |eps(d^alpha phi^* f)| against sum_gamma sup_C |eps F_gamma| sup_{phi(grid)} |eps d^gamma f|.
struct ContinuityReport {
  Rational lhs;
  Rational rhs;
  bool holds;
};

ContinuityReport continuity_check(const MorphismSpec& phi, const GradedSeries& f,
                                  const MultiIndex& alpha, const CompactBox& box);

}  // namespace z2n

#endif  // Z2N_SEMINORM_HPP
