#ifndef Z2N_DIFF_OPERATOR_HPP
#define Z2N_DIFF_OPERATOR_HPP

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "z2n/series.hpp"

namespace z2n {

/// Left graded derivation d/du^coord. x-derivatives keep valid_order, formal
/// ones lower it by one.
GradedSeries partial(const GradedSeries& f, std::size_t coord);
GradedSeries partial(const GradedSeries& f, std::string_view symbol);

/// d_zeta^gamma d_eta^beta d_x^alpha f. Within every block the lowest
/// coordinate acts first, so iterated_partial(I, u^I) = alpha! beta!.
GradedSeries iterated_partial(const GradedSeries& f, const MultiIndex& index);

/// Degree of the derivative d^I as a map: sum of coordinate degrees with multiplicity.
Degree derivative_degree(const ChartSpec& chart, const MultiIndex& index);

/// All derivative multi-indices of total order k with zeta exponents at most one,
/// in DerivativeOrder.
std::vector<MultiIndex> multi_indices_of_order(const ChartSpec& chart, unsigned k);
std::vector<MultiIndex> multi_indices_up_to(const ChartSpec& chart, unsigned k);

/// Order on derivative multi-indices: by |I|, then lexicographic.
struct DerivativeOrder {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Differential operator in normal form sum_I D_I d^I with coefficients on
/// the left of the derivative basis d_zeta^gamma d_eta^beta d_x^alpha.
class DiffOperator {
 public:
  using TermMap = std::map<MultiIndex, GradedSeries, DerivativeOrder>;

  explicit DiffOperator(Chart chart);

  static DiffOperator identity(Chart chart);
  /// m_g : f -> g f
  static DiffOperator multiplication(const GradedSeries& g);
  static DiffOperator derivative(Chart chart, const MultiIndex& index);

  const Chart& chart() const noexcept { return chart_; }
  const TermMap& terms() const noexcept { return terms_; }
  const Domain& domain() const noexcept { return domain_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest |I| over stored terms; -1 for the zero operator.
  int order() const;

  GradedSeries coefficient(const MultiIndex& index) const;
  /// Adds coef * d^index. Indices with a zeta exponent above one are rejected.
  void add_term(const MultiIndex& index, const GradedSeries& coef);

  DiffOperator with_domain(Domain domain) const;

  DiffOperator operator-() const;
  DiffOperator& operator+=(const DiffOperator& other);
  DiffOperator& operator-=(const DiffOperator& other);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator*(const Rational& r, const DiffOperator& d);
  friend bool operator==(const DiffOperator& a, const DiffOperator& b);

 private:
  Chart chart_;
  TermMap terms_;
  Domain domain_;
};

/// sum_I D_I d^I f, trusted modulo J^max(0, v_f - order(D)).
GradedSeries apply(const DiffOperator& d, const GradedSeries& f);

/// Normal form of d o e, obtained by moving derivatives of d through the
/// coefficients of e with the graded Leibniz rule.
DiffOperator compose(const DiffOperator& d, const DiffOperator& e);

/// Degree of a homogeneous operator, nullopt when terms disagree.
std::optional<Degree> operator_degree(const DiffOperator& d);

/// d o e - (-1)^<deg d, deg e> e o d. Throws DegreeError for mixed operands.
DiffOperator graded_commutator(const DiffOperator& d, const DiffOperator& e);

/// Same coefficients tagged with a smaller domain; throws DomainError unless contained.
DiffOperator restrict_operator(const DiffOperator& d, const Domain& sub);

/// Derivative word (outermost first) for d^index.
std::vector<std::size_t> derivative_word(const MultiIndex& index);

struct SignedIndex {
  int sign;
  MultiIndex index;
};

/// Brings a composition of single derivatives (outermost first) to the basis
/// order with the sign rule; nullopt when an odd derivative repeats.
std::optional<SignedIndex> normalize_derivative_word(const ChartSpec& chart,
                                                     const std::vector<std::size_t>& word);

}  // namespace z2n

#endif  // Z2N_DIFF_OPERATOR_HPP
