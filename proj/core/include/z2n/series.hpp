#ifndef Z2N_SERIES_HPP
#define Z2N_SERIES_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "z2n/chart.hpp"
#include "z2n/polynomial.hpp"

namespace z2n {

/// x^alpha eta^beta zeta^gamma with factors in increasing coordinate order.
struct GradedMonomial {
  Exponents alpha;
  XiKey xi;
  friend auto operator<=>(const GradedMonomial&, const GradedMonomial&) = default;
};

/// An unnormalized product of coordinates, given by chart coordinate index.
using Word = std::vector<std::size_t>;

struct SignedMonomial {
  int sign;
  GradedMonomial monomial;
};

/// Sorts a word into increasing coordinate order by adjacent transpositions,
/// picking up (-1)^<deg a, deg b> per swap. nullopt when an odd coordinate
/// occurs twice. Throws SymbolError for indices outside the chart.
std::optional<SignedMonomial> normalize_word(const ChartSpec& chart, const Word& word);

/// Sign of xi^a * xi^b once brought to normal order; 0 when the product vanishes.
int xi_product_sign(const ChartSpec& chart, const XiKey& a, const XiKey& b);

std::uint32_t xi_weight(const XiKey& key);

/// Truncated formal power series sum_k f_k(x) xi^k with exact polynomial
/// coefficients. The series is trusted modulo J^valid_order; no stored term has
/// xi-weight >= valid_order, and valid_order never exceeds the chart truncation.
class GradedSeries {
 public:
  using TermMap = std::map<XiKey, Polynomial>;

  explicit GradedSeries(Chart chart);
  GradedSeries(Chart chart, TermMap terms, int valid_order);
  GradedSeries(Chart chart, TermMap terms, int valid_order, Domain domain);

  static GradedSeries constant(Chart chart, const Rational& c);
  static GradedSeries one(Chart chart) { return constant(std::move(chart), 1); }
  /// The coordinate function u^index.
  static GradedSeries coordinate(Chart chart, std::size_t index);
  static GradedSeries monomial(Chart chart, const GradedMonomial& m, const Rational& c);
  static GradedSeries from_polynomial(Chart chart, const Polynomial& p);

  const Chart& chart() const noexcept { return chart_; }
  const TermMap& terms() const noexcept { return terms_; }
  int valid_order() const noexcept { return valid_order_; }
  const Domain& domain() const noexcept { return domain_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Polynomial coefficient(const XiKey& key) const;
  XiKey zero_key() const { return XiKey(chart_->xi_count(), 0); }

  /// Adds p * xi^key; dropped silently when weight(key) >= valid_order.
  void add_term(const XiKey& key, const Polynomial& p);

  /// Lowers the trusted order to min(valid_order, v), discarding terms above it.
  GradedSeries truncated(int v) const;
  GradedSeries with_domain(Domain domain) const;

  GradedSeries operator-() const;
  GradedSeries& operator+=(const GradedSeries& other);
  GradedSeries& operator-=(const GradedSeries& other);
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(const Rational& r, const GradedSeries& f);

  /// Structural equality of chart, domain and terms. valid_order is metadata
  /// and is compared separately where it matters.
  friend bool operator==(const GradedSeries& a, const GradedSeries& b);

 private:
  void check_compatible(const GradedSeries& other, const char* op) const;

  Chart chart_;
  TermMap terms_;
  int valid_order_;
  Domain domain_;
};

GradedSeries multiply(const GradedSeries& f, const GradedSeries& g);
GradedSeries add(const GradedSeries& f, const GradedSeries& g);
GradedSeries scale(const Rational& r, const GradedSeries& f);

/// Equality modulo J^min(v_f, v_g).
bool agrees_modulo(const GradedSeries& f, const GradedSeries& g);

/// Base projection: the coefficient of the empty xi-monomial.
Polynomial epsilon(const GradedSeries& f);

/// Least xi-weight over stored terms; valid_order for the zero series.
int adic_order(const GradedSeries& f);

/// Z_2^n degree when every term agrees, nullopt for mixed series. The zero
/// series reports degree zero.
std::optional<Degree> degree_of(const GradedSeries& f);

/// Homogeneous components keyed by degree.
std::map<Degree, GradedSeries> homogeneous_parts(const GradedSeries& f);

using Component = std::pair<XiKey, Polynomial>;

/// Coefficients f_k listed by xi-monomial in lexicographic order on (beta, gamma).
std::vector<Component> decompose_components(const GradedSeries& f);
GradedSeries recompose(Chart chart, const std::vector<Component>& components,
                       int valid_order = -1);

/// Retags f with a smaller domain. Throws DomainError unless contained.
GradedSeries restrict(const GradedSeries& f, const Domain& sub);

}  // namespace z2n

#endif  // Z2N_SERIES_HPP
