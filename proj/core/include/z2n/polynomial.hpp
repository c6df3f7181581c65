#ifndef Z2N_POLYNOMIAL_HPP
#define Z2N_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace z2n {

using Rational = mpq_class;
using Exponents = std::vector<std::uint32_t>;

std::string to_string(const Rational& r);
Rational factorial(std::uint32_t k);
/// prod_i k_i!
Rational multi_factorial(std::span<const std::uint32_t> ks);
std::uint32_t total(std::span<const std::uint32_t> ks);

/// Descending graded-lex order: higher total degree first, then lexicographically larger.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(Exponents exps, const Rational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Exponents& exps) const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_constant() const;

  void add_term(const Exponents& exps, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& r);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& r) { return a *= r; }
  friend Polynomial operator*(const Rational& r, Polynomial a) { return a *= r; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(std::uint32_t k) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial derivative(std::span<const std::uint32_t> alpha) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Substitutes x_i -> images[i]; every image must share one variable count.
  Polynomial compose(std::span<const Polynomial> images) const;

  /// "x1^2 - 1/2*x2 + 3" using the given variable names.
  std::string to_string(std::span<const std::string> names) const;

 private:
  void check_arity(const Polynomial& other) const;

  std::size_t nvars_;
  TermMap terms_;
};

}  // namespace z2n

#endif  // Z2N_POLYNOMIAL_HPP
