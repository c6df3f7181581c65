#include "z2n/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "z2n/errors.hpp"

namespace z2n {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational factorial(std::uint32_t k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return Rational(out);
}

Rational multi_factorial(std::span<const std::uint32_t> ks) {
  Rational out = 1;
  for (auto k : ks) out *= factorial(k);
  return out;
}

std::uint32_t total(std::span<const std::uint32_t> ks) {
  return std::accumulate(ks.begin(), ks.end(), std::uint32_t{0});
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  auto ta = total(a), tb = total(b);
  if (ta != tb) return ta > tb;
  return b < a;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw SymbolError("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

Polynomial Polynomial::monomial(Exponents exps, const Rational& c) {
  Polynomial p(exps.size());
  p.add_term(exps, c);
  return p;
}

Rational Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total(terms_.begin()->first));
}

bool Polynomial::is_constant() const { return total_degree() <= 0; }

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != nvars_) throw ValidationError("exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_arity(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw ValidationError("polynomials over different variable sets");
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= r;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_arity(b);
  Polynomial out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial out = constant(nvars_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw SymbolError("derivative variable out of range");
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

Polynomial Polynomial::derivative(std::span<const std::uint32_t> alpha) const {
  if (alpha.size() != nvars_) throw ValidationError("multi-index has wrong length");
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    Rational scale = c;
    Exponents d = e;
    bool vanishes = false;
    for (std::size_t i = 0; i < nvars_ && !vanishes; ++i) {
      if (alpha[i] > e[i]) {
        vanishes = true;
        break;
      }
      for (std::uint32_t k = 0; k < alpha[i]; ++k) scale *= (e[i] - k);
      d[i] -= alpha[i];
    }
    if (!vanishes) out.add_term(d, scale);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw ValidationError("evaluation point has wrong dimension");
  Rational sum = 0;
  Rational term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::compose(std::span<const Polynomial> images) const {
  if (images.size() != nvars_) throw ValidationError("composition needs one image per variable");
  const std::size_t target_vars = images.empty() ? 0 : images.front().nvars();
  for (const auto& img : images) {
    if (img.nvars() != target_vars) throw ValidationError("composition images disagree in arity");
  }
  // powers[i][k] = images[i]^k, filled on demand
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target_vars, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Polynomial out(target_vars);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target_vars, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i]) term = term * power(i, e[i]);
    }
    out += term;
  }
  return out;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (names.size() < nvars_) throw ValidationError("not enough variable names");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += z2n::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += z2n::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace z2n
