#include "z2n/series.hpp"

#include <algorithm>

#include "z2n/errors.hpp"

namespace z2n {

std::uint32_t xi_weight(const XiKey& key) { return total(key); }

std::optional<SignedMonomial> normalize_word(const ChartSpec& chart, const Word& word) {
  for (auto idx : word) {
    if (idx >= chart.coordinate_count()) {
      throw SymbolError("coordinate index " + std::to_string(idx) + " outside chart");
    }
  }
  Word w = word;
  int sign = 1;
  // bubble sort: every swap of distinct neighbours applies the sign rule
  for (std::size_t end = w.size(); end > 1; --end) {
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (w[i] > w[i + 1]) {
        if (scalar_product(chart.coordinate(w[i]).degree, chart.coordinate(w[i + 1]).degree)) {
          sign = -sign;
        }
        std::swap(w[i], w[i + 1]);
      }
    }
  }
  GradedMonomial m{Exponents(chart.p(), 0), XiKey(chart.xi_count(), 0)};
  for (auto idx : w) {
    if (idx < chart.p()) {
      ++m.alpha[idx];
      continue;
    }
    const std::size_t xi = idx - chart.p();
    if (chart.xi_is_odd(xi) && m.xi[xi]) return std::nullopt;
    ++m.xi[xi];
  }
  return SignedMonomial{sign, std::move(m)};
}

int xi_product_sign(const ChartSpec& chart, const XiKey& a, const XiKey& b) {
  const std::size_t m = a.size();
  for (std::size_t j = chart.eta_count(); j < m; ++j) {
    if (a[j] && b[j]) return 0;
  }
  // each factor xi_j of b passes every factor xi_i (i > j) of a
  unsigned parity = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (!(b[j] & 1u)) continue;
    for (std::size_t i = j + 1; i < m; ++i) {
      if ((a[i] & 1u) && chart.xi_pairing(i, j)) parity ^= 1u;
    }
  }
  return parity ? -1 : 1;
}

GradedSeries::GradedSeries(Chart chart)
    : GradedSeries(chart, {}, static_cast<int>(chart->trunc())) {}

GradedSeries::GradedSeries(Chart chart, TermMap terms, int valid_order)
    : GradedSeries(chart, std::move(terms), valid_order, Domain::whole(chart->p())) {}

GradedSeries::GradedSeries(Chart chart, TermMap terms, int valid_order, Domain domain)
    : chart_(std::move(chart)), valid_order_(valid_order), domain_(std::move(domain)) {
  if (!chart_) throw ChartError("series requires a chart");
  valid_order_ = std::clamp(valid_order_, 0, static_cast<int>(chart_->trunc()));
  if (domain_.dimension() != chart_->p()) throw DomainError("domain dimension differs from chart p");
  for (auto& [key, poly] : terms) add_term(key, poly);
}

GradedSeries GradedSeries::constant(Chart chart, const Rational& c) {
  GradedSeries out(chart);
  out.add_term(out.zero_key(), Polynomial::constant(chart->p(), c));
  return out;
}

GradedSeries GradedSeries::coordinate(Chart chart, std::size_t index) {
  if (index >= chart->coordinate_count()) throw SymbolError("coordinate index outside chart");
  GradedMonomial m{Exponents(chart->p(), 0), XiKey(chart->xi_count(), 0)};
  if (index < chart->p()) {
    m.alpha[index] = 1;
  } else {
    m.xi[index - chart->p()] = 1;
  }
  return monomial(std::move(chart), m, 1);
}

GradedSeries GradedSeries::monomial(Chart chart, const GradedMonomial& m, const Rational& c) {
  if (m.alpha.size() != chart->p() || m.xi.size() != chart->xi_count()) {
    throw ValidationError("monomial does not fit chart");
  }
  for (std::size_t j = chart->eta_count(); j < m.xi.size(); ++j) {
    if (m.xi[j] > 1) return GradedSeries(chart);
  }
  GradedSeries out(chart);
  out.add_term(m.xi, Polynomial::monomial(m.alpha, c));
  return out;
}

GradedSeries GradedSeries::from_polynomial(Chart chart, const Polynomial& p) {
  if (p.nvars() != chart->p()) throw ValidationError("polynomial arity differs from chart p");
  GradedSeries out(chart);
  out.add_term(out.zero_key(), p);
  return out;
}

Polynomial GradedSeries::coefficient(const XiKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Polynomial(chart_->p()) : it->second;
}

void GradedSeries::add_term(const XiKey& key, const Polynomial& p) {
  if (key.size() != chart_->xi_count()) throw ValidationError("xi multi-index has wrong length");
  if (p.nvars() != chart_->p()) throw ValidationError("coefficient arity differs from chart p");
  if (p.is_zero()) return;
  if (static_cast<int>(xi_weight(key)) >= valid_order_) return;
  for (std::size_t j = chart_->eta_count(); j < key.size(); ++j) {
    if (key[j] > 1) throw ValidationError("odd coordinate exponent above 1");
  }
  auto [it, inserted] = terms_.try_emplace(key, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedSeries GradedSeries::truncated(int v) const {
  GradedSeries out(chart_, {}, std::min(v, valid_order_), domain_);
  for (const auto& [key, poly] : terms_) out.add_term(key, poly);
  return out;
}

GradedSeries GradedSeries::with_domain(Domain domain) const {
  if (domain.dimension() != chart_->p()) throw DomainError("domain dimension differs from chart p");
  GradedSeries out = *this;
  out.domain_ = std::move(domain);
  return out;
}

void GradedSeries::check_compatible(const GradedSeries& other, const char* op) const {
  require_same_chart(chart_, other.chart_, op);
  if (!(domain_ == other.domain_)) {
    throw DomainError(std::string(op) + ": operands live on different domains");
  }
}

GradedSeries GradedSeries::operator-() const {
  GradedSeries out = *this;
  for (auto& [key, poly] : out.terms_) poly = -poly;
  return out;
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& other) {
  check_compatible(other, "add");
  if (other.valid_order_ < valid_order_) *this = truncated(other.valid_order_);
  for (const auto& [key, poly] : other.terms_) add_term(key, poly);
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& other) { return *this += -other; }

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  a.check_compatible(b, "multiply");
  const int v = std::min(a.valid_order_, b.valid_order_);
  GradedSeries out(a.chart_, {}, v, a.domain_);
  const ChartSpec& chart = *a.chart_;
  XiKey key(chart.xi_count());
  for (const auto& [ka, pa] : a.terms_) {
    const auto wa = static_cast<int>(xi_weight(ka));
    for (const auto& [kb, pb] : b.terms_) {
      if (wa + static_cast<int>(xi_weight(kb)) >= v) continue;
      const int sign = xi_product_sign(chart, ka, kb);
      if (sign == 0) continue;
      for (std::size_t i = 0; i < key.size(); ++i) key[i] = ka[i] + kb[i];
      Polynomial prod = pa * pb;
      if (sign < 0) prod = -prod;
      out.add_term(key, prod);
    }
  }
  return out;
}

GradedSeries operator*(const Rational& r, const GradedSeries& f) {
  GradedSeries out(f.chart_, {}, f.valid_order_, f.domain_);
  if (r == 0) return out;
  for (const auto& [key, poly] : f.terms_) out.add_term(key, poly * r);
  return out;
}

bool operator==(const GradedSeries& a, const GradedSeries& b) {
  return same_chart(a.chart_, b.chart_) && a.domain_ == b.domain_ && a.terms_ == b.terms_;
}

GradedSeries multiply(const GradedSeries& f, const GradedSeries& g) { return f * g; }
GradedSeries add(const GradedSeries& f, const GradedSeries& g) { return f + g; }
GradedSeries scale(const Rational& r, const GradedSeries& f) { return r * f; }

bool agrees_modulo(const GradedSeries& f, const GradedSeries& g) {
  const int v = std::min(f.valid_order(), g.valid_order());
  return f.truncated(v) == g.truncated(v);
}

Polynomial epsilon(const GradedSeries& f) { return f.coefficient(f.zero_key()); }

int adic_order(const GradedSeries& f) {
  int order = f.valid_order();
  for (const auto& [key, poly] : f.terms()) order = std::min(order, static_cast<int>(xi_weight(key)));
  return order;
}

std::optional<Degree> degree_of(const GradedSeries& f) {
  std::optional<Degree> deg;
  for (const auto& [key, poly] : f.terms()) {
    Degree d = f.chart()->degree_of(key);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg ? *deg : f.chart()->zero_degree();
}

std::map<Degree, GradedSeries> homogeneous_parts(const GradedSeries& f) {
  std::map<Degree, GradedSeries> parts;
  for (const auto& [key, poly] : f.terms()) {
    Degree d = f.chart()->degree_of(key);
    auto it = parts.find(d);
    if (it == parts.end()) {
      it = parts.emplace(d, GradedSeries(f.chart(), {}, f.valid_order(), f.domain())).first;
    }
    it->second.add_term(key, poly);
  }
  return parts;
}

std::vector<Component> decompose_components(const GradedSeries& f) {
  return {f.terms().begin(), f.terms().end()};
}

GradedSeries recompose(Chart chart, const std::vector<Component>& components, int valid_order) {
  const int v = valid_order < 0 ? static_cast<int>(chart->trunc()) : valid_order;
  GradedSeries out(chart, {}, v);
  for (const auto& [key, poly] : components) out.add_term(key, poly);
  return out;
}

GradedSeries restrict(const GradedSeries& f, const Domain& sub) {
  if (!f.domain().contains(sub)) {
    throw DomainError("cannot restrict from " + f.domain().to_string() + " to " + sub.to_string());
  }
  return f.with_domain(sub);
}

}  // namespace z2n
