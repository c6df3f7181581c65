#include "z2n/diff_operator.hpp"

#include <algorithm>
#include <set>

#include "z2n/errors.hpp"

namespace z2n {

GradedSeries partial(const GradedSeries& f, std::size_t coord) {
  const ChartSpec& chart = *f.chart();
  if (coord >= chart.coordinate_count()) throw SymbolError("derivative coordinate outside chart");

  if (coord < chart.p()) {
    GradedSeries out(f.chart(), {}, f.valid_order(), f.domain());
    for (const auto& [key, poly] : f.terms()) out.add_term(key, poly.derivative(coord));
    return out;
  }

  const std::size_t j = coord - chart.p();
  GradedSeries out(f.chart(), {}, std::max(0, f.valid_order() - 1), f.domain());
  XiKey reduced;
  for (const auto& [key, poly] : f.terms()) {
    if (key[j] == 0) continue;
    // the derivation passes every factor in front of xi_j
    unsigned parity = 0;
    for (std::size_t i = 0; i < j; ++i) {
      if ((key[i] & 1u) && chart.xi_pairing(j, i)) parity ^= 1u;
    }
    reduced = key;
    --reduced[j];
    Polynomial c = poly * Rational(key[j]);
    if (parity) c = -c;
    out.add_term(reduced, c);
  }
  return out;
}

GradedSeries partial(const GradedSeries& f, std::string_view symbol) {
  return partial(f, f.chart()->index_of(symbol));
}

GradedSeries iterated_partial(const GradedSeries& f, const MultiIndex& index) {
  if (index.size() != f.chart()->coordinate_count()) {
    throw ValidationError("derivative multi-index has wrong length");
  }
  GradedSeries out = f;
  for (std::size_t c = 0; c < index.size(); ++c) {
    for (std::uint32_t k = 0; k < index[c]; ++k) out = partial(out, c);
  }
  return out;
}

Degree derivative_degree(const ChartSpec& chart, const MultiIndex& index) {
  Degree d = chart.zero_degree();
  for (std::size_t c = chart.p(); c < index.size(); ++c) {
    if (index[c] & 1u) d += chart.coordinate(c).degree;
  }
  return d;
}

std::vector<MultiIndex> multi_indices_of_order(const ChartSpec& chart, unsigned k) {
  const std::size_t count = chart.coordinate_count();
  const std::size_t first_zeta = chart.p() + chart.eta_count();
  std::vector<MultiIndex> out;
  MultiIndex index(count, 0);
  auto rec = [&](auto&& self, std::size_t c, unsigned left) -> void {
    if (c == count) {
      if (left == 0) out.push_back(index);
      return;
    }
    const unsigned cap = c >= first_zeta ? std::min(left, 1u) : left;
    for (unsigned e = 0; e <= cap; ++e) {
      index[c] = e;
      self(self, c + 1, left - e);
    }
    index[c] = 0;
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiIndex> multi_indices_up_to(const ChartSpec& chart, unsigned k) {
  std::vector<MultiIndex> out;
  for (unsigned i = 0; i <= k; ++i) {
    auto layer = multi_indices_of_order(chart, i);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

bool DerivativeOrder::operator()(const MultiIndex& a, const MultiIndex& b) const {
  auto ta = total(a), tb = total(b);
  if (ta != tb) return ta < tb;
  return a < b;
}

DiffOperator::DiffOperator(Chart chart) : chart_(std::move(chart)) {
  if (!chart_) throw ChartError("operator requires a chart");
  domain_ = Domain::whole(chart_->p());
}

DiffOperator DiffOperator::identity(Chart chart) {
  return multiplication(GradedSeries::one(std::move(chart)));
}

DiffOperator DiffOperator::multiplication(const GradedSeries& g) {
  DiffOperator out(g.chart());
  out.add_term(MultiIndex(g.chart()->coordinate_count(), 0), g);
  return out;
}

DiffOperator DiffOperator::derivative(Chart chart, const MultiIndex& index) {
  DiffOperator out(chart);
  for (std::size_t c = chart->p() + chart->eta_count(); c < index.size(); ++c) {
    if (index[c] > 1) return out;
  }
  out.add_term(index, GradedSeries::one(chart));
  return out;
}

int DiffOperator::order() const {
  int order = -1;
  for (const auto& [index, coef] : terms_) order = std::max(order, static_cast<int>(total(index)));
  return order;
}

GradedSeries DiffOperator::coefficient(const MultiIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? GradedSeries(chart_) : it->second;
}

void DiffOperator::add_term(const MultiIndex& index, const GradedSeries& coef) {
  if (index.size() != chart_->coordinate_count()) {
    throw ValidationError("derivative multi-index has wrong length");
  }
  for (std::size_t c = chart_->p() + chart_->eta_count(); c < index.size(); ++c) {
    if (index[c] > 1) throw ValidationError("odd derivative exponent above 1");
  }
  require_same_chart(chart_, coef.chart(), "operator coefficient");
  if (coef.is_zero()) return;
  GradedSeries c = coef.with_domain(Domain::whole(chart_->p()));
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOperator DiffOperator::with_domain(Domain domain) const {
  if (domain.dimension() != chart_->p()) throw DomainError("domain dimension differs from chart p");
  DiffOperator out = *this;
  out.domain_ = std::move(domain);
  return out;
}

DiffOperator DiffOperator::operator-() const { return Rational(-1) * *this; }

DiffOperator& DiffOperator::operator+=(const DiffOperator& other) {
  require_same_chart(chart_, other.chart_, "operator sum");
  if (!(domain_ == other.domain_)) throw DomainError("operator sum: different domains");
  for (const auto& [index, coef] : other.terms_) add_term(index, coef);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& other) { return *this += -other; }

DiffOperator operator*(const Rational& r, const DiffOperator& d) {
  DiffOperator out(d.chart_);
  out.domain_ = d.domain_;
  for (const auto& [index, coef] : d.terms_) out.add_term(index, r * coef);
  return out;
}

bool operator==(const DiffOperator& a, const DiffOperator& b) {
  return same_chart(a.chart_, b.chart_) && a.domain_ == b.domain_ && a.terms_ == b.terms_;
}

GradedSeries apply(const DiffOperator& d, const GradedSeries& f) {
  require_same_chart(d.chart(), f.chart(), "apply");
  if (!d.domain().contains(f.domain())) {
    throw DomainError("operator on " + d.domain().to_string() + " cannot act on a section over " +
                      f.domain().to_string());
  }
  GradedSeries out(f.chart(), {}, f.valid_order(), f.domain());
  for (const auto& [index, coef] : d.terms()) {
    out += coef.with_domain(f.domain()) * iterated_partial(f, index);
  }
  return out.truncated(std::max(0, f.valid_order() - d.order()));
}

std::vector<std::size_t> derivative_word(const MultiIndex& index) {
  std::vector<std::size_t> word;
  for (std::size_t c = index.size(); c-- > 0;) {
    for (std::uint32_t k = 0; k < index[c]; ++k) word.push_back(c);
  }
  return word;
}

std::optional<SignedIndex> normalize_derivative_word(const ChartSpec& chart,
                                                     const std::vector<std::size_t>& word) {
  std::vector<std::size_t> w = word;
  int sign = 1;
  for (std::size_t end = w.size(); end > 1; --end) {
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (w[i] < w[i + 1]) {
        if (scalar_product(chart.coordinate(w[i]).degree, chart.coordinate(w[i + 1]).degree)) {
          sign = -sign;
        }
        std::swap(w[i], w[i + 1]);
      }
    }
  }
  MultiIndex index(chart.coordinate_count(), 0);
  const std::size_t first_zeta = chart.p() + chart.eta_count();
  for (auto c : w) {
    if (c >= chart.coordinate_count()) throw SymbolError("derivative coordinate outside chart");
    if (c >= first_zeta && index[c]) return std::nullopt;
    ++index[c];
  }
  return SignedIndex{sign, std::move(index)};
}

namespace {

using Word = std::vector<std::size_t>;

/// word o m_b = sum over the returned map of m_coef o word'.
std::map<Word, GradedSeries> commute_past(const ChartSpec& chart, const Word& word,
                                          const GradedSeries& b) {
  std::map<Word, GradedSeries> current;
  current.emplace(Word{}, b);
  for (std::size_t k = word.size(); k-- > 0;) {
    const std::size_t a = word[k];
    const Degree& deg_a = chart.coordinate(a).degree;
    std::map<Word, GradedSeries> next;
    auto accumulate = [&](const Word& w, const GradedSeries& c) {
      if (c.is_zero()) return;
      auto it = next.find(w);
      if (it == next.end()) {
        next.emplace(w, c);
      } else {
        it->second += c;
      }
    };
    for (const auto& [w, c] : current) {
      accumulate(w, partial(c, a));
      Word moved;
      moved.reserve(w.size() + 1);
      moved.push_back(a);
      moved.insert(moved.end(), w.begin(), w.end());
      for (const auto& [deg, part] : homogeneous_parts(c)) {
        accumulate(moved, scalar_product(deg_a, deg) ? -part : part);
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace

DiffOperator compose(const DiffOperator& d, const DiffOperator& e) {
  require_same_chart(d.chart(), e.chart(), "compose");
  const ChartSpec& chart = *d.chart();
  DiffOperator out(d.chart());
  for (const auto& [index_d, coef_d] : d.terms()) {
    const Word word_d = derivative_word(index_d);
    for (const auto& [index_e, coef_e] : e.terms()) {
      const Word word_e = derivative_word(index_e);
      for (const auto& [w, c] : commute_past(chart, word_d, coef_e)) {
        Word full = w;
        full.insert(full.end(), word_e.begin(), word_e.end());
        auto normal = normalize_derivative_word(chart, full);
        if (!normal) continue;
        GradedSeries coef = coef_d * c;
        out.add_term(normal->index, normal->sign < 0 ? -coef : coef);
      }
    }
  }
  // the composite acts where both factors do
  if (d.domain().contains(e.domain())) return out.with_domain(e.domain());
  if (e.domain().contains(d.domain())) return out.with_domain(d.domain());
  throw DomainError("compose: operator domains are not nested");
}

std::optional<Degree> operator_degree(const DiffOperator& d) {
  std::set<Degree> degrees;
  for (const auto& [index, coef] : d.terms()) {
    const Degree dd = derivative_degree(*d.chart(), index);
    for (const auto& [deg, part] : homogeneous_parts(coef)) degrees.insert(deg + dd);
  }
  if (degrees.empty()) return d.chart()->zero_degree();
  if (degrees.size() > 1) return std::nullopt;
  return *degrees.begin();
}

DiffOperator graded_commutator(const DiffOperator& d, const DiffOperator& e) {
  auto deg_d = operator_degree(d);
  auto deg_e = operator_degree(e);
  if (!deg_d || !deg_e) throw DegreeError("graded commutator needs homogeneous operators");
  DiffOperator de = compose(d, e);
  DiffOperator ed = compose(e, d);
  return scalar_product(*deg_d, *deg_e) ? de + ed : de - ed;
}

DiffOperator restrict_operator(const DiffOperator& d, const Domain& sub) {
  if (!d.domain().contains(sub)) {
    throw DomainError("cannot restrict operator from " + d.domain().to_string() + " to " +
                      sub.to_string());
  }
  return d.with_domain(sub);
}

}  // namespace z2n
