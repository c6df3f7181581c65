#include "z2n/morphism.hpp"

#include <algorithm>

#include "z2n/errors.hpp"

namespace z2n {

MorphismSpec::MorphismSpec(Chart source, Chart target, std::vector<GradedSeries> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!source_ || !target_) throw ChartError("morphism requires source and target charts");
  if (source_->n() != target_->n()) throw ChartError("morphism between charts with different n");
  if (images_.size() != target_->coordinate_count()) {
    throw ValidationError("morphism needs " + std::to_string(target_->coordinate_count()) +
                          " images, got " + std::to_string(images_.size()));
  }
  for (std::size_t b = 0; b < images_.size(); ++b) {
    const Coordinate& coord = target_->coordinate(b);
    const GradedSeries& img = images_[b];
    require_same_chart(img.chart(), source_, "morphism image");
    if (!img.domain().is_whole()) throw DomainError("morphism images must be global on the chart");
    if (img.is_zero()) continue;
    auto deg = degree_of(img);
    if (!deg || *deg != coord.degree) {
      throw DegreeMismatch("image of " + coord.name + " must have degree " +
                           coord.degree.to_string() +
                           (deg ? ", got " + deg->to_string() : ", got a mixed series"));
    }
    if (!coord.degree.is_zero() && !epsilon(img).is_zero()) {
      throw DegreeMismatch("image of " + coord.name + " must lie in the kernel of epsilon");
    }
  }
}

MorphismSpec MorphismSpec::identity(Chart chart) {
  std::vector<GradedSeries> images;
  for (std::size_t c = 0; c < chart->coordinate_count(); ++c) {
    images.push_back(GradedSeries::coordinate(chart, c));
  }
  return MorphismSpec(chart, chart, std::move(images));
}

std::vector<Polynomial> MorphismSpec::base_map() const {
  std::vector<Polynomial> out;
  for (unsigned b = 0; b < target_->p(); ++b) out.push_back(epsilon(images_[b]));
  return out;
}

bool operator==(const MorphismSpec& a, const MorphismSpec& b) {
  return same_chart(a.source_, b.source_) && same_chart(a.target_, b.target_) &&
         a.images_ == b.images_;
}

namespace {

/// All multi-indices over `vars` variables with total at most `bound`.
void enumerate_bounded(std::size_t vars, std::uint32_t bound, std::vector<Exponents>& out) {
  Exponents e(vars, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i == vars) {
      out.push_back(e);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, bound);
}

class PowerCache {
 public:
  explicit PowerCache(std::vector<GradedSeries> bases) : bases_(std::move(bases)), cache_(bases_.size()) {}

  const GradedSeries& power(std::size_t i, std::uint32_t k) {
    auto& c = cache_[i];
    if (c.empty()) c.push_back(GradedSeries::one(bases_[i].chart()));
    while (c.size() <= k) c.push_back(c.back() * bases_[i]);
    return c[k];
  }

 private:
  std::vector<GradedSeries> bases_;
  std::vector<std::vector<GradedSeries>> cache_;
};

}  // namespace

GradedSeries pullback(const MorphismSpec& phi, const GradedSeries& f) {
  require_same_chart(f.chart(), phi.target(), "pullback");
  if (!f.domain().is_whole()) throw DomainError("pullback needs a section over the whole target chart");

  const Chart& src = phi.source();
  const ChartSpec& tgt = *phi.target();
  const unsigned c = src->trunc();

  int valid = std::min(f.valid_order(), static_cast<int>(c));
  for (const auto& img : phi.images()) valid = std::min(valid, img.valid_order());

  const std::vector<Polynomial> base = phi.base_map();
  std::vector<GradedSeries> nilpotent;  // w_b = phi^* y^b - y0_b
  for (unsigned b = 0; b < tgt.p(); ++b) {
    nilpotent.push_back(phi.image(b) - GradedSeries::from_polynomial(src, base[b]));
  }
  PowerCache w_powers(nilpotent);

  std::vector<GradedSeries> graded_images(phi.images().begin() + tgt.p(), phi.images().end());
  PowerCache theta_powers(graded_images);

  GradedSeries out(src, {}, valid);
  for (const auto& [key, coef] : f.terms()) {
    // phi^*(xi^key), factors taken in increasing coordinate order
    GradedSeries monomial = GradedSeries::one(src);
    for (std::size_t j = 0; j < key.size() && !monomial.is_zero(); ++j) {
      if (key[j]) monomial = monomial * theta_powers.power(j, key[j]);
    }
    if (monomial.is_zero()) continue;

    const auto degree = static_cast<std::uint32_t>(std::max(coef.total_degree(), 0));
    std::vector<Exponents> lambdas;
    enumerate_bounded(tgt.p(), std::min(degree, c - 1), lambdas);
    GradedSeries pulled(src, {}, valid);
    for (const auto& lambda : lambdas) {
      Polynomial deriv = coef.derivative(lambda);
      if (deriv.is_zero()) continue;
      Polynomial at_base = deriv.compose(base) * (1 / multi_factorial(lambda));
      GradedSeries term = GradedSeries::from_polynomial(src, at_base);
      for (std::size_t b = 0; b < lambda.size(); ++b) {
        if (lambda[b]) term = term * w_powers.power(b, lambda[b]);
      }
      pulled += term;
    }
    out += pulled * monomial;
  }
  return out.truncated(valid);
}

MorphismSpec compose_morphisms(const MorphismSpec& phi, const MorphismSpec& psi) {
  require_same_chart(phi.target(), psi.source(), "compose_morphisms");
  std::vector<GradedSeries> images;
  for (const auto& img : psi.images()) images.push_back(pullback(phi, img));
  return MorphismSpec(phi.source(), psi.target(), std::move(images));
}

namespace {

IdentityReport compare(GradedSeries lhs, GradedSeries rhs) {
  const int v = std::min(lhs.valid_order(), rhs.valid_order());
  GradedSeries residual = lhs.truncated(v) - rhs.truncated(v);
  const bool holds = residual.is_zero();
  return {std::move(lhs), std::move(rhs), std::move(residual), holds};
}

}  // namespace

IdentityReport chain_rule_check(const MorphismSpec& phi, const GradedSeries& f,
                                std::size_t source_coord) {
  GradedSeries lhs = partial(pullback(phi, f), source_coord);
  GradedSeries rhs(phi.source());
  for (std::size_t b = 0; b < phi.target()->coordinate_count(); ++b) {
    GradedSeries inner = partial(phi.image(b), source_coord);
    if (inner.is_zero()) continue;
    rhs += inner * pullback(phi, partial(f, b));
  }
  return compare(std::move(lhs), std::move(rhs));
}

FaaDiBrunoExpansion faa_di_bruno_expand(const MorphismSpec& phi, const GradedSeries& f,
                                        const MultiIndex& alpha) {
  const Chart& src = phi.source();
  const ChartSpec& tgt = *phi.target();
  if (alpha.size() != src->coordinate_count()) {
    throw ValidationError("derivative multi-index has wrong length");
  }
  using Factors = std::map<MultiIndex, GradedSeries, DerivativeOrder>;
  Factors factors;
  factors.emplace(MultiIndex(tgt.coordinate_count(), 0), GradedSeries::one(src));

  auto accumulate = [](Factors& into, const MultiIndex& gamma, const GradedSeries& s) {
    if (s.is_zero()) return;
    auto it = into.find(gamma);
    if (it == into.end()) {
      into.emplace(gamma, s);
    } else {
      it->second += s;
      if (it->second.is_zero()) into.erase(it);
    }
  };

  for (std::size_t a = 0; a < alpha.size(); ++a) {
    const Degree& deg_a = src->coordinate(a).degree;
    std::vector<GradedSeries> inner;  // d_a(phi^* v^B)
    for (std::size_t b = 0; b < tgt.coordinate_count(); ++b) inner.push_back(partial(phi.image(b), a));

    for (std::uint32_t step = 0; step < alpha[a]; ++step) {
      Factors next;
      for (const auto& [gamma, factor] : factors) {
        // d_a (F phi^* g) = (d_a F) phi^* g + (-1)^<a, F> F d_a(phi^* g)
        accumulate(next, gamma, partial(factor, a));
        GradedSeries signed_factor(src, {}, factor.valid_order());
        for (const auto& [deg, part] : homogeneous_parts(factor)) {
          signed_factor += scalar_product(deg_a, deg) ? -part : part;
        }
        const auto word_gamma = derivative_word(gamma);
        for (std::size_t b = 0; b < tgt.coordinate_count(); ++b) {
          if (inner[b].is_zero()) continue;
          std::vector<std::size_t> word{b};
          word.insert(word.end(), word_gamma.begin(), word_gamma.end());
          auto normal = normalize_derivative_word(tgt, word);
          if (!normal) continue;
          GradedSeries term = signed_factor * inner[b];
          accumulate(next, normal->index, normal->sign < 0 ? -term : term);
        }
      }
      factors = std::move(next);
    }
  }

  GradedSeries value(src);
  for (const auto& [gamma, factor] : factors) {
    value += factor * pullback(phi, iterated_partial(f, gamma));
  }
  return {std::move(factors), std::move(value)};
}

IdentityReport faa_di_bruno_check(const MorphismSpec& phi, const GradedSeries& f,
                                  const MultiIndex& alpha) {
  FaaDiBrunoExpansion expansion = faa_di_bruno_expand(phi, f, alpha);
  GradedSeries direct = iterated_partial(pullback(phi, f), alpha);
  return compare(std::move(expansion.value), std::move(direct));
}

}  // namespace z2n
