#include "z2n/chart.hpp"

#include "z2n/errors.hpp"

namespace z2n {

Domain Domain::whole(std::size_t p) {
  Domain d;
  d.dim_ = p;
  return d;
}

Domain Domain::box(std::vector<Interval> intervals) {
  for (const auto& iv : intervals) {
    if (iv.lo > iv.hi) throw DomainError("interval with lower bound above upper bound");
  }
  Domain d;
  d.whole_ = false;
  d.dim_ = intervals.size();
  d.intervals_ = std::move(intervals);
  return d;
}

bool Domain::contains(const Domain& other) const {
  if (dim_ != other.dim_) return false;
  if (whole_) return true;
  if (other.whole_) return false;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (other.intervals_[i].lo < intervals_[i].lo || other.intervals_[i].hi > intervals_[i].hi) {
      return false;
    }
  }
  return true;
}

std::string Domain::to_string() const {
  if (whole_) return "R^" + std::to_string(dim_);
  std::string out;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i) out += 'x';
    out += "[" + z2n::to_string(intervals_[i].lo) + "," + z2n::to_string(intervals_[i].hi) + "]";
  }
  return out;
}

ChartSpec::ChartSpec(unsigned n, unsigned p, std::vector<unsigned> q, unsigned trunc,
                     std::string name)
    : n_(n), p_(p), q_(std::move(q)), trunc_(trunc), name_(std::move(name)), table_(standard_order(n)) {
  const auto nonzero = table_.nonzero();
  if (q_.size() != nonzero.size()) {
    throw ChartError("q must have 2^n - 1 = " + std::to_string(nonzero.size()) + " entries, got " +
                     std::to_string(q_.size()));
  }
  if (trunc_ == 0) throw ChartError("truncation order must be positive");

  for (unsigned i = 1; i <= p_; ++i) {
    coords_.push_back({CoordKind::X, i, Degree::zero(n_), "x" + std::to_string(i)});
  }
  // evens precede odds in the standard order, so one pass per block suffices
  unsigned eta = 0, zeta = 0;
  for (std::size_t k = 0; k < nonzero.size(); ++k) {
    if (parity(nonzero[k]) != Parity::Even) continue;
    for (unsigned j = 0; j < q_[k]; ++j) {
      ++eta;
      coords_.push_back({CoordKind::Eta, eta, nonzero[k], "eta" + std::to_string(eta)});
    }
  }
  for (std::size_t k = 0; k < nonzero.size(); ++k) {
    if (parity(nonzero[k]) != Parity::Odd) continue;
    for (unsigned j = 0; j < q_[k]; ++j) {
      ++zeta;
      coords_.push_back({CoordKind::Zeta, zeta, nonzero[k], "zeta" + std::to_string(zeta)});
    }
  }
  eta_count_ = eta;
  zeta_count_ = zeta;

  const std::size_t m = xi_count();
  pairing_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      pairing_[i * m + j] = scalar_product(coords_[p_ + i].degree, coords_[p_ + j].degree);
    }
  }
}

std::size_t ChartSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].name == name) return i;
  }
  throw SymbolError("unknown coordinate '" + std::string(name) + "'");
}

Degree ChartSpec::degree_of(const XiKey& key) const {
  if (key.size() != xi_count()) throw ValidationError("xi multi-index has wrong length");
  Degree d = zero_degree();
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (key[i] & 1u) d += xi_degree(i);
  }
  return d;
}

std::vector<std::string> ChartSpec::x_names() const {
  std::vector<std::string> names;
  for (unsigned i = 0; i < p_; ++i) names.push_back(coords_[i].name);
  return names;
}

ChartSpec ChartSpec::with_trunc(unsigned trunc) const { return ChartSpec(n_, p_, q_, trunc, name_); }

Chart make_chart(unsigned n, unsigned p, std::vector<unsigned> q, unsigned trunc, std::string name) {
  return std::make_shared<const ChartSpec>(n, p, std::move(q), trunc, std::move(name));
}

bool same_chart(const Chart& a, const Chart& b) { return a == b || (a && b && *a == *b); }

void require_same_chart(const Chart& a, const Chart& b, std::string_view operation) {
  if (!same_chart(a, b)) throw ChartError(std::string(operation) + ": operands live on different charts");
}

}  // namespace z2n
