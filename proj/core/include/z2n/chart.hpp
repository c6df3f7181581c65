#ifndef Z2N_CHART_HPP
#define Z2N_CHART_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "z2n/degree.hpp"
#include "z2n/polynomial.hpp"

namespace z2n {

/// Exponents of the formal coordinates: eta exponents then zeta bits, in chart order.
using XiKey = std::vector<std::uint32_t>;

/// Exponents over all chart coordinates (x, eta, zeta) in chart order.
using MultiIndex = std::vector<std::uint32_t>;

enum class CoordKind { X, Eta, Zeta };

struct Coordinate {
  CoordKind kind;
  unsigned block_index;  // 1-based within its block: x1.., eta1.., zeta1..
  Degree degree;
  std::string name;
};

struct Interval {
  Rational lo;
  Rational hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Region of the degree-zero coordinates a section or operator lives on:
/// either all of R^p or a closed box.
class Domain {
 public:
  Domain() = default;
  static Domain whole(std::size_t p);
  static Domain box(std::vector<Interval> intervals);

  bool is_whole() const noexcept { return whole_; }
  std::size_t dimension() const noexcept { return dim_; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool contains(const Domain& other) const;
  /// "[0,1]x[-1,2]", or "R^p" for the whole space.
  std::string to_string() const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  bool whole_ = true;
  std::size_t dim_ = 0;
  std::vector<Interval> intervals_;
};

/// A Z_2^n-domain of dimension p|q with truncation order for formal series.
/// Coordinates are ordered x^1..x^p, then eta (nonzero even degrees), then zeta
/// (odd degrees), each graded block following the standard order of Z_2^n.
class ChartSpec {
 public:
  static constexpr unsigned kDefaultTrunc = 8;

  ChartSpec(unsigned n, unsigned p, std::vector<unsigned> q, unsigned trunc = kDefaultTrunc,
            std::string name = {});

  unsigned n() const noexcept { return n_; }
  unsigned p() const noexcept { return p_; }
  const std::vector<unsigned>& q() const noexcept { return q_; }
  unsigned trunc() const noexcept { return trunc_; }
  const std::string& name() const noexcept { return name_; }
  const DegreeTable& degrees() const noexcept { return table_; }

  std::size_t eta_count() const noexcept { return eta_count_; }
  std::size_t zeta_count() const noexcept { return zeta_count_; }
  std::size_t xi_count() const noexcept { return eta_count_ + zeta_count_; }
  std::size_t coordinate_count() const noexcept { return coords_.size(); }

  const std::vector<Coordinate>& coordinates() const noexcept { return coords_; }
  const Coordinate& coordinate(std::size_t index) const { return coords_.at(index); }
  /// Throws SymbolError for names outside the chart.
  std::size_t index_of(std::string_view name) const;

  const Degree& xi_degree(std::size_t xi) const { return coords_.at(p_ + xi).degree; }
  bool xi_is_odd(std::size_t xi) const { return xi >= eta_count_; }
  /// <deg xi_i, deg xi_j>, precomputed.
  int xi_pairing(std::size_t i, std::size_t j) const { return pairing_[i * xi_count() + j]; }

  Degree degree_of(const XiKey& key) const;
  Degree zero_degree() const { return Degree::zero(n_); }

  std::vector<std::string> x_names() const;

  /// Copy with a different truncation order.
  ChartSpec with_trunc(unsigned trunc) const;

  /// Structural equality; the name is a label and does not participate.
  friend bool operator==(const ChartSpec& a, const ChartSpec& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.q_ == b.q_ && a.trunc_ == b.trunc_;
  }

 private:
  unsigned n_;
  unsigned p_;
  std::vector<unsigned> q_;
  unsigned trunc_;
  std::string name_;
  DegreeTable table_;
  std::size_t eta_count_ = 0;
  std::size_t zeta_count_ = 0;
  std::vector<Coordinate> coords_;
  std::vector<int> pairing_;
};

using Chart = std::shared_ptr<const ChartSpec>;

Chart make_chart(unsigned n, unsigned p, std::vector<unsigned> q,
                 unsigned trunc = ChartSpec::kDefaultTrunc, std::string name = {});

bool same_chart(const Chart& a, const Chart& b);
/// Throws ChartError naming the operation.
void require_same_chart(const Chart& a, const Chart& b, std::string_view operation);

}  // namespace z2n

#endif  // Z2N_CHART_HPP
