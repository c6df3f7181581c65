#ifndef Z2N_DSL_HPP
#define Z2N_DSL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "z2n/extraction.hpp"
#include "z2n/morphism.hpp"
#include "z2n/seminorm.hpp"

namespace z2n {

struct Span {
  int line = 1;
  int column = 1;
};

template <typename T>
struct Named {
  std::string name;
  T value;
  Span span;
  Chart chart;  // chart the item lives on (the source chart for morphisms)
};

/// Parsed .z2n text. Items:
///
///   chart NAME? { n=2 x:1 eta[(1,1)]:1 zeta[(0,1)]:1 trunc=8 }
///   series NAME (in CHART)? = EXPR;
///   operator NAME (in CHART)? = EXPR;
///   morphism (NAME :)? SRC -> TGT   followed by   COORD <- EXPR;  lines
///   seminorm (in CHART)? SPEC;
///
/// Items without "in" use the most recent chart. '#' starts a comment.
struct SourceDocument {
  std::string text;
  std::vector<Named<Chart>> charts;
  std::vector<Named<GradedSeries>> series;
  std::vector<Named<DiffOperator>> operators;
  std::vector<Named<MorphismSpec>> morphisms;
  std::vector<Named<SeminormSpec>> seminorms;

  /// Throws SymbolError for unknown names.
  const Chart& chart(std::string_view name) const;
};

/// Throws ParseError (with line/column) on grammar errors and ValidationError
/// subclasses when an entity fails its own validation.
SourceDocument parse(std::string_view text);

/// Exactly one chart block.
Chart parse_chart(std::string_view text);
GradedSeries parse_series(std::string_view text, const Chart& chart);
/// Products compose: "dx1*x1" is d_x1 o m_x1 = 1 + x1*dx1.
DiffOperator parse_operator(std::string_view text, const Chart& chart);
/// Evaluates the expression tree directly on its argument, without building a
/// normal form first.
BlackboxOperator parse_blackbox(std::string_view text, const Chart& chart, int order_bound);
/// Target coordinate lines "coord <- expr;" (header optional).
MorphismSpec parse_morphism(std::string_view text, const Chart& source, const Chart& target);
/// "rho box=[0,2] grid=33 m=1 mu=0" and friends; grid defaults to kDefaultGrid.
SeminormSpec parse_seminorm(std::string_view text, const Chart& chart);
/// One spec per nonblank line.
std::vector<SeminormSpec> parse_family(std::string_view text, const Chart& chart);
/// "[a1,b1]x[a2,b2]"
CompactBox parse_box(std::string_view text, unsigned grid);
/// "(1,0,2)"
std::vector<std::uint32_t> parse_tuple(std::string_view text);

inline constexpr unsigned kDefaultGrid = 9;

/// Canonical text of a whole document (charts first, then the other items).
std::string print(const SourceDocument& doc);

}  // namespace z2n

#endif  // Z2N_DSL_HPP
