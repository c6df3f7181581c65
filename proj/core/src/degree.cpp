#include "z2n/degree.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "z2n/errors.hpp"

namespace z2n {

namespace {

std::uint32_t pack(const std::vector<int>& bits) {
  if (bits.empty() || bits.size() > Degree::kMaxArity) {
    throw DegreeArityError("degree must have between 1 and " +
                           std::to_string(Degree::kMaxArity) + " components");
  }
  std::uint32_t mask = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw ValidationError("degree components must be 0 or 1");
    mask = (mask << 1) | static_cast<std::uint32_t>(b);
  }
  return mask;
}

}  // namespace

Degree::Degree(std::initializer_list<int> bits) : Degree(std::vector<int>(bits)) {}

Degree::Degree(const std::vector<int>& bits)
    : arity_(static_cast<unsigned>(bits.size())), mask_(pack(bits)) {}

Degree Degree::zero(unsigned n) { return from_mask(n, 0); }

Degree Degree::from_mask(unsigned n, std::uint32_t mask) {
  if (n == 0 || n > kMaxArity) throw DegreeArityError("unsupported degree arity " + std::to_string(n));
  if (mask >> n) throw ValidationError("degree mask exceeds arity");
  return Degree(n, mask);
}

Degree Degree::parse(std::string_view text) {
  std::vector<int> bits;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '(') throw ValidationError("degree must start with '('");
  ++i;
  for (;;) {
    skip();
    if (i >= text.size() || (text[i] != '0' && text[i] != '1')) {
      throw ValidationError("degree component must be 0 or 1");
    }
    bits.push_back(text[i] - '0');
    ++i;
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ')') {
      ++i;
      break;
    }
    throw ValidationError("malformed degree '" + std::string(text) + "'");
  }
  skip();
  if (i != text.size()) throw ValidationError("trailing characters after degree");
  return Degree(bits);
}

unsigned Degree::weight() const noexcept { return static_cast<unsigned>(std::popcount(mask_)); }

Degree Degree::operator+(const Degree& other) const {
  if (arity_ != other.arity_) {
    throw DegreeArityError("cannot add degrees of arity " + std::to_string(arity_) + " and " +
                           std::to_string(other.arity_));
  }
  return Degree(arity_, mask_ ^ other.mask_);
}

std::string Degree::to_string() const {
  std::string out = "(";
  for (unsigned i = 0; i < arity_; ++i) {
    if (i) out += ',';
    out += bit(i) ? '1' : '0';
  }
  out += ')';
  return out;
}

std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
  if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
  if (auto c = (a.weight() & 1u) <=> (b.weight() & 1u); c != 0) return c;
  return a.mask_ <=> b.mask_;
}

int scalar_product(const Degree& a, const Degree& b) {
  if (a.arity() != b.arity()) {
    throw DegreeArityError("scalar product of degrees with arity " + std::to_string(a.arity()) +
                           " and " + std::to_string(b.arity()));
  }
  return std::popcount(a.mask() & b.mask()) & 1;
}

Parity parity(const Degree& a) { return (a.weight() & 1u) ? Parity::Odd : Parity::Even; }

std::vector<Degree> DegreeTable::nonzero() const {
  return std::vector<Degree>(ordered.begin() + 1, ordered.end());
}

std::size_t DegreeTable::position(const Degree& d) const {
  auto it = std::find(ordered.begin(), ordered.end(), d);
  if (it == ordered.end()) throw DegreeArityError("degree " + d.to_string() + " not in table");
  return static_cast<std::size_t>(it - ordered.begin());
}

DegreeTable standard_order(unsigned n) {
  if (n == 0) throw ValidationError("n must be at least 1");
  if (n > Degree::kMaxArity) throw ValidationError("n exceeds " + std::to_string(Degree::kMaxArity));
  DegreeTable table;
  table.n = n;
  std::vector<Degree> evens, odds;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Degree d = Degree::from_mask(n, mask);
    (parity(d) == Parity::Even ? evens : odds).push_back(d);
  }
  table.ordered = evens;
  table.ordered.insert(table.ordered.end(), odds.begin(), odds.end());
  table.nonzero_even.assign(evens.begin() + 1, evens.end());
  table.odd = odds;
  return table;
}

}  // namespace z2n
