#ifndef Z2N_DEGREE_HPP
#define Z2N_DEGREE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace z2n {

enum class Parity { Even, Odd };

/// An element of Z_2^n. Component i is stored at bit (n-1-i) so that integer
/// comparison of masks is left-to-right lexicographic comparison of bits.
class Degree {
 public:
  static constexpr unsigned kMaxArity = 16;

  Degree() = default;
  Degree(std::initializer_list<int> bits);
  explicit Degree(const std::vector<int>& bits);

  static Degree zero(unsigned n);
  static Degree from_mask(unsigned n, std::uint32_t mask);

  /// Parses "(0,1,1)".
  static Degree parse(std::string_view text);

  unsigned arity() const noexcept { return arity_; }
  std::uint32_t mask() const noexcept { return mask_; }
  bool bit(unsigned i) const noexcept { return (mask_ >> (arity_ - 1 - i)) & 1u; }
  bool is_zero() const noexcept { return mask_ == 0; }
  unsigned weight() const noexcept;

  Degree operator+(const Degree& other) const;
  Degree& operator+=(const Degree& other) { return *this = *this + other; }

  std::string to_string() const;

  friend bool operator==(const Degree&, const Degree&) = default;

  /// Total order by position in the standard order: evens first, then odds,
  /// each block lexicographic.
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b);

 private:
  Degree(unsigned n, std::uint32_t mask) : arity_(n), mask_(mask) {}

  unsigned arity_ = 0;
  std::uint32_t mask_ = 0;
};

/// <a,b> = sum a_i b_i mod 2. Throws DegreeArityError on length mismatch.
int scalar_product(const Degree& a, const Degree& b);

Parity parity(const Degree& a);

struct DegreeTable {
  unsigned n = 0;
  std::vector<Degree> ordered;       // all 2^n degrees, standard order
  std::vector<Degree> nonzero_even;  // 2^(n-1) - 1 entries
  std::vector<Degree> odd;           // 2^(n-1) entries

  /// Nonzero degrees in standard order; the index space of a chart's q tuple.
  std::vector<Degree> nonzero() const;
  std::size_t position(const Degree& d) const;
};

/// Throws ValidationError for n = 0 or n > Degree::kMaxArity.
DegreeTable standard_order(unsigned n);

}  // namespace z2n

template <>
struct std::hash<z2n::Degree> {
  std::size_t operator()(const z2n::Degree& d) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{d.arity()} << 32) | d.mask());
  }
};

#endif  // Z2N_DEGREE_HPP
