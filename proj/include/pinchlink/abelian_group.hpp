#pragma once

#include "pinchlink/integer.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pinchlink {

/// Finitely generated abelian group Z^rank + Z/t_1 + ... + Z/t_k in
/// invariant-factor form (every t_i >= 2 and t_i divides t_{i+1}).
class AbelianGroup {
 public:
  AbelianGroup() = default;

  /// Throws InputError unless `torsion` is already an invariant-factor chain.
  AbelianGroup(std::size_t rank, std::vector<Integer> torsion);

  static AbelianGroup trivial() { return {}; }
  static AbelianGroup free(std::size_t rank) { return {rank, {}}; }
  static AbelianGroup cyclic(const Integer& order);

  /// Normalizes arbitrary cyclic factors (zeros count as free summands,
  /// units vanish) into invariant-factor form.
  static AbelianGroup from_cyclic_factors(std::size_t rank, const std::vector<Integer>& factors);

  /// Inverse of to_string(); throws InputError on malformed text.
  static AbelianGroup parse(std::string_view text);

  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] const std::vector<Integer>& torsion() const { return torsion_; }
  [[nodiscard]] bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  [[nodiscard]] bool is_finite() const { return rank_ == 0; }

  /// Order of the group; nullopt when infinite.
  [[nodiscard]] std::optional<Integer> order() const;

  /// "0", "Z", "Z^2 + Z/2 + Z/6".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

namespace lattice {

/// Z^rows modulo the span of the columns of `relations`.
AbelianGroup cokernel(const IntMatrix& relations);

}  // namespace lattice

}  // namespace pinchlink
