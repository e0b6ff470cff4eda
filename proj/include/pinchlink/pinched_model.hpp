#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pinchlink {

/// Bijection of {1..k}, stored as its 1-based image array.
class Permutation {
 public:
  /// Throws InputError unless `images` is a bijection of {1..k} with k >= 1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int k);

  /// Product of consecutive disjoint cycles (1..d_1)(d_1+1..d_1+d_2)...
  static Permutation from_cycle_orders(std::span<const int> orders);

  [[nodiscard]] int size() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  [[nodiscard]] const std::vector<int>& images() const { return images_; }

  [[nodiscard]] Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (a * b)(i) = a(b(i)).
Permutation operator*(const Permutation& a, const Permutation& b);

struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  std::vector<int> orders;
};

/// Cycles start at their smallest element and are sorted by it.
CycleDecomposition cycle_decomposition(const Permutation& p);

/// Mapping torus of a pinched disc with k discs under the monodromy
/// permutation. Only the permutation is stored.
class SingularPinchedTorus {
 public:
  explicit SingularPinchedTorus(Permutation monodromy) : monodromy_(std::move(monodromy)) {}

  [[nodiscard]] int disc_count() const { return monodromy_.size(); }
  [[nodiscard]] const Permutation& monodromy() const { return monodromy_; }

  /// k = 1 is an ordinary solid torus: its core is not a singular point set.
  [[nodiscard]] bool is_topologically_singular() const { return disc_count() >= 2; }

 private:
  Permutation monodromy_;
};

/// A sheet of a pinched torus: a d-curling for d = order.
struct Curling {
  int order;
  friend bool operator==(const Curling&, const Curling&) = default;
};

std::vector<Curling> sheets(const SingularPinchedTorus& torus);

/// Meridian/parallel basis of the boundary torus of one sheet, m . l = +1.
struct BoundaryFraming {
  std::size_t sheet;
  int sheet_degree;
  std::string meridian;
  std::string parallel;
};

std::vector<BoundaryFraming> boundary_framings(const SingularPinchedTorus& torus);

/// Homotopy classes of (m_j, l_j) in pi_1 of the pinched torus, written as
/// multiples of the core class.
struct BoundaryClasses {
  std::int64_t meridian;
  std::int64_t parallel;
};

/// Throws std::out_of_range for a sheet index past the last sheet.
BoundaryClasses boundary_class_map(const SingularPinchedTorus& torus, std::size_t sheet);

/// Branch data of the normalization over one singular curve.
struct SingularCurveData {
  std::string name;
  std::vector<int> branch_degrees;

  /// Throws InputError on an empty name, no branches or a degree below 1.
  void validate() const;

  [[nodiscard]] int total_degree() const;
  [[nodiscard]] std::size_t branch_count() const { return branch_degrees.size(); }

  /// Visible as a singular curve of the link only when k(sigma) > 1.
  [[nodiscard]] bool is_topologically_singular() const { return total_degree() > 1; }

  [[nodiscard]] SingularPinchedTorus pinched_torus() const;
};

}  // namespace pinchlink
