#include "pinchlink/pinched_model.hpp"

#include "pinchlink/error.hpp"

#include <numeric>
#include <stdexcept>

namespace pinchlink {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const auto k = images_.size();
  if (k == 0) throw InputError("permutation must act on at least one element");
  std::vector<bool> seen(k, false);
  for (int image : images_) {
    if (image < 1 || static_cast<std::size_t>(image) > k) {
      throw InputError("permutation image " + std::to_string(image) + " outside 1.." + std::to_string(k));
    }
    if (seen[static_cast<std::size_t>(image - 1)]) {
      throw InputError("permutation repeats image " + std::to_string(image));
    }
    seen[static_cast<std::size_t>(image - 1)] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> images(static_cast<std::size_t>(k < 0 ? 0 : k));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycle_orders(std::span<const int> orders) {
  std::vector<int> images;
  int start = 1;
  for (int d : orders) {
    if (d < 1) throw InputError("cycle order must be positive");
    for (int i = 0; i < d; ++i) images.push_back(start + (i + 1) % d);
    start += d;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InputError("composing permutations of different sizes");
  std::vector<int> images(static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) images[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Permutation(std::move(images));
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition out;
  std::vector<bool> visited(static_cast<std::size_t>(p.size()), false);
  for (int start = 1; start <= p.size(); ++start) {
    if (visited[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    for (int i = start; !visited[static_cast<std::size_t>(i - 1)]; i = p(i)) {
      visited[static_cast<std::size_t>(i - 1)] = true;
      cycle.push_back(i);
    }
    out.orders.push_back(static_cast<int>(cycle.size()));
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::vector<Curling> sheets(const SingularPinchedTorus& torus) {
  std::vector<Curling> out;
  for (int d : cycle_decomposition(torus.monodromy()).orders) out.push_back({d});
  return out;
}

std::vector<BoundaryFraming> boundary_framings(const SingularPinchedTorus& torus) {
  std::vector<BoundaryFraming> out;
  const auto sheet_list = sheets(torus);
  for (std::size_t j = 0; j < sheet_list.size(); ++j) {
    const auto tag = std::to_string(j + 1);
    out.push_back({j, sheet_list[j].order, "m" + tag, "l" + tag});
  }
  return out;
}

BoundaryClasses boundary_class_map(const SingularPinchedTorus& torus, std::size_t sheet) {
  const auto sheet_list = sheets(torus);
  if (sheet >= sheet_list.size()) {
    throw std::out_of_range("sheet index " + std::to_string(sheet) + " out of range (" +
                            std::to_string(sheet_list.size()) + " sheets)");
  }
  // The meridian bounds a pinched disc; every parallel wraps d times around the core.
  return {0, sheet_list[sheet].order};
}

void SingularCurveData::validate() const {
  if (name.empty()) throw InputError("singular curve without a name");
  if (branch_degrees.empty()) throw InputError("curve '" + name + "' has no branches");
  for (int d : branch_degrees) {
    if (d < 1) throw InputError("curve '" + name + "' has branch degree " + std::to_string(d) + " < 1");
  }
}

int SingularCurveData::total_degree() const {
  return std::accumulate(branch_degrees.begin(), branch_degrees.end(), 0);
}

SingularPinchedTorus SingularCurveData::pinched_torus() const {
  return SingularPinchedTorus(Permutation::from_cycle_orders(branch_degrees));
}

}  // namespace pinchlink
