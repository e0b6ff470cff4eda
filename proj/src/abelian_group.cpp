#include "pinchlink/abelian_group.hpp"

#include "pinchlink/error.hpp"
#include "pinchlink/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pinchlink {

AbelianGroup::AbelianGroup(std::size_t rank, std::vector<Integer> torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw InputError("torsion coefficient below 2: " + torsion_[i].get_str());
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0) {
      throw InputError("torsion coefficients do not form a divisibility chain");
    }
  }
}

AbelianGroup AbelianGroup::cyclic(const Integer& order) { return from_cyclic_factors(0, {order}); }

AbelianGroup AbelianGroup::from_cyclic_factors(std::size_t rank, const std::vector<Integer>& factors) {
  const auto n = static_cast<Eigen::Index>(factors.size());
  IntMatrix diagonal = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) diagonal(i, i) = factors[static_cast<std::size_t>(i)];
  return direct_sum(free(rank), lattice::cokernel(diagonal));
}

std::optional<Integer> AbelianGroup::order() const {
  if (rank_ > 0) return std::nullopt;
  Integer product = 1;
  for (const auto& t : torsion_) product *= t;
  return product;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (rank_ == 1) {
    out << "Z";
    first = false;
  } else if (rank_ > 1) {
    out << "Z^" << rank_;
    first = false;
  }
  for (const auto& t : torsion_) {
    if (!first) out << " + ";
    out << "Z/" << t.get_str();
    first = false;
  }
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

AbelianGroup AbelianGroup::parse(std::string_view text) {
  text = trim(text);
  if (text == "0") return trivial();
  std::size_t rank = 0;
  std::vector<Integer> torsion;
  while (true) {
    const auto plus = text.find('+');
    const auto term = trim(text.substr(0, plus));
    if (term == "Z") {
      rank += 1;
    } else if (term.starts_with("Z^") && all_digits(term.substr(2))) {
      rank += std::stoul(std::string(term.substr(2)));
    } else if (term.starts_with("Z/") && all_digits(term.substr(2))) {
      torsion.emplace_back(std::string(term.substr(2)));
    } else {
      throw InputError("cannot parse group term '" + std::string(term) + "'");
    }
    if (plus == std::string_view::npos) break;
    text = text.substr(plus + 1);
  }
  return AbelianGroup(rank, std::move(torsion));
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  if (a.torsion().empty() || b.torsion().empty()) {
    auto torsion = a.torsion().empty() ? b.torsion() : a.torsion();
    return {a.rank() + b.rank(), std::move(torsion)};
  }
  std::vector<Integer> all = a.torsion();
  all.insert(all.end(), b.torsion().begin(), b.torsion().end());
  const auto n = static_cast<Eigen::Index>(all.size());
  IntMatrix diagonal = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) diagonal(i, i) = all[static_cast<std::size_t>(i)];
  auto torsion_part = lattice::cokernel(diagonal);
  return {a.rank() + b.rank(), torsion_part.torsion()};
}

namespace lattice {

AbelianGroup cokernel(const IntMatrix& relations) {
  const auto snf = smith_normal_form(relations);
  const std::size_t nonzero = snf.rank();
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < nonzero; ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    if (snf.diagonal(k, k) > 1) torsion.push_back(snf.diagonal(k, k));
  }
  return {static_cast<std::size_t>(relations.rows()) - nonzero, std::move(torsion)};
}

}  // namespace lattice

}  // namespace pinchlink
