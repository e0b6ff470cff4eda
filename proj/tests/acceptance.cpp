// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "pinchlink/error.hpp"
#include "pinchlink/lattice.hpp"
#include "pinchlink/normalization.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace pinchlink;

namespace {

// Collects failures for one criterion; the first few are printed.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  [[nodiscard]] bool passed() const { return failed_ == 0 && checks_ > 0; }
  [[nodiscard]] std::string summary() const {
    std::ostringstream out;
    out << checks_ - failed_ << "/" << checks_ << " checks";
    for (const auto& f : failures_) out << "\n      - " << f;
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

bool criterion(int number, const std::string& title, const std::function<void(Tally&)>& body) {
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(tally);
  } catch (const std::exception& e) {
    tally.expect(false, std::string("unexpected exception: ") + e.what());
  }
  const auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (tally.passed() ? "PASS" : "FAIL") << "  [" << number << "] " << title << " (" << tally.summary()
            << ", " << seconds << " s)" << std::endl;
  return tally.passed();
}

void curling_end_to_end(Tally& t) {
  for (int d : {2, 3, 5, 12}) {
    const auto tag = "d=" + std::to_string(d);
    const auto s = fixture::from_corpus("curling-d", d);
    const auto h1 = h1_singular_link(s);
    t.expect(h1 == AbelianGroup::cyclic(d), tag + ": H_1 = " + h1.to_string());
    const auto verdict = check_smooth(s);
    t.expect(verdict.kind == SmoothnessVerdict::Kind::not_simply_connected && verdict.witness &&
                 verdict.witness->kind == ObstructionReport::Kind::order_bound && verdict.witness->bound == d,
             tag + ": check = " + to_string(verdict));
    const auto result = normalize(s);
    t.expect(result.components.size() == 1 && result.components[0].is_s3(),
             tag + ": normalize gave " + std::to_string(result.components.size()) + " components");
  }
}

void two_planes_end_to_end(Tally& t) {
  const auto s = fixture::from_corpus("two-planes");
  t.expect(h1_singular_link(s).is_trivial(), "H_1 = " + h1_singular_link(s).to_string());
  t.expect(!is_topological_manifold(s), "reported as a manifold");
  const auto result = normalize(s);
  t.expect(result.components.size() == 2, "normalize gave " + std::to_string(result.components.size()) + " components");
  for (const auto& c : result.components) t.expect(c.is_s3(), "component not certified S^3");
  try {
    obstruction_report(s);
    t.expect(false, "obstruction_report accepted a reducible germ");
  } catch (const HypothesisViolation& e) {
    t.expect(std::string(e.what()).starts_with("hypothesis violated: germ reducible"), e.what());
  }
}

void cylinder_end_to_end(Tally& t) {
  const auto s = fixture::from_corpus("cylinder");
  t.expect(is_topological_manifold(s), "not reported as a manifold");
  const auto verdict = check_smooth(s);
  t.expect(verdict.kind == SmoothnessVerdict::Kind::smooth, "check = " + to_string(verdict));
}

void statement_one(Tally& t) {
  std::mt19937_64 rng(0x51);
  for (int i = 0; i < 200; ++i) {
    const auto s = fixture::random_description(rng, fixture::random_curves(rng, 6));
    std::size_t bound = 0;
    for (const auto& c : s.curves()) bound += c.branch_count() - 1;
    const auto h1 = h1_singular_link(s);
    t.expect(h1.rank() >= bound, "instance " + std::to_string(i) + ": rank " + std::to_string(h1.rank()) + " < " +
                                     std::to_string(bound));
  }
}

void statement_two(Tally& t) {
  std::mt19937_64 rng(0x52);
  for (int i = 0; i < 200; ++i) {
    const int d = std::uniform_int_distribution<int>(2, 9)(rng);
    const auto s = fixture::random_description(rng, {{"sigma", {d}}});
    const auto h1 = h1_singular_link(s);
    const auto order = h1.order();
    t.expect(!order || *order >= d, "instance " + std::to_string(i) + ": H_1 = " + h1.to_string() + ", d = " +
                                        std::to_string(d));
  }
}

// The library runs on GMP integers; the oracle on machine integers, which
// cannot overflow for these entry ranges.
bool factors_match(const IntMatrix& m, const Matrix<std::int64_t>& same) {
  const auto factors = lattice::invariant_factors(m);
  const auto expected = oracle::minor_gcd_invariant_factors(same);
  if (static_cast<std::size_t>(factors.size()) != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (factors(static_cast<Eigen::Index>(i)) != static_cast<long>(expected[i])) return false;
  }
  return true;
}

bool factors_match(const IntMatrix& m) {
  Matrix<std::int64_t> same(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) same(i, j) = m(i, j).get_si();
  }
  return factors_match(m, same);
}

std::string describe(const IntMatrix& m) {
  std::ostringstream out;
  out << m.format(Eigen::IOFormat(Eigen::StreamPrecision, Eigen::DontAlignCols, ",", ";", "", "", "[", "]"));
  return out.str();
}

void sweep(Tally& t, int n) {
  const int cells = n * n;
  std::vector<int> digits(static_cast<std::size_t>(cells), -2);
  IntMatrix m(n, n);
  Matrix<std::int64_t> same(n, n);
  while (true) {
    for (int k = 0; k < cells; ++k) {
      m(k / n, k % n) = digits[static_cast<std::size_t>(k)];
      same(k / n, k % n) = digits[static_cast<std::size_t>(k)];
    }
    const bool ok = factors_match(m, same);
    t.expect(ok, ok ? std::string() : describe(m));
    int k = 0;
    while (k < cells && digits[static_cast<std::size_t>(k)] == 2) digits[static_cast<std::size_t>(k++)] = -2;
    if (k == cells) break;
    ++digits[static_cast<std::size_t>(k)];
  }
}

void smith_oracle(Tally& t) {
  sweep(t, 2);
  sweep(t, 3);
  std::mt19937_64 rng(0x56);
  for (int i = 0; i < 500; ++i) {
    const auto m = oracle::random_matrix(rng, 4, 4, -9, 9);
    t.expect(factors_match(m), describe(m));
  }
}

void filling_lock(Tally& t) {
  std::mt19937_64 rng(0x57);
  for (int i = 0; i < 50; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const auto arrows = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    const auto g = oracle::random_tree(rng, n, -3, 3, arrows, 1);
    const auto presentation = h1_presentation(g);
    for (std::int64_t p = -9; p <= 9; ++p) {
      for (std::int64_t q = -9; q <= 9; ++q) {
        if (std::gcd(p, q) != 1) continue;
        const Slope s(p, q);
        if (s.is_degenerate()) {
          bool rejected = false;
          try {
            dehn_fill(g, "a0", s);
          } catch (const InputError&) {
            rejected = true;
          }
          t.expect(rejected, "degenerate slope accepted");
          continue;
        }
        const auto graph_level = first_homology(dehn_fill(g, "a0", s));
        const auto presentation_level = presentation.filled(0, s).group();
        t.expect(graph_level == presentation_level, "tree " + std::to_string(i) + " slope (" + std::to_string(p) +
                                                        "," + std::to_string(q) + "): " + graph_level.to_string() +
                                                        " vs " + presentation_level.to_string());
      }
    }
  }
}

void reduction_soundness(Tally& t) {
  std::mt19937_64 rng(0x58);
  for (int i = 0; i < 500; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const auto g = oracle::random_tree(rng, n, -3, 3);
    const auto r = reduce(g);
    const auto before = first_homology(g);
    const auto after = first_homology(r.graph);
    t.expect(before == after, "tree " + std::to_string(i) + ": " + before.to_string() + " -> " + after.to_string());
    t.expect(r.moves.size() <= 10 * n, "tree " + std::to_string(i) + ": move budget exceeded");
  }
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  ok &= criterion(1, "curling-d end-to-end for d in {2,3,5,12}", curling_end_to_end);
  ok &= criterion(2, "two-planes end-to-end", two_planes_end_to_end);
  ok &= criterion(3, "cylinder germ: manifold and smooth", cylinder_end_to_end);
  ok &= criterion(4, "rank bound on 200 connected random instances", statement_one);
  ok &= criterion(5, "order bound on 200 single-branch random instances", statement_two);
  ok &= criterion(6, "Smith form vs minor-gcd oracle", smith_oracle);
  ok &= criterion(7, "graph filling agrees with presentation filling", filling_lock);
  ok &= criterion(8, "reduction preserves H_1 within the move budget", reduction_soundness);
  const auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (ok ? "ALL PASS" : "SOME CRITERIA FAILED") << " in " << seconds << " s" << std::endl;
  return ok ? 0 : 1;
}
