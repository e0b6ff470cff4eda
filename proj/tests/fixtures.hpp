#pragma once

// Singular link descriptions shared by the unit and acceptance tests.

#include "pinchlink/corpus.hpp"
#include "pinchlink/normalization.hpp"
#include "pinchlink/serialization.hpp"

#include "oracles.hpp"

#include <random>

namespace fixture {

using namespace pinchlink;

inline SingularLinkDescription from_corpus(const std::string& name, int d = 2) {
  return io::document_from_json(corpus::example_document(name, d));
}

inline AttachmentMatrix matrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return (AttachmentMatrix() << a, b, c, d).finished();
}

/// Manifold input whose closed exterior is the E8 plumbing: E8 with one
/// arm-end (-2) vertex replaced by an arrow filled along slope 2*mu - lambda.
inline SingularLinkDescription e8_cylinder() {
  std::vector<PlumbingVertex> vertices(7, {-2, 0});
  std::vector<PlumbingEdge> edges{{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}};
  PlumbingGraph exterior(std::move(vertices), std::move(edges), {{6, "s.b1"}});
  return {std::move(exterior), {{"s", {1}}}, {{"s", 0, "s.b1", matrix(2, 1, -1, 0)}}};
}

/// Random valid description. With `connected` the exterior is one tree,
/// otherwise a forest of up to three trees.
inline SingularLinkDescription random_description(std::mt19937_64& rng, std::vector<SingularCurveData> curves,
                                                  bool connected = true) {
  const auto n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
  auto tree = oracle::random_tree(rng, n, -3, 3, 0, 1);
  auto edges = tree.edges();
  if (!connected && n > 1) {
    // Drop one or two edges to split the tree.
    const auto drops = std::min<std::size_t>(edges.size(), std::uniform_int_distribution<std::size_t>(1, 2)(rng));
    for (std::size_t i = 0; i < drops; ++i) {
      edges.erase(edges.begin() +
                  static_cast<std::ptrdiff_t>(std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)));
    }
  }
  std::vector<PlumbingArrow> arrows;
  std::vector<Attachment> attachments;
  for (const auto& c : curves) {
    for (std::size_t j = 0; j < c.branch_count(); ++j) {
      const auto label = c.name + ".b" + std::to_string(j + 1);
      arrows.push_back({std::uniform_int_distribution<std::size_t>(0, n - 1)(rng), label});
      attachments.push_back({c.name, j, label, oracle::random_unimodular(rng)});
    }
  }
  std::shuffle(attachments.begin(), attachments.end(), rng);
  return {PlumbingGraph(tree.vertices(), std::move(edges), std::move(arrows)), std::move(curves),
          std::move(attachments)};
}

/// One to three curves with at most max_sheets sheets in total.
inline std::vector<SingularCurveData> random_curves(std::mt19937_64& rng, std::size_t max_sheets) {
  std::vector<SingularCurveData> curves;
  std::size_t sheets = 0;
  const auto count = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int i = 0; i < count && sheets < max_sheets; ++i) {
    SingularCurveData c{"c" + std::to_string(i), {}};
    const auto branches =
        std::min<std::size_t>(max_sheets - sheets, std::uniform_int_distribution<std::size_t>(1, 4)(rng));
    for (std::size_t j = 0; j < branches; ++j) c.branch_degrees.push_back(std::uniform_int_distribution<int>(1, 4)(rng));
    sheets += branches;
    curves.push_back(std::move(c));
  }
  return curves;
}

}  // namespace fixture
