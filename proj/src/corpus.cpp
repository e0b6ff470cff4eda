#include "pinchlink/corpus.hpp"

#include "pinchlink/error.hpp"

namespace pinchlink::corpus {

namespace {

// Solid torus: one 0-weighted vertex, fiber isotopic to the core.
PlumbingGraph solid_tori(const std::vector<std::string>& labels) {
  std::vector<PlumbingVertex> vertices;
  std::vector<PlumbingArrow> arrows;
  for (const auto& label : labels) {
    arrows.push_back({vertices.size(), label});
    vertices.push_back({0, 0});
  }
  return {std::move(vertices), {}, std::move(arrows)};
}

// Curling meridian glued to the exterior fiber, parallel to the exterior
// meridian.
const AttachmentMatrix& swap_basis() {
  static const AttachmentMatrix m = (AttachmentMatrix() << 0, 1, 1, 0).finished();
  return m;
}

io::Json curling(int d) {
  if (d < 2) throw InputError("curling-d needs d >= 2");
  SingularLinkDescription s(solid_tori({"lx.b1"}), {{"lx", {d}}}, {{"lx", 0, "lx.b1", swap_basis()}});
  auto doc = io::to_json(s);
  doc["_expected"] = {{"h1", "Z/" + std::to_string(d)},
                      {"manifold", false},
                      {"check", "not_simply_connected(order_bound(" + std::to_string(d) + "))"},
                      {"normalize", {"S3"}}};
  return doc;
}

io::Json two_planes() {
  SingularLinkDescription s(solid_tori({"sigma.b1", "sigma.b2"}), {{"sigma", {1, 1}}},
                            {{"sigma", 0, "sigma.b1", swap_basis()}, {"sigma", 1, "sigma.b2", swap_basis()}});
  auto doc = io::to_json(s);
  doc["_expected"] = {{"h1", "0"},
                      {"manifold", false},
                      {"check", "error: hypothesis violated: germ reducible"},
                      {"normalize", {"S3", "S3"}}};
  return doc;
}

io::Json cylinder() {
  SingularLinkDescription s(solid_tori({"sigma.b1"}), {{"sigma", {1}}}, {{"sigma", 0, "sigma.b1", swap_basis()}});
  auto doc = io::to_json(s);
  doc["_expected"] = {{"h1", "0"}, {"manifold", true}, {"check", "smooth"}, {"normalize", {"S3"}}};
  return doc;
}

}  // namespace

std::vector<std::string> example_names() { return {"curling-d", "two-planes", "cylinder"}; }

io::Json example_document(const std::string& name, int d) {
  if (name == "curling-d") return curling(d);
  if (name == "two-planes") return two_planes();
  if (name == "cylinder") return cylinder();
  throw InputError("unknown example '" + name + "' (known: curling-d, two-planes, cylinder)");
}

}  // namespace pinchlink::corpus
