#include "pinchlink/serialization.hpp"

#include "pinchlink/error.hpp"

#include <algorithm>

namespace pinchlink::io {

namespace {

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing key \"" + key + "\"");
  return *it;
}

std::int64_t integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

std::size_t index(const Json& j, const std::string& where) {
  const auto v = integer(j, where);
  if (v < 0) throw InputError(where + ": expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  return j;
}

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

}  // namespace

Json parse_json(const std::string& input, const std::string& source) {
  try {
    return Json::parse(input);
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const auto offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, input.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (input[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON");
  }
}

Json to_json(const Permutation& p) { return p.images(); }

Permutation permutation_from_json(const Json& j) {
  std::vector<int> images;
  for (const auto& x : array(j, "permutation")) images.push_back(static_cast<int>(integer(x, "permutation entry")));
  return Permutation(std::move(images));
}

Json to_json(const PlumbingGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices()) vertices.push_back({{"e", v.euler}, {"g", v.genus}});
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  Json arrows = Json::array();
  for (const auto& a : g.arrows()) arrows.push_back({{"v", a.vertex}, {"label", a.label}});
  return {{"vertices", vertices}, {"edges", edges}, {"arrows", arrows}};
}

PlumbingGraph graph_from_json(const Json& j) {
  std::vector<PlumbingVertex> vertices;
  for (const auto& v : array(member(j, "vertices", "graph"), "graph.vertices")) {
    const auto genus = v.is_object() && v.contains("g") ? integer(v["g"], "vertex.g") : 0;
    vertices.push_back({integer(member(v, "e", "vertex"), "vertex.e"), static_cast<int>(genus)});
  }
  std::vector<PlumbingEdge> edges;
  if (j.contains("edges")) {
    for (const auto& e : array(j["edges"], "graph.edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("graph.edges: each edge is a pair [v, w]");
      edges.emplace_back(index(e[0], "edge endpoint"), index(e[1], "edge endpoint"));
    }
  }
  std::vector<PlumbingArrow> arrows;
  if (j.contains("arrows")) {
    for (const auto& a : array(j["arrows"], "graph.arrows")) {
      arrows.push_back({index(member(a, "v", "arrow"), "arrow.v"), text(member(a, "label", "arrow"), "arrow.label")});
    }
  }
  return {std::move(vertices), std::move(edges), std::move(arrows)};
}

Json to_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion()) torsion.push_back(integer_json(t));
  return {{"rank", g.rank()}, {"torsion", torsion}, {"text", g.to_string()}};
}

AbelianGroup group_from_json(const Json& j) {
  const auto rank = index(member(j, "rank", "group"), "group.rank");
  std::vector<Integer> torsion;
  for (const auto& t : array(member(j, "torsion", "group"), "group.torsion")) {
    if (t.is_string()) {
      torsion.emplace_back(t.get<std::string>());
    } else {
      torsion.emplace_back(static_cast<long>(integer(t, "group.torsion entry")));
    }
  }
  return {rank, std::move(torsion)};
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(integer_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const SingularLinkDescription& s) {
  Json curves = Json::array();
  for (const auto& c : s.curves()) curves.push_back({{"name", c.name}, {"degrees", c.branch_degrees}});
  Json attachments = Json::array();
  for (const auto& a : s.attachments()) {
    const auto& m = a.matrix;
    attachments.push_back({{"curve", a.curve},
                           {"sheet", a.sheet},
                           {"arrow", a.arrow},
                           {"matrix", {{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}}});
  }
  return {{"exterior", to_json(s.exterior())}, {"curves", curves}, {"attachments", attachments}};
}

SingularLinkDescription document_from_json(const Json& j) {
  auto exterior = graph_from_json(member(j, "exterior", "document"));

  std::vector<SingularCurveData> curves;
  if (j.contains("curves")) {
    for (const auto& c : array(j["curves"], "document.curves")) {
      SingularCurveData curve;
      curve.name = text(member(c, "name", "curve"), "curve.name");
      for (const auto& d : array(member(c, "degrees", "curve"), "curve.degrees")) {
        curve.branch_degrees.push_back(static_cast<int>(integer(d, "curve.degrees entry")));
      }
      curve.validate();
      if (c.contains("monodromy")) {
        const auto monodromy = permutation_from_json(c["monodromy"]);
        if (cycle_decomposition(monodromy).orders != curve.branch_degrees) {
          throw InputError("curve '" + curve.name + "': monodromy cycle orders do not match degrees");
        }
      }
      curves.push_back(std::move(curve));
    }
  }

  std::vector<Attachment> attachments;
  if (j.contains("attachments")) {
    for (const auto& a : array(j["attachments"], "document.attachments")) {
      Attachment att;
      att.curve = text(member(a, "curve", "attachment"), "attachment.curve");
      att.sheet = index(member(a, "sheet", "attachment"), "attachment.sheet");
      att.arrow = text(member(a, "arrow", "attachment"), "attachment.arrow");
      const auto& m = member(a, "matrix", "attachment");
      if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 || !m[1].is_array() ||
          m[1].size() != 2) {
        throw InputError("attachment.matrix: expected [[a, b], [c, d]]");
      }
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) att.matrix(r, c) = integer(m[r][c], "attachment.matrix entry");
      }
      attachments.push_back(std::move(att));
    }
  }
  return {std::move(exterior), std::move(curves), std::move(attachments)};
}

}  // namespace pinchlink::io
