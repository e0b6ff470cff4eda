#pragma once

#include "pinchlink/serialization.hpp"

#include <string>
#include <vector>

namespace pinchlink::corpus {

/// Names accepted by example_document().
std::vector<std::string> example_names();

/// Built-in singular link documents, each carrying an "_expected" block
/// with the invariants the pipeline should report:
///   curling-d   z^d - x y^d = 0, one curve with a single branch of degree d
///   two-planes  xy = 0, two smooth sheets glued along a line
///   cylinder    f(x, y) = 0 in C^3, a curve of degree one
/// Throws InputError for an unknown name or d < 2 for curling-d.
io::Json example_document(const std::string& name, int d = 2);

}  // namespace pinchlink::corpus
