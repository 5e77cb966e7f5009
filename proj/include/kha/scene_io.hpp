#pragma once

#include <string>

#include "kha/geometry.hpp"

namespace kha {

// Scene document (JSON, version 1): every object carries exact radical-
// expression strings for its defining coordinates (and radius^2 for
// circles) plus 15-significant-digit decimal approximations for human
// inspection. The exact strings make the round trip lossless under
// constructible equality.

// Serializes a scene; output is byte-deterministic for identical scenes.
std::string scene_to_document(const Scene& scene);

// Parses a document back into a scene. Throws MalformedDocument for
// structural problems and UnparseableRadical for exact values that do not
// parse; a circle whose stored radius^2 disagrees with its center/through
// points is malformed.
Scene document_to_scene(const std::string& text);

}  // namespace kha
