#pragma once

#include <map>
#include <string>
#include <vector>

#include "kha/geometry.hpp"

namespace kha {

// One primitive compass/straightedge step. Only three kinds exist:
// straightedge (line through two points), compass (circle about a center
// through a point) and intersection of two earlier objects. Every id a step
// references must have been created by an earlier step or declared as a seed
// point. `via` tags which macro expanded into the step; it carries no
// geometric meaning.
struct TraceStep {
    enum class Kind { line_through, circle_through, intersect };
    Kind kind;
    std::string id;
    std::string arg1, arg2;
    int branch = 0;  // intersection branch in the documented ordering
    std::string via;
};

struct ConstructionTrace {
    std::vector<std::pair<std::string, Point>> seeds;
    std::vector<TraceStep> steps;
};

// Checks the discipline: unique ids, every reference resolved by an earlier
// step or seed, intersection branches within range of the referenced kinds.
// Throws InvalidTrace on violation.
void validate_trace(const ConstructionTrace& trace);

// Re-executes the trace through the geometry kernel alone and returns every
// object it creates. Throws InvalidTrace when a step cannot be replayed
// (missing reference, degenerate primitive, absent intersection branch).
std::map<std::string, Geometry> replay_trace(const ConstructionTrace& trace);

// Human-readable listing, one seed or step per line; deterministic.
std::string trace_to_text(const ConstructionTrace& trace);

}  // namespace kha
