#pragma once

#include <map>
#include <string>
#include <vector>

#include "kha/trace.hpp"

namespace kha {

// Working surface for constructions: an id-addressed object store that
// records every primitive step into a ConstructionTrace as it happens.
// Construction macros (perpendiculars, distance transfers, ...) expand into
// calls on a Sketch, so whatever they build is auditable afterwards.
class Sketch {
public:
    // Declares a given point. Pass an explicit id (throws DuplicateId when
    // taken) or leave empty for a generated one.
    std::string seed(const Point& p, const std::string& id = "");

    // Primitive steps. Empty id means a generated one; `via` tags the macro
    // the step expands, for trace readability only.
    std::string line(const std::string& pId, const std::string& qId, const std::string& via = "",
                     const std::string& id = "");
    std::string circle(const std::string& centerId, const std::string& throughId,
                       const std::string& via = "", const std::string& id = "");

    // Computes the intersection of two curves and records the step for one
    // branch. Throws NoSuchIntersection when the branch does not exist.
    std::string intersection(const std::string& aId, const std::string& bId, int branch,
                             const std::string& via = "", const std::string& id = "");

    // Intersection points of two stored curves, in kernel order; no step is
    // recorded. Used to inspect branches before choosing one.
    std::vector<Point> intersection_candidates(const std::string& aId,
                                               const std::string& bId) const;

    bool has(const std::string& id) const { return objects_.count(id) > 0; }
    const Geometry& at(const std::string& id) const;
    const Point& point_at(const std::string& id) const;
    const Line& line_at(const std::string& id) const;
    const Circle& circle_at(const std::string& id) const;

    // Defining argument ids of a recorded line/circle step.
    std::pair<std::string, std::string> args_of(const std::string& id) const;

    const ConstructionTrace& trace() const { return trace_; }

private:
    std::string fresh(const std::string& hint);
    std::string store(const std::string& id, const std::string& hint, Geometry g);

    std::map<std::string, Geometry> objects_;
    std::map<std::string, std::pair<std::string, std::string>> args_;
    std::map<std::string, int> counters_;
    ConstructionTrace trace_;
};

}  // namespace kha
