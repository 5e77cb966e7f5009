#pragma once

#include "kha/sketch.hpp"

namespace kha {

// Classical construction macros. Each expands to primitive sketch steps
// (lines, circles, intersections) so the resulting trace stays inside the
// compass-and-straightedge discipline, and each also has a value-level
// overload that runs on a fresh sketch and hands back the trace.

struct Angle {
    Point vertex, arm1, arm2;  // the angle arm1-vertex-arm2
};

enum class HalfPlane { left, right };
enum class Direction { forward, backward };

// --- sketch-level macros (compose into one trace) -----------------------

// Circle centered at `centerId` whose radius equals |p q|, built by segment
// transfer when the center is not one of the endpoints.
std::string compass_to(Sketch& sk, const std::string& centerId, const std::string& pId,
                       const std::string& qId, const std::string& id = "");

struct MidpointIds {
    std::string midpoint, bisector;
};
MidpointIds midpoint_and_bisector(Sketch& sk, const std::string& pId, const std::string& qId,
                                  const std::string& midpointId = "",
                                  const std::string& bisectorId = "");

// Perpendicular to `lineId` through `pointId`; the point may lie on or off
// the line, both classical cases take the same path.
std::string perpendicular_from_point(Sketch& sk, const std::string& lineId,
                                     const std::string& pointId, const std::string& id = "");

// Point on `alongId` at distance |p q| from `fromId`. `forward` is the side
// of `from` toward the line's second defining point.
std::string transfer_distance(Sketch& sk, const std::string& pId, const std::string& qId,
                              const std::string& alongId, const std::string& fromId,
                              Direction side, const std::string& id = "");

// Copies the angle arm1-vertex-arm2 onto `targetLineId` at `targetVertexId`,
// opening toward the requested side; returns the line carrying the new arm.
std::string copy_angle(Sketch& sk, const std::string& vertexId, const std::string& arm1Id,
                       const std::string& arm2Id, const std::string& targetLineId,
                       const std::string& targetVertexId, HalfPlane side,
                       const std::string& id = "");

// --- value-level entry points -------------------------------------------

struct MidpointResult {
    Point midpoint;
    Line bisector;
    ConstructionTrace trace;
};
MidpointResult midpoint_and_bisector(const Point& p, const Point& q);

struct LineResult {
    Line line;
    ConstructionTrace trace;
};
LineResult perpendicular_from_point(const Line& l, const Point& p);
LineResult copy_angle(const Angle& src, const Line& targetLine, const Point& targetVertex,
                      HalfPlane side);

struct PointResult {
    Point point;
    ConstructionTrace trace;
};
PointResult transfer_distance(const Point& p, const Point& q, const Line& along,
                              const Point& from, Direction side);

}  // namespace kha
