#pragma once

#include <stdexcept>
#include <string>

namespace kha {

// Error conditions surfaced by the construction engine. Kernel and number
// operations throw; the DSL evaluator converts these into diagnostics.
enum class Errc {
    division_by_zero,
    negative_radicand,
    degenerate_line,
    degenerate_circle,
    coincident_objects,
    degenerate_input,
    degenerate_angle,
    vertex_not_on_line,
    degenerate_seed,
    invalid_grid_spec,
    too_few_circles,
    degenerate_configuration,
    duplicate_id,
    unknown_id,
    no_such_intersection,
    empty_scene,
    malformed_document,
    unparseable_radical,
    invalid_trace,
    io_failure,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::negative_radicand: return "NegativeRadicand";
        case Errc::degenerate_line: return "DegenerateLine";
        case Errc::degenerate_circle: return "DegenerateCircle";
        case Errc::coincident_objects: return "CoincidentObjects";
        case Errc::degenerate_input: return "DegenerateInput";
        case Errc::degenerate_angle: return "DegenerateAngle";
        case Errc::vertex_not_on_line: return "VertexNotOnLine";
        case Errc::degenerate_seed: return "DegenerateSeed";
        case Errc::invalid_grid_spec: return "InvalidGridSpec";
        case Errc::too_few_circles: return "TooFewCircles";
        case Errc::degenerate_configuration: return "DegenerateConfiguration";
        case Errc::duplicate_id: return "DuplicateId";
        case Errc::unknown_id: return "UnknownId";
        case Errc::no_such_intersection: return "NoSuchIntersection";
        case Errc::empty_scene: return "EmptyScene";
        case Errc::malformed_document: return "MalformedDocument";
        case Errc::unparseable_radical: return "UnparseableRadical";
        case Errc::invalid_trace: return "InvalidTrace";
        case Errc::io_failure: return "IoFailure";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace kha
