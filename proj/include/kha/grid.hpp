#pragma once

#include "kha/constructions.hpp"

namespace kha {

// Generation of the overlapping-circles grid — equal circles centered on a
// square lattice ruled by perpendicular lines — purely from two seed points
// with compass-and-straightedge steps, and verification that measured circle
// data fits such a grid.

struct GridSpec {
    int rows = 1;
    int cols = 1;
    Constructible spacing;  // lattice pitch, |seed_o seed_x|
    Constructible ratio;    // circle radius over pitch

    // Validates rows/cols >= 1 and spacing, ratio > 0.
    static GridSpec create(int rows, int cols, Constructible spacing, Constructible ratio);

    // Adjacent circles intersect only when ratio > 1/2.
    bool overlapping() const { return (ratio - Constructible(Rational(1, 2))).sign() > 0; }
};

struct GridResult {
    Scene scene;
    ConstructionTrace trace;
};

// Builds the rows x cols grid from the two seed points: lattice pitch is
// |seed_o seed_x|, the first row runs along seed_o -> seed_x, and the grid
// extends to the left of that direction. The scene holds `rows` horizontal
// and `cols` vertical lattice lines and the circles in row-major order; the
// trace contains every primitive step that produced them.
//
// The ratio must be a rational value: those radii are constructible from the
// seeds by segment arithmetic alone. Throws DegenerateSeed for coincident
// seeds and InvalidGridSpec when spacing^2 != dist_sq(seed_o, seed_x) or the
// ratio is irrational.
GridResult generate_grid(const Point& seed_o, const Point& seed_x, const GridSpec& spec);

// As above, but appended onto an existing sketch/scene (the DSL path).
void generate_grid_into(Sketch& sk, Scene& scene, const std::string& seedOId,
                        const std::string& seedXId, const GridSpec& spec);

struct MeasuredCircle {
    double cx = 0, cy = 0, r = 0;
};

struct GridReport {
    bool is_grid = false;
    double fitted_spacing = 0;
    double fitted_ratio = 0;
    double basis_orthogonality_error = 0;  // radians
    double max_center_residual = 0;        // fraction of the fitted spacing
    double max_radius_deviation = 0;       // relative to the mean radius
};

// Fits a square lattice to measured circle centers: primary basis vector
// from the modal nearest-neighbor displacement (bucketized at tol
// resolution, ties broken by the smaller angle to +x), second basis its
// perpendicular, both refined by averaging matching displacements. is_grid
// holds when the basis is orthogonal within tol radians, every center sits
// within tol*spacing of its lattice node, and every radius is within
// tol*mean of the mean. Throws TooFewCircles (< 4) and
// DegenerateConfiguration (collinear centers).
GridReport verify_grid(const std::vector<MeasuredCircle>& circles, double tol);

}  // namespace kha
