#include "kha/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace kha {

GridSpec GridSpec::create(int rows, int cols, Constructible spacing, Constructible ratio) {
    if (rows < 1 || cols < 1) fail(Errc::invalid_grid_spec, "rows and cols must be >= 1");
    if (spacing.sign() <= 0) fail(Errc::invalid_grid_spec, "spacing must be positive");
    if (ratio.sign() <= 0) fail(Errc::invalid_grid_spec, "ratio must be positive");
    GridSpec s;
    s.rows = rows;
    s.cols = cols;
    s.spacing = std::move(spacing);
    s.ratio = std::move(ratio);
    return s;
}

namespace {

std::string fresh_named(const Sketch& sk, const std::string& hint) {
    for (int n = 0;; ++n) {
        std::string candidate = hint + std::to_string(n);
        if (!sk.has(candidate)) return candidate;
    }
}

}  // namespace

void generate_grid_into(Sketch& sk, Scene& scene, const std::string& seedOId,
                        const std::string& seedXId, const GridSpec& spec) {
    const Point o = sk.point_at(seedOId);
    const Point x = sk.point_at(seedXId);
    if (equals(o, x)) fail(Errc::degenerate_seed, "grid seeds coincide");
    GridSpec::create(spec.rows, spec.cols, spec.spacing, spec.ratio);  // field validation
    if (!equals(spec.spacing * spec.spacing, dist_sq(o, x)))
        fail(Errc::invalid_grid_spec, "spacing must equal the seed distance");
    auto ratio = spec.ratio.as_rational();
    if (!ratio) fail(Errc::invalid_grid_spec, "ratio must be a rational value");
    if (ratio->numerator() > 10000 || ratio->denominator() > 10000)
        fail(Errc::invalid_grid_spec, "ratio terms too large to lay out");
    int num = ratio->numerator().convert_to<int>();
    int den = ratio->denominator().convert_to<int>();
    bool unitRatio = num == 1 && den == 1;
    const int rows = spec.rows, cols = spec.cols;

    // Bottom rank: the baseline through the seeds and compass-walked marks
    // one pitch apart.
    std::vector<std::string> h(rows);
    h[0] = sk.line(seedOId, seedXId, "grid", fresh_named(sk, "h"));
    const std::string& baseline = h[0];

    int markMax = cols - 1;
    if (!unitRatio) markMax = std::max(markMax, num);
    std::vector<std::string> m(static_cast<size_t>(markMax) + 1);
    m[0] = seedOId;
    if (markMax >= 1)
        m[1] = transfer_distance(sk, seedOId, seedXId, baseline, seedOId, Direction::forward);
    for (int j = 2; j <= markMax; ++j)
        m[j] = transfer_distance(sk, m[j - 2], m[j - 1], baseline, m[j - 1], Direction::forward);

    // One vertical per column mark.
    std::vector<std::string> v(cols);
    for (int j = 0; j < cols; ++j)
        v[j] = perpendicular_from_point(sk, baseline, m[j], fresh_named(sk, "v"));

    // Marks up the first vertical; the grid grows to the left of O -> X.
    int upMax = rows - 1;
    if (!unitRatio && den > 1) upMax = std::max(upMax, den);
    std::vector<std::string> u(static_cast<size_t>(std::max(upMax, 0)) + 1);
    u[0] = seedOId;
    if (upMax >= 1) {
        Point e{x.x - o.x, x.y - o.y};
        Point dv = sk.line_at(v[0]).direction();
        int crossSign = (e.x * dv.y - e.y * dv.x).sign();
        Direction upSide = crossSign > 0 ? Direction::forward : Direction::backward;
        u[1] = transfer_distance(sk, seedOId, seedXId, v[0], seedOId, upSide);
        for (int i = 2; i <= upMax; ++i) {
            const Point prev = sk.point_at(u[i - 1]);
            const Point prev2 = sk.point_at(u[i - 2]);
            Point want{prev.x - prev2.x, prev.y - prev2.y};
            Direction side = (want.x * dv.x + want.y * dv.y).sign() > 0 ? Direction::forward
                                                                        : Direction::backward;
            u[i] = transfer_distance(sk, u[i - 2], u[i - 1], v[0], u[i - 1], side);
        }
    }

    for (int i = 1; i < rows; ++i)
        h[i] = perpendicular_from_point(sk, v[0], u[i], fresh_named(sk, "h"));

    // Lattice nodes; row 0 and column 0 already exist as marks.
    std::vector<std::vector<std::string>> node(rows, std::vector<std::string>(cols));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (i == 0)
                node[i][j] = m[j];
            else if (j == 0)
                node[i][j] = u[i];
            else
                node[i][j] = sk.intersection(h[i], v[j], 0, "grid");
        }
    }

    // Radius source point: for ratio a/b, a pitches along the baseline cut
    // down by the intercept construction through the first up-mark.
    std::string radiusMark;
    if (!unitRatio) {
        if (den == 1) {
            radiusMark = m[num];
        } else {
            std::string chord = sk.line(u[den], m[num], "grid");
            std::string perpToChord = perpendicular_from_point(sk, chord, u[1]);
            std::string parallel = perpendicular_from_point(sk, perpToChord, u[1]);
            radiusMark = sk.intersection(parallel, baseline, 0, "grid");
        }
    }

    // Circles in row-major order. With ratio 1 the compass is set directly
    // from a neighboring node; otherwise the radius segment O-radiusMark is
    // carried to every node.
    std::vector<std::string> circleIds;
    circleIds.reserve(static_cast<size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            std::string id = fresh_named(sk, "gc");
            if (unitRatio) {
                std::string through = j + 1 < cols ? node[i][j + 1]
                                      : cols >= 2  ? node[i][j - 1]
                                      : i + 1 < rows ? node[i + 1][j]
                                      : rows >= 2    ? node[i - 1][j]
                                                     : seedXId;
                sk.circle(node[i][j], through, "grid", id);
            } else {
                compass_to(sk, node[i][j], seedOId, radiusMark, id);
            }
            circleIds.push_back(id);
        }
    }

    for (int i = 0; i < rows; ++i) scene.add(h[i], sk.line_at(h[i]), Role::lattice);
    for (int j = 0; j < cols; ++j) scene.add(v[j], sk.line_at(v[j]), Role::lattice);
    for (const auto& id : circleIds) scene.add(id, sk.circle_at(id), Role::figure);
}

GridResult generate_grid(const Point& seed_o, const Point& seed_x, const GridSpec& spec) {
    if (equals(seed_o, seed_x)) fail(Errc::degenerate_seed, "grid seeds coincide");
    Sketch sk;
    Scene scene;
    std::string oId = sk.seed(seed_o, "O");
    std::string xId = sk.seed(seed_x, "X");
    generate_grid_into(sk, scene, oId, xId, spec);
    return {std::move(scene), sk.trace()};
}

// --- verification -----------------------------------------------------

namespace {

struct Vec2 {
    double x = 0, y = 0;
};

double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

}  // namespace

GridReport verify_grid(const std::vector<MeasuredCircle>& circles, double tol) {
    if (!(tol > 0)) fail(Errc::degenerate_input, "tolerance must be positive");
    const size_t n = circles.size();
    if (n < 4) fail(Errc::too_few_circles, "grid verification needs at least 4 circles");

    // Collinear or clumped centers have no 2D lattice.
    double mx = 0, my = 0;
    for (const auto& c : circles) {
        mx += c.cx;
        my += c.cy;
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& c : circles) {
        double dx = c.cx - mx, dy = c.cy - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    double tr = sxx + syy;
    double disc = std::sqrt(std::max(0.0, (sxx - syy) * (sxx - syy) + 4 * sxy * sxy));
    double lambda1 = (tr + disc) / 2, lambda2 = (tr - disc) / 2;
    if (lambda1 <= 0 || lambda2 <= 1e-18 * lambda1)
        fail(Errc::degenerate_configuration, "circle centers are collinear");

    // Nearest-neighbor displacements, sign-canonicalized into the right
    // half-plane so d and -d share a bucket.
    std::vector<Vec2> nnDisp;
    std::vector<double> nnDist;
    for (size_t i = 0; i < n; ++i) {
        double best = 0;
        size_t bj = n;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            double dx = circles[j].cx - circles[i].cx;
            double dy = circles[j].cy - circles[i].cy;
            double d2 = dx * dx + dy * dy;
            if (d2 <= 0) continue;
            if (bj == n || d2 < best) {
                best = d2;
                bj = j;
            }
        }
        if (bj == n) continue;
        Vec2 d{circles[bj].cx - circles[i].cx, circles[bj].cy - circles[i].cy};
        nnDisp.push_back(d);
        nnDist.push_back(std::sqrt(best));
    }
    if (nnDisp.empty()) fail(Errc::degenerate_configuration, "all circle centers coincide");
    double med = median(nnDist);
    double eps = 1e-9 * med;
    for (auto& d : nnDisp) {
        if (d.x < -eps || (d.x <= eps && d.y < 0)) {
            d.x = -d.x;
            d.y = -d.y;
        }
    }

    // Modal bucket at tol resolution; ties go to the displacement closest in
    // angle to the +x axis.
    double bucket = std::max(tol, 1e-12) * med;
    auto quantize = [&](double v) {
        double q = v / bucket;
        q = std::clamp(q, -1e15, 1e15);
        return static_cast<long long>(std::llround(q));
    };
    std::map<std::pair<long long, long long>, std::vector<size_t>> buckets;
    for (size_t i = 0; i < nnDisp.size(); ++i) {
        auto key = std::make_pair(quantize(nnDisp[i].x), quantize(nnDisp[i].y));
        buckets[key].push_back(i);
    }
    Vec2 e1;
    size_t bestCount = 0;
    double bestAngle = 0;
    for (const auto& [key, members] : buckets) {
        (void)key;
        Vec2 mean;
        for (size_t i : members) {
            mean.x += nnDisp[i].x;
            mean.y += nnDisp[i].y;
        }
        mean.x /= static_cast<double>(members.size());
        mean.y /= static_cast<double>(members.size());
        double angle = std::fabs(std::atan2(mean.y, mean.x));
        if (members.size() > bestCount ||
            (members.size() == bestCount && angle < bestAngle)) {
            bestCount = members.size();
            bestAngle = angle;
            e1 = mean;
        }
    }

    // Refine both basis vectors by averaging every center-pair displacement
    // that matches them.
    double s0 = norm(e1);
    auto refine = [&](const Vec2& target) {
        Vec2 acc;
        size_t count = 0;
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                Vec2 d{circles[j].cx - circles[i].cx, circles[j].cy - circles[i].cy};
                if (norm(d) > 1.6 * s0) continue;
                if (d.x * target.x + d.y * target.y < 0) {
                    d.x = -d.x;
                    d.y = -d.y;
                }
                Vec2 offset{d.x - target.x, d.y - target.y};
                if (norm(offset) > 0.35 * s0) continue;
                acc.x += d.x;
                acc.y += d.y;
                ++count;
            }
        }
        if (count == 0) return std::make_pair(false, Vec2{});
        return std::make_pair(true, Vec2{acc.x / static_cast<double>(count),
                                         acc.y / static_cast<double>(count)});
    };
    auto [ok1, e1r] = refine(e1);
    if (!ok1) fail(Errc::degenerate_configuration, "no repeated displacement to fit");
    auto [ok2, e2r] = refine(Vec2{-e1r.y, e1r.x});
    if (!ok2) fail(Errc::degenerate_configuration, "no second lattice direction");

    GridReport report;
    double n1 = norm(e1r), n2 = norm(e2r);
    report.fitted_spacing = (n1 + n2) / 2;
    double cosang = std::clamp((e1r.x * e2r.x + e1r.y * e2r.y) / (n1 * n2), -1.0, 1.0);
    report.basis_orthogonality_error = std::fabs(std::acos(cosang) - std::acos(0.0));

    double det = e1r.x * e2r.y - e1r.y * e2r.x;
    if (std::fabs(det) < 1e-12 * s0 * s0)
        fail(Errc::degenerate_configuration, "degenerate lattice basis");

    // Anchor at the first center, then shift by the median fractional offset
    // so a single outlier cannot drag the whole lattice.
    double ox = circles[0].cx, oy = circles[0].cy;
    auto coords = [&](double px, double py) {
        double rx = px - ox, ry = py - oy;
        return std::make_pair((rx * e2r.y - ry * e2r.x) / det, (e1r.x * ry - e1r.y * rx) / det);
    };
    std::vector<double> fu, fv;
    fu.reserve(n);
    fv.reserve(n);
    for (const auto& c : circles) {
        auto [uu, vv] = coords(c.cx, c.cy);
        fu.push_back(uu - std::round(uu));
        fv.push_back(vv - std::round(vv));
    }
    double medU = median(fu), medV = median(fv);
    ox += medU * e1r.x + medV * e2r.x;
    oy += medU * e1r.y + medV * e2r.y;

    double maxResid = 0;
    for (const auto& c : circles) {
        auto [uu, vv] = coords(c.cx, c.cy);
        double ku = std::round(uu), kv = std::round(vv);
        double lx = ox + ku * e1r.x + kv * e2r.x;
        double ly = oy + ku * e1r.y + kv * e2r.y;
        maxResid = std::max(maxResid, std::hypot(c.cx - lx, c.cy - ly));
    }
    report.max_center_residual = maxResid / report.fitted_spacing;

    double meanR = 0;
    for (const auto& c : circles) meanR += c.r;
    meanR /= static_cast<double>(n);
    double maxDev = 0;
    for (const auto& c : circles) maxDev = std::max(maxDev, std::fabs(c.r - meanR));
    report.fitted_ratio = meanR / report.fitted_spacing;
    report.max_radius_deviation = meanR > 0 ? maxDev / meanR : 0.0;

    report.is_grid = report.basis_orthogonality_error <= tol &&
                     report.max_center_residual <= tol && report.max_radius_deviation <= tol;
    return report;
}

}  // namespace kha
