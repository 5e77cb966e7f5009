#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kha/ancient_ratios.hpp"
#include "kha/dsl.hpp"
#include "kha/grid.hpp"
#include "kha/scene_io.hpp"
#include "kha/svg.hpp"
#include "kha/trace.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitIo = 2;
constexpr int kExitNotGrid = 3;
constexpr int kExitUsage = 64;

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return in.good() || in.eof();
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

void print_diagnostics(const std::vector<kha::dsl::Diagnostic>& diags) {
    for (const auto& d : diags) {
        std::cerr << d.span.line << ":" << d.span.col << ": "
                  << (d.severity == kha::dsl::Severity::error ? "error" : "warning") << ": "
                  << d.message << " [" << d.code << "]\n";
    }
}

int write_outputs(const kha::Scene& scene, const kha::ConstructionTrace& trace,
                  const std::string& svgPath, const std::string& jsonPath,
                  const std::string& tracePath, const kha::RenderStyle& style) {
    if (!svgPath.empty() && !write_file(svgPath, kha::scene_to_svg(scene, style))) {
        std::cerr << "error: cannot write '" << svgPath << "'\n";
        return kExitIo;
    }
    if (!jsonPath.empty() && !write_file(jsonPath, kha::scene_to_document(scene))) {
        std::cerr << "error: cannot write '" << jsonPath << "'\n";
        return kExitIo;
    }
    if (!tracePath.empty() && !write_file(tracePath, kha::trace_to_text(trace))) {
        std::cerr << "error: cannot write '" << tracePath << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

int cmd_run(const std::string& path, const std::string& svgPath, const std::string& jsonPath) {
    std::string source;
    if (!read_file(path, source)) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return kExitIo;
    }
    auto parsed = kha::dsl::parse(source);
    print_diagnostics(parsed.diagnostics);
    if (!parsed.ok()) return kExitDiagnostics;
    auto result = kha::dsl::evaluate(parsed.program);
    print_diagnostics(result.diagnostics);
    if (!result.ok()) return kExitDiagnostics;
    int rc = write_outputs(result.scene, result.trace, svgPath, jsonPath, "", {});
    if (rc != kExitOk) return rc;
    std::cout << "ok: " << result.scene.size() << " object(s), " << result.trace.steps.size()
              << " primitive step(s)\n";
    return kExitOk;
}

int cmd_grid(int rows, int cols, const std::string& ratioText, const std::string& svgPath,
             const std::string& jsonPath, const std::string& tracePath) {
    auto ratio = kha::Rational::parse(ratioText);
    if (!ratio || ratio->sign() <= 0) {
        std::cerr << "error: --ratio must be a positive rational literal like 1 or 3/4\n";
        return kExitUsage;
    }
    kha::GridSpec spec =
        kha::GridSpec::create(rows, cols, kha::Constructible(1), kha::Constructible(*ratio));
    if (!spec.overlapping())
        std::cerr << "warning: ratio " << ratio->str()
                  << " <= 1/2: adjacent circles do not overlap\n";
    kha::Point o{kha::Constructible(0), kha::Constructible(0)};
    kha::Point x{kha::Constructible(1), kha::Constructible(0)};
    auto result = kha::generate_grid(o, x, spec);
    kha::RenderStyle style;
    style.stroke_width = 0.01;  // 1% of the unit lattice pitch
    int rc = write_outputs(result.scene, result.trace, svgPath, jsonPath, tracePath, style);
    if (rc != kExitOk) return rc;
    std::cout << "ok: " << rows << "x" << cols << " grid, ratio " << ratio->str() << ", "
              << result.scene.size() << " object(s), " << result.trace.steps.size()
              << " primitive step(s)\n";
    return kExitOk;
}

bool parse_circles_json(const std::string& text, std::vector<kha::MeasuredCircle>& out) {
    auto doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_array()) return false;
    for (const auto& e : doc) {
        if (!e.is_object() || !e.contains("cx") || !e.contains("cy") || !e.contains("r") ||
            !e["cx"].is_number() || !e["cy"].is_number() || !e["r"].is_number())
            return false;
        out.push_back({e["cx"].get<double>(), e["cy"].get<double>(), e["r"].get<double>()});
    }
    return true;
}

bool parse_circles_csv(const std::string& text, std::vector<kha::MeasuredCircle>& out) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "cx,cy,r") return false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string f1, f2, f3;
        if (!std::getline(row, f1, ',') || !std::getline(row, f2, ',') || !std::getline(row, f3))
            return false;
        try {
            size_t n1 = 0, n2 = 0, n3 = 0;
            kha::MeasuredCircle c{std::stod(f1, &n1), std::stod(f2, &n2), std::stod(f3, &n3)};
            out.push_back(c);
        } catch (const std::exception&) {
            return false;
        }
    }
    return true;
}

int cmd_verify(const std::string& path, double tol) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return kExitIo;
    }
    std::vector<kha::MeasuredCircle> circles;
    bool parsed = path.size() >= 4 && path.substr(path.size() - 4) == ".csv"
                      ? parse_circles_csv(text, circles)
                      : parse_circles_json(text, circles);
    if (!parsed) {
        std::cerr << "error: '" << path
                  << "' is neither a cx/cy/r JSON array nor a cx,cy,r CSV file\n";
        return kExitIo;
    }
    kha::GridReport report;
    try {
        report = kha::verify_grid(circles, tol);
    } catch (const kha::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    std::cout << "is_grid=" << (report.is_grid ? "true" : "false") << "\n"
              << "fitted_spacing=" << fmt12(report.fitted_spacing) << "\n"
              << "fitted_ratio=" << fmt12(report.fitted_ratio) << "\n"
              << "basis_orthogonality_error=" << fmt12(report.basis_orthogonality_error) << "\n"
              << "max_center_residual=" << fmt12(report.max_center_residual) << "\n"
              << "max_radius_deviation=" << fmt12(report.max_radius_deviation) << "\n";
    return report.is_grid ? kExitOk : kExitNotGrid;
}

int cmd_pi(const std::string& which) {
    kha::PiApproximation a = which == "hemaka" ? kha::hemaka_pi() : kha::rhind_octagon_pi();
    std::cout << "name: " << a.name << "\n"
              << "value: " << a.value.str() << "\n"
              << "decimal_2: " << a.decimal_2 << "\n"
              << "error_vs_pi: " << fmt12(a.error_vs_pi) << "\n"
              << "derivation:\n";
    for (const auto& step : a.derivation) std::cout << "  - " << step << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compass-and-straightedge construction engine"};
    app.require_subcommand(1);

    std::string runFile, runSvg, runJson;
    auto* run = app.add_subcommand("run", "Parse and evaluate a .csl construction script");
    run->add_option("file", runFile, "construction script")->required();
    run->add_option("--svg", runSvg, "write an SVG rendering");
    run->add_option("--json", runJson, "write the scene document");

    int rows = 0, cols = 0;
    std::string ratio = "1", gridSvg, gridJson, gridTrace;
    auto* grid = app.add_subcommand("grid", "Generate an overlapping-circles grid");
    grid->add_option("--rows", rows, "lattice rows")->required()->check(CLI::PositiveNumber);
    grid->add_option("--cols", cols, "lattice columns")->required()->check(CLI::PositiveNumber);
    grid->add_option("--ratio", ratio, "circle radius over lattice pitch (rational literal)");
    grid->add_option("--svg", gridSvg, "write an SVG rendering");
    grid->add_option("--json", gridJson, "write the scene document");
    grid->add_option("--trace", gridTrace, "write the construction trace");

    std::string verifyFile;
    double tol = 1e-9;
    auto* verify = app.add_subcommand("verify", "Check measured circles against grid invariants");
    verify->add_option("file", verifyFile, "circles as JSON array or cx,cy,r CSV")->required();
    verify->add_option("--tol", tol, "relative tolerance (default 1e-9)");

    std::string piWhich;
    auto* pi = app.add_subcommand("pi", "Print a reconstructed rational pi approximation");
    pi->add_option("which", piWhich, "hemaka or rhind")
        ->required()
        ->check(CLI::IsMember({"hemaka", "rhind"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed()) return cmd_run(runFile, runSvg, runJson);
        if (grid->parsed()) return cmd_grid(rows, cols, ratio, gridSvg, gridJson, gridTrace);
        if (verify->parsed()) return cmd_verify(verifyFile, tol);
        if (pi->parsed()) return cmd_pi(piWhich);
    } catch (const kha::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
