#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "monosamp/kernels.hpp"
#include "monosamp/signal.hpp"

namespace monosamp::verify {

struct CheckResult {
    std::string name;
    std::string paper_anchor;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string notes;
};

struct VerificationReport {
    double a = 0.0;
    std::string grid_description;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    bool overall_pass = false;
};

struct VerifyConfig {
    double tmin = 0.0;   // 0,0 means "use the default window" (+-320 pi)
    double tmax = 0.0;
    std::size_t points = 1u << 20;
    std::size_t random_elements = 20;
    std::uint64_t seed = 0x5a17c0de;
    std::map<std::string, double> tolerance_overrides;

    // Per-check tolerance: override if present, else the built-in default.
    // Returns fallback for checks whose default is computed at run time.
    double tolerance(std::string_view name, double fallback) const;
};

// Runs every paper identity as a named check.  Deterministic for a fixed
// config (randomized checks derive their generators from config.seed).
// Precondition |a| <= 0.9 (conditioning guard); violations throw
// std::domain_error.
VerificationReport run_suite(const BlaschkeParameter& a, const VerifyConfig& cfg = {});

enum class FigureKind { fig1_left, fig1_right, fig2 };

struct FigureData {
    std::string abscissa;              // column name of x
    std::vector<std::string> labels;   // one per data column
    std::vector<double> x;
    std::vector<std::vector<double>> columns;
};

// Plot-ready columns for the two figures:
//   fig1_left : xi, sqrt(pi/2)(1+a) H_a(xi)
//   fig1_right: t, sinc_a(t), sinc(t)
//   fig2      : t, cosinc_a(t), (1 - cos t)/t
FigureData figure_data(FigureKind which, const BlaschkeParameter& a, const Grid& grid);

}  // namespace monosamp::verify
