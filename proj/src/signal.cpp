#include "monosamp/signal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monosamp {

namespace {

void check_grid(double origin, double step, std::size_t count) {
    if (!std::isfinite(origin) || !std::isfinite(step))
        throw std::invalid_argument("grid: origin and step must be finite");
    if (step <= 0.0)
        throw std::invalid_argument("grid: step must be positive");
    if (count < 2)
        throw std::invalid_argument("grid: need at least 2 samples");
}

}  // namespace

Grid Grid::over(double tmin, double tmax, std::size_t n) {
    if (!(tmin < tmax))
        throw std::invalid_argument("grid: tmin must be less than tmax");
    if (n < 2)
        throw std::invalid_argument("grid: need at least 2 points");
    Grid g;
    g.origin = tmin;
    g.step = (tmax - tmin) / static_cast<double>(n);
    g.count = n;
    check_grid(g.origin, g.step, g.count);
    return g;
}

SampledSignal SampledSignal::from_real(double origin, double step, std::vector<double> values) {
    check_grid(origin, step, values.size());
    SampledSignal s;
    s.origin_ = origin;
    s.step_ = step;
    s.real_ = true;
    s.values_.reserve(values.size());
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("SampledSignal: non-finite value");
        s.values_.emplace_back(v, 0.0);
    }
    return s;
}

SampledSignal SampledSignal::from_real(const Grid& g, std::vector<double> values) {
    if (values.size() != g.count)
        throw std::invalid_argument("SampledSignal: value count does not match grid");
    return from_real(g.origin, g.step, std::move(values));
}

SampledSignal SampledSignal::from_complex(double origin, double step, std::vector<cplx> values) {
    check_grid(origin, step, values.size());
    for (const cplx& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("SampledSignal: non-finite value");
    SampledSignal s;
    s.origin_ = origin;
    s.step_ = step;
    s.real_ = false;
    s.values_ = std::move(values);
    return s;
}

SampledSignal SampledSignal::from_complex(const Grid& g, std::vector<cplx> values) {
    if (values.size() != g.count)
        throw std::invalid_argument("SampledSignal: value count does not match grid");
    return from_complex(g.origin, g.step, std::move(values));
}

std::vector<double> SampledSignal::real_values() const {
    if (!real_) throw std::logic_error("SampledSignal: real_values() on a complex signal");
    std::vector<double> out(values_.size());
    std::transform(values_.begin(), values_.end(), out.begin(),
                   [](const cplx& v) { return v.real(); });
    return out;
}

double SampledSignal::energy() const {
    double acc = 0.0;
    for (const cplx& v : values_) acc += std::norm(v);
    return acc * step_;
}

double Spectrum::energy() const {
    double acc = 0.0;
    for (const cplx& v : values) acc += std::norm(v);
    return acc * step;
}

void Spectrum::validate() const {
    check_grid(origin, step, values.size());
    for (const cplx& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("Spectrum: non-finite value");
}

std::pair<std::size_t, std::size_t> interior_range(std::size_t n, double guard_fraction) {
    auto guard = static_cast<std::size_t>(std::ceil(guard_fraction * static_cast<double>(n)));
    if (2 * guard >= n) return {0, n};
    return {guard, n - guard};
}

}  // namespace monosamp
