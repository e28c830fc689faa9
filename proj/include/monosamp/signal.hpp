#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace monosamp {

using cplx = std::complex<double>;

// Uniform grid t_j = origin + j*step, j = 0..count-1 (half-open window).
struct Grid {
    double origin = 0.0;
    double step = 1.0;
    std::size_t count = 0;

    // Grid covering [tmin, tmax) with n points, step = (tmax - tmin)/n.
    static Grid over(double tmin, double tmax, std::size_t n);

    double point(std::size_t j) const { return origin + static_cast<double>(j) * step; }
};

// Uniform-grid signal carrier. Values are stored as complex; signals created
// with from_real keep is_real() == true and zero imaginary parts.
class SampledSignal {
public:
    SampledSignal() = default;

    static SampledSignal from_real(double origin, double step, std::vector<double> values);
    static SampledSignal from_real(const Grid& g, std::vector<double> values);
    static SampledSignal from_complex(double origin, double step, std::vector<cplx> values);
    static SampledSignal from_complex(const Grid& g, std::vector<cplx> values);

    double origin() const { return origin_; }
    double step() const { return step_; }
    std::size_t size() const { return values_.size(); }
    double t(std::size_t j) const { return origin_ + static_cast<double>(j) * step_; }
    Grid grid() const { return Grid{origin_, step_, values_.size()}; }

    bool is_real() const { return real_; }
    const std::vector<cplx>& values() const { return values_; }
    std::vector<cplx>& values() { return values_; }
    std::vector<double> real_values() const;  // throws unless is_real()

    // sum |v|^2 * step (grid approximation of the L2 energy)
    double energy() const;

private:
    double origin_ = 0.0;
    double step_ = 1.0;
    std::vector<cplx> values_;
    bool real_ = true;
};

// Frequency-domain carrier on the uniform grid xi_k = origin + k*step.
struct Spectrum {
    double origin = 0.0;
    double step = 1.0;
    std::vector<cplx> values;

    double xi(std::size_t k) const { return origin + static_cast<double>(k) * step; }
    std::size_t size() const { return values.size(); }
    double energy() const;

    void validate() const;  // step > 0, finite values
};

// Index range [lo, hi) after trimming a guard band at each end.
std::pair<std::size_t, std::size_t> interior_range(std::size_t n, double guard_fraction = 0.05);

}  // namespace monosamp
