#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "monosamp/signal.hpp"
#include "monosamp/subspace.hpp"
#include "monosamp/verify.hpp"

namespace monosamp::io {

// Input-file failure with a 1-based line number, for CLI diagnostics.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Shortest text that round-trips the double exactly (17 significant digits).
std::string format_double(double x);

// CSV formats (headers are mandatory):
//   SampledSignal  "t,value"  or  "t,re,im"
//   Spectrum       "xi,re,im"
//   SampleSet      "k,rho,hrho"
//   CoefficientPair "k,r,s"
void write_signal_csv(std::ostream& os, const SampledSignal& sig);
SampledSignal read_signal_csv(std::istream& is);

void write_spectrum_csv(std::ostream& os, const Spectrum& spec);
Spectrum read_spectrum_csv(std::istream& is);

void write_samples_csv(std::ostream& os, const SampleSet& samples);
SampleSet read_samples_csv(std::istream& is);

void write_coeffs_csv(std::ostream& os, const CoefficientPair& coeffs);
CoefficientPair read_coeffs_csv(std::istream& is);

void write_figure_csv(std::ostream& os, const verify::FigureData& fig);

std::string report_to_json(const verify::VerificationReport& report);
std::string report_to_csv(const verify::VerificationReport& report);
std::string report_to_table(const verify::VerificationReport& report);

}  // namespace monosamp::io
