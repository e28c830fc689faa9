#include "monosamp/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace monosamp::io {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

double parse_double(const std::string& field, std::size_t line) {
    const std::string t = trim(field);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw ParseError(line, "expected a number, got '" + field + "'");
    return v;
}

long parse_long(const std::string& field, std::size_t line) {
    const std::string t = trim(field);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw ParseError(line, "expected an integer, got '" + field + "'");
    return v;
}

// Reads "header + rows of <cols> numbers"; the first column may be an integer
// index depending on the format.
struct Table {
    std::vector<std::vector<double>> rows;
};

Table read_table(std::istream& is, const std::string& header, std::size_t cols) {
    std::string line;
    std::size_t lineno = 0;
    Table table;

    if (!std::getline(is, line)) return table;  // empty input: empty table
    ++lineno;
    if (trim(line) != header)
        throw ParseError(lineno, "expected header '" + header + "', got '" + trim(line) + "'");

    while (std::getline(is, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != cols)
            throw ParseError(lineno, "expected " + std::to_string(cols) + " fields, got " +
                                         std::to_string(fields.size()));
        std::vector<double> row(cols);
        for (std::size_t i = 0; i < cols; ++i) row[i] = parse_double(fields[i], lineno);
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_signal_csv(std::ostream& os, const SampledSignal& sig) {
    if (sig.is_real()) {
        os << "t,value\n";
        for (std::size_t j = 0; j < sig.size(); ++j)
            os << format_double(sig.t(j)) << ',' << format_double(sig.values()[j].real()) << '\n';
    } else {
        os << "t,re,im\n";
        for (std::size_t j = 0; j < sig.size(); ++j)
            os << format_double(sig.t(j)) << ',' << format_double(sig.values()[j].real()) << ','
               << format_double(sig.values()[j].imag()) << '\n';
    }
}

SampledSignal read_signal_csv(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(is, line)) throw ParseError(1, "empty signal file");
    ++lineno;
    const std::string header = trim(line);
    const bool complex_fmt = header == "t,re,im";
    if (!complex_fmt && header != "t,value")
        throw ParseError(lineno, "expected header 't,value' or 't,re,im'");

    std::vector<double> ts;
    std::vector<cplx> vs;
    while (std::getline(is, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split_csv(line);
        const std::size_t want = complex_fmt ? 3 : 2;
        if (fields.size() != want)
            throw ParseError(lineno, "expected " + std::to_string(want) + " fields");
        ts.push_back(parse_double(fields[0], lineno));
        if (complex_fmt)
            vs.emplace_back(parse_double(fields[1], lineno), parse_double(fields[2], lineno));
        else
            vs.emplace_back(parse_double(fields[1], lineno), 0.0);
    }
    if (ts.size() < 2) throw ParseError(lineno, "signal needs at least 2 samples");

    const double origin = ts.front();
    const double step = ts[1] - ts[0];
    if (complex_fmt) return SampledSignal::from_complex(origin, step, std::move(vs));
    std::vector<double> rv(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) rv[i] = vs[i].real();
    return SampledSignal::from_real(origin, step, std::move(rv));
}

void write_spectrum_csv(std::ostream& os, const Spectrum& spec) {
    os << "xi,re,im\n";
    for (std::size_t k = 0; k < spec.size(); ++k)
        os << format_double(spec.xi(k)) << ',' << format_double(spec.values[k].real()) << ','
           << format_double(spec.values[k].imag()) << '\n';
}

Spectrum read_spectrum_csv(std::istream& is) {
    const Table t = read_table(is, "xi,re,im", 3);
    if (t.rows.size() < 2) throw ParseError(1, "spectrum needs at least 2 bins");
    Spectrum spec;
    spec.origin = t.rows.front()[0];
    spec.step = t.rows[1][0] - t.rows[0][0];
    for (const auto& row : t.rows) spec.values.emplace_back(row[1], row[2]);
    spec.validate();
    return spec;
}

void write_samples_csv(std::ostream& os, const SampleSet& samples) {
    os << "k,rho,hrho\n";
    for (std::size_t i = 0; i < samples.size(); ++i)
        os << samples.kmin + static_cast<long>(i) << ',' << format_double(samples.rho[i]) << ','
           << format_double(samples.hrho[i]) << '\n';
}

SampleSet read_samples_csv(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    SampleSet out;

    if (!std::getline(is, line)) return out;  // empty file: empty sample set
    ++lineno;
    if (trim(line) != "k,rho,hrho")
        throw ParseError(lineno, "expected header 'k,rho,hrho', got '" + trim(line) + "'");

    bool first = true;
    long prev_k = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 3) throw ParseError(lineno, "expected 3 fields (k,rho,hrho)");
        const long k = parse_long(fields[0], lineno);
        if (first) {
            out.kmin = k;
            first = false;
        } else if (k != prev_k + 1) {
            throw ParseError(lineno, "sample indices must be contiguous and increasing");
        }
        prev_k = k;
        out.rho.push_back(parse_double(fields[1], lineno));
        out.hrho.push_back(parse_double(fields[2], lineno));
    }
    out.validate();
    return out;
}

void write_coeffs_csv(std::ostream& os, const CoefficientPair& coeffs) {
    os << "k,r,s\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        os << coeffs.kmin + static_cast<long>(i) << ',' << format_double(coeffs.r[i]) << ','
           << format_double(coeffs.s[i]) << '\n';
}

CoefficientPair read_coeffs_csv(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    CoefficientPair out;

    if (!std::getline(is, line)) return out;
    ++lineno;
    if (trim(line) != "k,r,s")
        throw ParseError(lineno, "expected header 'k,r,s', got '" + trim(line) + "'");

    bool first = true;
    long prev_k = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 3) throw ParseError(lineno, "expected 3 fields (k,r,s)");
        const long k = parse_long(fields[0], lineno);
        if (first) {
            out.kmin = k;
            first = false;
        } else if (k != prev_k + 1) {
            throw ParseError(lineno, "coefficient indices must be contiguous and increasing");
        }
        prev_k = k;
        out.r.push_back(parse_double(fields[1], lineno));
        out.s.push_back(parse_double(fields[2], lineno));
    }
    out.validate();
    return out;
}

void write_figure_csv(std::ostream& os, const verify::FigureData& fig) {
    os << fig.abscissa;
    for (const auto& label : fig.labels) os << ',' << label;
    os << '\n';
    for (std::size_t i = 0; i < fig.x.size(); ++i) {
        os << format_double(fig.x[i]);
        for (const auto& col : fig.columns) os << ',' << format_double(col[i]);
        os << '\n';
    }
}

std::string report_to_json(const verify::VerificationReport& report) {
    nlohmann::ordered_json doc;
    doc["a"] = report.a;
    doc["grid"] = report.grid_description;
    doc["seed"] = report.seed;
    doc["overall_pass"] = report.overall_pass;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["paper_anchor"] = c.paper_anchor;
        jc["measured"] = c.measured;
        jc["expected"] = c.expected;
        jc["tolerance"] = c.tolerance;
        jc["passed"] = c.passed;
        jc["notes"] = c.notes;
        checks.push_back(std::move(jc));
    }
    doc["checks"] = std::move(checks);
    return doc.dump(2) + "\n";
}

std::string report_to_csv(const verify::VerificationReport& report) {
    std::ostringstream os;
    os << "name,paper_anchor,measured,expected,tolerance,passed,notes\n";
    for (const auto& c : report.checks)
        os << c.name << ',' << csv_quote(c.paper_anchor) << ',' << format_double(c.measured) << ','
           << format_double(c.expected) << ',' << format_double(c.tolerance) << ','
           << (c.passed ? "true" : "false") << ',' << csv_quote(c.notes) << '\n';
    return os.str();
}

std::string report_to_table(const verify::VerificationReport& report) {
    std::ostringstream os;
    os << "verification suite: a = " << format_double(report.a) << ", seed = " << report.seed
       << "\n";
    os << "grid: " << report.grid_description << "\n\n";
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-34s %-12s %-12s %-10s %s\n", "check", "measured",
                  "expected", "tolerance", "result");
    os << buf;
    for (const auto& c : report.checks) {
        std::snprintf(buf, sizeof(buf), "%-34s %-12.4g %-12.4g %-10.3g %s\n", c.name.c_str(),
                      c.measured, c.expected, c.tolerance, c.passed ? "pass" : "FAIL");
        os << buf;
    }
    os << "\noverall: " << (report.overall_pass ? "pass" : "FAIL") << "\n";
    return os.str();
}

}  // namespace monosamp::io
