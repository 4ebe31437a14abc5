#pragma once

#include <string>
#include <vector>

#include "ballspec/spectrum.hpp"

namespace ballspec::io {

// Serialized form of one eigenvalue; field names match the JSON/CSV schema.
struct EigenvalueRecord {
    double re = 0.0;
    double im = 0.0;
    int n = 0;
    std::string family; // "alpha" | "beta"
    int multiplicity = 0;
    double w0_re = 0.0;
    double w0_im = 0.0;
    double residual_poly = 0.0;
    double residual_hankel = 0.0;

    bool operator==(const EigenvalueRecord&) const = default;
};

struct SpectrumDocument {
    std::string schema_version = "1";
    double gamma = 0.0;
    int n_max = 0;
    long precision_bits = 0;
    std::vector<EigenvalueRecord> eigenvalues;
    std::string tool_version;

    bool operator==(const SpectrumDocument&) const = default;
};

SpectrumDocument make_document(double gamma, int n_max, long precision_bits,
                               const std::vector<spectrum::Eigenvalue>& eigenvalues);

// Locale-independent formatting at 17 significant digits (trailing zeros
// elided), '.' separator, zero always "0". Round-trips doubles.
std::string format_double(double v);

std::string to_json(const SpectrumDocument& doc);
std::string to_csv(const SpectrumDocument& doc);

// Strict parse of to_json output (schema_version must match). Throws
// SchemaError on structural problems.
SpectrumDocument parse_json(const std::string& text);

// Write via temp file + rename so readers never observe a partial file.
void atomic_write(const std::string& path, const std::string& content);

} // namespace ballspec::io
