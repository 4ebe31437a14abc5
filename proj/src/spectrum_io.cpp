#include "ballspec/spectrum_io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ballspec/version.hpp"

namespace ballspec::io {

SpectrumDocument make_document(double gamma, int n_max, long precision_bits,
                               const std::vector<spectrum::Eigenvalue>& eigenvalues) {
    SpectrumDocument doc;
    doc.gamma = gamma;
    doc.n_max = n_max;
    doc.precision_bits = precision_bits;
    doc.tool_version = tool_version;
    doc.eigenvalues.reserve(eigenvalues.size());
    for (const auto& ev : eigenvalues) {
        EigenvalueRecord rec;
        rec.re = ev.lambda.re.to_double();
        rec.im = ev.lambda.im.to_double();
        rec.n = ev.n;
        rec.family = spectrum::family_name(ev.family);
        rec.multiplicity = ev.multiplicity;
        rec.w0_re = ev.w0.re.to_double();
        rec.w0_im = ev.w0.im.to_double();
        rec.residual_poly = ev.residual_poly;
        rec.residual_hankel = ev.residual_hankel;
        doc.eigenvalues.push_back(std::move(rec));
    }
    return doc;
}

std::string format_double(double v) {
    if (v == 0.0) return "0"; // fold out the sign of zero
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

void append_record(std::string& s, const EigenvalueRecord& r, const char* indent) {
    s += indent;
    s += "{\"re\": " + format_double(r.re);
    s += ", \"im\": " + format_double(r.im);
    s += ", \"n\": " + std::to_string(r.n);
    s += ", \"family\": \"" + r.family + "\"";
    s += ", \"multiplicity\": " + std::to_string(r.multiplicity);
    s += ", \"w0_re\": " + format_double(r.w0_re);
    s += ", \"w0_im\": " + format_double(r.w0_im);
    s += ", \"residual_poly\": " + format_double(r.residual_poly);
    s += ", \"residual_hankel\": " + format_double(r.residual_hankel);
    s += "}";
}

} // namespace

std::string to_json(const SpectrumDocument& doc) {
    std::string s;
    s += "{\n";
    s += "  \"schema_version\": \"" + doc.schema_version + "\",\n";
    s += "  \"gamma\": " + format_double(doc.gamma) + ",\n";
    s += "  \"n_max\": " + std::to_string(doc.n_max) + ",\n";
    s += "  \"precision_bits\": " + std::to_string(doc.precision_bits) + ",\n";
    s += "  \"eigenvalues\": [";
    for (size_t i = 0; i < doc.eigenvalues.size(); ++i) {
        s += i == 0 ? "\n" : ",\n";
        append_record(s, doc.eigenvalues[i], "    ");
    }
    s += doc.eigenvalues.empty() ? "],\n" : "\n  ],\n";
    s += "  \"tool_version\": \"" + doc.tool_version + "\"\n";
    s += "}\n";
    return s;
}

std::string to_csv(const SpectrumDocument& doc) {
    std::string s = "re,im,n,family,multiplicity,w0_re,w0_im,residual_poly,residual_hankel\n";
    for (const auto& r : doc.eigenvalues) {
        s += format_double(r.re) + "," + format_double(r.im) + "," + std::to_string(r.n) + ","
           + r.family + "," + std::to_string(r.multiplicity) + "," + format_double(r.w0_re) + ","
           + format_double(r.w0_im) + "," + format_double(r.residual_poly) + ","
           + format_double(r.residual_hankel) + "\n";
    }
    return s;
}

SpectrumDocument parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("spectrum document is not valid JSON: ") + e.what());
    }
    try {
        SpectrumDocument doc;
        doc.schema_version = j.at("schema_version").get<std::string>();
        if (doc.schema_version != "1")
            throw SchemaError("unsupported schema_version: " + doc.schema_version);
        doc.gamma = j.at("gamma").get<double>();
        doc.n_max = j.at("n_max").get<int>();
        doc.precision_bits = j.at("precision_bits").get<long>();
        doc.tool_version = j.at("tool_version").get<std::string>();
        for (const auto& e : j.at("eigenvalues")) {
            EigenvalueRecord r;
            r.re = e.at("re").get<double>();
            r.im = e.at("im").get<double>();
            r.n = e.at("n").get<int>();
            r.family = e.at("family").get<std::string>();
            if (r.family != "alpha" && r.family != "beta")
                throw SchemaError("unknown family tag: " + r.family);
            r.multiplicity = e.at("multiplicity").get<int>();
            r.w0_re = e.at("w0_re").get<double>();
            r.w0_im = e.at("w0_im").get<double>();
            r.residual_poly = e.at("residual_poly").get<double>();
            r.residual_hankel = e.at("residual_hankel").get<double>();
            doc.eigenvalues.push_back(std::move(r));
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("spectrum document missing fields: ") + e.what());
    }
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

} // namespace ballspec::io
