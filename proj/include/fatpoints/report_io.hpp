#pragma once

// Rendering of verification reports and Hilbert functions. Output is a pure
// function of its inputs; wall-clock runtime is only emitted on request so
// that identical invocations produce identical bytes.

#include <fatpoints/config_io.hpp>
#include <fatpoints/hilbert.hpp>
#include <fatpoints/verification.hpp>
#include <fatpoints/version.hpp>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace fatpoints {

enum class OutputFormat { table, csv, json };

struct RenderOptions {
    OutputFormat format = OutputFormat::table;
    bool include_timing = false;
};

namespace detail {

inline std::string join_primes(const std::vector<std::uint64_t>& primes) {
    std::string s;
    for (auto p : primes) {
        if (!s.empty()) s += ',';
        s += std::to_string(p);
    }
    return s.empty() ? "-" : s;
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace detail

inline Json report_to_json(const VerificationReport& r, bool include_timing = false) {
    Json j;
    j["tool_version"] = version;
    j["statement_id"] = r.statement_id;
    j["status"] = r.passed() ? "PASS" : "FAIL";
    j["params"] = r.params;
    j["trials"] = r.trials;
    j["passes"] = r.passes;
    j["required_pass_rate"] = r.required_pass_rate;
    j["primes_used"] = r.primes_used;
    j["counters"] = r.counters;
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"trial_index", f.trial_index},
                            {"seed", f.seed},
                            {"prime", f.prime},
                            {"label", f.label},
                            {"configuration", f.configuration},
                            {"observed", f.observed},
                            {"expected", f.expected}});
    }
    j["failures"] = std::move(failures);
    j["caveat"] = certificate_caveat;
    if (include_timing) j["runtime_seconds"] = r.runtime_seconds;
    return j;
}

inline std::string render_report(const VerificationReport& r, const RenderOptions& opts = {}) {
    std::ostringstream out;
    switch (opts.format) {
        case OutputFormat::json: out << report_to_json(r, opts.include_timing).dump(2) << "\n"; break;
        case OutputFormat::csv:
            out << "statement_id,trial_index,seed,label,passed,summary\n";
            for (const auto& rec : r.records) {
                out << r.statement_id << ',' << rec.index << ',' << rec.seed << ',' << detail::csv_quote(rec.label) << ','
                    << (rec.passed ? "true" : "false") << ',' << detail::csv_quote(rec.summary) << "\n";
            }
            break;
        case OutputFormat::table:
            out << (r.passed() ? "PASS" : "FAIL") << "  " << r.statement_id << "  " << r.passes << "/" << r.trials << " trials";
            if (r.required_pass_rate < 1.0) out << " (required rate " << detail::fixed(r.required_pass_rate, 2) << ")";
            if (opts.include_timing) out << "  " << detail::fixed(r.runtime_seconds, 3) << " s";
            out << "\n";
            out << "  params: " << r.params.dump() << "\n";
            out << "  primes: " << detail::join_primes(r.primes_used) << "\n";
            if (!r.counters.empty()) {
                out << "  counters:";
                for (const auto& [k, v] : r.counters) out << ' ' << k << '=' << v;
                out << "\n";
            }
            for (const auto& f : r.failures) {
                out << "  failure: trial " << f.trial_index << " seed " << f.seed << " prime " << f.prime << " [" << f.label << "] observed "
                    << f.observed << "; expected " << f.expected << "\n";
                if (!f.configuration.is_null()) out << "    configuration: " << f.configuration.dump() << "\n";
            }
            break;
    }
    return out.str();
}

/// Header line carried by every CLI output.
inline std::string provenance_line(const std::vector<std::uint64_t>& primes, std::uint64_t seed) {
    return std::string("fatpoints ") + version + "  primes " + detail::join_primes(primes) + "  seed " + std::to_string(seed);
}

inline std::string render_hilbert(const HilbertFunction& h, const std::vector<std::uint64_t>& primes, const FieldSpec& field,
                                  OutputFormat format) {
    const auto dh = difference_function(h);
    std::ostringstream out;
    switch (format) {
        case OutputFormat::json: {
            Json j;
            j["tool_version"] = version;
            j["values"] = h.values();
            j["difference"] = dh.values;
            j["degree"] = h.degree();
            j["stabilization_index"] = h.stabilization_index();
            j["field"] = field_to_json(field);
            j["primes_used"] = primes;
            j["caveat"] = certificate_caveat;
            out << j.dump(2) << "\n";
            break;
        }
        case OutputFormat::csv:
            out << "t,H,dH\n";
            for (std::size_t t = 0; t < dh.values.size(); ++t) {
                out << t << ',' << h(static_cast<int>(t)) << ',' << dh.values[t] << "\n";
            }
            break;
        case OutputFormat::table:
            out << "H:  " << to_string(h) << " ->\n";
            out << "dH: " << to_string(dh) << " ->\n";
            out << "degree " << h.degree() << "  stabilization_index " << h.stabilization_index() << "\n";
            out << "field " << field.describe() << "  primes_used " << detail::join_primes(primes) << "\n";
            out << "note: " << certificate_caveat << "\n";
            break;
    }
    return out.str();
}

}  // namespace fatpoints
