#include "ufrac/records.hpp"

#include <stdexcept>

namespace ufrac {

const char* to_string(RecordStatus s) {
    switch (s) {
        case RecordStatus::Ok: return "ok";
        case RecordStatus::Violation: return "violation";
        case RecordStatus::Truncated: return "truncated";
    }
    return "?";
}

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "plain") return OutputFormat::Plain;
    throw std::domain_error("unknown output format \"" + name + "\" (json, csv, plain)");
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string format_record(const ScanRecord& rec, OutputFormat fmt) {
    std::string out;
    switch (fmt) {
        case OutputFormat::Json: {
            out = "{\"kind\":\"" + json_escape(rec.kind) + "\"";
            for (const auto& [k, v] : rec.parameters) {
                out += ",\"" + json_escape(k) + "\":\"" + json_escape(v) + "\"";
            }
            for (const auto& [k, v] : rec.payload) {
                out += ",\"" + json_escape(k) + "\":\"" + json_escape(v) + "\"";
            }
            out += std::string(",\"status\":\"") + to_string(rec.status) + "\"}";
            break;
        }
        case OutputFormat::Csv: {
            out = csv_escape(rec.kind);
            for (const auto& [k, v] : rec.parameters) out += "," + csv_escape(k + "=" + v);
            for (const auto& [k, v] : rec.payload) out += "," + csv_escape(k + "=" + v);
            out += std::string(",") + to_string(rec.status);
            break;
        }
        case OutputFormat::Plain: {
            out = rec.kind;
            for (const auto& [k, v] : rec.parameters) out += " " + k + "=" + v;
            for (const auto& [k, v] : rec.payload) out += " " + k + "=" + v;
            out += std::string(" status=") + to_string(rec.status);
            break;
        }
    }
    return out;
}

RecordSink stream_sink(std::ostream& out, OutputFormat fmt) {
    return [&out, fmt](const ScanRecord& rec) { out << format_record(rec, fmt) << '\n'; };
}

}  // namespace ufrac
