#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ufrac {

enum class RecordStatus { Ok, Violation, Truncated };

const char* to_string(RecordStatus s);

// One scan finding, serialized one-per-line with a fixed field order so that
// identical runs emit identical bytes. All numbers travel as decimal strings;
// values here routinely exceed every fixed-width type.
struct ScanRecord {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::pair<std::string, std::string>> payload;
    RecordStatus status = RecordStatus::Ok;
};

enum class OutputFormat { Json, Csv, Plain };

OutputFormat parse_format(const std::string& name);  // "json" | "csv" | "plain"

std::string format_record(const ScanRecord& rec, OutputFormat fmt);

std::string json_escape(const std::string& s);
std::string csv_escape(const std::string& s);

using RecordSink = std::function<void(const ScanRecord&)>;

// Sink writing one formatted record per line.
RecordSink stream_sink(std::ostream& out, OutputFormat fmt);

}  // namespace ufrac
