#include "ufrac/scan_driver.hpp"

#include <stdexcept>

namespace ufrac {

std::uint64_t ScanSummary::counter(const std::string& name) const {
    for (const auto& [k, v] : counters) {
        if (k == name) return v;
    }
    return 0;
}

std::string make_resume_token(const std::string& kind, std::uint64_t next_outer,
                              const std::vector<std::pair<std::string, std::uint64_t>>& counters) {
    std::string token = kind + ":" + std::to_string(next_outer) + ":";
    bool first = true;
    for (const auto& [k, v] : counters) {
        if (!first) token += ",";
        token += k + "=" + std::to_string(v);
        first = false;
    }
    return token;
}

namespace {

std::uint64_t parse_u64(const std::string& s) {
    if (s.empty()) throw std::domain_error("corrupt resume token: empty number");
    std::uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::domain_error("corrupt resume token: \"" + s + "\"");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

}  // namespace

ScanEmitter::ScanEmitter(std::string kind, std::uint64_t outer_end,
                         std::vector<std::string> counter_names, const RecordSink& sink,
                         const ScanOptions& opts)
    : kind_(std::move(kind)), outer_end_(outer_end), sink_(sink), opts_(opts) {
    for (auto& name : counter_names) counters_.emplace_back(std::move(name), 0);
    counters_.emplace_back("violations", 0);  // implicit, fed by emit()

    if (!opts_.resume_token.empty()) {
        const std::string& tok = opts_.resume_token;
        std::size_t c1 = tok.find(':');
        std::size_t c2 = c1 == std::string::npos ? std::string::npos : tok.find(':', c1 + 1);
        if (c2 == std::string::npos) {
            throw std::domain_error("corrupt resume token: \"" + tok + "\"");
        }
        if (tok.substr(0, c1) != kind_) {
            throw std::domain_error("resume token is for scan \"" + tok.substr(0, c1) +
                                    "\", not \"" + kind_ + "\"");
        }
        resume_from_ = parse_u64(tok.substr(c1 + 1, c2 - c1 - 1));
        if (resume_from_ > outer_end_) {
            throw std::domain_error("resume token points past the end of the scan");
        }
        std::string rest = tok.substr(c2 + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            std::size_t comma = rest.find(',', pos);
            std::string item =
                comma == std::string::npos ? rest.substr(pos) : rest.substr(pos, comma - pos);
            std::size_t eq = item.find('=');
            if (eq == std::string::npos) {
                throw std::domain_error("corrupt resume token: \"" + tok + "\"");
            }
            std::string name = item.substr(0, eq);
            std::uint64_t value = parse_u64(item.substr(eq + 1));
            bool known = false;
            for (auto& [k, v] : counters_) {
                if (k == name) {
                    v = value;
                    known = true;
                }
            }
            if (!known) {
                throw std::domain_error("resume token names unknown counter \"" + name + "\"");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
}

void ScanEmitter::count(const std::string& name, std::uint64_t delta) {
    for (auto& [k, v] : counters_) {
        if (k == name) {
            v += delta;
            return;
        }
    }
    throw std::logic_error("unregistered counter \"" + name + "\" in scan " + kind_);
}

void ScanEmitter::emit(ScanRecord rec) {
    if (rec.status == RecordStatus::Violation) count("violations", 1);
    sink_(rec);
}

void ScanEmitter::unit_done(std::uint64_t outer) {
    if (++units_since_checkpoint_ < opts_.checkpoint_every || outer + 1 >= outer_end_) return;
    units_since_checkpoint_ = 0;
    ScanRecord cp;
    cp.kind = "checkpoint";
    cp.parameters = {{"scan", kind_}};
    cp.payload = {{"token", make_resume_token(kind_, outer + 1, counters_)}};
    sink_(cp);
}

ScanSummary ScanEmitter::finish(bool truncated) {
    ScanSummary sum;
    sum.kind = kind_;
    sum.counters = counters_;
    sum.violations = sum.counter("violations");
    sum.truncated = truncated;

    ScanRecord rec;
    rec.kind = "summary";
    rec.parameters = {{"scan", kind_}};
    for (const auto& [k, v] : counters_) rec.payload.emplace_back(k, std::to_string(v));
    rec.status = sum.violations ? RecordStatus::Violation
                                : (truncated ? RecordStatus::Truncated : RecordStatus::Ok);
    sink_(rec);
    return sum;
}

}  // namespace ufrac
