#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ufrac/records.hpp"

namespace ufrac {

struct ScanOptions {
    unsigned workers = 1;
    std::uint64_t checkpoint_every = 256;  // outer units between checkpoint records
    std::string resume_token;              // empty means a fresh run
};

struct ScanSummary {
    std::string kind;
    std::vector<std::pair<std::string, std::uint64_t>> counters;
    std::uint64_t violations = 0;
    bool truncated = false;
    std::uint64_t counter(const std::string& name) const;
    bool ok() const { return violations == 0; }
};

// Resume token: "<kind>:<next outer unit>:<name>=<value>,...". The token
// carries the counters accumulated so far, so a resumed run finishes with
// the same summary line the uninterrupted run would have produced.
std::string make_resume_token(const std::string& kind, std::uint64_t next_outer,
                              const std::vector<std::pair<std::string, std::uint64_t>>& counters);

// Record emission for a scan whose outer loop covers [0, outer_end). Feeds
// the sink the scan's findings interleaved with periodic checkpoint records
// and one final summary record. unit_done must be called in ascending order.
class ScanEmitter {
  public:
    ScanEmitter(std::string kind, std::uint64_t outer_end, std::vector<std::string> counter_names,
                const RecordSink& sink, const ScanOptions& opts);

    // First outer unit to run: 0 for fresh runs, the token position otherwise.
    std::uint64_t resume_from() const { return resume_from_; }

    void count(const std::string& name, std::uint64_t delta);
    void emit(ScanRecord rec);
    void unit_done(std::uint64_t outer);
    ScanSummary finish(bool truncated = false);

  private:
    std::string kind_;
    std::uint64_t outer_end_;
    std::uint64_t resume_from_ = 0;
    std::uint64_t units_since_checkpoint_ = 0;
    std::vector<std::pair<std::string, std::uint64_t>> counters_;  // ends with "violations"
    const RecordSink& sink_;
    ScanOptions opts_;
};

}  // namespace ufrac
