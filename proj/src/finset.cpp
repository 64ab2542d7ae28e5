#include "ufrac/finset.hpp"

#include <algorithm>
#include <stdexcept>

#include "ufrac/errors.hpp"

namespace ufrac {

namespace {
constexpr std::size_t kIntervalCap = 10'000'000;
}

FinSet::FinSet(std::vector<Nat> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    if (!elems_.empty() && elems_.front() < 1) {
        throw std::domain_error("set elements must be positive");
    }
    for (std::size_t i = 1; i < elems_.size(); ++i) {
        if (elems_[i - 1] == elems_[i]) {
            throw std::domain_error("duplicate element " + elems_[i].get_str() +
                                    " (sets are simple; multisets are rejected)");
        }
    }
}

FinSet FinSet::interval(const Nat& m, const Nat& n) {
    if (m < 1) throw std::domain_error("interval start must be >= 1");
    if (n < m) throw std::domain_error("interval end must be >= start");
    Nat count = n - m + 1;
    if (count > static_cast<unsigned long>(kIntervalCap)) {
        throw resource_error("interval cap: " + count.get_str() + " elements exceeds " +
                             std::to_string(kIntervalCap));
    }
    FinSet s;
    s.elems_.reserve(to_u64(count));
    for (Nat x = m; x <= n; ++x) s.elems_.push_back(x);
    return s;
}

FinSet FinSet::parse(const std::string& text) {
    std::string t;
    for (char c : text) {
        if (c != ' ' && c != '\t') t += c;
    }
    if (t.size() < 2 || t.front() != '{' || t.back() != '}') {
        throw std::domain_error("set literal must look like {a,b,c}: \"" + text + "\"");
    }
    std::string body = t.substr(1, t.size() - 2);
    std::vector<Nat> elems;
    if (!body.empty()) {
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string item =
                comma == std::string::npos ? body.substr(pos) : body.substr(pos, comma - pos);
            elems.push_back(parse_nat(item));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return FinSet(std::move(elems));
}

const Nat& FinSet::min() const {
    if (elems_.empty()) throw std::domain_error("min of empty set");
    return elems_.front();
}

const Nat& FinSet::max() const {
    if (elems_.empty()) throw std::domain_error("max of empty set");
    return elems_.back();
}

bool FinSet::contains(const Nat& x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool FinSet::disjoint_with(const FinSet& other) const {
    std::size_t i = 0, j = 0;
    while (i < elems_.size() && j < other.elems_.size()) {
        int c = cmp(elems_[i], other.elems_[j]);
        if (c == 0) return false;
        if (c < 0) {
            ++i;
        } else {
            ++j;
        }
    }
    return true;
}

FinSet FinSet::union_disjoint(const FinSet& other) const {
    FinSet out;
    out.elems_.reserve(elems_.size() + other.elems_.size());
    std::size_t i = 0, j = 0;
    while (i < elems_.size() || j < other.elems_.size()) {
        if (i == elems_.size()) {
            out.elems_.push_back(other.elems_[j++]);
        } else if (j == other.elems_.size()) {
            out.elems_.push_back(elems_[i++]);
        } else {
            int c = cmp(elems_[i], other.elems_[j]);
            if (c == 0) {
                throw std::domain_error("union of overlapping sets (shared element " +
                                        elems_[i].get_str() + ")");
            }
            out.elems_.push_back(c < 0 ? elems_[i++] : other.elems_[j++]);
        }
    }
    return out;
}

std::string FinSet::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) out += ",";
        out += elems_[i].get_str();
    }
    out += "}";
    return out;
}

}  // namespace ufrac
