#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "pattern_lab/errors.hpp"

namespace pattern_lab {

/// Integer partition: weakly decreasing positive parts. Doubles as a cycle
/// type (multiset of cycle lengths) and as a character label.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw domain_error("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw domain_error("Partition: parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int first_part() const { return parts_.empty() ? 0 : parts_.front(); }

    /// |lambda| = sum of parts.
    int sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// m_i = number of parts equal to i.
    int multiplicity(int i) const {
        int m = 0;
        for (int p : parts_) m += (p == i);
        return m;
    }

    /// Multiplicity vector indexed by part size: result[i-1] = m_i.
    std::vector<int> multiplicities() const {
        std::vector<int> m(parts_.empty() ? 0 : parts_.front(), 0);
        for (int p : parts_) ++m[p - 1];
        return m;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

}  // namespace pattern_lab
