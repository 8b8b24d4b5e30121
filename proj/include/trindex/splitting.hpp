#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace trindex {

// Multiset of (ramification index e, residue degree f) with sum e*f equal
// to the degree of the defining polynomial (9 throughout this library).
struct SplittingType {
    std::vector<std::pair<long, long>> pairs;  // kept sorted

    void add(long e, long f) {
        pairs.emplace_back(e, f);
        std::sort(pairs.begin(), pairs.end());
    }

    void merge(const SplittingType& other) {
        pairs.insert(pairs.end(), other.pairs.begin(), other.pairs.end());
        std::sort(pairs.begin(), pairs.end());
    }

    long degree_sum() const {
        long s = 0;
        for (auto& [e, f] : pairs) s += e * f;
        return s;
    }

    // P_f: number of primes with residue degree f.
    std::map<long, long> residue_degree_counts() const {
        std::map<long, long> out;
        for (auto& [e, f] : pairs) ++out[f];
        return out;
    }

    bool operator==(const SplittingType&) const = default;

    std::string str() const {
        std::ostringstream os;
        for (size_t i = 0; i < pairs.size(); ++i) {
            if (i) os << " ";
            os << "(" << pairs[i].first << "," << pairs[i].second << ")";
        }
        return os.str();
    }
};

inline SplittingType make_splitting(std::initializer_list<std::pair<long, long>> ps) {
    SplittingType s;
    for (auto& [e, f] : ps) s.add(e, f);
    return s;
}

}  // namespace trindex
