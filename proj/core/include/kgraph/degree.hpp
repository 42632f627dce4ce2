#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace kgraph {

// Element of N^k (or Z^k where noted, e.g. grades).  Length is always the
// rank k of the graph at hand.
using Degree = std::vector<int>;

inline Degree zero_degree(int k) { return Degree(static_cast<size_t>(k), 0); }

// e_i for a 1-based color i
inline Degree unit_degree(int k, int color) {
    Degree d(static_cast<size_t>(k), 0);
    d[static_cast<size_t>(color - 1)] = 1;
    return d;
}

inline bool degree_leq(const Degree& a, const Degree& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Degree degree_add(const Degree& a, const Degree& b) {
    Degree r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Degree degree_sub(const Degree& a, const Degree& b) {
    Degree r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Degree degree_join(const Degree& a, const Degree& b) {
    Degree r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Degree degree_meet(const Degree& a, const Degree& b) {
    Degree r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

inline int degree_total(const Degree& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

inline bool is_zero_degree(const Degree& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

inline std::string degree_to_string(const Degree& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

}  // namespace kgraph
