#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace algodyn {

/// Array component shared by every sorting machine. Zero-based.
using SortArray = std::vector<int>;

/// Raised when a primitive is handed indices outside `0 <= i < j < n`.
class malformed_indices : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// True iff `0 <= i < j < n`.
inline bool valid_pair(const SortArray& a, int i, int j) {
    return 0 <= i && i < j && static_cast<std::size_t>(j) < a.size();
}

/// Exchange positions i and j.
inline SortArray swap_prim(SortArray a, int i, int j) {
    if (!valid_pair(a, i, j))
        throw malformed_indices("swap requires 0 <= i < j < n");
    std::swap(a[i], a[j]);
    return a;
}

/// Place min(a_i, a_j) at i and max(a_i, a_j) at j; identity when already ordered.
inline SortArray order_prim(SortArray a, int i, int j) {
    if (!valid_pair(a, i, j))
        throw malformed_indices("order requires 0 <= i < j < n");
    if (a[i] > a[j])
        std::swap(a[i], a[j]);
    return a;
}

/// Non-decreasing order.
inline bool sortedness(const SortArray& a) {
    return std::is_sorted(a.begin(), a.end());
}

/// Multiset equality.
inline bool is_permutation(const SortArray& a, const SortArray& a0) {
    return a.size() == a0.size() && std::is_permutation(a.begin(), a.end(), a0.begin());
}

/// Number of pairs i < j with a_i > a_j.
inline std::size_t inversions(const SortArray& a) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] > a[j])
                ++count;
    return count;
}

inline std::string to_string(const SortArray& a) {
    std::string out = "[";
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k)
            out += ", ";
        out += std::to_string(a[k]);
    }
    return out + "]";
}

} // namespace algodyn
