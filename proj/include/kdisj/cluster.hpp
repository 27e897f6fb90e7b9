#pragma once

#include <cstddef>
#include <vector>

namespace kdisj {

struct Merge {
    std::size_t a = 0; // child cluster ids, a < b
    std::size_t b = 0;
    double cost = 0.0;
    std::size_t id = 0; // id of the merged cluster (n, n+1, ...)
};

struct Dendrogram {
    std::size_t leaves = 0;
    std::vector<Merge> merges; // leaves - 1 entries, nondecreasing cost
};

// Agglomerative clustering with the Ward merge cost
//   delta(A, B) = |A||B| / (|A|+|B|) * ||centroid_A - centroid_B||^2,
// maintained with the Lance-Williams recurrence. Cost ties pick the
// lexicographically smallest (smaller-id, larger-id) pair.
Dendrogram ahc_ward(const std::vector<std::vector<double>>& points);

// Partition into n_classes by undoing the last n_classes - 1 merges; labels
// 0..n_classes-1 are assigned in order of each class's smallest member index.
std::vector<std::size_t> cut(const Dendrogram& d, std::size_t n_classes);

} // namespace kdisj
