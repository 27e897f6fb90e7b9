#pragma once

#include "kdisj/analysis.hpp"
#include "kdisj/cluster.hpp"
#include "kdisj/rng.hpp"
#include "kdisj/tables.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace kdisj::test {

// K=2 questions Q1{A1,A2}, Q2{B1,B2}; four individuals covering all combos.
inline std::string tiny4_csv() {
    return "id,Q1,Q2\n"
           "i1,A1,B1\n"
           "i2,A1,B2\n"
           "i3,A2,B1\n"
           "i4,A2,B2\n";
}

inline CategoricalDataset tiny4() { return ingest_csv(tiny4_csv(), {true}); }

// Arbitrary random dataset within the N<=50, K<=6, m_k<=5 envelope.
inline CategoricalDataset random_dataset(Rng& rng, std::size_t max_n = 50, std::size_t max_k = 6,
                                         std::size_t max_m = 5) {
    const std::size_t n = 1 + rng.uniform_below(max_n);
    const std::size_t k = 1 + rng.uniform_below(max_k);
    std::vector<Question> questions(k);
    for (std::size_t q = 0; q < k; ++q) {
        questions[q].name = "Q" + std::to_string(q + 1);
        const std::size_t m = 1 + rng.uniform_below(max_m);
        for (std::size_t j = 0; j < m; ++j)
            questions[q].modalities.push_back("Q" + std::to_string(q + 1) + "M" + std::to_string(j + 1));
    }
    std::vector<std::string> ids(n);
    std::vector<std::vector<int>> answers(n, std::vector<int>(k));
    for (std::size_t i = 0; i < n; ++i) {
        ids[i] = "r" + std::to_string(i + 1);
        for (std::size_t q = 0; q < k; ++q)
            answers[i][q] = static_cast<int>(rng.uniform_below(questions[q].modalities.size()));
    }
    return CategoricalDataset(std::move(ids), std::move(questions), std::move(answers));
}

// True when all individuals are linked through shared modalities. A multiple
// unit eigenvalue (disconnected table) would make the leading-eigenvector
// check meaningless, so spectrum tests draw connected tables only.
inline bool is_connected(const DisjunctiveTable& d) {
    std::vector<std::size_t> parent(d.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t j = 0; j < d.m; ++j) {
        std::size_t first = d.n;
        for (std::size_t i = 0; i < d.n; ++i) {
            if (!d.at(i, j)) continue;
            if (first == d.n) first = i;
            else parent[find(i)] = find(first);
        }
    }
    for (std::size_t i = 1; i < d.n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

// Random dataset with K >= 2 whose disjunctive table is connected.
inline CategoricalDataset random_connected_dataset(Rng& rng, std::size_t max_n = 50) {
    for (;;) {
        const std::size_t n = 1 + rng.uniform_below(max_n);
        const std::size_t k = 2 + rng.uniform_below(5); // 2..6
        std::vector<Question> questions(k);
        for (std::size_t q = 0; q < k; ++q) {
            questions[q].name = "Q" + std::to_string(q + 1);
            const std::size_t m = 2 + rng.uniform_below(4); // 2..5
            for (std::size_t j = 0; j < m; ++j)
                questions[q].modalities.push_back("Q" + std::to_string(q + 1) + "M" +
                                                  std::to_string(j + 1));
        }
        std::vector<std::string> ids(n);
        std::vector<std::vector<int>> answers(n, std::vector<int>(k));
        for (std::size_t i = 0; i < n; ++i) {
            ids[i] = "r" + std::to_string(i + 1);
            for (std::size_t q = 0; q < k; ++q)
                answers[i][q] = static_cast<int>(rng.uniform_below(questions[q].modalities.size()));
        }
        CategoricalDataset ds(std::move(ids), std::move(questions), std::move(answers));
        if (is_connected(build_disjunctive(ds))) return ds;
    }
}

// Direct Ward clustering from cluster contents, recomputing every pairwise
// merge cost from centroids at each step. The reference for ahc_ward.
inline Dendrogram ward_bruteforce(const std::vector<std::vector<double>>& points) {
    const std::size_t n = points.size();
    const std::size_t dim = points.front().size();
    struct Cluster {
        std::size_t id;
        std::size_t size;
        std::vector<double> centroid;
    };
    std::vector<Cluster> clusters;
    for (std::size_t i = 0; i < n; ++i) clusters.push_back({i, 1, points[i]});

    Dendrogram dg;
    dg.leaves = n;
    for (std::size_t step = 0; step + 1 < n; ++step) {
        double best_cost = std::numeric_limits<double>::infinity();
        std::size_t bx = 0, by = 0;
        for (std::size_t x = 0; x < clusters.size(); ++x) {
            for (std::size_t y = x + 1; y < clusters.size(); ++y) {
                const auto& a = clusters[x];
                const auto& b = clusters[y];
                double d2 = 0.0;
                for (std::size_t d = 0; d < dim; ++d) {
                    const double diff = a.centroid[d] - b.centroid[d];
                    d2 += diff * diff;
                }
                const double sa = static_cast<double>(a.size);
                const double sb = static_cast<double>(b.size);
                const double cost = sa * sb / (sa + sb) * d2;
                const auto lo = std::min(a.id, b.id);
                const auto hi = std::max(a.id, b.id);
                const auto blo = std::min(clusters[bx].id, clusters[by].id);
                const auto bhi = std::max(clusters[bx].id, clusters[by].id);
                if (cost < best_cost ||
                    (cost == best_cost && (lo < blo || (lo == blo && hi < bhi)))) {
                    best_cost = cost;
                    bx = x;
                    by = y;
                }
            }
        }
        auto& a = clusters[bx];
        auto& b = clusters[by];
        const std::size_t id = n + step;
        dg.merges.push_back({std::min(a.id, b.id), std::max(a.id, b.id), best_cost, id});

        Cluster merged{id, a.size + b.size, std::vector<double>(dim)};
        for (std::size_t d = 0; d < dim; ++d)
            merged.centroid[d] = (static_cast<double>(a.size) * a.centroid[d] +
                                  static_cast<double>(b.size) * b.centroid[d]) /
                                 static_cast<double>(merged.size);
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(by));
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bx));
        clusters.push_back(merged);
    }
    return dg;
}

// Inverse of build_disjunctive, used as the round-trip oracle.
inline std::vector<std::vector<int>> decode_answers(const DisjunctiveTable& d) {
    std::vector<std::vector<int>> answers(d.n, std::vector<int>(d.k, -1));
    for (std::size_t i = 0; i < d.n; ++i) {
        for (std::size_t q = 0; q < d.k; ++q) {
            const std::size_t begin = d.block_offsets[q];
            const std::size_t end = q + 1 < d.k ? d.block_offsets[q + 1] : d.m;
            for (std::size_t j = begin; j < end; ++j)
                if (d.at(i, j)) answers[i][q] = static_cast<int>(j - begin);
        }
    }
    return answers;
}

} // namespace kdisj::test
