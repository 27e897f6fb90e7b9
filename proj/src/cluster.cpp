#include "kdisj/cluster.hpp"

#include "kdisj/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace kdisj {

Dendrogram ahc_ward(const std::vector<std::vector<double>>& points) {
    const std::size_t n = points.size();
    if (n == 0) throw InvalidArgument("ahc_ward: no points");
    const std::size_t dim = points.front().size();
    for (const auto& p : points)
        if (p.size() != dim) throw InvalidArgument("ahc_ward: dimension mismatch");

    Dendrogram dg;
    dg.leaves = n;
    if (n == 1) return dg;

    const std::size_t total = 2 * n - 1; // leaves + merged clusters
    std::vector<std::size_t> size(total, 0);
    std::vector<bool> active(total, false);
    // cost[a][b] for active pairs, indexed by cluster id
    std::vector<std::vector<double>> cost(total, std::vector<double>(total, 0.0));

    for (std::size_t i = 0; i < n; ++i) {
        size[i] = 1;
        active[i] = true;
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            double d2 = 0.0;
            for (std::size_t d = 0; d < dim; ++d) {
                const double diff = points[a][d] - points[b][d];
                d2 += diff * diff;
            }
            cost[a][b] = 0.5 * d2; // singleton Ward cost
        }
    }

    std::vector<std::size_t> alive(n);
    std::iota(alive.begin(), alive.end(), 0);

    for (std::size_t step = 0; step < n - 1; ++step) {
        std::size_t best_a = 0, best_b = 0;
        double best_cost = std::numeric_limits<double>::infinity();
        for (std::size_t x = 0; x < alive.size(); ++x) {
            for (std::size_t y = x + 1; y < alive.size(); ++y) {
                std::size_t a = alive[x], b = alive[y];
                if (a > b) std::swap(a, b);
                const double c = cost[a][b];
                if (c < best_cost ||
                    (c == best_cost && (a < best_a || (a == best_a && b < best_b)))) {
                    best_cost = c;
                    best_a = a;
                    best_b = b;
                }
            }
        }

        const std::size_t id = n + step;
        dg.merges.push_back({best_a, best_b, best_cost, id});

        // Lance-Williams update for the Ward merge cost
        const double sa = static_cast<double>(size[best_a]);
        const double sb = static_cast<double>(size[best_b]);
        for (std::size_t c : alive) {
            if (c == best_a || c == best_b) continue;
            const double sc = static_cast<double>(size[c]);
            const double dac = cost[std::min(c, best_a)][std::max(c, best_a)];
            const double dbc = cost[std::min(c, best_b)][std::max(c, best_b)];
            const double merged = ((sa + sc) * dac + (sb + sc) * dbc - sc * best_cost) / (sa + sb + sc);
            cost[std::min(c, id)][std::max(c, id)] = merged;
        }

        size[id] = size[best_a] + size[best_b];
        active[best_a] = active[best_b] = false;
        active[id] = true;
        alive.erase(std::remove_if(alive.begin(), alive.end(),
                                   [&](std::size_t c) { return c == best_a || c == best_b; }),
                    alive.end());
        alive.push_back(id);
    }
    return dg;
}

std::vector<std::size_t> cut(const Dendrogram& d, std::size_t n_classes) {
    const std::size_t n = d.leaves;
    if (n_classes < 1 || n_classes > n) throw InvalidArgument("cut: n_classes out of range");

    std::vector<std::size_t> parent(2 * n - 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    const std::size_t applied = n - n_classes;
    for (std::size_t t = 0; t < applied; ++t) {
        const Merge& mg = d.merges[t];
        parent[find(mg.a)] = find(mg.id);
        parent[find(mg.b)] = find(mg.id);
    }

    // label classes by their smallest leaf
    std::vector<std::size_t> labels(n);
    std::vector<long> root_label(2 * n - 1, -1);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (root_label[r] < 0) root_label[r] = static_cast<long>(next++);
        labels[i] = static_cast<std::size_t>(root_label[r]);
    }
    return labels;
}

} // namespace kdisj
