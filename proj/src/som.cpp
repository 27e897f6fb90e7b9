#include "kdisj/som.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace kdisj {

MapTopology MapTopology::line(std::size_t length) {
    if (length == 0) throw InvalidArgument("line topology needs at least one unit");
    return {TopologyKind::Line, 1, length};
}

MapTopology MapTopology::grid(std::size_t r, std::size_t c) {
    if (r == 0 || c == 0) throw InvalidArgument("grid topology needs positive dimensions");
    return {TopologyKind::Grid, r, c};
}

std::size_t MapTopology::distance(std::size_t u, std::size_t v) const {
    const auto [ur, uc] = position(u);
    const auto [vr, vc] = position(v);
    const std::size_t dr = ur > vr ? ur - vr : vr - ur;
    const std::size_t dc = uc > vc ? uc - vc : vc - uc;
    return dr > dc ? dr : dc;
}

std::string MapTopology::describe() const {
    if (kind == TopologyKind::Line) return "line:" + std::to_string(cols);
    return "grid:" + std::to_string(rows) + "x" + std::to_string(cols);
}

std::vector<std::size_t> neighbors(const MapTopology& topology, std::size_t u0, std::size_t r) {
    if (u0 >= topology.units()) throw InvalidArgument("unit index out of range");
    const auto [r0, c0] = topology.position(u0);
    const std::size_t rlo = r0 > r ? r0 - r : 0;
    const std::size_t rhi = std::min(topology.rows - 1, r0 + r);
    const std::size_t clo = c0 > r ? c0 - r : 0;
    const std::size_t chi = std::min(topology.cols - 1, c0 + r);
    std::vector<std::size_t> out;
    out.reserve((rhi - rlo + 1) * (chi - clo + 1));
    for (std::size_t rr = rlo; rr <= rhi; ++rr)
        for (std::size_t cc = clo; cc <= chi; ++cc)
            out.push_back(rr * topology.cols + cc);
    return out;
}

TrainingSchedule TrainingSchedule::geometric(long total_steps, int radius0, std::uint64_t seed,
                                             double eps0, double eps_end) {
    if (total_steps < 0) throw InvalidArgument("total_steps must be nonnegative");
    if (eps0 <= 0.0 || eps0 > 1.0 || eps_end <= 0.0 || eps_end > eps0)
        throw InvalidArgument("epsilon bounds must satisfy 0 < eps_end <= eps0 <= 1");
    if (radius0 < 0) throw InvalidArgument("radius0 must be nonnegative");

    TrainingSchedule s;
    s.total_steps = total_steps;
    s.seed = seed;
    s.info = {"geometric", eps0, eps_end, radius0};
    const long T = total_steps;
    s.epsilon = [eps0, eps_end, T](long t) {
        if (T <= 1) return eps0;
        return eps0 * std::pow(eps_end / eps0, static_cast<double>(t - 1) / static_cast<double>(T - 1));
    };
    const long half = std::max<long>(1, T / 2);
    s.radius = [radius0, half](long t) {
        if (t > half) return 0;
        return static_cast<int>((static_cast<long>(radius0) * (half - (t - 1))) / half);
    };
    return s;
}

int default_radius0(const MapTopology& topology) {
    return static_cast<int>(topology.max_extent() / 2);
}

std::size_t winner(const CodeBook& cb, std::span<const double> x, Slice slice) {
    if (slice.begin >= slice.end || slice.end > cb.dim)
        throw InvalidArgument("winner: empty or out-of-range slice");
    if (x.size() != slice.size())
        throw InvalidArgument("winner: input length does not match slice");
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t u = 0; u < cb.vectors.size(); ++u) {
        const auto& c = cb.vectors[u];
        double dist = 0.0;
        for (std::size_t d = 0; d < x.size(); ++d) {
            const double diff = x[d] - c[slice.begin + d];
            dist += diff * diff;
        }
        if (dist < best_dist) { // strict: ties go to the lowest unit index
            best_dist = dist;
            best = u;
        }
    }
    return best;
}

void update_toward(CodeBook& cb, std::span<const std::size_t> targets,
                   std::span<const double> x, Slice slice, double eps) {
    if (slice.begin >= slice.end || slice.end > cb.dim)
        throw InvalidArgument("update_toward: empty or out-of-range slice");
    if (x.size() != slice.size())
        throw InvalidArgument("update_toward: input length does not match slice");
    if (eps <= 0.0 || eps > 1.0) throw InvalidArgument("update_toward: eps must be in (0, 1]");
    for (std::size_t u : targets) {
        auto& c = cb.vectors.at(u);
        if (eps == 1.0) {
            for (std::size_t d = 0; d < x.size(); ++d) c[slice.begin + d] = x[d];
        } else {
            for (std::size_t d = 0; d < x.size(); ++d) {
                double& cd = c[slice.begin + d];
                cd += eps * (x[d] - cd);
            }
        }
    }
}

CodeBook init_codebook(const std::vector<std::vector<double>>& points,
                       const MapTopology& topology, Rng& rng) {
    if (points.empty()) throw InvalidArgument("init_codebook: no points");
    const std::size_t dim = points.front().size();
    for (const auto& p : points)
        if (p.size() != dim) throw InvalidArgument("init_codebook: dimension mismatch");

    CodeBook cb;
    cb.topology = topology;
    cb.dim = dim;
    const std::size_t u_count = topology.units();
    cb.vectors.resize(u_count);

    if (u_count <= points.size()) {
        // partial Fisher-Yates: U distinct point indices
        std::vector<std::size_t> idx(points.size());
        std::iota(idx.begin(), idx.end(), 0);
        for (std::size_t t = 0; t < u_count; ++t) {
            const std::size_t j = t + static_cast<std::size_t>(rng.uniform_below(idx.size() - t));
            std::swap(idx[t], idx[j]);
            cb.vectors[t] = points[idx[t]];
        }
    } else {
        std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
        std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
        for (const auto& p : points) {
            for (std::size_t d = 0; d < dim; ++d) {
                lo[d] = std::min(lo[d], p[d]);
                hi[d] = std::max(hi[d], p[d]);
            }
        }
        for (std::size_t u = 0; u < u_count; ++u) {
            cb.vectors[u].resize(dim);
            for (std::size_t d = 0; d < dim; ++d) cb.vectors[u][d] = rng.uniform(lo[d], hi[d]);
        }
    }
    return cb;
}

CodeBook train_numeric_som(const std::vector<std::vector<double>>& points,
                           const MapTopology& topology, const TrainingSchedule& schedule,
                           const TrainObserver& observer) {
    Rng rng(schedule.seed);
    CodeBook cb = init_codebook(points, topology, rng);
    if (observer) observer(TrainStep{TrainStep::Kind::Init, 0, 0, 0, 0.0, 0}, cb);

    const Slice full = cb.full();
    for (long t = 1; t <= schedule.total_steps; ++t) {
        const std::size_t item = static_cast<std::size_t>(rng.uniform_below(points.size()));
        const std::span<const double> x(points[item]);
        const std::size_t u0 = winner(cb, x, full);
        const double eps = schedule.epsilon(t);
        const int radius = schedule.radius(t);
        const auto targets = neighbors(topology, u0, static_cast<std::size_t>(radius));
        update_toward(cb, targets, x, full, eps);
        if (observer) observer(TrainStep{TrainStep::Kind::Sample, t, item, u0, eps, radius}, cb);
    }
    return cb;
}

double quantization_error(const CodeBook& cb, const std::vector<std::vector<double>>& points,
                          Slice slice) {
    if (points.empty()) throw InvalidArgument("quantization_error: no points");
    double total = 0.0;
    for (const auto& p : points) {
        const std::size_t u = winner(cb, p, slice);
        const auto& c = cb.vectors[u];
        double dist = 0.0;
        for (std::size_t d = 0; d < p.size(); ++d) {
            const double diff = p[d] - c[slice.begin + d];
            dist += diff * diff;
        }
        total += dist;
    }
    return total / static_cast<double>(points.size());
}

} // namespace kdisj
