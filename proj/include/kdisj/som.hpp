#pragma once

#include "kdisj/errors.hpp"
#include "kdisj/rng.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace kdisj {

enum class TopologyKind { Line, Grid };

// A 1-D or 2-D Kohonen map. A line is stored as a 1 x U grid, which makes the
// Chebyshev metric degenerate to the absolute coordinate difference.
struct MapTopology {
    TopologyKind kind = TopologyKind::Line;
    std::size_t rows = 1;
    std::size_t cols = 1;

    static MapTopology line(std::size_t length);
    static MapTopology grid(std::size_t r, std::size_t c);

    std::size_t units() const { return rows * cols; }
    std::pair<std::size_t, std::size_t> position(std::size_t u) const {
        return {u / cols, u % cols};
    }
    // Chebyshev distance between grid positions of two units.
    std::size_t distance(std::size_t u, std::size_t v) const;
    std::size_t max_extent() const { return rows > cols ? rows : cols; }
    std::string describe() const;
};

std::vector<std::size_t> neighbors(const MapTopology& topology, std::size_t u0, std::size_t r);

// Half-open component range of a code vector.
struct Slice {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t size() const { return end - begin; }
};

struct CodeBook {
    MapTopology topology;
    std::size_t dim = 0;
    std::vector<std::vector<double>> vectors; // units() x dim

    Slice full() const { return {0, dim}; }
};

// Serialization metadata describing how a schedule was built.
struct ScheduleInfo {
    std::string kind = "geometric";
    double eps0 = 0.5;
    double eps_end = 0.01;
    int radius0 = 0;
};

// Per-step adaptation parameter and neighborhood radius, both nonincreasing,
// defined for 1-based steps 1..total_steps.
struct TrainingSchedule {
    long total_steps = 0;
    std::uint64_t seed = 0;
    std::function<double(long)> epsilon;
    std::function<int(long)> radius;
    ScheduleInfo info;

    // eps decays geometrically from eps0 to eps_end; the radius shrinks
    // linearly in integer steps from radius0 to 0 over the first half of the
    // run and stays 0 afterwards.
    static TrainingSchedule geometric(long total_steps, int radius0, std::uint64_t seed,
                                      double eps0 = 0.5, double eps_end = 0.01);
};

int default_radius0(const MapTopology& topology);

std::size_t winner(const CodeBook& cb, std::span<const double> x, Slice slice);

void update_toward(CodeBook& cb, std::span<const std::size_t> targets,
                   std::span<const double> x, Slice slice, double eps);

// Code vectors start as distinct input points sampled with the given
// generator when there are enough points, otherwise uniform per-component in
// the data's [min, max] box.
CodeBook init_codebook(const std::vector<std::vector<double>>& points,
                       const MapTopology& topology, Rng& rng);

struct TrainStep {
    enum class Kind { Init, Sample, Row, Column };
    Kind kind = Kind::Init;
    long t = 0;            // 0 for Init
    std::size_t item = 0;  // index of the drawn point / row / column
    std::size_t winner = 0;
    double eps = 0.0;
    int radius = 0;
};

// Called after initialization (Kind::Init) and after every training step.
using TrainObserver = std::function<void(const TrainStep&, const CodeBook&)>;

CodeBook train_numeric_som(const std::vector<std::vector<double>>& points,
                           const MapTopology& topology, const TrainingSchedule& schedule,
                           const TrainObserver& observer = nullptr);

double quantization_error(const CodeBook& cb, const std::vector<std::vector<double>>& points,
                          Slice slice);

} // namespace kdisj
