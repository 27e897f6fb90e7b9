#include "kdisj/mca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kdisj {

Matrix gram_matrix(const CorrectedTable& dc) {
    Matrix s(dc.m, dc.m);
    for (std::size_t j = 0; j < dc.m; ++j) {
        for (std::size_t j2 = j; j2 < dc.m; ++j2) {
            double sum = 0.0;
            for (std::size_t i = 0; i < dc.n; ++i) sum += dc.at(i, j) * dc.at(i, j2);
            s.at(j, j2) = sum;
            s.at(j2, j) = sum; // mirrored, so exactly symmetric
        }
    }
    return s;
}

namespace {

double max_offdiagonal(const Matrix& a) {
    double m = 0.0;
    for (std::size_t p = 0; p + 1 < a.rows; ++p)
        for (std::size_t q = p + 1; q < a.rows; ++q)
            m = std::max(m, std::abs(a.at(p, q)));
    return m;
}

void fix_column_sign(Matrix& v, std::size_t col) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < v.rows; ++i) {
        const double mag = std::abs(v.at(i, col));
        if (mag > best) {
            best = mag;
            arg = i;
        }
    }
    if (v.at(arg, col) < 0.0)
        for (std::size_t i = 0; i < v.rows; ++i) v.at(i, col) = -v.at(i, col);
}

} // namespace

EigenResult eigensym(const Matrix& s, double tol) {
    if (s.rows != s.cols) throw InvalidArgument("eigensym: matrix is not square");
    if (tol <= 0.0) throw InvalidArgument("eigensym: tol must be positive");
    const std::size_t n = s.rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(s.at(i, j) - s.at(j, i)) > tol)
                throw InvalidArgument("eigensym: matrix is not symmetric within tol");

    Matrix a = s;
    Matrix v(n, n);
    for (std::size_t i = 0; i < n; ++i) v.at(i, i) = 1.0;

    constexpr int max_sweeps = 50;
    bool converged = n < 2;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        if (max_offdiagonal(a) < tol) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                const double tau = sn / (1.0 + c);
                const double h = t * apq;

                a.at(p, p) -= h;
                a.at(q, q) += h;
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a.at(i, p);
                    const double aiq = a.at(i, q);
                    a.at(i, p) = aip - sn * (aiq + aip * tau);
                    a.at(p, i) = a.at(i, p);
                    a.at(i, q) = aiq + sn * (aip - aiq * tau);
                    a.at(q, i) = a.at(i, q);
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = v.at(i, p);
                    const double viq = v.at(i, q);
                    v.at(i, p) = vip - sn * (viq + vip * tau);
                    v.at(i, q) = viq + sn * (vip - viq * tau);
                }
            }
        }
    }
    if (!converged && max_offdiagonal(a) >= tol)
        throw ConvergenceFailure("eigensym: Jacobi sweeps did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a.at(x, x) > a.at(y, y); });

    EigenResult res;
    res.values.resize(n);
    res.vectors = Matrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        res.values[col] = a.at(order[col], order[col]);
        for (std::size_t i = 0; i < n; ++i) res.vectors.at(i, col) = v.at(i, order[col]);
        fix_column_sign(res.vectors, col);
    }
    return res;
}

MCAResult run_mca(const CorrectedTable& dc) {
    const auto eig = eigensym(gram_matrix(dc));
    const std::size_t m = dc.m;

    MCAResult res;
    res.eigenvalues = eig.values;
    res.eigenvectors = eig.vectors;

    // Axis 0 is the structural eigenvalue-1 direction; it carries no
    // information and is always discarded.
    constexpr double zero_tol = 1e-8;
    std::vector<std::size_t> kept;
    for (std::size_t a = 1; a < m; ++a)
        if (res.eigenvalues[a] >= zero_tol) kept.push_back(a);
    const std::size_t informative = m >= dc.k ? m - dc.k : 0;
    if (kept.size() > informative) kept.resize(informative);

    const std::size_t A = kept.size();
    res.n_axes_kept = A;
    res.individual_coords = Matrix(dc.n, A);
    res.modality_coords = Matrix(m, A);
    res.variance_share.resize(A);

    double total = 0.0;
    for (std::size_t a = 0; a < A; ++a) total += res.eigenvalues[kept[a]];
    for (std::size_t a = 0; a < A; ++a) {
        const std::size_t src = kept[a];
        const double lambda = res.eigenvalues[src];
        res.variance_share[a] = total > 0.0 ? lambda / total : 0.0;
        const double root = std::sqrt(lambda);
        for (std::size_t j = 0; j < m; ++j)
            res.modality_coords.at(j, a) = root * res.eigenvectors.at(j, src);
        for (std::size_t i = 0; i < dc.n; ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < m; ++j)
                sum += dc.at(i, j) * res.eigenvectors.at(j, src);
            res.individual_coords.at(i, a) = sum;
        }
    }
    return res;
}

std::vector<TaggedPoint> joint_points(const MCAResult& res) {
    if (res.n_axes_kept == 0)
        throw DegenerateMCA("no informative axes to project on");
    std::vector<TaggedPoint> points;
    points.reserve(res.individual_coords.rows + res.modality_coords.rows);
    for (std::size_t i = 0; i < res.individual_coords.rows; ++i) {
        TaggedPoint p{PointTag::Individual, i, std::vector<double>(res.n_axes_kept)};
        for (std::size_t a = 0; a < res.n_axes_kept; ++a) p.coords[a] = res.individual_coords.at(i, a);
        points.push_back(std::move(p));
    }
    for (std::size_t j = 0; j < res.modality_coords.rows; ++j) {
        TaggedPoint p{PointTag::Modality, j, std::vector<double>(res.n_axes_kept)};
        for (std::size_t a = 0; a < res.n_axes_kept; ++a) p.coords[a] = res.modality_coords.at(j, a);
        points.push_back(std::move(p));
    }
    return points;
}

} // namespace kdisj
