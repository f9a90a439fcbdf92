#include "widths/nelder_mead.hpp"

#include "widths/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace widths {

namespace {

using Point = std::vector<double>;

Point affine(const Point& base, const Point& toward, double t) {
    Point out(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        out[i] = base[i] + t * (toward[i] - base[i]);
    }
    return out;
}

double diameter(const std::vector<Point>& simplex) {
    double d = 0.0;
    for (std::size_t a = 0; a < simplex.size(); ++a) {
        for (std::size_t b = a + 1; b < simplex.size(); ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < simplex[a].size(); ++i) {
                const double diff = simplex[a][i] - simplex[b][i];
                s += diff * diff;
            }
            d = std::max(d, std::sqrt(s));
        }
    }
    return d;
}

} // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                             std::vector<double> start, const NelderMeadOptions& options) {
    const std::size_t dim = start.size();
    if (dim == 0) {
        throw Error(ErrorKind::BadParameter, "Nelder-Mead needs at least one variable");
    }
    std::vector<Point> simplex{start};
    for (std::size_t i = 0; i < dim; ++i) {
        Point p = start;
        p[i] += options.initial_scale;
        simplex.push_back(std::move(p));
    }
    std::vector<double> values;
    for (const auto& p : simplex) {
        values.push_back(objective(p));
    }
    std::vector<std::size_t> order(dim + 1);

    NelderMeadResult result;
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        {
            std::vector<Point> s2;
            std::vector<double> v2;
            for (auto k : order) {
                s2.push_back(simplex[k]);
                v2.push_back(values[k]);
            }
            simplex = std::move(s2);
            values = std::move(v2);
        }
        result.iterations = iter;
        if (diameter(simplex) < options.diameter_tolerance) {
            result.converged = true;
            break;
        }

        Point centroid(dim, 0.0);
        for (std::size_t k = 0; k < dim; ++k) {
            for (std::size_t i = 0; i < dim; ++i) {
                centroid[i] += simplex[k][i] / static_cast<double>(dim);
            }
        }
        const Point& worst = simplex[dim];
        const Point reflected = affine(centroid, worst, -options.reflection);
        const double f_reflected = objective(reflected);

        if (f_reflected < values[0]) {
            const Point expanded = affine(centroid, worst, -options.reflection * options.expansion);
            const double f_expanded = objective(expanded);
            if (f_expanded < f_reflected) {
                simplex[dim] = expanded;
                values[dim] = f_expanded;
            } else {
                simplex[dim] = reflected;
                values[dim] = f_reflected;
            }
            continue;
        }
        if (f_reflected < values[dim - 1]) {
            simplex[dim] = reflected;
            values[dim] = f_reflected;
            continue;
        }
        // Outside contraction when the reflection beats the worst, inside otherwise.
        const bool outside = f_reflected < values[dim];
        const Point contracted = outside ? affine(centroid, reflected, options.contraction)
                                         : affine(centroid, worst, options.contraction);
        const double f_contracted = objective(contracted);
        if (f_contracted < (outside ? f_reflected : values[dim])) {
            simplex[dim] = contracted;
            values[dim] = f_contracted;
            continue;
        }
        for (std::size_t k = 1; k <= dim; ++k) {
            simplex[k] = affine(simplex[0], simplex[k], options.shrink);
            values[k] = objective(simplex[k]);
        }
    }
    const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    result.x = simplex[best];
    result.value = values[best];
    return result;
}

} // namespace widths
