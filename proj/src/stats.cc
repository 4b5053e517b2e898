/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "fsrr/stats.h"

#include "fsrr/mobility.h"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace fsrr
{

double
Mean(std::span<const double> xs)
{
    if (xs.empty())
    {
        return 0.0;
    }
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

Interval
MeanConfidenceInterval(std::span<const double> xs, double level)
{
    double m = Mean(xs);
    if (xs.size() < 2)
    {
        return {m, m};
    }
    double ss = 0.0;
    for (double x : xs)
    {
        ss += (x - m) * (x - m);
    }
    auto n = static_cast<double>(xs.size());
    double sd = std::sqrt(ss / (n - 1));
    boost::math::students_t dist(n - 1);
    double t = boost::math::quantile(boost::math::complement(dist, (1 - level) / 2));
    double half = t * sd / std::sqrt(n);
    return {m - half, m + half};
}

Interval
BootstrapMeanInterval(std::span<const double> xs, double level, uint32_t resamples, uint64_t seed)
{
    if (xs.empty())
    {
        return {};
    }
    Rng rng(seed);
    std::vector<double> means(resamples);
    auto n = xs.size();
    for (auto& mean : means)
    {
        double sum = 0.0;
        for (size_t i = 0; i < n; ++i)
        {
            sum += xs[static_cast<size_t>(UniformUnit(rng) * static_cast<double>(n))];
        }
        mean = sum / static_cast<double>(n);
    }
    std::sort(means.begin(), means.end());
    double alpha = (1 - level) / 2;
    auto at = [&](double q) {
        auto idx = static_cast<size_t>(std::floor(q * static_cast<double>(resamples - 1)));
        return means[std::min(idx, means.size() - 1)];
    };
    return {at(alpha), at(1 - alpha)};
}

} // namespace fsrr
