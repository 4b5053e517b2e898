/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef FSRR_STATS_H
#define FSRR_STATS_H

#include <cstdint>
#include <span>

namespace fsrr
{

struct Interval
{
    double low{0.0};
    double high{0.0};
};

double Mean(std::span<const double> xs);

/// Two-sided Student-t confidence interval for the mean. Degenerate for n < 2.
Interval MeanConfidenceInterval(std::span<const double> xs, double level = 0.95);

/// Percentile bootstrap interval for the mean with a fixed resampling seed.
Interval BootstrapMeanInterval(std::span<const double> xs,
                               double level = 0.95,
                               uint32_t resamples = 10000,
                               uint64_t seed = 12345);

} // namespace fsrr

#endif // FSRR_STATS_H
