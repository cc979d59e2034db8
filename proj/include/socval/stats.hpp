/*
Copyright 2026 The socval Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace socval::stats {

double sum(std::span<const double> v);
double mean(std::span<const double> v);
/// Divides by n.
double population_variance(std::span<const double> v);
/// Divides by n - 1; 0 for fewer than two values.
double sample_variance(std::span<const double> v);
/// Standard error of the mean, sqrt(sample_variance / n).
double standard_error(std::span<const double> v);
/// Linearly interpolated quantile (R type 7), q in [0, 1].
double quantile(std::span<const double> v, double q);
double pearson(std::span<const double> a, std::span<const double> b);

struct Histogram {
    double origin = 0.0; ///< lower edge of bin 0
    double width = 1.0;
    std::vector<std::size_t> counts;

    double lower_edge(std::size_t bin) const { return origin + width * static_cast<double>(bin); }
};

/// Fixed-width bins [origin + b*width, origin + (b+1)*width). Every value
/// must fall inside one of the `bins` bins.
Histogram histogram(std::span<const double> v, double origin, double width, std::size_t bins);

} // namespace socval::stats
