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
#include "socval/stats.hpp"

#include <algorithm>
#include <cmath>

#include "socval/error.hpp"

namespace socval::stats {

double sum(std::span<const double> v) {
    double total = 0.0;
    for (double x : v) total += x;
    return total;
}

double mean(std::span<const double> v) {
    if (v.empty()) return 0.0;
    return sum(v) / static_cast<double>(v.size());
}

double population_variance(std::span<const double> v) {
    if (v.empty()) return 0.0;
    const double mu = mean(v);
    double acc = 0.0;
    for (double x : v) acc += (x - mu) * (x - mu);
    return acc / static_cast<double>(v.size());
}

double sample_variance(std::span<const double> v) {
    if (v.size() < 2) return 0.0;
    return population_variance(v) * static_cast<double>(v.size()) / static_cast<double>(v.size() - 1);
}

double standard_error(std::span<const double> v) {
    if (v.empty()) return 0.0;
    return std::sqrt(sample_variance(v) / static_cast<double>(v.size()));
}

double quantile(std::span<const double> v, double q) {
    if (v.empty()) throw UndefinedStatisticError("quantile of an empty sample");
    if (!(q >= 0.0 && q <= 1.0)) throw ParameterError("quantile level must lie in [0, 1]");
    std::vector<double> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end());
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double pearson(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.size() < 2) throw ParameterError("pearson: need two equal-length samples");
    const double ma = mean(a);
    const double mb = mean(b);
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    if (saa == 0.0 || sbb == 0.0) throw UndefinedStatisticError("pearson: constant sample");
    return sab / std::sqrt(saa * sbb);
}

Histogram histogram(std::span<const double> v, double origin, double width, std::size_t bins) {
    if (!(width > 0.0)) throw ParameterError("histogram: bin width must be positive");
    Histogram h{origin, width, std::vector<std::size_t>(bins, 0)};
    for (double x : v) {
        const double pos = std::floor((x - origin) / width);
        if (pos < 0.0 || pos >= static_cast<double>(bins)) {
            throw ParameterError("histogram: value outside the binned range");
        }
        ++h.counts[static_cast<std::size_t>(pos)];
    }
    return h;
}

} // namespace socval::stats
