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
#include "socval/ols.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "socval/error.hpp"

namespace socval {

namespace {
constexpr double kRankTolerance = 1e-10;
constexpr double kDependenceTolerance = 1e-8;
} // namespace

std::vector<std::string> design_columns(std::size_t d, ModelFamily family) {
    std::vector<std::string> cols{"intercept"};
    for (std::size_t r = 0; r < d; ++r) cols.push_back("x" + std::to_string(r));
    cols.push_back("S");
    if (family == ModelFamily::interaction) {
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t q = r; q < d; ++q) cols.push_back("x" + std::to_string(r) + "*x" + std::to_string(q));
        for (std::size_t r = 0; r < d; ++r) cols.push_back("x" + std::to_string(r) + "*S");
    } else if (family != ModelFamily::linear) {
        throw UnsupportedFamilyError("least-squares layout exists for linear and interaction models only");
    }
    return cols;
}

std::vector<double> design_coefficients(const Model& model) {
    if (const auto* lm = std::get_if<LinearModel>(&model)) {
        std::vector<double> out{lm->beta0};
        out.insert(out.end(), lm->beta.begin(), lm->beta.end());
        out.push_back(lm->beta_s);
        return out;
    }
    if (const auto* im = std::get_if<InteractionModel>(&model)) {
        validate(model);
        const std::size_t d = im->dims();
        std::vector<double> out{im->beta0};
        out.insert(out.end(), im->beta.begin(), im->beta.end());
        out.push_back(im->beta_s);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t q = r; q < d; ++q) out.push_back(r == q ? im->beta_xx(r, q) : 2.0 * im->beta_xx(r, q));
        out.insert(out.end(), im->beta_xs.begin(), im->beta_xs.end());
        return out;
    }
    throw UnsupportedFamilyError("ensemble models have no least-squares coefficient layout");
}

Model model_from_design(ModelFamily family, std::size_t d, std::span<const double> c) {
    const std::size_t expected = design_columns(d, family).size();
    if (c.size() != expected) {
        throw ParameterError("expected " + std::to_string(expected) + " coefficients for a " + family_tag(family) +
                             " model with d=" + std::to_string(d) + ", got " + std::to_string(c.size()));
    }
    std::vector<double> beta(c.begin() + 1, c.begin() + 1 + static_cast<std::ptrdiff_t>(d));
    const double beta_s = c[d + 1];
    if (family == ModelFamily::linear) return LinearModel{c[0], std::move(beta), beta_s};

    InteractionModel im{c[0], std::move(beta), beta_s, Matrix(d, d), {}};
    std::size_t k = d + 2;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t q = r; q < d; ++q, ++k) {
            if (r == q) {
                im.beta_xx(r, r) = c[k];
            } else {
                im.beta_xx(r, q) = c[k] / 2.0;
                im.beta_xx(q, r) = c[k] / 2.0;
            }
        }
    }
    im.beta_xs.assign(c.begin() + static_cast<std::ptrdiff_t>(k), c.end());
    return im;
}

FitReport fit_ols(const CovariateTable& table, std::span<const double> y, ModelFamily family) {
    const std::size_t n = table.node_count();
    const std::size_t d = table.dims();
    const auto columns = design_columns(d, family);
    const std::size_t p = columns.size();
    if (y.size() != n) {
        throw ParameterError("targets have " + std::to_string(y.size()) + " entries for " + std::to_string(n) + " nodes");
    }
    if (n <= p) {
        throw ParameterError("need more observations (" + std::to_string(n) + ") than parameters (" +
                             std::to_string(p) + ")");
    }

    Eigen::MatrixXd design(n, p);
    Eigen::VectorXd target(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = table.x(i);
        const double s = table.s(i);
        Eigen::Index c = 0;
        const auto row = static_cast<Eigen::Index>(i);
        design(row, c++) = 1.0;
        for (std::size_t r = 0; r < d; ++r) design(row, c++) = x[r];
        design(row, c++) = s;
        if (family == ModelFamily::interaction) {
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t q = r; q < d; ++q) design(row, c++) = x[r] * x[q];
            for (std::size_t r = 0; r < d; ++r) design(row, c++) = x[r] * s;
        }
        target(row) = y[i];
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    const auto pp = static_cast<Eigen::Index>(p);
    const Eigen::MatrixXd r_full = qr.matrixQR().topRows(pp).triangularView<Eigen::Upper>();
    const double sigma_max = Eigen::JacobiSVD<Eigen::MatrixXd>(r_full).singularValues()(0);
    const auto& perm = qr.colsPermutation().indices();

    Eigen::Index rank = 0;
    while (rank < pp && std::abs(r_full(rank, rank)) > kRankTolerance * sigma_max) ++rank;

    if (rank < pp) {
        // express each dropped column through the retained ones
        const auto r11 = r_full.topLeftCorner(rank, rank).triangularView<Eigen::Upper>();
        std::string detail;
        for (Eigen::Index k = rank; k < pp; ++k) {
            const Eigen::VectorXd z = r11.solve(r_full.col(k).head(rank));
            const double own_norm = design.col(perm(k)).norm();
            std::string partners;
            for (Eigen::Index j = 0; j < rank; ++j) {
                if (std::abs(z(j)) * design.col(perm(j)).norm() > kDependenceTolerance * std::max(own_norm, 1e-300)) {
                    if (!partners.empty()) partners += ", ";
                    partners += columns[static_cast<std::size_t>(perm(j))];
                }
            }
            if (!detail.empty()) detail += "; ";
            detail += "'" + columns[static_cast<std::size_t>(perm(k))] + "'" +
                      (partners.empty() ? std::string(" is identically zero") : " is collinear with " + partners);
        }
        throw SingularFitError("rank-deficient design (rank " + std::to_string(rank) + " of " + std::to_string(p) +
                               "): " + detail);
    }

    const Eigen::VectorXd coef = qr.solve(target);
    const Eigen::VectorXd resid = target - design * coef;
    const double sigma2 = resid.squaredNorm() / static_cast<double>(n - p);

    // (X'X)^-1 = P R^-1 R^-T P'
    const Eigen::MatrixXd r_inv =
        r_full.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(pp, pp));

    FitReport report;
    report.columns = columns;
    report.coefficients.assign(coef.data(), coef.data() + p);
    report.standard_errors.assign(p, 0.0);
    for (Eigen::Index k = 0; k < pp; ++k) {
        report.standard_errors[static_cast<std::size_t>(perm(k))] = std::sqrt(sigma2 * r_inv.row(k).squaredNorm());
    }
    report.residual_variance = sigma2;
    report.model = model_from_design(family, d, report.coefficients);
    return report;
}

} // namespace socval
