#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "regimecast/breaks/breakpoint_set.hpp"
#include "regimecast/breaks/supf_critical_values.hpp"

namespace regimecast::breaks {

struct BaiPerronConfig {
	std::size_t max_breaks = 5;
	/// Trimming: every regime holds at least ceil(trim * n) observations.
	double trim = 0.15;
	double significance = 0.05;
};

/// Residual sum of squares of a per-segment least-squares fit y ~ X over [begin, end), from
/// prefix sums of X'X, X'y and y'y.
class SegmentRegression {
public:
	SegmentRegression(std::span<const double> y, const Eigen::MatrixXd &X) : n_(y.size()), p_(X.cols()) {
		if (static_cast<std::size_t>(X.rows()) != n_) {
			throw std::invalid_argument("regressor matrix has " + std::to_string(X.rows()) + " rows, series has " +
			                            std::to_string(n_));
		}
		if (p_ == 0) {
			throw std::invalid_argument("regressor matrix has no columns");
		}
		double mean = 0.0;
		for (double v : y) {
			if (!std::isfinite(v)) {
				throw std::invalid_argument("non-finite value in series");
			}
			mean += v;
		}
		mean /= static_cast<double>(std::max<std::size_t>(n_, 1));

		const auto p = static_cast<std::size_t>(p_);
		xx_.assign((n_ + 1) * p * p, 0.0);
		xy_.assign((n_ + 1) * p, 0.0);
		yy_.assign(n_ + 1, 0.0);
		for (double v : y) {
			tss_ += (v - mean) * (v - mean);
		}
		// Centring y leaves segment RSS unchanged only when the model has an intercept.
		intercept_only_ = (p == 1) && (X.col(0).array() == 1.0).all();
		shift_ = intercept_only_ ? mean : 0.0;
		for (std::size_t t = 0; t < n_; ++t) {
			const double v = y[t] - shift_;
			yy_[t + 1] = yy_[t] + v * v;
			for (std::size_t a = 0; a < p; ++a) {
				xy_[(t + 1) * p + a] = xy_[t * p + a] + X(t, a) * v;
				for (std::size_t b = 0; b < p; ++b) {
					xx_[(t + 1) * p * p + a * p + b] = xx_[t * p * p + a * p + b] + X(t, a) * X(t, b);
				}
			}
		}
	}

	std::size_t size() const noexcept { return n_; }
	std::size_t regressors() const noexcept { return static_cast<std::size_t>(p_); }

	/// Total sum of squares about the mean; scale reference for "numerically zero".
	double total_sum_of_squares() const noexcept { return tss_; }

	double rss(std::size_t begin, std::size_t end) const {
		const auto p = static_cast<std::size_t>(p_);
		const double yy = yy_[end] - yy_[begin];
		if (intercept_only_) {
			const double s = xy_[end] - xy_[begin];
			return std::max(0.0, yy - s * s / static_cast<double>(end - begin));
		}
		Eigen::MatrixXd xx(p, p);
		Eigen::VectorXd xy(p);
		for (std::size_t a = 0; a < p; ++a) {
			xy(a) = xy_[end * p + a] - xy_[begin * p + a];
			for (std::size_t b = 0; b < p; ++b) {
				xx(a, b) = xx_[end * p * p + a * p + b] - xx_[begin * p * p + a * p + b];
			}
		}
		Eigen::LLT<Eigen::MatrixXd> llt(xx);
		const double scale = xx.diagonal().maxCoeff();
		const Eigen::MatrixXd lower = llt.matrixL();
		if (llt.info() != Eigen::Success || !(scale > 0.0) ||
		    lower.diagonal().array().square().minCoeff() < 1e-10 * scale) {
			throw std::invalid_argument("singular regression on segment [" + std::to_string(begin) + ", " +
			                            std::to_string(end) + ")");
		}
		const Eigen::VectorXd beta = llt.solve(xy);
		return std::max(0.0, yy - beta.dot(xy));
	}

private:
	std::size_t n_;
	Eigen::Index p_;
	bool intercept_only_ = false;
	double shift_ = 0.0;
	double tss_ = 0.0;
	std::vector<double> xx_;
	std::vector<double> xy_;
	std::vector<double> yy_;
};

/// Globally optimal placement of a fixed number of breaks (minimum total RSS, every segment at
/// least min_segment long). Returns break indices and the attained RSS.
struct Partition {
	std::vector<std::size_t> indices;
	double rss = 0.0;
};

inline std::vector<Partition> bai_perron_partitions(const SegmentRegression &regression, std::size_t max_breaks,
                                                    std::size_t min_segment) {
	const auto n = regression.size();
	constexpr double inf = std::numeric_limits<double>::infinity();
	const std::size_t feasible = n / min_segment >= 1 ? n / min_segment - 1 : 0;
	const auto breaks = std::min(max_breaks, feasible);

	// value[k][j]: best RSS of [0, j) split into k + 1 segments; from[k][j]: start of the last one.
	std::vector<std::vector<double>> value(breaks + 1, std::vector<double>(n + 1, inf));
	std::vector<std::vector<std::size_t>> from(breaks + 1, std::vector<std::size_t>(n + 1, 0));
	for (std::size_t j = min_segment; j <= n; ++j) {
		value[0][j] = regression.rss(0, j);
	}
	for (std::size_t k = 1; k <= breaks; ++k) {
		for (std::size_t j = (k + 1) * min_segment; j <= n; ++j) {
			double best = inf;
			std::size_t best_i = 0;
			for (std::size_t i = k * min_segment; i + min_segment <= j; ++i) {
				const double candidate = value[k - 1][i] + regression.rss(i, j);
				if (candidate < best) {
					best = candidate;
					best_i = i;
				}
			}
			value[k][j] = best;
			from[k][j] = best_i;
		}
	}

	std::vector<Partition> result(breaks + 1);
	for (std::size_t k = 0; k <= breaks; ++k) {
		Partition &part = result[k];
		part.rss = value[k][n];
		std::size_t end = n;
		for (std::size_t level = k; level > 0; --level) {
			end = from[level][end];
			part.indices.push_back(end);
		}
		std::reverse(part.indices.begin(), part.indices.end());
	}
	return result;
}

/// Multiple mean/regression-shift detection: optimal break placement by dynamic programming over
/// segment RSS, number of breaks chosen by sequential sup-F(l+1 | l) tests starting at l = 0.
/// The statistic for adding one break is (S_l - S_{l+1}) / sigma^2 with
/// sigma^2 = S_{l+1} / (n - (l + 2) q).
inline BreakpointSet bai_perron_detect(std::span<const double> y, const Eigen::MatrixXd &X,
                                       const BaiPerronConfig &config = {}) {
	if (config.max_breaks < 1) {
		throw std::invalid_argument("max_breaks must be >= 1");
	}
	if (!(config.trim > 0.0 && config.trim < 0.5)) {
		throw std::invalid_argument("trim must lie in (0, 0.5)");
	}
	const auto n = y.size();
	const auto q = static_cast<std::size_t>(X.cols());
	const auto min_segment = static_cast<std::size_t>(std::ceil(config.trim * static_cast<double>(n)));
	if (min_segment < q + 1) {
		throw std::invalid_argument("trim too small: minimum segment " + std::to_string(min_segment) +
		                            " must be >= regressors + 1 = " + std::to_string(q + 1));
	}
	const SegmentRegression regression(y, X);
	BreakpointSet result;
	result.method = BreakMethod::BaiPerron;
	if (n < 2 * min_segment) {
		return result;
	}

	const auto partitions = bai_perron_partitions(regression, config.max_breaks, min_segment);
	const double zero_scale = 1e-10 * (regression.total_sum_of_squares() + regression.rss(0, n)) + 1e-300;

	std::size_t accepted = 0;
	std::vector<double> statistics;
	for (std::size_t l = 0; l + 1 < partitions.size(); ++l) {
		// Best single extra break inside any segment of the current optimal l-break partition.
		const auto &current = partitions[l];
		double best_reduction = 0.0;
		std::size_t segment_start = 0;
		for (std::size_t s = 0; s <= current.indices.size(); ++s) {
			const std::size_t a = segment_start;
			const std::size_t b = s < current.indices.size() ? current.indices[s] : n;
			segment_start = b;
			if (b - a < 2 * min_segment) {
				continue;
			}
			const double whole = regression.rss(a, b);
			for (std::size_t k = a + min_segment; k + min_segment <= b; ++k) {
				best_reduction = std::max(best_reduction, whole - regression.rss(a, k) - regression.rss(k, b));
			}
		}
		const double alternative = current.rss - best_reduction;
		const double dof = static_cast<double>(n) - static_cast<double>((l + 2) * q);
		double statistic = 0.0;
		if (best_reduction > zero_scale && dof > 0.0) {
			statistic = alternative > zero_scale ? best_reduction / (alternative / dof)
			                                     : std::numeric_limits<double>::infinity();
		}
		const double critical = supf_critical_value(q, config.trim, config.significance, l);
		if (!(statistic > critical)) {
			break;
		}
		statistics.push_back(statistic);
		accepted = l + 1;
	}

	result.indices = partitions[accepted].indices;
	result.statistics = std::move(statistics);
	return result;
}

/// Intercept-only (mean shift) form.
inline BreakpointSet bai_perron_detect(std::span<const double> y, const BaiPerronConfig &config = {}) {
	const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(static_cast<Eigen::Index>(y.size()), 1);
	return bai_perron_detect(y, ones, config);
}

} // namespace regimecast::breaks
