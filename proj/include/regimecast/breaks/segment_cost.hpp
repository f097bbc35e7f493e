#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace regimecast::breaks {

enum class CostKind {
	NormalMean,    ///< sum of squared deviations from the segment mean
	NormalMeanVar, ///< Gaussian negative log-likelihood with segment mean and variance
};

inline std::string_view to_string(CostKind kind) {
	return kind == CostKind::NormalMean ? "normal-mean" : "normal-meanvar";
}

inline CostKind parse_cost_kind(std::string_view text) {
	if (text == "normal-mean" || text == "mean") {
		return CostKind::NormalMean;
	}
	if (text == "normal-meanvar" || text == "meanvar") {
		return CostKind::NormalMeanVar;
	}
	throw std::invalid_argument("unknown cost model '" + std::string(text) + "'");
}

/// O(1) segment costs over half-open ranges [begin, end) from prefix sums of the centred series.
///
/// Both costs satisfy C(a,c) >= C(a,b) + C(b,c), which is what makes PELT pruning with K = 0
/// exact. The mean-variance cost uses var + floor inside the logarithm (never max(var, floor)):
/// an additive floor keeps the inequality because log is concave.
class SegmentCost {
public:
	SegmentCost(std::span<const double> series, CostKind kind) : kind_(kind) {
		const auto n = series.size();
		double mean = 0.0;
		for (double v : series) {
			mean += v;
		}
		mean = n > 0 ? mean / static_cast<double>(n) : 0.0;
		sum_.assign(n + 1, 0.0);
		sum_sq_.assign(n + 1, 0.0);
		for (std::size_t i = 0; i < n; ++i) {
			const double c = series[i] - mean;
			sum_[i + 1] = sum_[i] + c;
			sum_sq_[i + 1] = sum_sq_[i] + c * c;
		}
		const double total_var = n > 0 ? sum_sq_[n] / static_cast<double>(n) : 0.0;
		variance_floor_ = total_var > 0.0 ? 1e-10 * total_var : 1e-12;
		if (kind_ == CostKind::NormalMean) {
			magnitude_ = sum_sq_[n];
		} else {
			magnitude_ = static_cast<double>(n) *
			             (std::abs(std::log(2.0 * std::numbers::pi * variance_floor_)) + 1.0);
		}
	}

	CostKind kind() const noexcept { return kind_; }
	std::size_t size() const noexcept { return sum_.size() - 1; }

	/// Rough scale of attainable cost values; used to size rounding tolerances.
	double magnitude() const noexcept { return magnitude_; }

	double operator()(std::size_t begin, std::size_t end) const {
		const double len = static_cast<double>(end - begin);
		const double s1 = sum_[end] - sum_[begin];
		const double s2 = sum_sq_[end] - sum_sq_[begin];
		const double ss = std::max(0.0, s2 - s1 * s1 / len);
		if (kind_ == CostKind::NormalMean) {
			return ss;
		}
		const double var = ss / len;
		return len * (std::log(2.0 * std::numbers::pi * (var + variance_floor_)) + 1.0);
	}

private:
	CostKind kind_;
	std::vector<double> sum_;
	std::vector<double> sum_sq_;
	double variance_floor_ = 0.0;
	double magnitude_ = 0.0;
};

} // namespace regimecast::breaks
