#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "regimecast/breaks/breakpoint_set.hpp"
#include "regimecast/breaks/segment_cost.hpp"

namespace regimecast::breaks {

struct PeltConfig {
	/// Penalty per break. Unset means penalty_factor * sigma^2 * ln(n) with sigma^2 estimated
	/// from first differences (see default_penalty).
	std::optional<double> penalty;
	double penalty_factor = 2.0;
	/// Unset means 2 for normal-mean and 5 for normal-meanvar.
	std::optional<std::size_t> min_segment;
	CostKind cost = CostKind::NormalMean;
};

/// Noise variance estimated from first differences: var(diff) / 2. Falls back to the series
/// variance when the differences are constant (pure linear trend), and to 1 for constant input.
inline double difference_variance(std::span<const double> series) {
	const auto n = series.size();
	if (n >= 3) {
		double mean = 0.0;
		for (std::size_t i = 1; i < n; ++i) {
			mean += series[i] - series[i - 1];
		}
		mean /= static_cast<double>(n - 1);
		double ss = 0.0;
		for (std::size_t i = 1; i < n; ++i) {
			const double d = series[i] - series[i - 1] - mean;
			ss += d * d;
		}
		const double var = ss / static_cast<double>(n - 2) / 2.0;
		if (var > 0.0) {
			return var;
		}
	}
	if (n >= 2) {
		double mean = 0.0;
		for (double v : series) {
			mean += v;
		}
		mean /= static_cast<double>(n);
		double ss = 0.0;
		for (double v : series) {
			ss += (v - mean) * (v - mean);
		}
		if (ss > 0.0) {
			return ss / static_cast<double>(n - 1);
		}
	}
	return 1.0;
}

inline double default_penalty(std::span<const double> series, double factor = 2.0) {
	return factor * difference_variance(series) * std::log(static_cast<double>(std::max<std::size_t>(series.size(), 2)));
}

inline std::size_t resolved_min_segment(const PeltConfig &config) {
	if (config.min_segment) {
		return *config.min_segment;
	}
	return config.cost == CostKind::NormalMean ? 2 : 5;
}

inline double resolved_penalty(std::span<const double> series, const PeltConfig &config) {
	return config.penalty ? *config.penalty : default_penalty(series, config.penalty_factor);
}

namespace detail {

inline void check_pelt_input(std::span<const double> series, const PeltConfig &config, std::size_t min_segment,
                             double penalty) {
	if (min_segment < 1) {
		throw std::invalid_argument("min_segment must be >= 1");
	}
	if (config.cost == CostKind::NormalMeanVar && min_segment < 2) {
		throw std::invalid_argument("normal-meanvar cost needs min_segment >= 2");
	}
	if (!(penalty >= 0.0)) {
		throw std::invalid_argument("penalty must be non-negative");
	}
	if (series.size() < 2 * min_segment) {
		throw std::invalid_argument("series of length " + std::to_string(series.size()) + " is shorter than 2 * min_segment = " +
		                            std::to_string(2 * min_segment));
	}
	for (std::size_t i = 0; i < series.size(); ++i) {
		if (!std::isfinite(series[i])) {
			throw std::invalid_argument("non-finite value at index " + std::to_string(i));
		}
	}
}

inline BreakpointSet backtrack(const std::vector<std::size_t> &last_change, std::size_t n, BreakMethod method) {
	BreakpointSet result;
	result.method = method;
	for (std::size_t t = n; t > 0;) {
		const auto s = last_change[t];
		if (s == 0) {
			break;
		}
		result.indices.push_back(s);
		t = s;
	}
	std::reverse(result.indices.begin(), result.indices.end());
	return result;
}

} // namespace detail

/// Exact penalised segmentation, minimising sum_i C(segment_i) + penalty * m, with candidate
/// pruning. Ties resolve to the earliest admissible last change point.
///
/// With a minimum segment length the pruning test F(s) + C(s,t) > F(t) only proves s useless for
/// end points T >= t + min_segment, so each pruned candidate is retired min_segment steps late.
inline BreakpointSet pelt_detect(std::span<const double> series, const PeltConfig &config = {}) {
	const auto min_segment = resolved_min_segment(config);
	const double penalty = resolved_penalty(series, config);
	detail::check_pelt_input(series, config, min_segment, penalty);

	const auto n = series.size();
	const SegmentCost cost(series, config.cost);
	constexpr double inf = std::numeric_limits<double>::infinity();

	// base[s]: cost of the optimal segmentation of [0, s) plus the penalty owed for a break at s.
	std::vector<double> optimal(n + 1, inf);
	std::vector<double> base(n + 1, inf);
	std::vector<std::size_t> last_change(n + 1, 0);
	std::vector<std::size_t> retire_at(n + 1, std::numeric_limits<std::size_t>::max());
	optimal[0] = 0.0;
	base[0] = 0.0;

	std::vector<std::size_t> candidates{0};
	std::vector<std::size_t> survivors;
	candidates.reserve(64);
	survivors.reserve(64);

	for (std::size_t t = min_segment; t <= n; ++t) {
		// Drop candidates whose retirement time has come.
		survivors.clear();
		for (auto s : candidates) {
			if (retire_at[s] > t) {
				survivors.push_back(s);
			}
		}
		candidates.swap(survivors);

		double best = inf;
		std::size_t best_s = 0;
		for (auto s : candidates) {
			if (t - s < min_segment) {
				continue;
			}
			const double value = base[s] + cost(s, t);
			if (value < best) {
				best = value;
				best_s = s;
			}
		}
		optimal[t] = best;
		last_change[t] = best_s;
		base[t] = best + penalty;

		const double tolerance = 1e-9 * (1.0 + std::abs(best) + cost.magnitude());
		for (auto s : candidates) {
			if (t - s >= min_segment && base[s] + cost(s, t) > base[t] + tolerance) {
				retire_at[s] = std::min(retire_at[s], t + min_segment);
			}
		}
		if (t + min_segment <= n && std::isfinite(best)) {
			candidates.push_back(t);
		}
	}
	return detail::backtrack(last_change, n, BreakMethod::Pelt);
}

/// Unpruned O(n^2) dynamic program over the same objective and tie rule as pelt_detect. Testing
/// oracle; refuses series longer than max_length.
inline BreakpointSet optimal_partition_bruteforce(std::span<const double> series, const PeltConfig &config = {},
                                                  std::size_t max_length = 2000) {
	if (series.size() > max_length) {
		throw std::invalid_argument("brute-force partition limited to n <= " + std::to_string(max_length) + ", got " +
		                            std::to_string(series.size()));
	}
	const auto min_segment = resolved_min_segment(config);
	const double penalty = resolved_penalty(series, config);
	detail::check_pelt_input(series, config, min_segment, penalty);

	const auto n = series.size();
	const SegmentCost cost(series, config.cost);
	constexpr double inf = std::numeric_limits<double>::infinity();
	std::vector<double> base(n + 1, inf);
	std::vector<std::size_t> last_change(n + 1, 0);
	base[0] = 0.0;

	for (std::size_t t = min_segment; t <= n; ++t) {
		double best = inf;
		std::size_t best_s = 0;
		for (std::size_t s = 0; s + min_segment <= t; ++s) {
			if (s != 0 && s < min_segment) {
				continue;
			}
			if (!std::isfinite(base[s])) {
				continue;
			}
			const double value = base[s] + cost(s, t);
			if (value < best) {
				best = value;
				best_s = s;
			}
		}
		last_change[t] = best_s;
		base[t] = best + penalty;
	}
	return detail::backtrack(last_change, n, BreakMethod::Pelt);
}

} // namespace regimecast::breaks
