#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "regimecast/breaks/breakpoint_set.hpp"

namespace regimecast::breaks {

/// Cumulative sum of squares over one segment.
struct IcssState {
	std::vector<double> cumulative; ///< C_k for k = 0..T (C_0 = 0)
	std::vector<double> deviation;  ///< D_k = C_k / C_T - k / T for k = 0..T
	std::size_t argmax = 0;         ///< k maximising |D_k| over 1..T-1
	double statistic = 0.0;         ///< sqrt(T / 2) * |D_argmax|
};

struct IcssConfig {
	/// 95% asymptotic quantile of sup |Brownian bridge|.
	double critical = 1.358;
	/// Segments shorter than this are not tested.
	std::size_t min_segment = 8;
	std::size_t max_refinements = 20;
};

/// Computes C_k and D_k on residuals from the segment mean, standardised by the sample standard
/// deviation (the scale cancels in C_k / C_T).
inline IcssState icss_statistic(std::span<const double> y) {
	const auto n = y.size();
	if (n < 2) {
		throw std::invalid_argument("ICSS needs at least 2 observations");
	}
	double mean = 0.0;
	for (std::size_t i = 0; i < n; ++i) {
		if (!std::isfinite(y[i])) {
			throw std::invalid_argument("non-finite value at index " + std::to_string(i));
		}
		mean += y[i];
	}
	mean /= static_cast<double>(n);
	double ss = 0.0;
	for (double v : y) {
		ss += (v - mean) * (v - mean);
	}
	if (!(ss > 0.0)) {
		throw std::invalid_argument("ICSS requires positive sample variance");
	}
	const double sd = std::sqrt(ss / static_cast<double>(n - 1));

	IcssState state;
	state.cumulative.assign(n + 1, 0.0);
	for (std::size_t k = 0; k < n; ++k) {
		const double z = (y[k] - mean) / sd;
		state.cumulative[k + 1] = state.cumulative[k] + z * z;
	}
	const double total = state.cumulative[n];
	state.deviation.assign(n + 1, 0.0);
	double best = -1.0;
	for (std::size_t k = 1; k < n; ++k) {
		const double d = state.cumulative[k] / total - static_cast<double>(k) / static_cast<double>(n);
		state.deviation[k] = d;
		if (std::abs(d) > best) {
			best = std::abs(d);
			state.argmax = k;
		}
	}
	state.statistic = std::sqrt(static_cast<double>(n) / 2.0) * std::max(best, 0.0);
	return state;
}

namespace detail {

struct IcssHit {
	std::size_t index;
	double statistic;
};

// Break of [begin, end) if its statistic exceeds the critical value.
inline std::optional<IcssHit> icss_test(std::span<const double> y, std::size_t begin, std::size_t end,
                                        const IcssConfig &config) {
	if (end - begin < std::max<std::size_t>(config.min_segment, 2)) {
		return std::nullopt;
	}
	const auto segment = y.subspan(begin, end - begin);
	const auto [lo, hi] = std::minmax_element(segment.begin(), segment.end());
	if (*lo == *hi) {
		return std::nullopt;
	}
	const auto state = icss_statistic(segment);
	if (state.statistic > config.critical) {
		return IcssHit{begin + state.argmax, state.statistic};
	}
	return std::nullopt;
}

inline void icss_split(std::span<const double> y, std::size_t begin, std::size_t end, const IcssConfig &config,
                       std::vector<std::size_t> &out) {
	const auto hit = icss_test(y, begin, end, config);
	if (!hit) {
		return;
	}
	out.push_back(hit->index);
	icss_split(y, begin, hit->index, config, out);
	icss_split(y, hit->index, end, config, out);
}

} // namespace detail

/// Iterated cumulative-sum-of-squares variance change detection. Candidates come from recursive
/// splitting at argmax |D_k| while sqrt(T/2) |D_k| exceeds the critical value; each candidate is
/// then re-estimated on the span between its neighbours and dropped if no longer significant,
/// repeating until the set is stable.
inline BreakpointSet icss_detect(std::span<const double> y, const IcssConfig &config = {}) {
	if (y.size() < 8) {
		throw std::invalid_argument("ICSS needs at least 8 observations, got " + std::to_string(y.size()));
	}
	// Throws on zero variance or non-finite input.
	(void)icss_statistic(y);

	std::vector<std::size_t> points;
	detail::icss_split(y, 0, y.size(), config, points);
	std::sort(points.begin(), points.end());

	std::vector<double> stats(points.size(), 0.0);
	for (std::size_t round = 0; round < config.max_refinements && !points.empty(); ++round) {
		std::vector<std::size_t> refined;
		std::vector<double> refined_stats;
		for (std::size_t j = 0; j < points.size(); ++j) {
			const std::size_t begin = j == 0 ? 0 : points[j - 1];
			const std::size_t end = j + 1 < points.size() ? points[j + 1] : y.size();
			if (auto hit = detail::icss_test(y, begin, end, config)) {
				if (refined.empty() || hit->index > refined.back()) {
					refined.push_back(hit->index);
					refined_stats.push_back(hit->statistic);
				}
			}
		}
		const bool stable = refined == points;
		points = std::move(refined);
		stats = std::move(refined_stats);
		if (stable) {
			break;
		}
	}

	BreakpointSet result;
	result.method = BreakMethod::Icss;
	result.indices = std::move(points);
	result.statistics = std::move(stats);
	return result;
}

inline BreakpointSet icss_detect(std::span<const double> y, double critical) {
	IcssConfig config;
	config.critical = critical;
	return icss_detect(y, config);
}

} // namespace regimecast::breaks
