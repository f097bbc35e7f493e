#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "regimecast/breaks/supf_table.hpp"

namespace regimecast::breaks {

/// Monte Carlo draws of the limiting sup-Wald statistic for one break in q coefficients,
///   sup_{trim <= l <= 1 - trim} |B(l) - l B(1)|^2 / (l (1 - l)),
/// with B a q-dimensional standard Brownian motion on a uniform grid. Returns the draws sorted.
///
/// All trims share the same Brownian paths; `trims` selects which suprema are recorded and the
/// result holds one sorted sample per trim.
inline std::vector<std::vector<double>> simulate_supf_samples(std::size_t regressors, const std::vector<double> &trims,
                                                              std::size_t replications, std::size_t grid,
                                                              std::uint64_t seed) {
	if (regressors == 0 || grid < 10 || replications == 0) {
		throw std::invalid_argument("simulate_supf_samples: invalid arguments");
	}
	std::mt19937_64 rng(seed);
	std::normal_distribution<double> normal(0.0, 1.0);
	const double step_sd = std::sqrt(1.0 / static_cast<double>(grid));

	std::vector<std::pair<std::size_t, std::size_t>> ranges;
	for (double trim : trims) {
		if (!(trim > 0.0 && trim < 0.5)) {
			throw std::invalid_argument("trim must lie in (0, 0.5)");
		}
		const auto lo = static_cast<std::size_t>(std::ceil(trim * static_cast<double>(grid)));
		const auto hi = static_cast<std::size_t>(std::floor((1.0 - trim) * static_cast<double>(grid)));
		ranges.emplace_back(lo, hi);
	}

	std::vector<std::vector<double>> samples(trims.size());
	for (auto &s : samples) {
		s.reserve(replications);
	}
	std::vector<double> paths(regressors * (grid + 1));
	std::vector<double> stat(grid + 1);
	for (std::size_t r = 0; r < replications; ++r) {
		for (std::size_t q = 0; q < regressors; ++q) {
			double *w = &paths[q * (grid + 1)];
			w[0] = 0.0;
			for (std::size_t i = 1; i <= grid; ++i) {
				w[i] = w[i - 1] + step_sd * normal(rng);
			}
		}
		std::fill(stat.begin(), stat.end(), 0.0);
		for (std::size_t q = 0; q < regressors; ++q) {
			const double *w = &paths[q * (grid + 1)];
			for (std::size_t i = 1; i < grid; ++i) {
				const double lambda = static_cast<double>(i) / static_cast<double>(grid);
				const double bridge = w[i] - lambda * w[grid];
				stat[i] += bridge * bridge / (lambda * (1.0 - lambda));
			}
		}
		for (std::size_t k = 0; k < ranges.size(); ++k) {
			double best = 0.0;
			for (std::size_t i = std::max<std::size_t>(ranges[k].first, 1); i <= ranges[k].second && i < grid; ++i) {
				best = std::max(best, stat[i]);
			}
			samples[k].push_back(best);
		}
	}
	for (auto &s : samples) {
		std::sort(s.begin(), s.end());
	}
	return samples;
}

/// Empirical quantile of a sorted sample (inverse CDF, no interpolation).
inline double sample_quantile(const std::vector<double> &sorted, double probability) {
	if (sorted.empty()) {
		throw std::invalid_argument("sample_quantile: empty sample");
	}
	const auto rank = static_cast<std::size_t>(std::ceil(probability * static_cast<double>(sorted.size())));
	return sorted[std::clamp<std::size_t>(rank, 1, sorted.size()) - 1];
}

/// Probability level of the one-break distribution that gives the (l+1 | l) critical value:
/// the sequential statistic is a maximum over l+1 asymptotically independent one-break tests.
inline double sequential_probability(double significance, std::size_t existing_breaks) {
	return std::pow(1.0 - significance, 1.0 / static_cast<double>(existing_breaks + 1));
}

/// Critical value of the sequential sup-F(l+1 | l) test. Tabulated combinations come from the
/// embedded table; anything else is simulated once (fixed seed) and cached.
inline double supf_critical_value(std::size_t regressors, double trim, double significance,
                                  std::size_t existing_breaks) {
	if (!(significance > 0.0 && significance < 1.0)) {
		throw std::invalid_argument("significance must lie in (0, 1)");
	}
	if (auto tabulated = supf_table::lookup(regressors, trim, significance, existing_breaks)) {
		return *tabulated;
	}
	static std::mutex mutex;
	static std::map<std::tuple<std::size_t, long long>, std::vector<double>> cache;
	const auto key = std::make_tuple(regressors, std::llround(trim * 1e6));
	std::lock_guard lock(mutex);
	auto it = cache.find(key);
	if (it == cache.end()) {
		auto samples = simulate_supf_samples(regressors, {trim}, 20000, 500, 0x5eedULL + regressors);
		it = cache.emplace(key, std::move(samples.front())).first;
	}
	return sample_quantile(it->second, sequential_probability(significance, existing_breaks));
}

} // namespace regimecast::breaks
