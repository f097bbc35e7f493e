#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace regimecast::breaks {

enum class BreakMethod { Pelt, BaiPerron, Icss, Combined };

inline std::string_view to_string(BreakMethod method) {
	switch (method) {
	case BreakMethod::Pelt:
		return "PELT";
	case BreakMethod::BaiPerron:
		return "BaiPerron";
	case BreakMethod::Icss:
		return "ICSS";
	case BreakMethod::Combined:
		return "Combined";
	}
	return "unknown";
}

/// Detected change positions. Each index is the length of the prefix preceding the break, so
/// index tau splits the series into [0, tau) and [tau, n): tau is the last (1-based) position of
/// the earlier segment and the first (0-based) position of the new one.
struct BreakpointSet {
	std::vector<std::size_t> indices;
	BreakMethod method = BreakMethod::Pelt;
	/// Per-break scores where the method produces one (sup-F value, |D_k| statistic); empty otherwise.
	std::vector<double> statistics;

	bool empty() const noexcept { return indices.empty(); }
	std::size_t size() const noexcept { return indices.size(); }

	/// Throws std::invalid_argument unless 1 <= tau_1 < ... < tau_m < n and every implied
	/// segment is at least min_segment long.
	void validate(std::size_t n, std::size_t min_segment = 1) const {
		std::size_t previous = 0;
		for (std::size_t k = 0; k < indices.size(); ++k) {
			const auto tau = indices[k];
			if (tau < 1 || tau >= n) {
				throw std::invalid_argument("break index " + std::to_string(tau) + " outside [1, " +
				                            std::to_string(n - 1) + "]");
			}
			if (k > 0 && tau <= previous) {
				throw std::invalid_argument("break indices must be strictly increasing");
			}
			if (tau - previous < min_segment) {
				throw std::invalid_argument("segment ending at " + std::to_string(tau) + " shorter than " +
				                            std::to_string(min_segment));
			}
			previous = tau;
		}
		if (!indices.empty() && n - previous < min_segment) {
			throw std::invalid_argument("final segment shorter than " + std::to_string(min_segment));
		}
		if (!statistics.empty() && statistics.size() != indices.size()) {
			throw std::invalid_argument("statistics must be empty or one per break");
		}
	}
};

} // namespace regimecast::breaks
