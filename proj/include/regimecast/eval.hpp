#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace regimecast::eval {

struct MetricsReport {
	std::string tag;
	std::size_t count = 0;
	double mae = 0.0;
	double rmse = 0.0;
	/// Percent; empty when every actual value is (near) zero.
	std::optional<double> mape;
	/// Samples left out of MAPE because |actual| < 1e-9.
	std::size_t mape_excluded = 0;
	/// Empty when the actual series has zero variance.
	std::optional<double> r2;
	double wall_seconds = 0.0;
};

inline constexpr double mape_zero_threshold = 1e-9;

namespace detail {

inline void check_pair(std::span<const double> a, std::span<const double> b, std::size_t min_length) {
	if (a.size() != b.size()) {
		throw std::invalid_argument("series lengths differ (" + std::to_string(a.size()) + " vs " +
		                            std::to_string(b.size()) + ")");
	}
	if (a.size() < min_length) {
		throw std::invalid_argument("need at least " + std::to_string(min_length) + " observations");
	}
	for (std::size_t i = 0; i < a.size(); ++i) {
		if (!std::isfinite(a[i]) || !std::isfinite(b[i])) {
			throw std::invalid_argument("non-finite value at index " + std::to_string(i));
		}
	}
}

inline double mean(std::span<const double> x) {
	double s = 0.0;
	for (double v : x) {
		s += v;
	}
	return s / static_cast<double>(x.size());
}

} // namespace detail

inline MetricsReport compute_metrics(std::span<const double> actual, std::span<const double> predicted,
                                     std::string tag = {}) {
	detail::check_pair(actual, predicted, 1);
	MetricsReport r;
	r.tag = std::move(tag);
	r.count = actual.size();
	const double n = static_cast<double>(actual.size());
	double abs_sum = 0.0;
	double sq_sum = 0.0;
	double pct_sum = 0.0;
	std::size_t pct_count = 0;
	for (std::size_t i = 0; i < actual.size(); ++i) {
		const double e = actual[i] - predicted[i];
		abs_sum += std::abs(e);
		sq_sum += e * e;
		if (std::abs(actual[i]) < mape_zero_threshold) {
			++r.mape_excluded;
		} else {
			pct_sum += std::abs(e / actual[i]);
			++pct_count;
		}
	}
	r.mae = abs_sum / n;
	r.rmse = std::sqrt(sq_sum / n);
	if (pct_count > 0) {
		r.mape = 100.0 * pct_sum / static_cast<double>(pct_count);
	}
	const double m = detail::mean(actual);
	double ss_tot = 0.0;
	for (double v : actual) {
		ss_tot += (v - m) * (v - m);
	}
	if (ss_tot > 0.0) {
		r.r2 = 1.0 - sq_sum / ss_tot;
	}
	return r;
}

/// Sample Pearson correlation; rejects constant inputs.
inline double pearson_corr(std::span<const double> x, std::span<const double> y) {
	detail::check_pair(x, y, 2);
	const double mx = detail::mean(x);
	const double my = detail::mean(y);
	double sxy = 0.0;
	double sxx = 0.0;
	double syy = 0.0;
	for (std::size_t i = 0; i < x.size(); ++i) {
		sxy += (x[i] - mx) * (y[i] - my);
		sxx += (x[i] - mx) * (x[i] - mx);
		syy += (y[i] - my) * (y[i] - my);
	}
	if (sxx == 0.0 || syy == 0.0) {
		throw std::invalid_argument("correlation undefined for a constant series");
	}
	return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

struct Histogram {
	std::vector<double> edges; // counts.size() + 1 entries
	std::vector<std::size_t> counts;
};

struct ResidualSeries {
	std::vector<double> residuals; // actual - predicted
	Histogram histogram;
	double mean = 0.0;
	double stddev = 0.0;
	double skewness = 0.0;
};

/// Equal-width bins over [min, max]; the maximum falls in the last bin. A constant sample gets
/// one bin.
inline Histogram histogram(std::span<const double> values, std::size_t bins) {
	if (bins == 0) {
		throw std::invalid_argument("histogram needs at least one bin");
	}
	Histogram h;
	if (values.empty()) {
		return h;
	}
	const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
	const double lo = *lo_it;
	const double hi = *hi_it;
	if (!(hi > lo)) {
		h.edges = {lo, hi};
		h.counts = {values.size()};
		return h;
	}
	const double width = (hi - lo) / static_cast<double>(bins);
	h.edges.resize(bins + 1);
	for (std::size_t k = 0; k <= bins; ++k) {
		h.edges[k] = k == bins ? hi : lo + width * static_cast<double>(k);
	}
	h.counts.assign(bins, 0);
	for (double v : values) {
		auto k = static_cast<std::size_t>((v - lo) / width);
		h.counts[std::min(k, bins - 1)]++;
	}
	return h;
}

inline ResidualSeries residual_report(std::span<const double> actual, std::span<const double> predicted,
                                      std::size_t bins = 20) {
	detail::check_pair(actual, predicted, 0);
	ResidualSeries r;
	r.residuals.resize(actual.size());
	for (std::size_t i = 0; i < actual.size(); ++i) {
		r.residuals[i] = actual[i] - predicted[i];
	}
	r.histogram = histogram(r.residuals, bins);
	if (r.residuals.empty()) {
		return r;
	}
	r.mean = detail::mean(r.residuals);
	double m2 = 0.0;
	double m3 = 0.0;
	for (double e : r.residuals) {
		const double d = e - r.mean;
		m2 += d * d;
		m3 += d * d * d;
	}
	const double n = static_cast<double>(r.residuals.size());
	m2 /= n;
	m3 /= n;
	r.stddev = std::sqrt(m2);
	r.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
	return r;
}

/// Ascending RMSE, then MAE, then tag: a total order, so the result ignores input order.
inline std::vector<MetricsReport> rank_models(std::vector<MetricsReport> reports) {
	std::sort(reports.begin(), reports.end(), [](const MetricsReport &a, const MetricsReport &b) {
		if (a.rmse != b.rmse) {
			return a.rmse < b.rmse;
		}
		if (a.mae != b.mae) {
			return a.mae < b.mae;
		}
		return a.tag < b.tag;
	});
	return reports;
}

struct Improvement {
	double mae_pct = 0.0;
	double rmse_pct = 0.0;
	std::optional<double> mape_pct;
};

/// Percent reduction 100 (ref - cand) / ref per metric.
inline Improvement improvement(const MetricsReport &reference, const MetricsReport &candidate) {
	if (!(reference.mae > 0.0) || !(reference.rmse > 0.0)) {
		throw std::invalid_argument("reference metrics must be positive to express a reduction");
	}
	Improvement out;
	out.mae_pct = 100.0 * (reference.mae - candidate.mae) / reference.mae;
	out.rmse_pct = 100.0 * (reference.rmse - candidate.rmse) / reference.rmse;
	if (reference.mape && candidate.mape && *reference.mape > 0.0) {
		out.mape_pct = 100.0 * (*reference.mape - *candidate.mape) / *reference.mape;
	}
	return out;
}

inline nlohmann::json to_json(const MetricsReport &r, bool include_timing = false) {
	nlohmann::json j = {{"tag", r.tag},
	                    {"count", r.count},
	                    {"mae", r.mae},
	                    {"rmse", r.rmse},
	                    {"mape", r.mape ? nlohmann::json(*r.mape) : nlohmann::json(nullptr)},
	                    {"mape_excluded", r.mape_excluded},
	                    {"r2", r.r2 ? nlohmann::json(*r.r2) : nlohmann::json(nullptr)}};
	if (include_timing) {
		j["wall_seconds"] = r.wall_seconds;
	}
	return j;
}

inline nlohmann::json to_json(const Histogram &h) { return {{"edges", h.edges}, {"counts", h.counts}}; }

inline nlohmann::json to_json(const ResidualSeries &r) {
	return {{"mean", r.mean}, {"stddev", r.stddev}, {"skewness", r.skewness}, {"histogram", to_json(r.histogram)}};
}

/// Aligned plain-text table, one row per report in the given order.
inline std::string format_table(const std::vector<MetricsReport> &reports) {
	std::size_t width = 5;
	for (const auto &r : reports) {
		width = std::max(width, r.tag.size());
	}
	std::ostringstream out;
	auto cell = [&](const std::optional<double> &v) {
		std::ostringstream s;
		if (v) {
			s << std::fixed << std::setprecision(4) << *v;
		} else {
			s << "n/a";
		}
		return s.str();
	};
	out << std::left << std::setw(static_cast<int>(width)) << "model" << std::right << std::setw(12) << "MAE"
	    << std::setw(12) << "RMSE" << std::setw(12) << "MAPE(%)" << std::setw(12) << "R2" << '\n';
	for (const auto &r : reports) {
		out << std::left << std::setw(static_cast<int>(width)) << r.tag << std::right << std::setw(12) << cell(r.mae)
		    << std::setw(12) << cell(r.rmse) << std::setw(12) << cell(r.mape) << std::setw(12) << cell(r.r2) << '\n';
	}
	return out.str();
}

} // namespace regimecast::eval
