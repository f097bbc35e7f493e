#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "regimecast/breaks/breakpoint_set.hpp"
#include "regimecast/breaks/pelt.hpp"
#include "regimecast/date.hpp"
#include "regimecast/error.hpp"
#include "regimecast/ingest.hpp"

namespace regimecast::breaks {

/// Union of two break sets; an index closer than min_gap to the last kept one is absorbed into it.
inline BreakpointSet combine_bp_icss(const BreakpointSet &bai_perron, const BreakpointSet &icss,
                                     std::size_t min_gap = 10) {
	std::vector<std::size_t> all = bai_perron.indices;
	all.insert(all.end(), icss.indices.begin(), icss.indices.end());
	std::sort(all.begin(), all.end());
	BreakpointSet out;
	out.method = BreakMethod::Combined;
	for (auto idx : all) {
		if (out.indices.empty() || idx - out.indices.back() >= std::max<std::size_t>(min_gap, 1)) {
			out.indices.push_back(idx);
		}
	}
	return out;
}

using FeatureBreaks = std::map<std::string, BreakpointSet>;

/// Independent PELT run on the target and on every feature column, keyed by column name.
inline FeatureBreaks detect_per_feature(const ingest::FeatureFrame &frame, const PeltConfig &config = {}) {
	if (frame.empty()) {
		throw std::invalid_argument("cannot detect breaks on an empty frame");
	}
	FeatureBreaks out;
	auto run = [&](const std::string &name, const std::vector<double> &column) {
		try {
			out[name] = pelt_detect(column, config);
		} catch (const std::exception &e) {
			throw DataError("column '" + name + "': " + e.what());
		}
	};
	run(frame.target_name, frame.target);
	for (std::size_t k = 0; k < frame.features.size(); ++k) {
		run(frame.feature_names[k], frame.features[k]);
	}
	return out;
}

/// One entry per break: {index, date, method, statistic}; date is the first day of the new regime
/// and statistic is null when the method records none.
inline nlohmann::json to_json(const BreakpointSet &set, std::span<const Date> dates = {}) {
	auto arr = nlohmann::json::array();
	for (std::size_t k = 0; k < set.indices.size(); ++k) {
		nlohmann::json entry;
		entry["index"] = set.indices[k];
		entry["date"] = set.indices[k] < dates.size() ? nlohmann::json(format_iso_date(dates[set.indices[k]]))
		                                              : nlohmann::json(nullptr);
		entry["method"] = std::string(to_string(set.method));
		const bool has_stat = k < set.statistics.size() && std::isfinite(set.statistics[k]);
		entry["statistic"] = has_stat ? nlohmann::json(set.statistics[k]) : nlohmann::json(nullptr);
		arr.push_back(std::move(entry));
	}
	return arr;
}

inline nlohmann::json to_json(const FeatureBreaks &breaks, std::span<const Date> dates = {}) {
	nlohmann::json out = nlohmann::json::object();
	for (const auto &[name, set] : breaks) {
		out[name] = to_json(set, dates);
	}
	return out;
}

} // namespace regimecast::breaks
