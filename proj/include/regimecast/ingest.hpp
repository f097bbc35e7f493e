#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "regimecast/breaks/breakpoint_set.hpp"
#include "regimecast/date.hpp"
#include "regimecast/error.hpp"
#include "regimecast/tensor.hpp"

namespace regimecast::ingest {

/// Timestamp-aligned table: one target series plus named exogenous feature columns.
struct FeatureFrame {
	std::vector<Date> timestamps;
	std::string target_name = "price";
	std::vector<double> target;
	std::vector<std::string> feature_names;
	std::vector<std::vector<double>> features;

	std::size_t rows() const noexcept { return target.size(); }
	bool empty() const noexcept { return target.empty(); }

	const std::vector<double> &column(std::string_view name) const {
		if (name == target_name) {
			return target;
		}
		for (std::size_t k = 0; k < feature_names.size(); ++k) {
			if (feature_names[k] == name) {
				return features[k];
			}
		}
		throw std::out_of_range("no column named '" + std::string(name) + "'");
	}

	/// Rows [begin, end).
	FeatureFrame slice(std::size_t begin, std::size_t end) const {
		if (begin > end || end > rows()) {
			throw std::out_of_range("slice [" + std::to_string(begin) + ", " + std::to_string(end) + ") out of range");
		}
		FeatureFrame out;
		out.target_name = target_name;
		out.feature_names = feature_names;
		auto cut = [&](const auto &v) { return std::vector(v.begin() + begin, v.begin() + end); };
		if (!timestamps.empty()) {
			out.timestamps = cut(timestamps);
		}
		out.target = cut(target);
		for (const auto &col : features) {
			out.features.push_back(cut(col));
		}
		return out;
	}

	/// Strictly increasing timestamps (when present), equal column lengths, finite values.
	void validate() const {
		const auto n = rows();
		if (!timestamps.empty()) {
			if (timestamps.size() != n) {
				throw DataError("timestamp count differs from row count");
			}
			for (std::size_t i = 1; i < n; ++i) {
				if (!(timestamps[i - 1] < timestamps[i])) {
					throw DataError("timestamps not strictly increasing at row " + std::to_string(i));
				}
			}
		}
		if (features.size() != feature_names.size()) {
			throw DataError("feature names and columns differ in count");
		}
		auto check = [n](const std::vector<double> &col, const std::string &name) {
			if (col.size() != n) {
				throw DataError("column '" + name + "' has " + std::to_string(col.size()) + " rows, expected " +
				                std::to_string(n));
			}
			for (std::size_t i = 0; i < n; ++i) {
				if (!std::isfinite(col[i])) {
					throw DataError("column '" + name + "' has a non-finite value at row " + std::to_string(i));
				}
			}
		};
		check(target, target_name);
		for (std::size_t k = 0; k < features.size(); ++k) {
			check(features[k], feature_names[k]);
		}
	}
};

struct CsvSchema {
	std::string date_column = "date";
	std::string target_column = "price";
	/// Explicit feature list; empty means every other numeric column.
	std::vector<std::string> features;
	std::vector<std::string> exclude;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
	while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
		s.remove_prefix(1);
	}
	while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
		s.remove_suffix(1);
	}
	if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
		s = s.substr(1, s.size() - 2);
	}
	return s;
}

inline std::vector<std::string> split_csv_line(std::string_view line) {
	std::vector<std::string> cells;
	std::size_t start = 0;
	for (std::size_t i = 0; i <= line.size(); ++i) {
		if (i == line.size() || line[i] == ',') {
			cells.emplace_back(trim(line.substr(start, i - start)));
			start = i + 1;
		}
	}
	return cells;
}

inline bool is_missing(std::string_view cell) {
	return cell.empty() || cell == "NA" || cell == "NaN" || cell == "nan" || cell == "null" || cell == "N/A";
}

inline std::optional<double> parse_number(std::string_view cell) {
	double value = 0.0;
	auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
	if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
		return std::nullopt;
	}
	return value;
}

} // namespace detail

/// Reads a CSV with a header row. Rows are sorted by date; empty feature cells are forward-filled
/// from the previous row (the first row must be complete); missing target cells and duplicate
/// dates are rejected. Errors carry 1-based file line numbers.
inline FeatureFrame load_csv(const std::string &path, const CsvSchema &schema = {}) {
	std::ifstream in(path);
	if (!in) {
		throw DataError("cannot open '" + path + "'");
	}
	std::string line;
	if (!std::getline(in, line)) {
		throw DataError("'" + path + "' is empty (header row required)");
	}
	const auto header = detail::split_csv_line(line);
	auto find_column = [&](const std::string &name) -> std::optional<std::size_t> {
		for (std::size_t i = 0; i < header.size(); ++i) {
			if (header[i] == name) {
				return i;
			}
		}
		return std::nullopt;
	};
	const auto date_col = find_column(schema.date_column);
	const auto target_col = find_column(schema.target_column);
	if (!date_col) {
		throw DataError("date column '" + schema.date_column + "' not found in header");
	}
	if (!target_col) {
		throw DataError("target column '" + schema.target_column + "' not found in header");
	}

	struct RawRow {
		Date date;
		std::size_t line;
		std::vector<std::string> cells;
	};
	std::vector<RawRow> raw;
	std::size_t line_no = 1;
	while (std::getline(in, line)) {
		++line_no;
		if (detail::trim(line).empty()) {
			continue;
		}
		auto cells = detail::split_csv_line(line);
		if (cells.size() != header.size()) {
			throw DataError("line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
			                " fields, found " + std::to_string(cells.size()));
		}
		const auto date = parse_iso_date(cells[*date_col]);
		if (!date) {
			throw DataError("line " + std::to_string(line_no) + ": unparsable date '" + cells[*date_col] + "'");
		}
		raw.push_back({*date, line_no, std::move(cells)});
	}
	if (raw.empty()) {
		throw DataError("'" + path + "' has no data rows");
	}
	std::stable_sort(raw.begin(), raw.end(), [](const RawRow &a, const RawRow &b) { return a.date < b.date; });
	for (std::size_t i = 1; i < raw.size(); ++i) {
		if (raw[i].date == raw[i - 1].date) {
			throw DataError("duplicate date " + format_iso_date(raw[i].date) + " (lines " +
			                std::to_string(raw[i - 1].line) + " and " + std::to_string(raw[i].line) + ")");
		}
	}

	auto excluded = [&](const std::string &name) {
		return std::find(schema.exclude.begin(), schema.exclude.end(), name) != schema.exclude.end();
	};
	std::vector<std::size_t> feature_cols;
	if (!schema.features.empty()) {
		for (const auto &name : schema.features) {
			const auto col = find_column(name);
			if (!col) {
				throw DataError("feature column '" + name + "' not found in header");
			}
			feature_cols.push_back(*col);
		}
	} else {
		for (std::size_t c = 0; c < header.size(); ++c) {
			if (c == *date_col || c == *target_col || excluded(header[c])) {
				continue;
			}
			const bool numeric = std::all_of(raw.begin(), raw.end(), [c](const RawRow &r) {
				return detail::is_missing(r.cells[c]) || detail::parse_number(r.cells[c]).has_value();
			});
			if (numeric) {
				feature_cols.push_back(c);
			}
		}
	}

	FeatureFrame frame;
	frame.target_name = schema.target_column;
	for (auto c : feature_cols) {
		frame.feature_names.push_back(header[c]);
	}
	frame.features.assign(feature_cols.size(), {});
	for (std::size_t i = 0; i < raw.size(); ++i) {
		const auto &row = raw[i];
		frame.timestamps.push_back(row.date);
		const auto &target_cell = row.cells[*target_col];
		if (detail::is_missing(target_cell)) {
			throw DataError("line " + std::to_string(row.line) + ": missing target value");
		}
		const auto target = detail::parse_number(target_cell);
		if (!target) {
			throw DataError("line " + std::to_string(row.line) + ": invalid target value '" + target_cell + "'");
		}
		frame.target.push_back(*target);
		for (std::size_t k = 0; k < feature_cols.size(); ++k) {
			const auto &cell = row.cells[feature_cols[k]];
			if (detail::is_missing(cell)) {
				if (i == 0) {
					throw DataError("line " + std::to_string(row.line) + ": first row has no value for '" +
					                frame.feature_names[k] + "' to forward-fill from");
				}
				frame.features[k].push_back(frame.features[k].back());
				continue;
			}
			const auto value = detail::parse_number(cell);
			if (!value) {
				throw DataError("line " + std::to_string(row.line) + ": invalid value '" + cell + "' in '" +
				                frame.feature_names[k] + "'");
			}
			frame.features[k].push_back(*value);
		}
	}
	frame.validate();
	return frame;
}

struct SplitSpec {
	double train_fraction = 0.8;
	/// Share of the training windows held out (chronologically, from the tail) for early stopping.
	double validation_fraction = 0.1;
};

inline std::size_t train_rows(std::size_t n, const SplitSpec &spec) {
	if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
		throw std::invalid_argument("train_fraction must lie in (0, 1)");
	}
	if (!(spec.validation_fraction >= 0.0 && spec.validation_fraction < 1.0)) {
		throw std::invalid_argument("validation_fraction must lie in [0, 1)");
	}
	const auto cut = static_cast<std::size_t>(std::floor(static_cast<double>(n) * spec.train_fraction));
	if (cut == 0 || cut >= n) {
		throw std::invalid_argument("split of " + std::to_string(n) + " rows at fraction " +
		                            std::to_string(spec.train_fraction) + " leaves an empty part");
	}
	return cut;
}

/// First floor(n * train_fraction) rows train, the rest test. No shuffling.
inline std::pair<FeatureFrame, FeatureFrame> split_chronological(const FeatureFrame &frame, const SplitSpec &spec = {}) {
	if (frame.empty()) {
		throw std::invalid_argument("cannot split an empty frame");
	}
	const auto cut = train_rows(frame.rows(), spec);
	return {frame.slice(0, cut), frame.slice(cut, frame.rows())};
}

struct ColumnStats {
	std::string name;
	double mean = 0.0;
	double stddev = 1.0;
	/// Zero spread in the fitting data: the column passes through unchanged.
	bool degenerate = false;

	double forward(double x) const { return degenerate ? x : (x - mean) / stddev; }
	double inverse(double z) const { return degenerate ? z : z * stddev + mean; }
	bool operator==(const ColumnStats &) const = default;
};

inline ColumnStats fit_column(std::string name, std::span<const double> values) {
	if (values.empty()) {
		throw std::invalid_argument("cannot fit scaler on an empty column");
	}
	ColumnStats stats;
	stats.name = std::move(name);
	double mean = 0.0;
	for (double v : values) {
		mean += v;
	}
	mean /= static_cast<double>(values.size());
	double ss = 0.0;
	for (double v : values) {
		ss += (v - mean) * (v - mean);
	}
	const double sd = std::sqrt(ss / static_cast<double>(values.size()));
	if (sd > 1e-12 * std::max(1.0, std::abs(mean))) {
		stats.mean = mean;
		stats.stddev = sd;
	} else {
		stats.mean = 0.0;
		stats.stddev = 1.0;
		stats.degenerate = true;
	}
	return stats;
}

/// Per-column z-score (population standard deviation). Statistics come only from the frame passed
/// to fit().
class Scaler {
public:
	Scaler() = default;
	explicit Scaler(std::vector<ColumnStats> columns) : columns_(std::move(columns)), fitted_(true) {}

	static Scaler fit(const FeatureFrame &train) {
		if (train.empty()) {
			throw std::invalid_argument("cannot fit scaler on an empty frame");
		}
		std::vector<ColumnStats> columns;
		columns.push_back(fit_column(train.target_name, train.target));
		for (std::size_t k = 0; k < train.features.size(); ++k) {
			columns.push_back(fit_column(train.feature_names[k], train.features[k]));
		}
		return Scaler(std::move(columns));
	}

	bool fitted() const noexcept { return fitted_; }
	const std::vector<ColumnStats> &columns() const noexcept { return columns_; }

	const ColumnStats &stats(std::string_view name) const {
		require_fitted();
		for (const auto &c : columns_) {
			if (c.name == name) {
				return c;
			}
		}
		throw std::out_of_range("scaler has no column '" + std::string(name) + "'");
	}

	/// Names of columns that had zero spread when fitted.
	std::vector<std::string> degenerate_columns() const {
		std::vector<std::string> out;
		for (const auto &c : columns_) {
			if (c.degenerate) {
				out.push_back(c.name);
			}
		}
		return out;
	}

	FeatureFrame transform(const FeatureFrame &frame) const { return apply(frame, false); }
	FeatureFrame inverse_transform(const FeatureFrame &frame) const { return apply(frame, true); }

	bool operator==(const Scaler &) const = default;

private:
	void require_fitted() const {
		if (!fitted_) {
			throw std::logic_error("scaler has not been fitted");
		}
	}

	FeatureFrame apply(const FeatureFrame &frame, bool inverse) const {
		require_fitted();
		FeatureFrame out = frame;
		auto map = [inverse](const ColumnStats &s, std::vector<double> &col) {
			for (auto &v : col) {
				v = inverse ? s.inverse(v) : s.forward(v);
			}
		};
		map(stats(frame.target_name), out.target);
		for (std::size_t k = 0; k < out.features.size(); ++k) {
			map(stats(frame.feature_names[k]), out.features[k]);
		}
		return out;
	}

	std::vector<ColumnStats> columns_;
	bool fitted_ = false;
};

inline Scaler fit_scaler(const FeatureFrame &train) { return Scaler::fit(train); }
inline FeatureFrame apply_scaler(const Scaler &scaler, const FeatureFrame &frame) { return scaler.transform(frame); }

/// Per-timestep regime index and its one-hot width (number of regimes).
struct RegimeLabels {
	std::vector<std::size_t> labels;
	std::size_t width = 0;

	std::size_t size() const noexcept { return labels.size(); }
};

/// label[t] = number of breaks at or before t, so break tau opens regime k at position tau.
inline RegimeLabels encode_regimes(std::span<const std::size_t> breaks, std::size_t length) {
	for (std::size_t k = 0; k < breaks.size(); ++k) {
		if (breaks[k] < 1 || breaks[k] >= length) {
			throw std::invalid_argument("break index " + std::to_string(breaks[k]) + " outside [1, " +
			                            std::to_string(length == 0 ? 0 : length - 1) + "]");
		}
		if (k > 0 && breaks[k] <= breaks[k - 1]) {
			throw std::invalid_argument("break indices must be strictly increasing");
		}
	}
	RegimeLabels out;
	out.width = breaks.size() + 1;
	out.labels.resize(length);
	std::size_t regime = 0;
	for (std::size_t t = 0; t < length; ++t) {
		while (regime < breaks.size() && breaks[regime] <= t) {
			++regime;
		}
		out.labels[t] = regime;
	}
	return out;
}

inline RegimeLabels encode_regimes(const breaks::BreakpointSet &set, std::size_t length) {
	return encode_regimes(set.indices, length);
}

struct WindowSpec {
	std::size_t length = 30;
	std::size_t stride = 1;
};

/// Supervised samples: inputs (N, T, d) with d ordered as [target input, features in declared
/// order, regime one-hot]; targets[i] is the series value at index_map[i], the step right after
/// the window.
struct WindowedDataset {
	Tensor inputs;
	std::vector<double> targets;
	std::vector<std::size_t> index_map;

	std::size_t size() const noexcept { return targets.size(); }
	std::size_t window() const { return inputs.rank() == 3 ? inputs.dim(1) : 0; }
	std::size_t dim() const { return inputs.rank() == 3 ? inputs.dim(2) : 0; }

	/// Samples [begin, end).
	WindowedDataset subset(std::size_t begin, std::size_t end) const {
		if (begin > end || end > size()) {
			throw std::out_of_range("dataset subset out of range");
		}
		WindowedDataset out;
		const auto T = window();
		const auto d = dim();
		out.inputs = Tensor({end - begin, T, d});
		const auto stride = T * d;
		std::copy(inputs.data().begin() + static_cast<std::ptrdiff_t>(begin * stride),
		          inputs.data().begin() + static_cast<std::ptrdiff_t>(end * stride), out.inputs.data().begin());
		out.targets.assign(targets.begin() + static_cast<std::ptrdiff_t>(begin),
		                   targets.begin() + static_cast<std::ptrdiff_t>(end));
		out.index_map.assign(index_map.begin() + static_cast<std::ptrdiff_t>(begin),
		                     index_map.begin() + static_cast<std::ptrdiff_t>(end));
		return out;
	}
};

/// Sample count floor((n - T - 1) / stride) + 1 for n > T.
inline std::size_t window_count(std::size_t n, const WindowSpec &spec) {
	if (n <= spec.length) {
		return 0;
	}
	return (n - spec.length - 1) / spec.stride + 1;
}

/// Builds windows over the unified input z_t = [input_target_t, features_t, onehot(regime_t)].
/// `next_step_target` supplies the regression labels (defaults to input_target). Pass regimes
/// with width 0 to omit the one-hot block.
inline WindowedDataset build_windows(std::span<const double> input_target,
                                     const std::vector<std::vector<double>> &features, const RegimeLabels &regimes,
                                     std::span<const double> next_step_target, const WindowSpec &spec = {}) {
	const auto n = input_target.size();
	if (spec.length == 0 || spec.stride == 0) {
		throw std::invalid_argument("window length and stride must be positive");
	}
	if (next_step_target.size() != n) {
		throw std::invalid_argument("target series length differs from input length");
	}
	for (const auto &col : features) {
		if (col.size() != n) {
			throw std::invalid_argument("feature column length differs from input length");
		}
	}
	if (regimes.width > 0 && regimes.labels.size() != n) {
		throw std::invalid_argument("regime labels length differs from input length");
	}
	if (n <= spec.length) {
		throw std::invalid_argument("series of length " + std::to_string(n) + " too short for window " +
		                            std::to_string(spec.length) + ": need at least " + std::to_string(spec.length + 1));
	}
	const auto count = window_count(n, spec);
	const auto T = spec.length;
	const auto d = 1 + features.size() + regimes.width;

	WindowedDataset out;
	out.inputs = Tensor({count, T, d});
	out.targets.resize(count);
	out.index_map.resize(count);
	for (std::size_t i = 0; i < count; ++i) {
		const auto start = i * spec.stride;
		for (std::size_t t = 0; t < T; ++t) {
			const auto src = start + t;
			auto row = out.inputs.row(i, t);
			row[0] = input_target[src];
			for (std::size_t k = 0; k < features.size(); ++k) {
				row[1 + k] = features[k][src];
			}
			if (regimes.width > 0) {
				row[1 + features.size() + regimes.labels[src]] = 1.0;
			}
		}
		out.index_map[i] = start + T;
		out.targets[i] = next_step_target[start + T];
	}
	return out;
}

inline WindowedDataset build_windows(std::span<const double> input_target,
                                     const std::vector<std::vector<double>> &features, const RegimeLabels &regimes,
                                     const WindowSpec &spec = {}) {
	return build_windows(input_target, features, regimes, input_target, spec);
}

} // namespace regimecast::ingest
