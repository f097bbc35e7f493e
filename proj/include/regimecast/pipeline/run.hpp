#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "regimecast/breaks.hpp"
#include "regimecast/error.hpp"
#include "regimecast/eval.hpp"
#include "regimecast/ingest.hpp"
#include "regimecast/neural.hpp"
#include "regimecast/pipeline/artifacts.hpp"
#include "regimecast/pipeline/config.hpp"
#include "regimecast/wavelet.hpp"

namespace regimecast::pipeline {

/// Breaks on one series with the configured method. ICSS optionally runs on first differences;
/// a difference-index break k is reported at level index k + 1.
inline breaks::BreakpointSet detect_breaks(std::span<const double> series, const BreakSettings &settings,
                                           const std::string &method) {
	auto run_icss = [&]() {
		breaks::IcssConfig cfg;
		cfg.critical = settings.icss_critical;
		cfg.min_segment = settings.icss_min_segment;
		if (!settings.icss_on_differences) {
			return breaks::icss_detect(series, cfg);
		}
		if (series.size() < 3) {
			throw std::invalid_argument("ICSS on differences needs at least 3 observations");
		}
		std::vector<double> diffs(series.size() - 1);
		for (std::size_t i = 0; i + 1 < series.size(); ++i) {
			diffs[i] = series[i + 1] - series[i];
		}
		auto set = breaks::icss_detect(diffs, cfg);
		for (auto &idx : set.indices) {
			idx += 1;
		}
		return set;
	};
	auto run_bp = [&]() {
		breaks::BaiPerronConfig cfg;
		cfg.max_breaks = settings.max_breaks;
		cfg.trim = settings.trim;
		cfg.significance = settings.significance;
		return breaks::bai_perron_detect(series, cfg);
	};
	if (method == "pelt") {
		breaks::PeltConfig cfg;
		cfg.penalty = settings.penalty;
		cfg.penalty_factor = settings.penalty_factor;
		cfg.min_segment = settings.min_segment;
		cfg.cost = breaks::parse_cost_kind(settings.cost);
		return breaks::pelt_detect(series, cfg);
	}
	if (method == "bp") {
		return run_bp();
	}
	if (method == "icss") {
		return run_icss();
	}
	if (method == "bp+icss") {
		return breaks::combine_bp_icss(run_bp(), run_icss(), settings.combine_min_gap);
	}
	throw ConfigError("unknown break method '" + method + "'");
}

inline std::vector<double> denoise_series(std::span<const double> x, const WaveletSettings &settings) {
	const auto filter = wavelet::WaveletFilter::make(settings.family);
	return wavelet::denoise(x, filter, settings.levels, wavelet::parse_padding(settings.padding));
}

/// Everything a variant needs for training and evaluation.
struct PreparedData {
	ingest::FeatureFrame frame; // raw input rows
	std::size_t cut = 0;        // first test row
	std::vector<double> label;  // regression target series, original units
	breaks::BreakpointSet regime_breaks;
	ingest::RegimeLabels regimes;
	ingest::Scaler scaler;
	ingest::ColumnStats label_scaling;
	ingest::WindowedDataset train;
	ingest::WindowedDataset test;
};

inline ingest::FeatureFrame load_frame(const RunConfig &config) {
	if (config.input.empty()) {
		throw ConfigError("no input CSV given (set 'input' or pass --input PATH)");
	}
	if (!fs::is_regular_file(config.input)) {
		throw ConfigError("input file '" + config.input + "' does not exist");
	}
	ingest::CsvSchema schema;
	schema.date_column = config.date_column;
	schema.target_column = config.target;
	schema.features = config.features;
	schema.exclude = config.exclude;
	return ingest::load_csv(config.input, schema);
}

/// Denoising (whole series), regime labels, train-only scaling and chronological windowing.
/// Windows whose target row lies in the training part train; the rest test.
inline PreparedData prepare(const ingest::FeatureFrame &frame, const RunConfig &config, const VariantSpec &variant) {
	PreparedData out;
	out.frame = frame;
	const auto n = frame.rows();
	out.cut = ingest::train_rows(n, {config.train_fraction, config.training.validation_fraction});
	const auto choice = parse_architecture_choice(variant.architecture);

	std::vector<double> input_target = variant.denoise ? denoise_series(frame.target, config.wavelet) : frame.target;
	std::vector<std::vector<double>> features;
	std::vector<std::string> feature_names;
	if (choice.multivariate) {
		for (std::size_t k = 0; k < frame.features.size(); ++k) {
			features.push_back(variant.denoise ? denoise_series(frame.features[k], config.wavelet) : frame.features[k]);
			feature_names.push_back(frame.feature_names[k]);
		}
	}
	out.label = variant.denoise && config.target_mode == "denoised" ? input_target : frame.target;

	if (variant.breaks != "none") {
		const auto rows = config.regime_leakage == "frozen" ? out.cut : n;
		out.regime_breaks = detect_breaks(std::span<const double>(frame.target).first(rows), config.breaks, variant.breaks);
		out.regimes = ingest::encode_regimes(out.regime_breaks, n);
	}

	std::vector<ingest::ColumnStats> columns;
	auto fit_and_scale = [&](const std::string &name, std::vector<double> &col) {
		auto stats = ingest::fit_column(name, std::span<const double>(col).first(out.cut));
		for (auto &v : col) {
			v = stats.forward(v);
		}
		return stats;
	};
	columns.push_back(fit_and_scale(frame.target_name, input_target));
	for (std::size_t k = 0; k < features.size(); ++k) {
		columns.push_back(fit_and_scale(feature_names[k], features[k]));
	}
	out.scaler = ingest::Scaler(std::move(columns));
	std::vector<double> label = out.label;
	out.label_scaling = fit_and_scale("label", label);

	const auto windows =
	    ingest::build_windows(input_target, features, out.regimes, label, ingest::WindowSpec{config.window, config.stride});
	const auto split = static_cast<std::size_t>(
	    std::lower_bound(windows.index_map.begin(), windows.index_map.end(), out.cut) - windows.index_map.begin());
	if (split == 0 || split == windows.size()) {
		throw DataError("window length " + std::to_string(config.window) + " leaves no " +
		                (split == 0 ? "training" : "test") + " windows for " + std::to_string(n) + " rows");
	}
	out.train = windows.subset(0, split);
	out.test = windows.subset(split, windows.size());
	return out;
}

inline neural::TrainedModel train_variant(const PreparedData &data, const RunConfig &config, const VariantSpec &variant) {
	auto model = neural::train(config.model_spec(variant, data.train.dim()), data.train, config.training);
	model.target_scaling = data.label_scaling;
	model.scaler = data.scaler;
	return model;
}

struct Evaluation {
	eval::MetricsReport report;
	eval::ResidualSeries residuals;
	std::vector<std::size_t> rows;
	std::vector<double> actual;
	std::vector<double> predicted;
};

inline Evaluation evaluate_variant(const PreparedData &data, const neural::TrainedModel &model, const std::string &tag,
                                   std::size_t bins) {
	if (model.input_dim() != data.test.dim()) {
		throw DataError("checkpoint expects " + std::to_string(model.input_dim()) + " input columns but the data gives " +
		                std::to_string(data.test.dim()));
	}
	Evaluation out;
	out.rows = data.test.index_map;
	out.predicted = neural::predict(model, data.test);
	for (auto row : out.rows) {
		out.actual.push_back(data.label[row]);
	}
	out.report = eval::compute_metrics(out.actual, out.predicted, tag);
	out.report.wall_seconds = model.wall_seconds;
	out.residuals = eval::residual_report(out.actual, out.predicted, bins);
	return out;
}

namespace detail {

inline std::string number(double v) {
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.10g", v);
	return buf;
}

inline std::string date_at(const ingest::FeatureFrame &frame, std::size_t row) {
	return row < frame.timestamps.size() ? format_iso_date(frame.timestamps[row]) : std::to_string(row);
}

inline std::string slug(const std::string &name) {
	std::string out;
	for (char ch : name) {
		if (std::isalnum(static_cast<unsigned char>(ch))) {
			out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
		} else if (!out.empty() && out.back() != '-') {
			out.push_back('-');
		}
	}
	while (!out.empty() && out.back() == '-') {
		out.pop_back();
	}
	return out.empty() ? "variant" : out;
}

/// Config hash input: the resolved config minus fields that only name where files live.
inline std::string config_hash(const RunConfig &config) {
	auto doc = to_json(config);
	doc.erase("output_dir");
	doc.erase("checkpoint");
	return sha256_hex(doc.dump());
}

inline nlohmann::json variant_json(const VariantSpec &v) {
	return {{"name", v.name}, {"architecture", v.architecture}, {"breaks", v.breaks}, {"denoise", v.denoise}};
}

inline std::string residuals_csv(const ingest::FeatureFrame &frame, const Evaluation &ev) {
	std::ostringstream out;
	out << "date,actual,predicted,residual\n";
	for (std::size_t i = 0; i < ev.rows.size(); ++i) {
		out << date_at(frame, ev.rows[i]) << ',' << number(ev.actual[i]) << ',' << number(ev.predicted[i]) << ','
		    << number(ev.residuals.residuals[i]) << '\n';
	}
	return out.str();
}

inline nlohmann::json history_json(const neural::TrainedModel &m, const std::string &tag) {
	return {{"variant", tag}, {"best_epoch", m.best_epoch}, {"epochs", neural::history_to_json(m.history)}};
}

inline nlohmann::json checkpoint_json(const neural::TrainedModel &m, const VariantSpec &v) {
	auto doc = neural::to_json(m);
	doc["variant"] = variant_json(v);
	return doc;
}

inline void write_evaluation(RunDirectory &run, const std::string &prefix, const ingest::FeatureFrame &frame,
                             const Evaluation &ev) {
	run.write_json(prefix + "metrics.json", eval::to_json(ev.report));
	run.write(prefix + "metrics.txt", eval::format_table({ev.report}));
	run.write(prefix + "residuals.csv", residuals_csv(frame, ev));
	run.write_json(prefix + "residual_summary.json", eval::to_json(ev.residuals));
}

struct Session {
	fs::path root;
	RunLock lock;
	RunDirectory run;

	Session(const RunConfig &config, const std::string &command)
	    : root(create_root(config)), lock(root), run(root, command) {}

	static fs::path create_root(const RunConfig &config) {
		auto root = resolve_output_root(config.output_dir);
		std::error_code ec;
		fs::create_directories(root, ec);
		if (ec) {
			throw ConfigError("cannot create output root '" + root.string() + "': " + ec.message());
		}
		return root;
	}
};

} // namespace detail

struct VariantOutcome {
	VariantSpec variant;
	eval::MetricsReport report;
	breaks::BreakpointSet regime_breaks;
	std::size_t epochs = 0;
};

struct RunResult {
	fs::path run_dir;
	std::vector<VariantOutcome> variants;
	std::vector<eval::MetricsReport> ranking;
};

/// Per-column breaks with the configured method: breaks.json maps column name to entries.
inline RunResult cmd_detect(const RunConfig &config) {
	const auto frame = load_frame(config);
	detail::Session session(config, "detect");
	breaks::FeatureBreaks found;
	auto run_column = [&](const std::string &name, const std::vector<double> &col) {
		try {
			found[name] = detect_breaks(col, config.breaks, config.breaks.method);
		} catch (const std::invalid_argument &e) {
			throw DataError("column '" + name + "': " + e.what());
		}
	};
	run_column(frame.target_name, frame.target);
	for (std::size_t k = 0; k < frame.features.size(); ++k) {
		run_column(frame.feature_names[k], frame.features[k]);
	}
	session.run.write_json("breaks.json", breaks::to_json(found, frame.timestamps));
	session.run.write_manifest(detail::config_hash(config), config.seed);
	return {session.run.path(), {}, {}};
}

/// Target column through the wavelet filter: date, raw, denoised, reconstruction_error, where the
/// last column is |x - waverec(wavedec(x))| with all detail bands kept.
inline RunResult cmd_denoise(const RunConfig &config) {
	const auto frame = load_frame(config);
	const auto filter = wavelet::WaveletFilter::make(config.wavelet.family);
	const auto padding = wavelet::parse_padding(config.wavelet.padding);
	const auto denoised = wavelet::denoise(frame.target, filter, config.wavelet.levels, padding);
	const auto roundtrip = wavelet::waverec(wavelet::wavedec(frame.target, filter, config.wavelet.levels, padding));
	detail::Session session(config, "denoise");
	std::ostringstream csv;
	csv << "date,raw,denoised,reconstruction_error\n";
	for (std::size_t i = 0; i < frame.rows(); ++i) {
		csv << detail::date_at(frame, i) << ',' << detail::number(frame.target[i]) << ',' << detail::number(denoised[i])
		    << ',' << detail::number(std::abs(frame.target[i] - roundtrip[i])) << '\n';
	}
	session.run.write("denoised.csv", csv.str());
	session.run.write_manifest(detail::config_hash(config), config.seed);
	return {session.run.path(), {}, {}};
}

/// Trains the top-level architecture; writes checkpoint.json and history.json.
inline RunResult cmd_train(const RunConfig &config) {
	const auto frame = load_frame(config);
	const auto variant = config.primary_variant();
	const auto data = prepare(frame, config, variant);
	detail::Session session(config, "train");
	const auto model = train_variant(data, config, variant);
	session.run.write_json("checkpoint.json", detail::checkpoint_json(model, variant));
	session.run.write_json("history.json", detail::history_json(model, variant.name));
	session.run.write_json("timing.json", {{variant.name, model.wall_seconds}});
	session.run.write_manifest(detail::config_hash(config), config.seed);
	VariantOutcome outcome{variant, {}, data.regime_breaks, model.history.size()};
	return {session.run.path(), {outcome}, {}};
}

/// Scores a checkpoint on the test part of the configured data. The variant recorded in the
/// checkpoint decides preprocessing; the config supplies data, split and window settings.
inline RunResult cmd_evaluate(const RunConfig &config) {
	if (config.checkpoint.empty()) {
		throw ConfigError("evaluate needs a checkpoint (set 'checkpoint' or pass --checkpoint PATH)");
	}
	if (!fs::is_regular_file(config.checkpoint)) {
		throw ConfigError("checkpoint file '" + config.checkpoint + "' does not exist");
	}
	const auto frame = load_frame(config);
	const auto model = neural::load_checkpoint(config.checkpoint);
	VariantSpec variant = config.primary_variant();
	try {
		const auto doc = nlohmann::json::parse(read_file(config.checkpoint));
		if (doc.contains("variant")) {
			const auto &v = doc.at("variant");
			variant = {v.at("name").get<std::string>(), v.at("architecture").get<std::string>(),
			           v.at("breaks").get<std::string>(), v.at("denoise").get<bool>()};
		}
	} catch (const nlohmann::json::exception &e) {
		throw DataError(std::string("checkpoint variant block is malformed: ") + e.what());
	}
	const auto data = prepare(frame, config, variant);
	const auto ev = evaluate_variant(data, model, variant.name, config.histogram_bins);
	detail::Session session(config, "evaluate");
	detail::write_evaluation(session.run, "", frame, ev);
	session.run.write_manifest(detail::config_hash(config), config.seed);
	VariantOutcome outcome{variant, ev.report, data.regime_breaks, model.history.size()};
	return {session.run.path(), {outcome}, {ev.report}};
}

/// Detect, denoise, train and evaluate every listed variant in order, then rank them.
inline RunResult cmd_pipeline(const RunConfig &config) {
	const auto frame = load_frame(config);
	detail::Session session(config, "pipeline");
	auto &run = session.run;
	RunResult result;
	result.run_dir = run.path();

	nlohmann::json breaks_doc = nlohmann::json::object();
	nlohmann::json metrics_doc = nlohmann::json::array();
	nlohmann::json timing_doc = nlohmann::json::object();
	std::vector<eval::MetricsReport> reports;
	std::set<std::string> used;
	for (const auto &variant : config.variants) {
		auto dir = detail::slug(variant.name);
		for (int k = 2; used.count(dir) > 0; ++k) {
			dir = detail::slug(variant.name) + "-" + std::to_string(k);
		}
		used.insert(dir);
		const auto prefix = dir + "/";

		const auto data = prepare(frame, config, variant);
		const auto model = train_variant(data, config, variant);
		const auto ev = evaluate_variant(data, model, variant.name, config.histogram_bins);

		run.write_json(prefix + "checkpoint.json", detail::checkpoint_json(model, variant));
		run.write_json(prefix + "history.json", detail::history_json(model, variant.name));
		detail::write_evaluation(run, prefix, frame, ev);

		breaks_doc[variant.name] = breaks::to_json(data.regime_breaks, frame.timestamps);
		metrics_doc.push_back(eval::to_json(ev.report));
		timing_doc[variant.name] = model.wall_seconds;
		reports.push_back(ev.report);
		result.variants.push_back({variant, ev.report, data.regime_breaks, model.history.size()});
	}

	result.ranking = eval::rank_models(reports);
	const auto &reference_name = config.reference_variant.empty() ? config.variants.front().name : config.reference_variant;
	const auto reference = std::find_if(reports.begin(), reports.end(),
	                                    [&](const eval::MetricsReport &r) { return r.tag == reference_name; });
	nlohmann::json ranking_doc = nlohmann::json::array();
	for (std::size_t i = 0; i < result.ranking.size(); ++i) {
		const auto &r = result.ranking[i];
		auto entry = eval::to_json(r);
		entry["rank"] = i + 1;
		if (reference != reports.end() && reference->mae > 0.0 && reference->rmse > 0.0) {
			const auto imp = eval::improvement(*reference, r);
			entry["improvement_vs_reference"] = {{"mae_pct", imp.mae_pct}, {"rmse_pct", imp.rmse_pct}};
		}
		ranking_doc.push_back(std::move(entry));
	}

	{
		std::ostringstream denoised;
		const auto smooth = denoise_series(frame.target, config.wavelet);
		denoised << "date,raw,denoised\n";
		for (std::size_t i = 0; i < frame.rows(); ++i) {
			denoised << detail::date_at(frame, i) << ',' << detail::number(frame.target[i]) << ','
			         << detail::number(smooth[i]) << '\n';
		}
		run.write("denoised.csv", denoised.str());
	}
	run.write_json("breaks.json", breaks_doc);
	run.write_json("metrics.json", {{"variants", metrics_doc}});
	run.write_json("ranking.json", {{"reference", reference_name}, {"ranking", ranking_doc}});
	run.write("ranking.txt", eval::format_table(result.ranking));
	run.write_json("timing.json", timing_doc);
	run.write_manifest(detail::config_hash(config), config.seed);
	return result;
}

} // namespace regimecast::pipeline
