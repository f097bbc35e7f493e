#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "regimecast/breaks.hpp"
#include "regimecast/error.hpp"
#include "regimecast/neural/trainer.hpp"
#include "regimecast/wavelet.hpp"

namespace regimecast::pipeline {

using nlohmann::json;

/// Architecture keyword as used in configs: lstm-uni sees only the target; the others also see
/// the exogenous features.
struct ArchitectureChoice {
	neural::Architecture architecture = neural::Architecture::Lstm;
	bool multivariate = false;
};

inline ArchitectureChoice parse_architecture_choice(std::string_view name) {
	if (name == "lstm-uni" || name == "lstm") {
		return {neural::Architecture::Lstm, false};
	}
	if (name == "lstm-multi") {
		return {neural::Architecture::Lstm, true};
	}
	if (name == "gru") {
		return {neural::Architecture::Gru, true};
	}
	if (name == "tcn") {
		return {neural::Architecture::Tcn, true};
	}
	throw ConfigError("unknown architecture '" + std::string(name) + "' (expected lstm-uni, lstm-multi, gru, tcn)");
}

inline void check_break_method(std::string_view name, bool allow_none) {
	if (name == "pelt" || name == "bp" || name == "icss" || name == "bp+icss" || (allow_none && name == "none")) {
		return;
	}
	throw ConfigError("unknown break method '" + std::string(name) + "' (expected pelt, bp, icss, bp+icss" +
	                  (allow_none ? ", none)" : ")"));
}

/// One model/preprocessing combination trained by the pipeline.
struct VariantSpec {
	std::string name;
	std::string architecture = "lstm-uni";
	/// Break method for the regime one-hot, or "none".
	std::string breaks = "pelt";
	bool denoise = true;
};

inline std::vector<VariantSpec> default_variants() {
	return {
	    {"BP&ICSS-WT-LSTM", "lstm-uni", "bp+icss", true},
	    {"PELT-WT-LSTM(uni)", "lstm-uni", "pelt", true},
	    {"PELT-WT-LSTM(multi)", "lstm-multi", "pelt", true},
	    {"PELT-WT-GRU", "gru", "pelt", true},
	    {"PELT-WT-TCN", "tcn", "pelt", true},
	};
}

struct BreakSettings {
	std::string method = "pelt";
	std::string cost = "normal-mean";
	std::optional<double> penalty;
	double penalty_factor = 2.0;
	std::optional<std::size_t> min_segment;
	std::size_t max_breaks = 5;
	double trim = 0.15;
	double significance = 0.05;
	double icss_critical = 1.358;
	std::size_t icss_min_segment = 8;
	/// ICSS looks for variance shifts in first differences rather than in price levels.
	bool icss_on_differences = true;
	std::size_t combine_min_gap = 10;
};

struct WaveletSettings {
	bool enabled = true;
	std::string family = "db4";
	std::size_t levels = 1;
	std::string padding = "symmetric";
};

struct RunConfig {
	std::string input;
	std::string date_column = "date";
	std::string target = "price";
	std::vector<std::string> features;
	std::vector<std::string> exclude;
	double train_fraction = 0.8;
	BreakSettings breaks;
	WaveletSettings wavelet;
	std::size_t window = 30;
	std::size_t stride = 1;
	std::string architecture = "lstm-uni";
	std::size_t hidden = 128;
	std::size_t layers = 2;
	std::size_t channels = 64;
	std::size_t blocks = 4;
	std::size_t kernel = 3;
	double dropout = 0.2;
	neural::TrainingConfig training;
	std::uint64_t seed = 42;
	std::string output_dir;
	/// "frozen": breaks found on training rows only; "full": on the whole series.
	std::string regime_leakage = "frozen";
	/// "denoised": predict the denoised next value when denoising is on; "raw": always the raw one.
	std::string target_mode = "denoised";
	std::string checkpoint;
	std::size_t histogram_bins = 20;
	/// Variant used as the baseline for improvement percentages; empty means the first variant.
	std::string reference_variant;
	std::vector<VariantSpec> variants = default_variants();

	/// The single variant described by the top-level fields (train/evaluate commands).
	VariantSpec primary_variant() const {
		return {architecture, architecture, breaks.method, wavelet.enabled};
	}

	neural::ModelSpec model_spec(const VariantSpec &v, std::size_t input_dim) const {
		const auto choice = parse_architecture_choice(v.architecture);
		neural::ModelSpec spec;
		spec.architecture = choice.architecture;
		spec.input_dim = input_dim;
		spec.hidden = hidden;
		spec.layers = layers;
		spec.channels = channels;
		spec.blocks = blocks;
		spec.kernel = kernel;
		spec.dropout = dropout;
		return spec;
	}
};

namespace detail {

template <class T>
json optional_json(const std::optional<T> &v) {
	return v ? json(*v) : json(nullptr);
}

inline json to_json(const VariantSpec &v) {
	return {{"name", v.name}, {"architecture", v.architecture}, {"breaks", v.breaks}, {"denoise", v.denoise}};
}

} // namespace detail

inline json to_json(const RunConfig &c) {
	json variants = json::array();
	for (const auto &v : c.variants) {
		variants.push_back(detail::to_json(v));
	}
	return {
	    {"input", c.input},
	    {"date_column", c.date_column},
	    {"target", c.target},
	    {"features", c.features},
	    {"exclude", c.exclude},
	    {"split", {{"train_fraction", c.train_fraction}}},
	    {"breaks",
	     {{"method", c.breaks.method},
	      {"cost", c.breaks.cost},
	      {"penalty", detail::optional_json(c.breaks.penalty)},
	      {"penalty_factor", c.breaks.penalty_factor},
	      {"min_segment", detail::optional_json(c.breaks.min_segment)},
	      {"max_breaks", c.breaks.max_breaks},
	      {"trim", c.breaks.trim},
	      {"significance", c.breaks.significance},
	      {"icss_critical", c.breaks.icss_critical},
	      {"icss_min_segment", c.breaks.icss_min_segment},
	      {"icss_on_differences", c.breaks.icss_on_differences},
	      {"combine_min_gap", c.breaks.combine_min_gap}}},
	    {"wavelet",
	     {{"enabled", c.wavelet.enabled},
	      {"family", c.wavelet.family},
	      {"levels", c.wavelet.levels},
	      {"padding", c.wavelet.padding}}},
	    {"window", {{"length", c.window}, {"stride", c.stride}}},
	    {"architecture", c.architecture},
	    {"model",
	     {{"hidden", c.hidden},
	      {"layers", c.layers},
	      {"channels", c.channels},
	      {"blocks", c.blocks},
	      {"kernel", c.kernel},
	      {"dropout", c.dropout}}},
	    {"training",
	     {{"learning_rate", c.training.adam.learning_rate},
	      {"beta1", c.training.adam.beta1},
	      {"beta2", c.training.adam.beta2},
	      {"epsilon", c.training.adam.epsilon},
	      {"batch_size", c.training.batch_size},
	      {"max_epochs", c.training.max_epochs},
	      {"patience", c.training.patience},
	      {"validation_fraction", c.training.validation_fraction}}},
	    {"seed", c.seed},
	    {"output_dir", c.output_dir},
	    {"regime_leakage", c.regime_leakage},
	    {"target_mode", c.target_mode},
	    {"checkpoint", c.checkpoint},
	    {"histogram_bins", c.histogram_bins},
	    {"reference_variant", c.reference_variant},
	    {"variants", variants},
	};
}

namespace detail {

/// Rejects keys absent from the default document so typos surface instead of being ignored.
inline void check_known_keys(const json &given, const json &defaults, const std::string &path) {
	if (!given.is_object() || !defaults.is_object()) {
		return;
	}
	for (const auto &[key, value] : given.items()) {
		const auto where = path.empty() ? key : path + "." + key;
		if (!defaults.contains(key)) {
			throw ConfigError("unknown config key '" + where + "'");
		}
		if (key == "variants") {
			if (!value.is_array()) {
				throw ConfigError("'variants' must be an array");
			}
			const auto variant_defaults = to_json(VariantSpec{});
			for (std::size_t i = 0; i < value.size(); ++i) {
				check_known_keys(value[i], variant_defaults, where + "[" + std::to_string(i) + "]");
			}
			continue;
		}
		check_known_keys(value, defaults.at(key), where);
	}
}

template <class T>
T get(const json &j, const char *key, const std::string &path) {
	try {
		return j.at(key).get<T>();
	} catch (const json::exception &) {
		throw ConfigError("config field '" + path + (path.empty() ? "" : ".") + key + "' has the wrong type");
	}
}

template <class T>
std::optional<T> get_optional(const json &j, const char *key, const std::string &path) {
	if (!j.contains(key) || j.at(key).is_null()) {
		return std::nullopt;
	}
	return get<T>(j, key, path);
}

} // namespace detail

/// Fills a RunConfig from a document already merged over the defaults, then validates it.
inline RunConfig from_json(const json &j) {
	using detail::get;
	RunConfig c;
	detail::check_known_keys(j, to_json(c), "");
	c.input = get<std::string>(j, "input", "");
	c.date_column = get<std::string>(j, "date_column", "");
	c.target = get<std::string>(j, "target", "");
	c.features = get<std::vector<std::string>>(j, "features", "");
	c.exclude = get<std::vector<std::string>>(j, "exclude", "");
	c.train_fraction = get<double>(j.at("split"), "train_fraction", "split");

	const auto &b = j.at("breaks");
	c.breaks.method = get<std::string>(b, "method", "breaks");
	c.breaks.cost = get<std::string>(b, "cost", "breaks");
	c.breaks.penalty = detail::get_optional<double>(b, "penalty", "breaks");
	c.breaks.penalty_factor = get<double>(b, "penalty_factor", "breaks");
	c.breaks.min_segment = detail::get_optional<std::size_t>(b, "min_segment", "breaks");
	c.breaks.max_breaks = get<std::size_t>(b, "max_breaks", "breaks");
	c.breaks.trim = get<double>(b, "trim", "breaks");
	c.breaks.significance = get<double>(b, "significance", "breaks");
	c.breaks.icss_critical = get<double>(b, "icss_critical", "breaks");
	c.breaks.icss_min_segment = get<std::size_t>(b, "icss_min_segment", "breaks");
	c.breaks.icss_on_differences = get<bool>(b, "icss_on_differences", "breaks");
	c.breaks.combine_min_gap = get<std::size_t>(b, "combine_min_gap", "breaks");

	const auto &w = j.at("wavelet");
	c.wavelet.enabled = get<bool>(w, "enabled", "wavelet");
	c.wavelet.family = get<std::string>(w, "family", "wavelet");
	c.wavelet.levels = get<std::size_t>(w, "levels", "wavelet");
	c.wavelet.padding = get<std::string>(w, "padding", "wavelet");

	c.window = get<std::size_t>(j.at("window"), "length", "window");
	c.stride = get<std::size_t>(j.at("window"), "stride", "window");
	c.architecture = get<std::string>(j, "architecture", "");

	const auto &m = j.at("model");
	c.hidden = get<std::size_t>(m, "hidden", "model");
	c.layers = get<std::size_t>(m, "layers", "model");
	c.channels = get<std::size_t>(m, "channels", "model");
	c.blocks = get<std::size_t>(m, "blocks", "model");
	c.kernel = get<std::size_t>(m, "kernel", "model");
	c.dropout = get<double>(m, "dropout", "model");

	const auto &t = j.at("training");
	c.training.adam.learning_rate = get<double>(t, "learning_rate", "training");
	c.training.adam.beta1 = get<double>(t, "beta1", "training");
	c.training.adam.beta2 = get<double>(t, "beta2", "training");
	c.training.adam.epsilon = get<double>(t, "epsilon", "training");
	c.training.batch_size = get<std::size_t>(t, "batch_size", "training");
	c.training.max_epochs = get<std::size_t>(t, "max_epochs", "training");
	c.training.patience = get<std::size_t>(t, "patience", "training");
	c.training.validation_fraction = get<double>(t, "validation_fraction", "training");

	c.seed = get<std::uint64_t>(j, "seed", "");
	c.training.seed = c.seed;
	c.output_dir = get<std::string>(j, "output_dir", "");
	c.regime_leakage = get<std::string>(j, "regime_leakage", "");
	c.target_mode = get<std::string>(j, "target_mode", "");
	c.checkpoint = get<std::string>(j, "checkpoint", "");
	c.histogram_bins = get<std::size_t>(j, "histogram_bins", "");
	c.reference_variant = get<std::string>(j, "reference_variant", "");

	c.variants.clear();
	const auto variant_defaults = detail::to_json(VariantSpec{});
	for (const auto &v : j.at("variants")) {
		auto merged = variant_defaults;
		merged.merge_patch(v);
		VariantSpec spec;
		spec.name = get<std::string>(merged, "name", "variants");
		spec.architecture = get<std::string>(merged, "architecture", "variants");
		spec.breaks = get<std::string>(merged, "breaks", "variants");
		spec.denoise = get<bool>(merged, "denoise", "variants");
		if (spec.name.empty()) {
			spec.name = spec.architecture;
		}
		c.variants.push_back(std::move(spec));
	}
	return c;
}

/// Checks value ranges and keywords; throws ConfigError with the offending field.
inline void validate(const RunConfig &c) {
	auto fail = [](const std::string &msg) { throw ConfigError(msg); };
	if (c.target.empty() || c.date_column.empty()) {
		fail("target and date_column must be non-empty");
	}
	if (!(c.train_fraction > 0.0 && c.train_fraction < 1.0)) {
		fail("split.train_fraction must lie in (0, 1)");
	}
	check_break_method(c.breaks.method, false);
	try {
		breaks::parse_cost_kind(c.breaks.cost);
		wavelet::parse_family(c.wavelet.family);
		wavelet::parse_padding(c.wavelet.padding);
	} catch (const std::invalid_argument &e) {
		fail(e.what());
	}
	if (c.breaks.penalty && !(*c.breaks.penalty >= 0.0)) {
		fail("breaks.penalty must be non-negative");
	}
	if (!(c.breaks.penalty_factor > 0.0)) {
		fail("breaks.penalty_factor must be positive");
	}
	if (!(c.breaks.trim > 0.0 && c.breaks.trim < 0.5)) {
		fail("breaks.trim must lie in (0, 0.5)");
	}
	if (!(c.breaks.significance > 0.0 && c.breaks.significance < 1.0)) {
		fail("breaks.significance must lie in (0, 1)");
	}
	if (!(c.breaks.icss_critical > 0.0)) {
		fail("breaks.icss_critical must be positive");
	}
	if (c.wavelet.levels == 0) {
		fail("wavelet.levels must be at least 1");
	}
	if (c.window == 0 || c.stride == 0) {
		fail("window.length and window.stride must be positive");
	}
	parse_architecture_choice(c.architecture);
	if (c.hidden == 0 || c.layers == 0 || c.channels == 0 || c.blocks == 0 || c.kernel == 0) {
		fail("model sizes must be positive");
	}
	if (!(c.dropout >= 0.0 && c.dropout < 1.0)) {
		fail("model.dropout must lie in [0, 1)");
	}
	try {
		c.training.validate();
	} catch (const std::invalid_argument &e) {
		fail(std::string("training: ") + e.what());
	}
	if (c.regime_leakage != "frozen" && c.regime_leakage != "full") {
		fail("regime_leakage must be 'frozen' or 'full'");
	}
	if (c.target_mode != "denoised" && c.target_mode != "raw") {
		fail("target_mode must be 'denoised' or 'raw'");
	}
	if (c.histogram_bins == 0) {
		fail("histogram_bins must be positive");
	}
	if (c.variants.empty()) {
		fail("variants must list at least one entry");
	}
	std::vector<std::string> names;
	for (const auto &v : c.variants) {
		parse_architecture_choice(v.architecture);
		check_break_method(v.breaks, true);
		if (std::find(names.begin(), names.end(), v.name) != names.end()) {
			fail("duplicate variant name '" + v.name + "'");
		}
		names.push_back(v.name);
	}
	if (!c.reference_variant.empty() && std::find(names.begin(), names.end(), c.reference_variant) == names.end()) {
		fail("reference_variant '" + c.reference_variant + "' is not a listed variant");
	}
}

/// Parses an override value: JSON literals (numbers, booleans, null, arrays, objects, quoted
/// strings) are taken as such; anything else is a bare string.
inline json parse_override_value(const std::string &text) {
	try {
		return json::parse(text);
	} catch (const json::exception &) {
		return json(text);
	}
}

/// Applies `a.b.c = value` to a config document. The path must already exist.
inline void apply_override(json &doc, const std::string &dotted, const std::string &value) {
	if (dotted.empty()) {
		throw ConfigError("empty override key");
	}
	json *node = &doc;
	std::string_view rest = dotted;
	while (true) {
		const auto dot = rest.find('.');
		const std::string key(rest.substr(0, dot));
		if (!node->is_object() || !node->contains(key)) {
			throw ConfigError("unknown config key '" + dotted + "'");
		}
		node = &(*node)[key];
		if (dot == std::string_view::npos) {
			break;
		}
		rest.remove_prefix(dot + 1);
	}
	auto parsed = parse_override_value(value);
	// Keep strings as strings even when they look like numbers (e.g. a column named "2020").
	if (node->is_string() && !parsed.is_string()) {
		parsed = json(value);
	}
	*node = std::move(parsed);
}

/// Defaults, overlaid by the config file (if any), overlaid by `key=value` overrides.
inline RunConfig load_config(const std::string &path, const std::vector<std::pair<std::string, std::string>> &overrides = {}) {
	json doc = to_json(RunConfig{});
	if (!path.empty()) {
		std::ifstream in(path);
		if (!in) {
			throw ConfigError("cannot open config file '" + path + "'");
		}
		json file;
		try {
			in >> file;
		} catch (const json::exception &e) {
			throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
		}
		if (!file.is_object()) {
			throw ConfigError("config file '" + path + "' must hold a JSON object");
		}
		detail::check_known_keys(file, doc, "");
		doc.merge_patch(file);
		// merge_patch drops keys set to null; restore nullable defaults.
		for (const char *key : {"penalty", "min_segment"}) {
			if (!doc["breaks"].contains(key)) {
				doc["breaks"][key] = nullptr;
			}
		}
	}
	for (const auto &[key, value] : overrides) {
		apply_override(doc, key, value);
	}
	auto config = from_json(doc);
	validate(config);
	return config;
}

} // namespace regimecast::pipeline
