#pragma once

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "regimecast/error.hpp"
#include "regimecast/neural/trainer.hpp"

namespace regimecast::neural {

inline constexpr int checkpoint_format_version = 1;

inline nlohmann::json to_json(const ColumnStats &c) {
	return {{"name", c.name}, {"mean", c.mean}, {"stddev", c.stddev}, {"degenerate", c.degenerate}};
}

inline ColumnStats column_stats_from_json(const nlohmann::json &j) {
	return {j.at("name").get<std::string>(), j.at("mean").get<double>(), j.at("stddev").get<double>(),
	        j.at("degenerate").get<bool>()};
}

inline nlohmann::json to_json(const Scaler &s) {
	nlohmann::json columns = nlohmann::json::array();
	if (s.fitted()) {
		for (const auto &c : s.columns()) {
			columns.push_back(to_json(c));
		}
	}
	return {{"fitted", s.fitted()}, {"columns", columns}};
}

inline Scaler scaler_from_json(const nlohmann::json &j) {
	if (!j.at("fitted").get<bool>()) {
		return {};
	}
	std::vector<ColumnStats> columns;
	for (const auto &c : j.at("columns")) {
		columns.push_back(column_stats_from_json(c));
	}
	return Scaler(std::move(columns));
}

inline nlohmann::json to_json(const ModelSpec &s) {
	return {{"architecture", to_string(s.architecture)},
	        {"input_dim", s.input_dim},
	        {"hidden", s.hidden},
	        {"layers", s.layers},
	        {"channels", s.channels},
	        {"blocks", s.blocks},
	        {"kernel", s.kernel},
	        {"dropout", s.dropout}};
}

inline ModelSpec model_spec_from_json(const nlohmann::json &j) {
	ModelSpec s;
	s.architecture = parse_architecture(j.at("architecture").get<std::string>());
	s.input_dim = j.at("input_dim").get<std::size_t>();
	s.hidden = j.at("hidden").get<std::size_t>();
	s.layers = j.at("layers").get<std::size_t>();
	s.channels = j.at("channels").get<std::size_t>();
	s.blocks = j.at("blocks").get<std::size_t>();
	s.kernel = j.at("kernel").get<std::size_t>();
	s.dropout = j.at("dropout").get<double>();
	return s;
}

inline nlohmann::json to_json(const TrainingConfig &c) {
	return {{"learning_rate", c.adam.learning_rate},
	        {"beta1", c.adam.beta1},
	        {"beta2", c.adam.beta2},
	        {"epsilon", c.adam.epsilon},
	        {"batch_size", c.batch_size},
	        {"max_epochs", c.max_epochs},
	        {"patience", c.patience},
	        {"validation_fraction", c.validation_fraction},
	        {"seed", c.seed},
	        {"loss_scale", c.loss_scale}};
}

inline TrainingConfig training_config_from_json(const nlohmann::json &j) {
	TrainingConfig c;
	c.adam.learning_rate = j.at("learning_rate").get<double>();
	c.adam.beta1 = j.at("beta1").get<double>();
	c.adam.beta2 = j.at("beta2").get<double>();
	c.adam.epsilon = j.at("epsilon").get<double>();
	c.batch_size = j.at("batch_size").get<std::size_t>();
	c.max_epochs = j.at("max_epochs").get<std::size_t>();
	c.patience = j.at("patience").get<std::size_t>();
	c.validation_fraction = j.at("validation_fraction").get<double>();
	c.seed = j.at("seed").get<std::uint64_t>();
	c.loss_scale = j.at("loss_scale").get<double>();
	return c;
}

inline nlohmann::json history_to_json(const std::vector<EpochRecord> &history) {
	nlohmann::json out = nlohmann::json::array();
	for (std::size_t e = 0; e < history.size(); ++e) {
		out.push_back({{"epoch", e + 1}, {"train_mse", history[e].train_mse}, {"val_mse", history[e].val_mse}});
	}
	return out;
}

/// Self-describing checkpoint. Parameters are stored by name with shapes and column-major data.
/// Wall-clock time is deliberately left out so identical runs give identical bytes.
inline nlohmann::json to_json(const TrainedModel &m) {
	nlohmann::json params = nlohmann::json::object();
	std::visit(
	    [&](const auto &model) {
		    using Params = typename std::decay_t<decltype(model)>::Params;
		    Params::visit(model.params(), [&](const std::string &name, const Matrix &w) {
			    params[name] = {{"rows", w.rows()},
			                    {"cols", w.cols()},
			                    {"data", std::vector<double>(w.data(), w.data() + w.size())}};
		    });
	    },
	    m.model);
	return {{"format_version", checkpoint_format_version},
	        {"model", to_json(m.spec)},
	        {"training", to_json(m.training)},
	        {"seed", m.seed},
	        {"best_epoch", m.best_epoch},
	        {"target_scaling", to_json(m.target_scaling)},
	        {"scaler", to_json(m.scaler)},
	        {"history", history_to_json(m.history)},
	        {"parameters", params}};
}

inline TrainedModel trained_model_from_json(const nlohmann::json &j) {
	const auto version = j.at("format_version").get<int>();
	if (version != checkpoint_format_version) {
		throw DataError("unsupported checkpoint format version " + std::to_string(version));
	}
	TrainedModel m;
	m.spec = model_spec_from_json(j.at("model"));
	m.training = training_config_from_json(j.at("training"));
	m.seed = j.at("seed").get<std::uint64_t>();
	m.best_epoch = j.at("best_epoch").get<std::size_t>();
	m.target_scaling = column_stats_from_json(j.at("target_scaling"));
	m.scaler = scaler_from_json(j.at("scaler"));
	for (const auto &e : j.at("history")) {
		m.history.push_back({e.at("train_mse").get<double>(), e.at("val_mse").get<double>()});
	}
	Rng rng(0);
	m.model = make_model(m.spec, rng);
	const auto &params = j.at("parameters");
	std::size_t seen = 0;
	std::visit(
	    [&](auto &model) {
		    using Params = typename std::decay_t<decltype(model)>::Params;
		    Params::visit(model.params(), [&](const std::string &name, Matrix &w) {
			    if (!params.contains(name)) {
				    throw DataError("checkpoint is missing parameter '" + name + "'");
			    }
			    const auto &p = params.at(name);
			    const auto data = p.at("data").get<std::vector<double>>();
			    if (p.at("rows").get<Eigen::Index>() != w.rows() || p.at("cols").get<Eigen::Index>() != w.cols() ||
			        static_cast<Eigen::Index>(data.size()) != w.size()) {
				    throw DataError("checkpoint parameter '" + name + "' has the wrong shape");
			    }
			    std::copy(data.begin(), data.end(), w.data());
			    ++seen;
		    });
	    },
	    m.model);
	if (seen != params.size()) {
		throw DataError("checkpoint has parameters the model does not use");
	}
	return m;
}

inline void save_checkpoint(const TrainedModel &m, const std::string &path) {
	std::ofstream out(path);
	if (!out) {
		throw DataError("cannot write checkpoint '" + path + "'");
	}
	out << to_json(m).dump(1, '\t') << '\n';
}

inline TrainedModel load_checkpoint(const std::string &path) {
	std::ifstream in(path);
	if (!in) {
		throw DataError("cannot open checkpoint '" + path + "'");
	}
	nlohmann::json j;
	try {
		in >> j;
	} catch (const nlohmann::json::exception &e) {
		throw DataError("checkpoint '" + path + "' is not valid JSON: " + e.what());
	}
	try {
		return trained_model_from_json(j);
	} catch (const nlohmann::json::exception &e) {
		throw DataError("checkpoint '" + path + "' is malformed: " + e.what());
	}
}

} // namespace regimecast::neural
