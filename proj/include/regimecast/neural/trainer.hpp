#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "regimecast/ingest.hpp"
#include "regimecast/neural/adam.hpp"
#include "regimecast/neural/common.hpp"
#include "regimecast/neural/gru.hpp"
#include "regimecast/neural/lstm.hpp"
#include "regimecast/neural/tcn.hpp"

namespace regimecast::neural {

enum class Architecture { Lstm, Gru, Tcn };

inline std::string_view to_string(Architecture a) {
	switch (a) {
	case Architecture::Lstm:
		return "lstm";
	case Architecture::Gru:
		return "gru";
	case Architecture::Tcn:
		return "tcn";
	}
	return "unknown";
}

inline Architecture parse_architecture(std::string_view name) {
	if (name == "lstm" || name == "LSTM") {
		return Architecture::Lstm;
	}
	if (name == "gru" || name == "GRU") {
		return Architecture::Gru;
	}
	if (name == "tcn" || name == "TCN") {
		return Architecture::Tcn;
	}
	throw std::invalid_argument("unknown architecture '" + std::string(name) + "' (expected lstm, gru, tcn)");
}

/// Shape hyperparameters for any of the three architectures; fields irrelevant to the chosen one
/// are ignored.
struct ModelSpec {
	Architecture architecture = Architecture::Lstm;
	std::size_t input_dim = 1;
	std::size_t hidden = 128;
	std::size_t layers = 2;
	std::size_t channels = 64;
	std::size_t blocks = 4;
	std::size_t kernel = 3;
	double dropout = 0.2;

	LstmConfig lstm() const { return {input_dim, hidden, layers, dropout}; }
	GruConfig gru() const { return {input_dim, hidden, layers, dropout}; }
	TcnConfig tcn() const { return {input_dim, channels, blocks, kernel, dropout}; }
};

using AnyModel = std::variant<LstmModel, GruModel, TcnModel>;

inline AnyModel make_model(const ModelSpec &spec, Rng &rng) {
	switch (spec.architecture) {
	case Architecture::Lstm:
		return LstmModel::init(spec.lstm(), rng);
	case Architecture::Gru:
		return GruModel::init(spec.gru(), rng);
	case Architecture::Tcn:
		return TcnModel::init(spec.tcn(), rng);
	}
	throw std::invalid_argument("unknown architecture");
}

inline std::size_t input_dim(const AnyModel &model) {
	return std::visit([](const auto &m) { return m.input_dim(); }, model);
}

struct TrainingConfig {
	AdamConfig adam;
	std::size_t batch_size = 64;
	std::size_t max_epochs = 50;
	std::size_t patience = 10;
	double validation_fraction = 0.10;
	std::uint64_t seed = 42;
	double loss_scale = 1.0;

	void validate() const {
		adam.validate();
		if (batch_size == 0 || max_epochs == 0 || patience == 0) {
			throw std::invalid_argument("batch size, max epochs and patience must be positive");
		}
		if (patience > max_epochs) {
			throw std::invalid_argument("patience exceeds max epochs");
		}
		if (!(validation_fraction > 0.0 && validation_fraction < 1.0)) {
			throw std::invalid_argument("validation fraction must lie in (0, 1)");
		}
		if (!(loss_scale > 0.0) || !std::isfinite(loss_scale)) {
			throw std::invalid_argument("loss scale must be positive");
		}
	}
};

struct EpochRecord {
	double train_mse = 0.0;
	double val_mse = 0.0;

	bool operator==(const EpochRecord &) const = default;
};

struct TrainedModel {
	ModelSpec spec;
	AnyModel model;
	/// Maps model outputs back to original target units.
	ColumnStats target_scaling{"target", 0.0, 1.0, false};
	/// Input scaler the windows were built with (unfitted when inputs were not scaled).
	Scaler scaler;
	TrainingConfig training;
	std::vector<EpochRecord> history;
	std::size_t best_epoch = 0;
	double wall_seconds = 0.0;
	std::uint64_t seed = 0;

	Architecture architecture() const noexcept { return spec.architecture; }
	std::size_t input_dim() const { return neural::input_dim(model); }
};

namespace detail {

inline constexpr std::size_t inference_chunk = 512;
inline constexpr std::uint64_t shuffle_salt = 0x5DEECE66DULL;
inline constexpr std::uint64_t dropout_salt = 0x9E3779B97F4A7C15ULL;

} // namespace detail

/// Model outputs in the (scaled) units the model was trained on, one per sample.
template <class Model>
std::vector<double> predict_raw(const Model &model, const WindowedDataset &ds) {
	if (ds.size() > 0 && ds.dim() != model.input_dim()) {
		throw std::invalid_argument("dataset has " + std::to_string(ds.dim()) + " input columns, model expects " +
		                            std::to_string(model.input_dim()));
	}
	std::vector<double> out;
	out.reserve(ds.size());
	for (std::size_t begin = 0; begin < ds.size(); begin += detail::inference_chunk) {
		const auto end = std::min(ds.size(), begin + detail::inference_chunk);
		const Matrix y = model.predict(make_batch(ds, begin, end));
		for (Eigen::Index i = 0; i < y.rows(); ++i) {
			out.push_back(y(i, 0));
		}
	}
	return out;
}

inline std::vector<double> predict_raw(const AnyModel &model, const WindowedDataset &ds) {
	return std::visit([&](const auto &m) { return predict_raw(m, ds); }, model);
}

template <class Model>
double mean_squared_error(const Model &model, const WindowedDataset &ds) {
	const auto yhat = predict_raw(model, ds);
	double sum = 0.0;
	for (std::size_t i = 0; i < yhat.size(); ++i) {
		const double e = yhat[i] - ds.targets[i];
		sum += e * e;
	}
	return sum / static_cast<double>(yhat.size());
}

/// One-step predictions in original target units, aligned with ds.index_map.
inline std::vector<double> predict(const TrainedModel &trained, const WindowedDataset &ds) {
	auto out = predict_raw(trained.model, ds);
	for (auto &v : out) {
		v = trained.target_scaling.inverse(v);
	}
	return out;
}

inline std::size_t validation_count(std::size_t samples, double fraction) {
	return static_cast<std::size_t>(std::floor(static_cast<double>(samples) * fraction));
}

/// Trains on the leading windows and early-stops on the chronological tail. Returns the
/// best-validation snapshot.
inline TrainedModel train(const ModelSpec &spec_in, const WindowedDataset &ds, const TrainingConfig &config) {
	config.validate();
	const auto started = std::chrono::steady_clock::now();
	ModelSpec spec = spec_in;
	if (ds.size() == 0) {
		throw std::invalid_argument("cannot train on an empty dataset");
	}
	if (spec.input_dim != ds.dim()) {
		throw std::invalid_argument("model input dim " + std::to_string(spec.input_dim) +
		                            " does not match dataset dim " + std::to_string(ds.dim()));
	}
	const auto n_val = validation_count(ds.size(), config.validation_fraction);
	if (n_val == 0) {
		throw std::invalid_argument("validation split of " + std::to_string(ds.size()) +
		                            " samples is empty; need more data or a larger validation fraction");
	}
	const auto n_train = ds.size() - n_val;
	if (n_train == 0) {
		throw std::invalid_argument("validation split leaves no training samples");
	}
	const auto train_set = ds.subset(0, n_train);
	const auto val_set = ds.subset(n_train, ds.size());

	Rng init_rng(config.seed);
	Rng shuffle_rng(config.seed ^ detail::shuffle_salt);
	Rng dropout_rng(config.seed ^ detail::dropout_salt);

	TrainedModel result;
	result.spec = spec;
	result.model = make_model(spec, init_rng);
	result.training = config;
	result.seed = config.seed;

	std::visit(
	    [&](auto &model) {
		    using Model = std::decay_t<decltype(model)>;
		    using Params = typename Model::Params;
		    AdamState<Params> state(model.params());
		    Params grad = zeros_like(model.params());
		    Model best = model;
		    double best_val = std::numeric_limits<double>::infinity();
		    std::size_t stale = 0;
		    std::vector<std::size_t> order(n_train);
		    std::iota(order.begin(), order.end(), 0);

		    for (std::size_t epoch = 0; epoch < config.max_epochs; ++epoch) {
			    shuffle(order, shuffle_rng);
			    double loss_sum = 0.0;
			    for (std::size_t begin = 0; begin < n_train; begin += config.batch_size) {
				    const auto end = std::min(n_train, begin + config.batch_size);
				    const std::vector<std::size_t> idx(order.begin() + static_cast<std::ptrdiff_t>(begin),
				                                       order.begin() + static_cast<std::ptrdiff_t>(end));
				    const auto batch = make_batch(train_set, idx);
				    const auto y = make_targets(train_set, idx);
				    const double loss = model.loss_and_gradient(batch, y, config.loss_scale, grad, &dropout_rng);
				    loss_sum += loss * static_cast<double>(end - begin);
				    adam_step(model.params(), grad, state, config.adam);
			    }
			    EpochRecord record;
			    record.train_mse = loss_sum / static_cast<double>(n_train) / config.loss_scale;
			    record.val_mse = mean_squared_error(model, val_set);
			    if (!std::isfinite(record.val_mse)) {
				    throw std::runtime_error("training diverged: non-finite validation loss at epoch " +
				                             std::to_string(epoch + 1));
			    }
			    result.history.push_back(record);
			    if (record.val_mse < best_val) {
				    best_val = record.val_mse;
				    best = model;
				    result.best_epoch = epoch + 1;
				    stale = 0;
			    } else if (++stale >= config.patience) {
				    break;
			    }
		    }
		    result.model = std::move(best);
	    },
	    result.model);

	result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
	return result;
}

} // namespace regimecast::neural
