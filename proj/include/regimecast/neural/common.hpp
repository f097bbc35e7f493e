#pragma once

#include <Eigen/Dense>

#include <cassert>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "regimecast/ingest.hpp"

namespace regimecast::neural {

using Matrix = Eigen::MatrixXd;
using ingest::ColumnStats;
using ingest::Scaler;
using ingest::WindowedDataset;
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits; platform independent unlike
/// std::uniform_real_distribution.
inline double uniform01(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform(Rng &rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

template <class T>
void shuffle(std::vector<T> &values, Rng &rng) {
	for (std::size_t i = values.size(); i > 1; --i) {
		const auto j = static_cast<std::size_t>(rng() % i);
		std::swap(values[i - 1], values[j]);
	}
}

inline void fill_uniform(Matrix &m, Rng &rng, double limit) {
	for (Eigen::Index j = 0; j < m.cols(); ++j) {
		for (Eigen::Index i = 0; i < m.rows(); ++i) {
			m(i, j) = uniform(rng, -limit, limit);
		}
	}
}

inline double glorot_limit(std::size_t fan_in, std::size_t fan_out) {
	return std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
}

/// A window batch in step-major layout: row t * batch + b holds sample b at step t.
struct SequenceBatch {
	Matrix data;
	std::size_t steps = 0;
	std::size_t batch = 0;

	std::size_t dim() const noexcept { return static_cast<std::size_t>(data.cols()); }

	auto step(std::size_t t) { return data.middleRows(static_cast<Eigen::Index>(t * batch), static_cast<Eigen::Index>(batch)); }
	auto step(std::size_t t) const {
		return data.middleRows(static_cast<Eigen::Index>(t * batch), static_cast<Eigen::Index>(batch));
	}
};

inline SequenceBatch make_batch(const WindowedDataset &ds, const std::vector<std::size_t> &indices) {
	const auto T = ds.window();
	const auto d = ds.dim();
	SequenceBatch out{Matrix(static_cast<Eigen::Index>(T * indices.size()), static_cast<Eigen::Index>(d)), T,
	                  indices.size()};
	for (std::size_t b = 0; b < indices.size(); ++b) {
		for (std::size_t t = 0; t < T; ++t) {
			const auto row = ds.inputs.row(indices[b], t);
			for (std::size_t k = 0; k < d; ++k) {
				out.data(static_cast<Eigen::Index>(t * indices.size() + b), static_cast<Eigen::Index>(k)) = row[k];
			}
		}
	}
	return out;
}

inline SequenceBatch make_batch(const WindowedDataset &ds, std::size_t begin, std::size_t end) {
	std::vector<std::size_t> indices(end - begin);
	std::iota(indices.begin(), indices.end(), begin);
	return make_batch(ds, indices);
}

inline Matrix make_targets(const WindowedDataset &ds, const std::vector<std::size_t> &indices) {
	Matrix y(static_cast<Eigen::Index>(indices.size()), 1);
	for (std::size_t b = 0; b < indices.size(); ++b) {
		y(static_cast<Eigen::Index>(b), 0) = ds.targets[indices[b]];
	}
	return y;
}

inline Matrix sigmoid(const Matrix &x) { return (1.0 + (-x.array()).exp()).inverse().matrix(); }
inline Matrix tanh(const Matrix &x) { return x.array().tanh().matrix(); }

/// Inverted dropout mask: entries are 0 with probability `rate`, else 1 / (1 - rate).
inline Matrix dropout_mask(Eigen::Index rows, Eigen::Index cols, double rate, Rng &rng) {
	Matrix mask(rows, cols);
	const double keep = 1.0 / (1.0 - rate);
	for (Eigen::Index j = 0; j < cols; ++j) {
		for (Eigen::Index i = 0; i < rows; ++i) {
			mask(i, j) = uniform01(rng) < rate ? 0.0 : keep;
		}
	}
	return mask;
}

inline void debug_check_finite([[maybe_unused]] const Matrix &m) { assert(m.allFinite()); }

/// Mean squared error scaled by `scale`, plus its gradient with respect to the predictions.
inline double mse_loss(const Matrix &predicted, const Matrix &target, double scale, Matrix *grad) {
	if (predicted.rows() != target.rows() || predicted.cols() != target.cols()) {
		throw std::invalid_argument("prediction/target shape mismatch");
	}
	const Matrix err = predicted - target;
	const double n = static_cast<double>(err.size());
	if (grad != nullptr) {
		*grad = (2.0 * scale / n) * err;
	}
	return scale * err.squaredNorm() / n;
}

// Parameter containers expose `visit(self, f)` calling f(name, matrix) for every tensor in a fixed
// order. The helpers below build on that.

template <class Params>
std::vector<Matrix *> tensors(Params &p) {
	std::vector<Matrix *> out;
	Params::visit(p, [&](const std::string &, Matrix &m) { out.push_back(&m); });
	return out;
}

template <class Params>
std::vector<const Matrix *> tensors(const Params &p) {
	std::vector<const Matrix *> out;
	Params::visit(p, [&](const std::string &, const Matrix &m) { out.push_back(&m); });
	return out;
}

template <class Params>
std::size_t parameter_count(const Params &p) {
	std::size_t n = 0;
	for (const auto *m : tensors(p)) {
		n += static_cast<std::size_t>(m->size());
	}
	return n;
}

template <class Params>
Params zeros_like(const Params &p) {
	Params out = p;
	for (auto *m : tensors(out)) {
		m->setZero();
	}
	return out;
}

template <class Params>
std::vector<double> flatten(const Params &p) {
	std::vector<double> out;
	out.reserve(parameter_count(p));
	for (const auto *m : tensors(p)) {
		out.insert(out.end(), m->data(), m->data() + m->size());
	}
	return out;
}

template <class Params>
void unflatten(Params &p, const std::vector<double> &values) {
	if (values.size() != parameter_count(p)) {
		throw std::invalid_argument("flat parameter vector has " + std::to_string(values.size()) +
		                            " entries, expected " + std::to_string(parameter_count(p)));
	}
	std::size_t offset = 0;
	for (auto *m : tensors(p)) {
		std::copy(values.begin() + static_cast<std::ptrdiff_t>(offset),
		          values.begin() + static_cast<std::ptrdiff_t>(offset + static_cast<std::size_t>(m->size())), m->data());
		offset += static_cast<std::size_t>(m->size());
	}
}

template <class Params>
void scale_in_place(Params &p, double factor) {
	for (auto *m : tensors(p)) {
		*m *= factor;
	}
}

/// Dense regression head mapping the final hidden state to one scalar.
struct Head {
	Matrix weight; // h x 1
	Matrix bias;   // 1 x 1

	Matrix forward(const Matrix &h) const { return (h * weight).rowwise() + bias.row(0); }
};

inline void check_batch(const SequenceBatch &x, std::size_t expected_dim) {
	if (x.dim() != expected_dim) {
		throw std::invalid_argument("input dimension " + std::to_string(x.dim()) + " does not match model input " +
		                            std::to_string(expected_dim));
	}
	if (x.steps == 0 || x.batch == 0 || static_cast<std::size_t>(x.data.rows()) != x.steps * x.batch) {
		throw std::invalid_argument("malformed sequence batch");
	}
}

} // namespace regimecast::neural
