#pragma once

#include <string>
#include <utility>
#include <vector>

#include "regimecast/neural/common.hpp"

namespace regimecast::neural {

/// One GRU layer with blocks packed as update, reset, candidate: W is in x 3h, U is h x 3h,
/// b is 1 x 3h. The reset gate multiplies the previous state before the candidate's recurrent
/// product.
struct GruLayer {
	Matrix W;
	Matrix U;
	Matrix b;

	Eigen::Index hidden() const noexcept { return U.rows(); }
	Eigen::Index input() const noexcept { return W.rows(); }
};

struct GruConfig {
	std::size_t input_dim = 1;
	std::size_t hidden = 128;
	std::size_t layers = 2;
	double dropout = 0.2;

	void validate() const {
		if (input_dim == 0 || hidden == 0 || layers == 0) {
			throw std::invalid_argument("GRU needs positive input dim, hidden size and layer count");
		}
		if (!(dropout >= 0.0 && dropout < 1.0)) {
			throw std::invalid_argument("dropout must lie in [0, 1)");
		}
	}
};

struct GruParams {
	std::vector<GruLayer> layers;
	Head head;

	template <class Self, class F>
	static void visit(Self &p, F &&f) {
		for (std::size_t l = 0; l < p.layers.size(); ++l) {
			const auto prefix = "gru" + std::to_string(l) + ".";
			f(prefix + "W", p.layers[l].W);
			f(prefix + "U", p.layers[l].U);
			f(prefix + "b", p.layers[l].b);
		}
		f("head.weight", p.head.weight);
		f("head.bias", p.head.bias);
	}
};

inline Matrix gru_cell_forward(const Matrix &z, const Matrix &h_prev, const GruLayer &layer) {
	const auto h = layer.hidden();
	if (layer.W.cols() != 3 * h || layer.U.cols() != 3 * h || layer.b.rows() != 1 || layer.b.cols() != 3 * h ||
	    z.cols() != layer.input() || h_prev.cols() != h || h_prev.rows() != z.rows()) {
		throw std::invalid_argument("GRU cell shape mismatch");
	}
	const Matrix xw = ((z * layer.W).rowwise() + layer.b.row(0)).eval();
	const Matrix u = sigmoid(xw.leftCols(h) + h_prev * layer.U.leftCols(h));
	const Matrix r = sigmoid(xw.middleCols(h, h) + h_prev * layer.U.middleCols(h, h));
	const Matrix n = tanh(xw.rightCols(h) + r.cwiseProduct(h_prev) * layer.U.rightCols(h));
	return (1.0 - u.array()).matrix().cwiseProduct(h_prev) + u.cwiseProduct(n);
}

class GruModel {
public:
	using Params = GruParams;

	GruModel() = default;
	GruModel(GruConfig config, GruParams params) : config_(config), params_(std::move(params)) { check_shapes(); }

	static GruModel init(const GruConfig &config, Rng &rng) {
		config.validate();
		const auto h = static_cast<Eigen::Index>(config.hidden);
		GruParams p;
		for (std::size_t l = 0; l < config.layers; ++l) {
			const auto in = l == 0 ? static_cast<Eigen::Index>(config.input_dim) : h;
			GruLayer layer{Matrix(in, 3 * h), Matrix(h, 3 * h), Matrix::Zero(1, 3 * h)};
			fill_uniform(layer.W, rng, glorot_limit(static_cast<std::size_t>(in), static_cast<std::size_t>(3 * h)));
			fill_uniform(layer.U, rng, 1.0 / std::sqrt(static_cast<double>(h)));
			p.layers.push_back(std::move(layer));
		}
		p.head.weight = Matrix(h, 1);
		fill_uniform(p.head.weight, rng, glorot_limit(static_cast<std::size_t>(h), 1));
		p.head.bias = Matrix::Zero(1, 1);
		return GruModel(config, std::move(p));
	}

	const GruConfig &config() const noexcept { return config_; }
	const GruParams &params() const noexcept { return params_; }
	GruParams &params() noexcept { return params_; }
	std::size_t input_dim() const noexcept { return config_.input_dim; }

	Matrix predict(const SequenceBatch &x) const {
		Cache cache;
		return forward(x, nullptr, cache);
	}

	double loss_and_gradient(const SequenceBatch &x, const Matrix &y, double scale, GruParams &grad,
	                         Rng *dropout_rng) const {
		Cache cache;
		const Matrix yhat = forward(x, dropout_rng, cache);
		Matrix dy;
		const double loss = mse_loss(yhat, y, scale, &dy);
		backward(x, cache, dy, grad);
		return loss;
	}

private:
	struct LayerCache {
		Matrix gates; // T*B x 3h: update, reset, candidate (post-activation)
		Matrix h;
		Matrix mask;
		Matrix out;
	};
	struct Cache {
		std::vector<LayerCache> layers;
	};

	void check_shapes() const {
		config_.validate();
		if (params_.layers.size() != config_.layers) {
			throw std::invalid_argument("GRU layer count mismatch");
		}
		const auto h = static_cast<Eigen::Index>(config_.hidden);
		for (std::size_t l = 0; l < params_.layers.size(); ++l) {
			const auto &layer = params_.layers[l];
			const auto in = l == 0 ? static_cast<Eigen::Index>(config_.input_dim) : h;
			if (layer.W.rows() != in || layer.W.cols() != 3 * h || layer.U.rows() != h || layer.U.cols() != 3 * h ||
			    layer.b.rows() != 1 || layer.b.cols() != 3 * h) {
				throw std::invalid_argument("GRU layer " + std::to_string(l) + " has inconsistent shapes");
			}
		}
		if (params_.head.weight.rows() != h || params_.head.weight.cols() != 1 || params_.head.bias.size() != 1) {
			throw std::invalid_argument("GRU head has inconsistent shapes");
		}
	}

	Matrix forward(const SequenceBatch &x, Rng *dropout_rng, Cache &cache) const {
		check_batch(x, config_.input_dim);
		const auto T = x.steps;
		const auto B = static_cast<Eigen::Index>(x.batch);
		const auto h = static_cast<Eigen::Index>(config_.hidden);
		const bool use_dropout = dropout_rng != nullptr && config_.dropout > 0.0;
		cache.layers.resize(params_.layers.size());
		const Matrix *input = &x.data;
		for (std::size_t l = 0; l < params_.layers.size(); ++l) {
			const auto &layer = params_.layers[l];
			auto &lc = cache.layers[l];
			const auto rows = static_cast<Eigen::Index>(T) * B;
			lc.gates = ((*input) * layer.W).rowwise() + layer.b.row(0);
			lc.h.resize(rows, h);
			Matrix h_prev = Matrix::Zero(B, h);
			for (std::size_t t = 0; t < T; ++t) {
				const auto r0 = static_cast<Eigen::Index>(t) * B;
				auto g = lc.gates.middleRows(r0, B);
				g.leftCols(2 * h) = sigmoid(g.leftCols(2 * h) + h_prev * layer.U.leftCols(2 * h));
				const Matrix rh = g.middleCols(h, h).cwiseProduct(h_prev);
				g.rightCols(h) = tanh(g.rightCols(h) + rh * layer.U.rightCols(h));
				lc.h.middleRows(r0, B) = (1.0 - g.leftCols(h).array()).matrix().cwiseProduct(h_prev) +
				                         g.leftCols(h).cwiseProduct(g.rightCols(h));
				h_prev = lc.h.middleRows(r0, B);
			}
			if (use_dropout) {
				lc.mask = dropout_mask(rows, h, config_.dropout, *dropout_rng);
				lc.out = lc.h.cwiseProduct(lc.mask);
			} else {
				lc.mask.resize(0, 0);
				lc.out = lc.h;
			}
			debug_check_finite(lc.out);
			input = &lc.out;
		}
		const auto last = static_cast<Eigen::Index>(T - 1) * B;
		return params_.head.forward(input->middleRows(last, B));
	}

	void backward(const SequenceBatch &x, const Cache &cache, const Matrix &dy, GruParams &grad) const {
		const auto T = x.steps;
		const auto B = static_cast<Eigen::Index>(x.batch);
		const auto h = static_cast<Eigen::Index>(config_.hidden);
		const auto rows = static_cast<Eigen::Index>(T) * B;
		const auto last = static_cast<Eigen::Index>(T - 1) * B;
		if (grad.layers.size() != params_.layers.size()) {
			grad = zeros_like(params_);
		}

		const auto &top = cache.layers.back();
		grad.head.weight = top.out.middleRows(last, B).transpose() * dy;
		grad.head.bias = dy.colwise().sum();

		Matrix d_out = Matrix::Zero(rows, h);
		d_out.middleRows(last, B) = dy * params_.head.weight.transpose();

		for (std::size_t l = params_.layers.size(); l-- > 0;) {
			const auto &layer = params_.layers[l];
			const auto &lc = cache.layers[l];
			auto &gl = grad.layers[l];
			const Matrix &input = l == 0 ? x.data : cache.layers[l - 1].out;
			const Matrix d_h_seq = lc.mask.size() > 0 ? Matrix(d_out.cwiseProduct(lc.mask)) : d_out;
			const auto Uzr = layer.U.leftCols(2 * h);
			const auto Un = layer.U.rightCols(h);
			Matrix d_pre(rows, 3 * h);
			Matrix dh_next = Matrix::Zero(B, h);
			gl.U.setZero(h, 3 * h);
			for (std::size_t t = T; t-- > 0;) {
				const auto r0 = static_cast<Eigen::Index>(t) * B;
				const auto g = lc.gates.middleRows(r0, B);
				const auto u = g.leftCols(h).array();
				const auto r = g.middleCols(h, h).array();
				const auto n = g.rightCols(h).array();
				const Matrix h_prev = t == 0 ? Matrix::Zero(B, h) : Matrix(lc.h.middleRows(r0 - B, B));
				const Matrix dh = d_h_seq.middleRows(r0, B) + dh_next;
				auto dz = d_pre.middleRows(r0, B);
				// Candidate pre-activation, then back through the reset-scaled state.
				dz.rightCols(h) = (dh.array() * u * (1.0 - n.square())).matrix();
				const Matrix d_rh = dz.rightCols(h) * Un.transpose();
				dz.leftCols(h) = (dh.array() * (n - h_prev.array()) * u * (1.0 - u)).matrix();
				dz.middleCols(h, h) = (d_rh.array() * h_prev.array() * r * (1.0 - r)).matrix();
				const Matrix rh = (r * h_prev.array()).matrix();
				gl.U.rightCols(h).noalias() += rh.transpose() * dz.rightCols(h);
				gl.U.leftCols(2 * h).noalias() += h_prev.transpose() * dz.leftCols(2 * h);
				dh_next = (dh.array() * (1.0 - u) + d_rh.array() * r).matrix();
				dh_next.noalias() += dz.leftCols(2 * h) * Uzr.transpose();
			}
			gl.W.noalias() = input.transpose() * d_pre;
			gl.b = d_pre.colwise().sum();
			if (l > 0) {
				d_out.noalias() = d_pre * layer.W.transpose();
			}
		}
	}

	GruConfig config_;
	GruParams params_;
};

} // namespace regimecast::neural
