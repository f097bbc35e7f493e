#pragma once

#include <string>
#include <utility>
#include <vector>

#include "regimecast/neural/common.hpp"

namespace regimecast::neural {

/// One LSTM layer with gate blocks packed column-wise in the order forget, input, candidate, output:
/// W is in x 4h, U is h x 4h, b is 1 x 4h.
struct LstmLayer {
	Matrix W;
	Matrix U;
	Matrix b;

	Eigen::Index hidden() const noexcept { return U.rows(); }
	Eigen::Index input() const noexcept { return W.rows(); }
};

struct LstmConfig {
	std::size_t input_dim = 1;
	std::size_t hidden = 128;
	std::size_t layers = 2;
	double dropout = 0.2;

	void validate() const {
		if (input_dim == 0 || hidden == 0 || layers == 0) {
			throw std::invalid_argument("LSTM needs positive input dim, hidden size and layer count");
		}
		if (!(dropout >= 0.0 && dropout < 1.0)) {
			throw std::invalid_argument("dropout must lie in [0, 1)");
		}
	}
};

struct LstmParams {
	std::vector<LstmLayer> layers;
	Head head;

	template <class Self, class F>
	static void visit(Self &p, F &&f) {
		for (std::size_t l = 0; l < p.layers.size(); ++l) {
			const auto prefix = "lstm" + std::to_string(l) + ".";
			f(prefix + "W", p.layers[l].W);
			f(prefix + "U", p.layers[l].U);
			f(prefix + "b", p.layers[l].b);
		}
		f("head.weight", p.head.weight);
		f("head.bias", p.head.bias);
	}
};

struct LstmStep {
	Matrix h;
	Matrix c;
};

/// Single cell update for a batch of row vectors.
inline LstmStep lstm_cell_forward(const Matrix &z, const Matrix &h_prev, const Matrix &c_prev, const LstmLayer &layer) {
	const auto h = layer.hidden();
	if (layer.W.cols() != 4 * h || layer.U.cols() != 4 * h || layer.b.rows() != 1 || layer.b.cols() != 4 * h ||
	    z.cols() != layer.input() || h_prev.cols() != h || c_prev.cols() != h || h_prev.rows() != z.rows() ||
	    c_prev.rows() != z.rows()) {
		throw std::invalid_argument("LSTM cell shape mismatch");
	}
	const Matrix pre = ((z * layer.W + h_prev * layer.U).rowwise() + layer.b.row(0)).eval();
	const Matrix f = sigmoid(pre.leftCols(h));
	const Matrix i = sigmoid(pre.middleCols(h, h));
	const Matrix a = tanh(pre.middleCols(2 * h, h));
	const Matrix o = sigmoid(pre.rightCols(h));
	LstmStep out;
	out.c = f.cwiseProduct(c_prev) + i.cwiseProduct(a);
	out.h = o.cwiseProduct(tanh(out.c));
	return out;
}

class LstmModel {
public:
	using Params = LstmParams;

	LstmModel() = default;
	LstmModel(LstmConfig config, LstmParams params) : config_(config), params_(std::move(params)) { check_shapes(); }

	static LstmModel init(const LstmConfig &config, Rng &rng) {
		config.validate();
		const auto h = static_cast<Eigen::Index>(config.hidden);
		LstmParams p;
		for (std::size_t l = 0; l < config.layers; ++l) {
			const auto in = l == 0 ? static_cast<Eigen::Index>(config.input_dim) : h;
			LstmLayer layer{Matrix(in, 4 * h), Matrix(h, 4 * h), Matrix::Zero(1, 4 * h)};
			fill_uniform(layer.W, rng, glorot_limit(static_cast<std::size_t>(in), static_cast<std::size_t>(4 * h)));
			fill_uniform(layer.U, rng, 1.0 / std::sqrt(static_cast<double>(h)));
			layer.b.leftCols(h).setOnes();
			p.layers.push_back(std::move(layer));
		}
		p.head.weight = Matrix(h, 1);
		fill_uniform(p.head.weight, rng, glorot_limit(static_cast<std::size_t>(h), 1));
		p.head.bias = Matrix::Zero(1, 1);
		return LstmModel(config, std::move(p));
	}

	const LstmConfig &config() const noexcept { return config_; }
	const LstmParams &params() const noexcept { return params_; }
	LstmParams &params() noexcept { return params_; }
	std::size_t input_dim() const noexcept { return config_.input_dim; }

	Matrix predict(const SequenceBatch &x) const {
		Cache cache;
		return forward(x, nullptr, cache);
	}

	/// Scaled MSE on (x, y); writes dLoss/dParams into `grad` (same layout as params). Dropout is
	/// active only when `dropout_rng` is non-null.
	double loss_and_gradient(const SequenceBatch &x, const Matrix &y, double scale, LstmParams &grad,
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
		Matrix gates; // T*B x 4h, post-activation
		Matrix c;     // T*B x h
		Matrix tanh_c;
		Matrix h;
		Matrix mask; // empty when dropout is off
		Matrix out;  // h (masked), input to the next layer
	};
	struct Cache {
		std::vector<LayerCache> layers;
	};

	void check_shapes() const {
		config_.validate();
		if (params_.layers.size() != config_.layers) {
			throw std::invalid_argument("LSTM layer count mismatch");
		}
		const auto h = static_cast<Eigen::Index>(config_.hidden);
		for (std::size_t l = 0; l < params_.layers.size(); ++l) {
			const auto &layer = params_.layers[l];
			const auto in = l == 0 ? static_cast<Eigen::Index>(config_.input_dim) : h;
			if (layer.W.rows() != in || layer.W.cols() != 4 * h || layer.U.rows() != h || layer.U.cols() != 4 * h ||
			    layer.b.rows() != 1 || layer.b.cols() != 4 * h) {
				throw std::invalid_argument("LSTM layer " + std::to_string(l) + " has inconsistent shapes");
			}
		}
		if (params_.head.weight.rows() != h || params_.head.weight.cols() != 1 || params_.head.bias.size() != 1) {
			throw std::invalid_argument("LSTM head has inconsistent shapes");
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
			// Input projections for every step at once.
			lc.gates = ((*input) * layer.W).rowwise() + layer.b.row(0);
			lc.c.resize(rows, h);
			lc.tanh_c.resize(rows, h);
			lc.h.resize(rows, h);
			Matrix h_prev = Matrix::Zero(B, h);
			Matrix c_prev = Matrix::Zero(B, h);
			for (std::size_t t = 0; t < T; ++t) {
				const auto r0 = static_cast<Eigen::Index>(t) * B;
				auto g = lc.gates.middleRows(r0, B);
				g.noalias() += h_prev * layer.U;
				g.leftCols(2 * h) = sigmoid(g.leftCols(2 * h));
				g.middleCols(2 * h, h) = tanh(g.middleCols(2 * h, h));
				g.rightCols(h) = sigmoid(g.rightCols(h));
				auto c = lc.c.middleRows(r0, B);
				c = g.leftCols(h).cwiseProduct(c_prev) + g.middleCols(h, h).cwiseProduct(g.middleCols(2 * h, h));
				lc.tanh_c.middleRows(r0, B) = tanh(c);
				lc.h.middleRows(r0, B) = g.rightCols(h).cwiseProduct(lc.tanh_c.middleRows(r0, B));
				h_prev = lc.h.middleRows(r0, B);
				c_prev = c;
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

	void backward(const SequenceBatch &x, const Cache &cache, const Matrix &dy, LstmParams &grad) const {
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
			Matrix d_h_seq = lc.mask.size() > 0 ? d_out.cwiseProduct(lc.mask) : d_out;
			Matrix d_pre(rows, 4 * h);
			Matrix dh_next = Matrix::Zero(B, h);
			Matrix dc_next = Matrix::Zero(B, h);
			gl.U.setZero();
			for (std::size_t t = T; t-- > 0;) {
				const auto r0 = static_cast<Eigen::Index>(t) * B;
				const auto g = lc.gates.middleRows(r0, B);
				const auto f = g.leftCols(h).array();
				const auto i = g.middleCols(h, h).array();
				const auto a = g.middleCols(2 * h, h).array();
				const auto o = g.rightCols(h).array();
				const auto tc = lc.tanh_c.middleRows(r0, B).array();
				const Matrix dh = d_h_seq.middleRows(r0, B) + dh_next;
				const Matrix c_prev = t == 0 ? Matrix::Zero(B, h) : Matrix(lc.c.middleRows(r0 - B, B));
				const Eigen::ArrayXXd dc = dh.array() * o * (1.0 - tc.square()) + dc_next.array();
				auto dz = d_pre.middleRows(r0, B);
				dz.leftCols(h) = (dc * c_prev.array() * f * (1.0 - f)).matrix();
				dz.middleCols(h, h) = (dc * a * i * (1.0 - i)).matrix();
				dz.middleCols(2 * h, h) = (dc * i * (1.0 - a.square())).matrix();
				dz.rightCols(h) = (dh.array() * tc * o * (1.0 - o)).matrix();
				dc_next = (dc * f).matrix();
				if (t > 0) {
					gl.U.noalias() += lc.h.middleRows(r0 - B, B).transpose() * dz;
				}
				dh_next.noalias() = dz * layer.U.transpose();
			}
			gl.W.noalias() = input.transpose() * d_pre;
			gl.b = d_pre.colwise().sum();
			if (l > 0) {
				d_out.noalias() = d_pre * layer.W.transpose();
			}
		}
	}

	LstmConfig config_;
	LstmParams params_;
};

} // namespace regimecast::neural
