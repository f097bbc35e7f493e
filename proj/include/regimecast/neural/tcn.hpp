#pragma once

#include <string>
#include <utility>
#include <vector>

#include "regimecast/neural/common.hpp"

namespace regimecast::neural {

/// Weight-normalised dilated causal convolution. `v` stacks the kernel taps (k * in x out) with
/// tap j applied to the input k - 1 - j dilations back; the effective kernel column c is
/// g[c] * v[:, c] / ||v[:, c]||.
struct TcnConv {
	Matrix v;
	Matrix g; // 1 x out
	Matrix b; // 1 x out

	Eigen::Index out_channels() const noexcept { return v.cols(); }
};

struct TcnBlock {
	TcnConv conv1;
	TcnConv conv2;
	Matrix shortcut;      // in x out, empty when in == out
	Matrix shortcut_bias; // 1 x out, empty when in == out

	bool has_shortcut() const noexcept { return shortcut.size() > 0; }
};

struct TcnConfig {
	std::size_t input_dim = 1;
	std::size_t channels = 64;
	std::size_t blocks = 4;
	std::size_t kernel = 3;
	double dropout = 0.2;

	void validate() const {
		if (input_dim == 0 || channels == 0 || blocks == 0 || kernel == 0) {
			throw std::invalid_argument("TCN needs positive input dim, channels, blocks and kernel width");
		}
		if (blocks > 30) {
			throw std::invalid_argument("TCN block count too large for the dilation schedule");
		}
		if (!(dropout >= 0.0 && dropout < 1.0)) {
			throw std::invalid_argument("dropout must lie in [0, 1)");
		}
	}

	std::size_t dilation(std::size_t block) const noexcept { return std::size_t{1} << block; }

	/// Steps of history that influence one output: 1 + 2 (k - 1) (2^B - 1).
	std::size_t receptive_field() const noexcept { return 1 + 2 * (kernel - 1) * ((std::size_t{1} << blocks) - 1); }
};

struct TcnParams {
	std::vector<TcnBlock> blocks;
	Head head;

	template <class Self, class F>
	static void visit(Self &p, F &&f) {
		for (std::size_t i = 0; i < p.blocks.size(); ++i) {
			const auto prefix = "block" + std::to_string(i) + ".";
			auto &blk = p.blocks[i];
			f(prefix + "conv1.v", blk.conv1.v);
			f(prefix + "conv1.g", blk.conv1.g);
			f(prefix + "conv1.b", blk.conv1.b);
			f(prefix + "conv2.v", blk.conv2.v);
			f(prefix + "conv2.g", blk.conv2.g);
			f(prefix + "conv2.b", blk.conv2.b);
			if (blk.shortcut.size() > 0) {
				f(prefix + "shortcut.weight", blk.shortcut);
				f(prefix + "shortcut.bias", blk.shortcut_bias);
			}
		}
		f("head.weight", p.head.weight);
		f("head.bias", p.head.bias);
	}
};

namespace detail {

inline Matrix effective_kernel(const TcnConv &conv) {
	Matrix w = conv.v;
	for (Eigen::Index c = 0; c < w.cols(); ++c) {
		const double norm = conv.v.col(c).norm();
		if (norm > 0.0) {
			w.col(c) *= conv.g(0, c) / norm;
		} else {
			w.col(c).setZero();
		}
	}
	return w;
}

/// Causal dilated convolution over a step-major (T*B x in) sequence.
inline Matrix causal_conv(const Matrix &x, std::size_t T, Eigen::Index B, const Matrix &w, const Matrix &bias,
                          std::size_t kernel, std::size_t dilation) {
	const auto in = x.cols();
	Matrix y(x.rows(), w.cols());
	y.rowwise() = bias.row(0);
	for (std::size_t j = 0; j < kernel; ++j) {
		const auto shift = (kernel - 1 - j) * dilation;
		if (shift >= T) {
			continue;
		}
		const auto rows = static_cast<Eigen::Index>(T - shift) * B;
		y.bottomRows(rows).noalias() += x.topRows(rows) * w.middleRows(static_cast<Eigen::Index>(j) * in, in);
	}
	return y;
}

/// Backward pass of causal_conv plus the weight-norm reparameterisation.
inline Matrix causal_conv_backward(const Matrix &x, std::size_t T, Eigen::Index B, const TcnConv &conv,
                                   const Matrix &w, const Matrix &dy, std::size_t kernel, std::size_t dilation,
                                   TcnConv &grad) {
	const auto in = x.cols();
	Matrix dx = Matrix::Zero(x.rows(), in);
	Matrix dw = Matrix::Zero(w.rows(), w.cols());
	for (std::size_t j = 0; j < kernel; ++j) {
		const auto shift = (kernel - 1 - j) * dilation;
		if (shift >= T) {
			continue;
		}
		const auto rows = static_cast<Eigen::Index>(T - shift) * B;
		const auto wj = w.middleRows(static_cast<Eigen::Index>(j) * in, in);
		dx.topRows(rows).noalias() += dy.bottomRows(rows) * wj.transpose();
		dw.middleRows(static_cast<Eigen::Index>(j) * in, in).noalias() += x.topRows(rows).transpose() * dy.bottomRows(rows);
	}
	grad.b = dy.colwise().sum();
	grad.g.resize(1, w.cols());
	grad.v.resize(conv.v.rows(), conv.v.cols());
	for (Eigen::Index c = 0; c < w.cols(); ++c) {
		const double norm = conv.v.col(c).norm();
		if (norm == 0.0) {
			grad.g(0, c) = 0.0;
			grad.v.col(c).setZero();
			continue;
		}
		const double proj = dw.col(c).dot(conv.v.col(c));
		const double g = conv.g(0, c);
		grad.g(0, c) = proj / norm;
		grad.v.col(c) = (g / norm) * dw.col(c) - (g * proj / (norm * norm * norm)) * conv.v.col(c);
	}
	return dx;
}

inline Matrix relu(const Matrix &x) { return x.cwiseMax(0.0); }

inline Matrix relu_backward(const Matrix &pre, const Matrix &d) {
	return (pre.array() > 0.0).select(d, 0.0);
}

} // namespace detail

class TcnModel {
public:
	using Params = TcnParams;

	TcnModel() = default;
	TcnModel(TcnConfig config, TcnParams params) : config_(config), params_(std::move(params)) { check_shapes(); }

	static TcnModel init(const TcnConfig &config, Rng &rng) {
		config.validate();
		const auto c = static_cast<Eigen::Index>(config.channels);
		const auto k = static_cast<Eigen::Index>(config.kernel);
		auto make_conv = [&](Eigen::Index in) {
			TcnConv conv{Matrix(k * in, c), Matrix(1, c), Matrix::Zero(1, c)};
			fill_uniform(conv.v, rng,
			             glorot_limit(static_cast<std::size_t>(k * in), static_cast<std::size_t>(k * c)));
			for (Eigen::Index j = 0; j < c; ++j) {
				conv.g(0, j) = conv.v.col(j).norm();
			}
			return conv;
		};
		TcnParams p;
		for (std::size_t blk = 0; blk < config.blocks; ++blk) {
			const auto in = blk == 0 ? static_cast<Eigen::Index>(config.input_dim) : c;
			TcnBlock block;
			block.conv1 = make_conv(in);
			block.conv2 = make_conv(c);
			if (in != c) {
				block.shortcut = Matrix(in, c);
				fill_uniform(block.shortcut, rng, glorot_limit(static_cast<std::size_t>(in), static_cast<std::size_t>(c)));
				block.shortcut_bias = Matrix::Zero(1, c);
			}
			p.blocks.push_back(std::move(block));
		}
		p.head.weight = Matrix(c, 1);
		fill_uniform(p.head.weight, rng, glorot_limit(static_cast<std::size_t>(c), 1));
		p.head.bias = Matrix::Zero(1, 1);
		return TcnModel(config, std::move(p));
	}

	const TcnConfig &config() const noexcept { return config_; }
	const TcnParams &params() const noexcept { return params_; }
	TcnParams &params() noexcept { return params_; }
	std::size_t input_dim() const noexcept { return config_.input_dim; }

	Matrix predict(const SequenceBatch &x) const {
		Cache cache;
		return forward(x, nullptr, cache);
	}

	/// Output of the last residual block at every step (T*B x channels), dropout off.
	Matrix features(const SequenceBatch &x) const {
		Cache cache;
		forward(x, nullptr, cache);
		return cache.blocks.back().out;
	}

	double loss_and_gradient(const SequenceBatch &x, const Matrix &y, double scale, TcnParams &grad,
	                         Rng *dropout_rng) const {
		Cache cache;
		const Matrix yhat = forward(x, dropout_rng, cache);
		Matrix dy;
		const double loss = mse_loss(yhat, y, scale, &dy);
		backward(x, cache, dy, grad);
		return loss;
	}

private:
	struct BlockCache {
		Matrix w1, w2; // effective kernels
		Matrix z1, a1, m1;
		Matrix z2, a2, m2;
		Matrix pre;
		Matrix out;
	};
	struct Cache {
		std::vector<BlockCache> blocks;
	};

	void check_shapes() const {
		config_.validate();
		if (params_.blocks.size() != config_.blocks) {
			throw std::invalid_argument("TCN block count mismatch");
		}
		const auto c = static_cast<Eigen::Index>(config_.channels);
		const auto k = static_cast<Eigen::Index>(config_.kernel);
		auto conv_ok = [&](const TcnConv &conv, Eigen::Index in) {
			return conv.v.rows() == k * in && conv.v.cols() == c && conv.g.rows() == 1 && conv.g.cols() == c &&
			       conv.b.rows() == 1 && conv.b.cols() == c;
		};
		for (std::size_t i = 0; i < params_.blocks.size(); ++i) {
			const auto &blk = params_.blocks[i];
			const auto in = i == 0 ? static_cast<Eigen::Index>(config_.input_dim) : c;
			const bool shortcut_ok = in == c ? !blk.has_shortcut()
			                                 : blk.shortcut.rows() == in && blk.shortcut.cols() == c &&
			                                       blk.shortcut_bias.rows() == 1 && blk.shortcut_bias.cols() == c;
			if (!conv_ok(blk.conv1, in) || !conv_ok(blk.conv2, c) || !shortcut_ok) {
				throw std::invalid_argument("TCN block " + std::to_string(i) + " has inconsistent shapes");
			}
		}
		if (params_.head.weight.rows() != c || params_.head.weight.cols() != 1 || params_.head.bias.size() != 1) {
			throw std::invalid_argument("TCN head has inconsistent shapes");
		}
	}

	Matrix forward(const SequenceBatch &x, Rng *dropout_rng, Cache &cache) const {
		check_batch(x, config_.input_dim);
		const auto T = x.steps;
		const auto B = static_cast<Eigen::Index>(x.batch);
		const bool use_dropout = dropout_rng != nullptr && config_.dropout > 0.0;
		cache.blocks.resize(params_.blocks.size());
		const Matrix *input = &x.data;
		for (std::size_t i = 0; i < params_.blocks.size(); ++i) {
			const auto &blk = params_.blocks[i];
			auto &bc = cache.blocks[i];
			const auto dil = config_.dilation(i);
			bc.w1 = detail::effective_kernel(blk.conv1);
			bc.w2 = detail::effective_kernel(blk.conv2);
			bc.z1 = detail::causal_conv(*input, T, B, bc.w1, blk.conv1.b, config_.kernel, dil);
			bc.a1 = detail::relu(bc.z1);
			if (use_dropout) {
				bc.m1 = dropout_mask(bc.a1.rows(), bc.a1.cols(), config_.dropout, *dropout_rng);
				bc.a1 = bc.a1.cwiseProduct(bc.m1);
			} else {
				bc.m1.resize(0, 0);
			}
			bc.z2 = detail::causal_conv(bc.a1, T, B, bc.w2, blk.conv2.b, config_.kernel, dil);
			bc.a2 = detail::relu(bc.z2);
			if (use_dropout) {
				bc.m2 = dropout_mask(bc.a2.rows(), bc.a2.cols(), config_.dropout, *dropout_rng);
				bc.a2 = bc.a2.cwiseProduct(bc.m2);
			} else {
				bc.m2.resize(0, 0);
			}
			if (blk.has_shortcut()) {
				Matrix projected = (*input) * blk.shortcut;
				projected.rowwise() += blk.shortcut_bias.row(0);
				bc.pre = bc.a2 + projected;
			} else {
				bc.pre = bc.a2 + *input;
			}
			bc.out = detail::relu(bc.pre);
			debug_check_finite(bc.out);
			input = &bc.out;
		}
		const auto last = static_cast<Eigen::Index>(T - 1) * B;
		return params_.head.forward(input->middleRows(last, B));
	}

	void backward(const SequenceBatch &x, const Cache &cache, const Matrix &dy, TcnParams &grad) const {
		const auto T = x.steps;
		const auto B = static_cast<Eigen::Index>(x.batch);
		const auto last = static_cast<Eigen::Index>(T - 1) * B;
		if (grad.blocks.size() != params_.blocks.size()) {
			grad = zeros_like(params_);
		}
		const auto &top = cache.blocks.back();
		grad.head.weight = top.out.middleRows(last, B).transpose() * dy;
		grad.head.bias = dy.colwise().sum();

		Matrix d_out = Matrix::Zero(top.out.rows(), top.out.cols());
		d_out.middleRows(last, B) = dy * params_.head.weight.transpose();

		for (std::size_t i = params_.blocks.size(); i-- > 0;) {
			const auto &blk = params_.blocks[i];
			const auto &bc = cache.blocks[i];
			auto &gb = grad.blocks[i];
			const auto dil = config_.dilation(i);
			const Matrix &input = i == 0 ? x.data : cache.blocks[i - 1].out;

			const Matrix d_pre = detail::relu_backward(bc.pre, d_out);
			Matrix d_a2 = bc.m2.size() > 0 ? Matrix(d_pre.cwiseProduct(bc.m2)) : d_pre;
			const Matrix d_z2 = detail::relu_backward(bc.z2, d_a2);
			Matrix d_a1 = detail::causal_conv_backward(bc.a1, T, B, blk.conv2, bc.w2, d_z2, config_.kernel, dil, gb.conv2);
			if (bc.m1.size() > 0) {
				d_a1 = d_a1.cwiseProduct(bc.m1);
			}
			const Matrix d_z1 = detail::relu_backward(bc.z1, d_a1);
			Matrix d_in = detail::causal_conv_backward(input, T, B, blk.conv1, bc.w1, d_z1, config_.kernel, dil, gb.conv1);
			if (blk.has_shortcut()) {
				gb.shortcut.noalias() = input.transpose() * d_pre;
				gb.shortcut_bias = d_pre.colwise().sum();
				d_in.noalias() += d_pre * blk.shortcut.transpose();
			} else {
				d_in += d_pre;
			}
			d_out = std::move(d_in);
		}
	}

	TcnConfig config_;
	TcnParams params_;
};

} // namespace regimecast::neural
