#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "regimecast/neural/common.hpp"

namespace regimecast::neural {

struct AdamConfig {
	double learning_rate = 0.001;
	double beta1 = 0.9;
	double beta2 = 0.999;
	double epsilon = 1e-8;

	void validate() const {
		if (!(learning_rate >= 0.0) || !std::isfinite(learning_rate)) {
			throw std::invalid_argument("learning rate must be finite and non-negative");
		}
		if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0)) {
			throw std::invalid_argument("Adam betas must lie in [0, 1)");
		}
		if (!(epsilon > 0.0)) {
			throw std::invalid_argument("Adam epsilon must be positive");
		}
	}
};

template <class Params>
struct AdamState {
	Params m;
	Params v;
	std::uint64_t step = 0;

	explicit AdamState(const Params &like) : m(zeros_like(like)), v(zeros_like(like)) {}
};

/// Bias-corrected Adam update applied in place.
template <class Params>
void adam_step(Params &params, const Params &grads, AdamState<Params> &state, const AdamConfig &config) {
	auto p = tensors(params);
	const auto g = tensors(grads);
	auto m = tensors(state.m);
	auto v = tensors(state.v);
	if (p.size() != g.size() || p.size() != m.size() || p.size() != v.size()) {
		throw std::invalid_argument("Adam: parameter/gradient structure mismatch");
	}
	++state.step;
	const double t = static_cast<double>(state.step);
	const double c1 = 1.0 - std::pow(config.beta1, t);
	const double c2 = 1.0 - std::pow(config.beta2, t);
	for (std::size_t k = 0; k < p.size(); ++k) {
		if (p[k]->size() != g[k]->size()) {
			throw std::invalid_argument("Adam: tensor size mismatch");
		}
		m[k]->array() = config.beta1 * m[k]->array() + (1.0 - config.beta1) * g[k]->array();
		v[k]->array() = config.beta2 * v[k]->array() + (1.0 - config.beta2) * g[k]->array().square();
		p[k]->array() -= config.learning_rate * (m[k]->array() / c1) / ((v[k]->array() / c2).sqrt() + config.epsilon);
	}
}

} // namespace regimecast::neural
