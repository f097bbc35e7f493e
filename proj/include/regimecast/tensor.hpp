#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace regimecast {

/// Dense row-major double tensor. Rank-3 accessors cover the (sample, time, feature) layout
/// used by windowed datasets.
class Tensor {
public:
	Tensor() = default;

	explicit Tensor(std::vector<std::size_t> shape, double fill = 0.0)
	    : shape_(std::move(shape)), data_(element_count(shape_), fill) {}

	const std::vector<std::size_t> &shape() const noexcept { return shape_; }
	std::size_t rank() const noexcept { return shape_.size(); }
	std::size_t size() const noexcept { return data_.size(); }
	std::size_t dim(std::size_t axis) const { return shape_.at(axis); }

	std::span<double> data() noexcept { return data_; }
	std::span<const double> data() const noexcept { return data_; }

	double &at(std::size_t i, std::size_t t, std::size_t k) { return data_[offset(i, t, k)]; }
	double at(std::size_t i, std::size_t t, std::size_t k) const { return data_[offset(i, t, k)]; }

	/// Feature vector of sample i at step t.
	std::span<const double> row(std::size_t i, std::size_t t) const {
		return std::span<const double>(data_).subspan(offset(i, t, 0), shape_[2]);
	}
	std::span<double> row(std::size_t i, std::size_t t) {
		return std::span<double>(data_).subspan(offset(i, t, 0), shape_[2]);
	}

	bool operator==(const Tensor &) const = default;

private:
	static std::size_t element_count(const std::vector<std::size_t> &shape) {
		return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
	}

	std::size_t offset(std::size_t i, std::size_t t, std::size_t k) const {
		if (shape_.size() != 3) {
			throw std::logic_error("Tensor: rank-3 access on rank-" + std::to_string(shape_.size()) + " tensor");
		}
		return (i * shape_[1] + t) * shape_[2] + k;
	}

	std::vector<std::size_t> shape_;
	std::vector<double> data_;
};

} // namespace regimecast
