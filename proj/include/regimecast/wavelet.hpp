#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace regimecast::wavelet {

enum class WaveletFamily { Haar, Db2, Db4 };

enum class Padding {
	Symmetric, ///< half-sample reflection; redundant coefficients, exact-length inverse
	Periodic,  ///< circular wrap (odd lengths padded by repeating the last sample); orthogonal
};

inline std::string_view to_string(WaveletFamily family) {
	switch (family) {
	case WaveletFamily::Haar:
		return "haar";
	case WaveletFamily::Db2:
		return "db2";
	case WaveletFamily::Db4:
		return "db4";
	}
	return "unknown";
}

inline WaveletFamily parse_family(std::string_view name) {
	if (name == "haar" || name == "db1") {
		return WaveletFamily::Haar;
	}
	if (name == "db2") {
		return WaveletFamily::Db2;
	}
	if (name == "db4") {
		return WaveletFamily::Db4;
	}
	throw std::invalid_argument("unknown wavelet family '" + std::string(name) + "' (expected haar, db2, db4)");
}

inline std::string_view to_string(Padding padding) {
	return padding == Padding::Symmetric ? "symmetric" : "periodic";
}

inline Padding parse_padding(std::string_view name) {
	if (name == "symmetric") {
		return Padding::Symmetric;
	}
	if (name == "periodic" || name == "periodization") {
		return Padding::Periodic;
	}
	throw std::invalid_argument("unknown padding mode '" + std::string(name) + "'");
}

/// Orthogonal two-channel filter bank. `lowpass` holds the scaling coefficients h; the other three
/// filters follow from the quadrature-mirror relation g[k] = (-1)^k h[L-1-k] and time reversal.
class WaveletFilter {
public:
	static WaveletFilter make(WaveletFamily family) {
		// Daubechies scaling coefficients (sum sqrt(2)), values as tabulated by PyWavelets.
		static constexpr std::array<double, 2> haar{0.7071067811865476, 0.7071067811865476};
		static constexpr std::array<double, 4> db2{0.48296291314453416, 0.8365163037378079, 0.2241438680420134,
		                                           -0.12940952255126037};
		static constexpr std::array<double, 8> db4{0.2303778133088965,   0.7148465705529157,  0.6308807679298589,
		                                           -0.027983769416859854, -0.18703481171909309, 0.030841381835560764,
		                                           0.0328830116668852,   -0.010597401785069032};
		switch (family) {
		case WaveletFamily::Haar:
			return WaveletFilter(family, {haar.begin(), haar.end()});
		case WaveletFamily::Db2:
			return WaveletFilter(family, {db2.begin(), db2.end()});
		case WaveletFamily::Db4:
			return WaveletFilter(family, {db4.begin(), db4.end()});
		}
		throw std::invalid_argument("unknown wavelet family");
	}

	static WaveletFilter make(std::string_view name) { return make(parse_family(name)); }

	WaveletFamily family() const noexcept { return family_; }
	std::string_view name() const noexcept { return to_string(family_); }
	std::size_t length() const noexcept { return lowpass_.size(); }

	/// Scaling (reconstruction low-pass) coefficients h.
	const std::vector<double> &lowpass() const noexcept { return lowpass_; }
	/// Wavelet (reconstruction high-pass) coefficients g.
	const std::vector<double> &highpass() const noexcept { return highpass_; }
	const std::vector<double> &dec_lo() const noexcept { return dec_lo_; }
	const std::vector<double> &dec_hi() const noexcept { return dec_hi_; }

private:
	WaveletFilter(WaveletFamily family, std::vector<double> h) : family_(family), lowpass_(std::move(h)) {
		const auto L = lowpass_.size();
		highpass_.resize(L);
		for (std::size_t k = 0; k < L; ++k) {
			highpass_[k] = (k % 2 == 0 ? 1.0 : -1.0) * lowpass_[L - 1 - k];
		}
		dec_lo_.assign(lowpass_.rbegin(), lowpass_.rend());
		dec_hi_.assign(highpass_.rbegin(), highpass_.rend());
		check_invariants();
	}

	void check_invariants() const {
		constexpr double tol = 1e-12;
		double sum_h = 0.0;
		double sum_g = 0.0;
		for (std::size_t k = 0; k < lowpass_.size(); ++k) {
			sum_h += lowpass_[k];
			sum_g += highpass_[k];
		}
		if (std::abs(sum_h - std::numbers::sqrt2) > tol || std::abs(sum_g) > tol) {
			throw std::logic_error("wavelet filter " + std::string(name()) + " violates sum rules");
		}
		for (std::size_t shift = 0; 2 * shift < lowpass_.size(); ++shift) {
			double dot = 0.0;
			for (std::size_t k = 0; k + 2 * shift < lowpass_.size(); ++k) {
				dot += lowpass_[k] * lowpass_[k + 2 * shift];
			}
			if (std::abs(dot - (shift == 0 ? 1.0 : 0.0)) > tol) {
				throw std::logic_error("wavelet filter " + std::string(name()) + " is not orthonormal");
			}
		}
	}

	WaveletFamily family_;
	std::vector<double> lowpass_;
	std::vector<double> highpass_;
	std::vector<double> dec_lo_;
	std::vector<double> dec_hi_;
};

struct DwtResult {
	std::vector<double> approx;
	std::vector<double> detail;
};

/// Coefficient count for one analysis step on `length` samples.
inline std::size_t coefficient_length(std::size_t length, std::size_t filter_length, Padding padding) {
	if (padding == Padding::Periodic) {
		return (length + 1) / 2;
	}
	return (length + filter_length - 1) / 2;
}

namespace detail {

inline double symmetric_at(std::span<const double> x, std::ptrdiff_t i) {
	const auto n = static_cast<std::ptrdiff_t>(x.size());
	// Half-sample reflection, repeated if the index lands outside again.
	while (i < 0 || i >= n) {
		i = i < 0 ? -i - 1 : 2 * n - i - 1;
	}
	return x[static_cast<std::size_t>(i)];
}

inline void check_length(std::size_t length, const WaveletFilter &filter) {
	if (length < filter.length() || length < 2) {
		throw std::invalid_argument("signal of length " + std::to_string(length) + " shorter than " +
		                            std::string(filter.name()) + " filter length " + std::to_string(filter.length()));
	}
}

} // namespace detail

/// One analysis step: approx[n] = sum_k dec_lo[k] x[2n + 1 - k], detail likewise with dec_hi, where
/// out-of-range samples come from the boundary extension.
inline DwtResult dwt_single(std::span<const double> signal, const WaveletFilter &filter,
                            Padding padding = Padding::Symmetric) {
	detail::check_length(signal.size(), filter);
	const auto n = signal.size();
	const auto L = filter.length();
	const auto count = coefficient_length(n, L, padding);
	const auto &lo = filter.dec_lo();
	const auto &hi = filter.dec_hi();
	DwtResult out{std::vector<double>(count, 0.0), std::vector<double>(count, 0.0)};

	if (padding == Padding::Symmetric) {
		for (std::size_t k = 0; k < count; ++k) {
			double a = 0.0;
			double d = 0.0;
			for (std::size_t j = 0; j < L; ++j) {
				const double v = detail::symmetric_at(signal, static_cast<std::ptrdiff_t>(2 * k + 1) -
				                                                  static_cast<std::ptrdiff_t>(j));
				a += lo[j] * v;
				d += hi[j] * v;
			}
			out.approx[k] = a;
			out.detail[k] = d;
		}
		return out;
	}

	const auto m = 2 * count;
	auto at = [&](std::size_t i) { return i < n ? signal[i] : signal[n - 1]; };
	for (std::size_t k = 0; k < count; ++k) {
		double a = 0.0;
		double d = 0.0;
		for (std::size_t j = 0; j < L; ++j) {
			const auto idx = (2 * k + 1 + m * L - j) % m;
			a += lo[j] * at(idx);
			d += hi[j] * at(idx);
		}
		out.approx[k] = a;
		out.detail[k] = d;
	}
	return out;
}

/// Inverse of dwt_single, trimmed to original_length.
inline std::vector<double> idwt_single(std::span<const double> approx, std::span<const double> detail,
                                       const WaveletFilter &filter, std::size_t original_length,
                                       Padding padding = Padding::Symmetric) {
	const auto L = filter.length();
	const auto count = approx.size();
	if (detail.size() != count) {
		throw std::invalid_argument("approximation and detail lengths differ");
	}
	if (original_length < 2 || coefficient_length(original_length, L, padding) != count) {
		throw std::invalid_argument("coefficient length " + std::to_string(count) +
		                            " inconsistent with original length " + std::to_string(original_length));
	}

	if (padding == Padding::Symmetric) {
		// Keep the fully overlapped part of the upsampled synthesis convolution.
		const auto &lo = filter.lowpass();
		const auto &hi = filter.highpass();
		const auto full = 2 * count + 2 - L;
		std::vector<double> out(full, 0.0);
		std::size_t o = 0;
		for (std::size_t i = L / 2 - 1; i < count; ++i, o += 2) {
			double even = 0.0;
			double odd = 0.0;
			for (std::size_t j = 0; j < L / 2; ++j) {
				even += lo[2 * j] * approx[i - j] + hi[2 * j] * detail[i - j];
				odd += lo[2 * j + 1] * approx[i - j] + hi[2 * j + 1] * detail[i - j];
			}
			out[o] = even;
			out[o + 1] = odd;
		}
		out.resize(original_length);
		return out;
	}

	// Periodic analysis is an orthogonal map, so synthesis is its transpose.
	const auto m = 2 * count;
	const auto &lo = filter.dec_lo();
	const auto &hi = filter.dec_hi();
	std::vector<double> out(m, 0.0);
	for (std::size_t k = 0; k < count; ++k) {
		for (std::size_t j = 0; j < L; ++j) {
			const auto idx = (2 * k + 1 + m * L - j) % m;
			out[idx] += lo[j] * approx[k] + hi[j] * detail[k];
		}
	}
	out.resize(original_length);
	return out;
}

/// Multilevel decomposition: approximation band A_J plus detail bands D_1..D_J (details[0] is the
/// finest, D_1). `lengths[j]` is the input length at level j + 1.
struct WaveletDecomposition {
	std::vector<double> approx;
	std::vector<std::vector<double>> details;
	std::vector<std::size_t> lengths;
	WaveletFamily family = WaveletFamily::Db4;
	Padding padding = Padding::Symmetric;

	std::size_t levels() const noexcept { return details.size(); }
	std::size_t original_length() const { return lengths.empty() ? 0 : lengths.front(); }
};

/// Deepest level for which every analysis step sees at least filter-length samples.
inline std::size_t max_level(std::size_t length, const WaveletFilter &filter, Padding padding = Padding::Symmetric) {
	std::size_t levels = 0;
	while (length >= filter.length() && length >= 2) {
		++levels;
		const auto next = coefficient_length(length, filter.length(), padding);
		if (next >= length) {
			break;
		}
		length = next;
	}
	return levels;
}

inline WaveletDecomposition wavedec(std::span<const double> signal, const WaveletFilter &filter, std::size_t levels,
                                    Padding padding = Padding::Symmetric) {
	if (levels < 1) {
		throw std::invalid_argument("decomposition needs at least one level");
	}
	const auto feasible = max_level(signal.size(), filter, padding);
	if (levels > feasible) {
		throw std::invalid_argument("level " + std::to_string(levels) + " too deep for length " +
		                            std::to_string(signal.size()) + " with " + std::string(filter.name()) +
		                            "; max feasible level is " + std::to_string(feasible));
	}
	WaveletDecomposition out;
	out.family = filter.family();
	out.padding = padding;
	std::vector<double> current(signal.begin(), signal.end());
	for (std::size_t level = 0; level < levels; ++level) {
		out.lengths.push_back(current.size());
		auto step = dwt_single(current, filter, padding);
		out.details.push_back(std::move(step.detail));
		current = std::move(step.approx);
	}
	out.approx = std::move(current);
	return out;
}

inline std::vector<double> waverec(const WaveletDecomposition &dec) {
	if (dec.details.empty() || dec.lengths.size() != dec.details.size()) {
		throw std::invalid_argument("malformed wavelet decomposition");
	}
	const auto filter = WaveletFilter::make(dec.family);
	std::vector<double> current = dec.approx;
	for (std::size_t level = dec.details.size(); level-- > 0;) {
		current = idwt_single(current, dec.details[level], filter, dec.lengths[level], dec.padding);
	}
	return current;
}

/// Zero-detail reconstruction: keeps only the level-J approximation band. Output has the input
/// length.
inline std::vector<double> denoise(std::span<const double> signal, const WaveletFilter &filter, std::size_t levels = 1,
                                   Padding padding = Padding::Symmetric) {
	auto dec = wavedec(signal, filter, levels, padding);
	for (auto &band : dec.details) {
		std::fill(band.begin(), band.end(), 0.0);
	}
	return waverec(dec);
}

} // namespace regimecast::wavelet
