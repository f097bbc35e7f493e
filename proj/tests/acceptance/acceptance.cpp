// Acceptance suite: one PASS/FAIL/SKIP line per criterion. Pass criterion numbers as arguments
// to run a subset. Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "regimecast.hpp"
#include "test_support.hpp"

using namespace regimecast;
namespace fs = std::filesystem;

namespace {

struct Outcome {
	enum class Status { Pass, Fail, Skip } status;
	std::string detail;
};

Outcome verdict(bool ok, std::string detail) {
	return {ok ? Outcome::Status::Pass : Outcome::Status::Fail, std::move(detail)};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
	return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char *format, auto... args) {
	char buf[512];
	std::snprintf(buf, sizeof buf, format, args...);
	return buf;
}

double median(std::vector<double> v) {
	std::sort(v.begin(), v.end());
	const auto n = v.size();
	return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// 1 -------------------------------------------------------------------------------------------

std::vector<double> mixed_series(std::mt19937_64 &rng) {
	std::uniform_int_distribution<std::size_t> len(20, 200);
	std::uniform_real_distribution<double> u(0.0, 1.0);
	const auto n = len(rng);
	std::normal_distribution<double> normal;
	const double sd = 0.1 + 2.0 * u(rng);
	const double slope = u(rng) < 0.3 ? (u(rng) - 0.5) * 0.2 : 0.0;
	const bool var_steps = u(rng) < 0.5;
	std::vector<double> y(n);
	double level = 0.0;
	double scale = 1.0;
	for (std::size_t i = 0; i < n; ++i) {
		if (u(rng) < 0.03) {
			level += (u(rng) - 0.5) * 16.0;
			if (var_steps) {
				scale = 0.3 + 3.0 * u(rng);
			}
		}
		y[i] = level + slope * static_cast<double>(i) + sd * scale * normal(rng);
	}
	return y;
}

Outcome pelt_oracle() {
	const auto start = std::chrono::steady_clock::now();
	std::mt19937_64 rng(1);
	int identical = 0;
	int total = 0;
	for (int c = 0; c < 500; ++c) {
		const auto y = mixed_series(rng);
		for (auto cost : {breaks::CostKind::NormalMean, breaks::CostKind::NormalMeanVar}) {
			breaks::PeltConfig config;
			config.cost = cost;
			identical += breaks::pelt_detect(y, config).indices == breaks::optimal_partition_bruteforce(y, config).indices;
			++total;
		}
	}
	const double t = seconds_since(start);
	return verdict(identical == total && t < 30.0,
	               fmt("%d/%d series x cost pairs identical to the exhaustive oracle, %.1fs (limit 30s)", identical, total, t));
}

// 2 -------------------------------------------------------------------------------------------

std::vector<double> long_regime_series(std::size_t n, std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	std::normal_distribution<double> normal;
	std::uniform_int_distribution<int> seg(200, 800);
	std::vector<double> y(n);
	double level = 0.0;
	std::size_t next = static_cast<std::size_t>(seg(rng));
	for (std::size_t i = 0; i < n; ++i) {
		if (i == next) {
			level += normal(rng) * 4.0;
			next += static_cast<std::size_t>(seg(rng));
		}
		y[i] = level + normal(rng);
	}
	return y;
}

double time_pelt(const std::vector<double> &y, int repeats) {
	double best = 1e300;
	for (int r = 0; r < repeats; ++r) {
		const auto start = std::chrono::steady_clock::now();
		const auto found = breaks::pelt_detect(y);
		best = std::min(best, seconds_since(start));
		if (found.indices.empty()) {
			return -1.0;
		}
	}
	return best;
}

Outcome pelt_scaling() {
	const auto start = std::chrono::steady_clock::now();
	const auto small = long_regime_series(10000, 2);
	const auto large = long_regime_series(100000, 3);
	const double ts = time_pelt(small, 5);
	const double tl = time_pelt(large, 2);
	const double ratio = tl / ts;
	const double t = seconds_since(start);
	return verdict(ts > 0 && tl > 0 && ratio < 15.0 && t < 60.0,
	               fmt("n=10k %.4fs, n=100k %.4fs, growth x%.2f (limit 15), %.1fs total", ts, tl, ratio, t));
}

// 3 -------------------------------------------------------------------------------------------

Outcome dwt_reconstruction() {
	double worst = 0.0;
	int cases = 0;
	for (std::size_t n = 2; n <= 512; ++n) {
		const auto x = testsupport::gaussian(n, n + 1000);
		for (auto fam : {wavelet::WaveletFamily::Haar, wavelet::WaveletFamily::Db2, wavelet::WaveletFamily::Db4}) {
			const auto f = wavelet::WaveletFilter::make(fam);
			const auto deepest = std::min<std::size_t>(3, wavelet::max_level(n, f));
			for (std::size_t J = 1; J <= deepest; ++J) {
				const auto back = wavelet::waverec(wavelet::wavedec(x, f, J));
				for (std::size_t i = 0; i < n; ++i) {
					worst = std::max(worst, std::abs(back[i] - x[i]));
				}
				++cases;
			}
		}
	}
	return verdict(worst < 1e-9, fmt("%d (length, family, level) cases, max error %.2e (limit 1e-9)", cases, worst));
}

// 4 -------------------------------------------------------------------------------------------

Outcome icss_calibration() {
	bool endpoints = true;
	for (std::uint64_t s = 0; s < 50; ++s) {
		const auto st = breaks::icss_statistic(testsupport::gaussian(50 + s * 7, s, 1.0 + static_cast<double>(s)));
		endpoints = endpoints && st.deviation.front() == 0.0 && st.deviation.back() == 0.0;
	}
	int false_alarms = 0;
	for (std::uint64_t s = 0; s < 500; ++s) {
		false_alarms += breaks::icss_detect(testsupport::gaussian(1000, 10000 + s), 1.358).empty() ? 0 : 1;
	}
	int hits = 0;
	int single = 0;
	for (std::uint64_t s = 0; s < 100; ++s) {
		auto y = testsupport::gaussian(400, s);
		for (std::size_t i = 200; i < 400; ++i) {
			y[i] *= 5.0;
		}
		const auto found = breaks::icss_detect(y, 1.358);
		bool near = false;
		for (auto idx : found.indices) {
			near = near || std::abs(static_cast<long>(idx) - 200) <= 10;
		}
		hits += near ? 1 : 0;
		single += near && found.size() == 1 ? 1 : 0;
	}
	const double fp = 100.0 * false_alarms / 500.0;
	return verdict(endpoints && fp <= 7.0 && hits >= 90,
	               fmt("endpoints %s; false positives %.1f%% (limit 7%%); step located within +-10 in %d/100 "
	                   "(limit 90; %d with exactly one break)",
	                   endpoints ? "exact" : "NOT exact", fp, hits, single));
}

// 5 -------------------------------------------------------------------------------------------

Outcome gradient_checks() {
	using namespace neural;
	const auto start = std::chrono::steady_clock::now();
	std::vector<std::string> parts;
	bool ok = true;
	auto run = [&](const char *name, auto model, std::size_t dim) {
		const auto x = testsupport::random_batch(10, 3, dim, 101);
		const auto y = testsupport::random_targets(3, 102);
		const auto g = testsupport::gradient_check(model, x, y, 300, 103);
		ok = ok && g.probed >= 200 && g.max_relative_error < 1e-4;
		parts.push_back(fmt("%s %zu probes max rel err %.1e", name, g.probed, g.max_relative_error));
	};
	Rng r1(11);
	run("LSTM", LstmModel::init({6, 8, 2, 0.0}, r1), 6);
	Rng r2(12);
	run("GRU", GruModel::init({6, 8, 2, 0.0}, r2), 6);
	Rng r3(13);
	auto tcn = TcnModel::init({6, 8, 2, 3, 0.0}, r3);
	Rng bias(14);
	for (auto &blk : tcn.params().blocks) {
		fill_uniform(blk.conv1.b, bias, 0.5);
		fill_uniform(blk.conv2.b, bias, 0.5);
	}
	run("TCN", tcn, 6);
	const double t = seconds_since(start);
	ok = ok && t < 60.0;
	std::string detail;
	for (const auto &p : parts) {
		detail += p + "; ";
	}
	return verdict(ok, detail + fmt("%.1fs (limits 1e-4, 200 probes, 60s)", t));
}

// 6 and 8 -------------------------------------------------------------------------------------

/// Switches among three AR(1) regimes (own level and persistence) every 150-400 steps, plus
/// white observation noise and two covariates.
std::string synthetic_csv(std::size_t n, std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	std::normal_distribution<double> normal;
	std::uniform_int_distribution<std::size_t> piece(150, 400);
	std::uniform_int_distribution<int> hop(1, 2);
	const double levels[3] = {20.0, 34.0, 27.0};
	const double phi[3] = {0.9, 0.95, 0.85};
	std::ostringstream out;
	out.precision(17);
	out << "date,price,driver,noise\n";
	double ar = 0.0;
	int r = 0;
	std::size_t next = piece(rng);
	for (std::size_t i = 0; i < n; ++i) {
		if (i == next) {
			r = (r + hop(rng)) % 3;
			next += piece(rng);
		}
		ar = phi[r] * ar + normal(rng);
		const double price = levels[r] + ar + 0.8 * normal(rng);
		const double driver = 0.6 * (levels[r] + ar) + 0.5 * normal(rng);
		out << testsupport::iso_day(static_cast<int>(i)) << ',' << price << ',' << driver << ',' << normal(rng) << '\n';
	}
	return out.str();
}

struct Arch {
	const char *name;
	const char *architecture;
};

constexpr Arch archs[] = {{"LSTM(uni)", "lstm-uni"}, {"LSTM(multi)", "lstm-multi"}, {"GRU", "gru"}, {"TCN", "tcn"}};

pipeline::RunConfig reduced_config(const std::string &input, std::uint64_t seed) {
	auto c = pipeline::load_config("");
	c.input = input;
	c.hidden = 16;
	c.layers = 1;
	c.channels = 16;
	c.blocks = 4;
	c.dropout = 0.0;
	c.training.adam.learning_rate = 0.005;
	// First differences understate the long-run variance of a persistent AR(1) by roughly
	// (1 + phi) / (1 - phi)^2, so the default factor over-segments this fixture.
	c.breaks.penalty_factor = 100.0;
	c.seed = seed;
	c.training.seed = seed;
	c.variants.clear();
	for (const auto &a : archs) {
		c.variants.push_back({std::string("PELT-WT-") + a.name, a.architecture, "pelt", true});
		c.variants.push_back({std::string("PELT-RAW-") + a.name, a.architecture, "pelt", false});
	}
	return c;
}

Outcome synthetic_ordering() {
	const auto start = std::chrono::steady_clock::now();
	testsupport::TempDir dir;
	const std::uint64_t seeds[3] = {101, 202, 303};
	std::map<std::string, std::vector<double>> rmse;
	std::map<std::string, std::vector<double>> r2;
	std::map<std::string, std::vector<double>> rmse_vs_raw;
	for (auto seed : seeds) {
		const auto input = dir.write("synthetic-" + std::to_string(seed) + ".csv", synthetic_csv(3000, seed));
		const auto config = reduced_config(input.string(), seed);
		const auto frame = pipeline::load_frame(config);
		for (const auto &v : config.variants) {
			const auto data = pipeline::prepare(frame, config, v);
			const auto model = pipeline::train_variant(data, config, v);
			const auto ev = pipeline::evaluate_variant(data, model, v.name, 20);
			rmse[v.name].push_back(ev.report.rmse);
			r2[v.name].push_back(ev.report.r2.value_or(-1e9));
			std::vector<double> raw_actual;
			for (auto row : ev.rows) {
				raw_actual.push_back(frame.target[row]);
			}
			rmse_vs_raw[v.name].push_back(eval::compute_metrics(raw_actual, ev.predicted).rmse);
		}
	}
	bool ok = true;
	std::string detail;
	for (const auto &a : archs) {
		const auto wt = std::string("PELT-WT-") + a.name;
		const auto raw = std::string("PELT-RAW-") + a.name;
		const double m_wt = median(rmse[wt]);
		const double m_raw = median(rmse[raw]);
		const double m_r2 = median(r2[wt]);
		ok = ok && m_wt < m_raw && m_r2 > 0.9;
		detail += fmt("%s RMSE %.3f vs raw %.3f, R2 %.4f (against raw prices %.3f); ", a.name, m_wt, m_raw, m_r2,
		              median(rmse_vs_raw[wt]));
	}
	const double t = seconds_since(start);
	ok = ok && t < 600.0;
	return verdict(ok, detail + fmt("medians over 3 seeds; WT variants are scored on the denoised series they forecast; "
	                                "%.0fs (limit 600s)",
	                                t));
}

Outcome pipeline_determinism() {
	testsupport::TempDir dir;
	const auto input = dir.write("synthetic.csv", synthetic_csv(400, 7));
	auto config = reduced_config(input.string(), 7);
	config.output_dir = (dir / "runs").string();
	config.training.max_epochs = 3;
	config.training.patience = 3;
	config.window = 10;
	config.variants.resize(4);
	config.variants.push_back({"BP&ICSS-WT-LSTM", "lstm-uni", "bp+icss", true});
	const auto a = pipeline::cmd_pipeline(config);
	const auto b = pipeline::cmd_pipeline(config);
	const bool metrics_same = pipeline::read_file(a.run_dir / "metrics.json") == pipeline::read_file(b.run_dir / "metrics.json");
	int same = 0;
	int total = 0;
	for (const auto &entry : fs::recursive_directory_iterator(a.run_dir)) {
		if (entry.path().filename() == "checkpoint.json") {
			const auto other = b.run_dir / fs::relative(entry.path(), a.run_dir);
			same += pipeline::sha256_file(entry.path()) == pipeline::sha256_file(other) ? 1 : 0;
			++total;
		}
	}
	return verdict(metrics_same && total == 5 && same == total,
	               fmt("metrics.json %s; %d/%d checkpoint hashes identical", metrics_same ? "byte-identical" : "DIFFERS",
	                   same, total));
}

// 7 -------------------------------------------------------------------------------------------

Outcome metric_arithmetic() {
	const auto m = eval::compute_metrics(std::vector<double>{1, 2, 3}, std::vector<double>{2, 2, 2});
	const bool exact = m.mae == 2.0 / 3.0 && m.r2 && *m.r2 == 0.0 && m.mape &&
	                   std::abs(*m.mape - 100.0 * (4.0 / 3.0) / 3.0) < 1e-9 &&
	                   std::abs(m.rmse - std::sqrt(2.0 / 3.0)) < 1e-15;
	std::mt19937_64 rng(77);
	std::uniform_int_distribution<std::size_t> len(1, 300);
	std::normal_distribution<double> normal(0.0, 10.0);
	int holds = 0;
	for (int c = 0; c < 1000; ++c) {
		const auto n = len(rng);
		std::vector<double> a(n);
		std::vector<double> p(n);
		for (std::size_t i = 0; i < n; ++i) {
			a[i] = normal(rng);
			p[i] = normal(rng);
		}
		const auto r = eval::compute_metrics(a, p);
		holds += r.mae <= r.rmse * (1.0 + 1e-12) ? 1 : 0;
	}
	return verdict(exact && holds == 1000,
	               fmt("MAE %.17g, RMSE %.17g, MAPE %.12f, R2 %g; MAE <= RMSE in %d/1000 fuzz cases", m.mae, m.rmse,
	                   m.mape.value_or(-1), m.r2.value_or(-1), holds));
}

// 9 -------------------------------------------------------------------------------------------

Outcome reproduction() {
	const char *path = std::getenv("REGIMECAST_EUA_CSV");
	if (path == nullptr || *path == '\0') {
		return {Outcome::Status::Skip, "REGIMECAST_EUA_CSV not set; dataset absent"};
	}
	const char *config_path = std::getenv("REGIMECAST_EUA_CONFIG");
	testsupport::TempDir dir;
	auto config = pipeline::load_config(config_path != nullptr ? config_path : "");
	config.input = path;
	config.output_dir = (dir / "runs").string();
	config.variants = pipeline::default_variants();
	config.reference_variant = "BP&ICSS-WT-LSTM";
	const auto result = pipeline::cmd_pipeline(config);
	std::map<std::string, eval::MetricsReport> by_name;
	for (const auto &v : result.variants) {
		by_name[v.variant.name] = v.report;
	}
	const std::vector<std::string> order{"PELT-WT-TCN", "PELT-WT-GRU", "PELT-WT-LSTM(multi)", "PELT-WT-LSTM(uni)",
	                                     "BP&ICSS-WT-LSTM"};
	bool strict = true;
	for (std::size_t i = 0; i + 1 < order.size(); ++i) {
		strict = strict && by_name[order[i]].rmse < by_name[order[i + 1]].rmse;
	}
	const auto imp = eval::improvement(by_name["BP&ICSS-WT-LSTM"], by_name["PELT-WT-TCN"]);
	const bool close = std::abs(imp.rmse_pct - 70.55) <= 10.0 && std::abs(imp.mae_pct - 74.42) <= 10.0;
	return verdict(strict && close, fmt("ordering %s; RMSE reduction %.2f%% (target 70.55 +-10), MAE reduction %.2f%% "
	                                    "(target 74.42 +-10); run dir %s",
	                                    strict ? "matches" : "DIFFERS", imp.rmse_pct, imp.mae_pct,
	                                    result.run_dir.string().c_str()));
}

struct Criterion {
	int id;
	const char *title;
	std::function<Outcome()> run;
};

} // namespace

int main(int argc, char **argv) {
	const std::vector<Criterion> criteria{
	    {1, "PELT-oracle equivalence", pelt_oracle},
	    {2, "PELT scaling", pelt_scaling},
	    {3, "DWT perfect reconstruction", dwt_reconstruction},
	    {4, "ICSS endpoints and calibration", icss_calibration},
	    {5, "Gradient checks", gradient_checks},
	    {6, "Synthetic end-to-end ordering", synthetic_ordering},
	    {7, "Metric arithmetic", metric_arithmetic},
	    {8, "Pipeline determinism", pipeline_determinism},
	    {9, "Reproduction mode", reproduction},
	};
	std::set<int> selected;
	for (int i = 1; i < argc; ++i) {
		selected.insert(std::atoi(argv[i]));
	}
	int failures = 0;
	for (const auto &c : criteria) {
		if (!selected.empty() && selected.count(c.id) == 0) {
			continue;
		}
		Outcome o;
		try {
			o = c.run();
		} catch (const std::exception &e) {
			o = {Outcome::Status::Fail, std::string("exception: ") + e.what()};
		}
		const char *tag = o.status == Outcome::Status::Pass ? "PASS" : o.status == Outcome::Status::Fail ? "FAIL" : "SKIP";
		failures += o.status == Outcome::Status::Fail ? 1 : 0;
		std::cout << "[" << tag << "] " << c.id << ". " << c.title << ": " << o.detail << std::endl;
	}
	return failures == 0 ? 0 : 1;
}
