#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "regimecast/ingest.hpp"
#include "test_support.hpp"

using namespace regimecast;
using namespace regimecast::ingest;
using testsupport::TempDir;

namespace {

FeatureFrame make_frame(std::size_t n) {
	FeatureFrame f;
	for (std::size_t i = 0; i < n; ++i) {
		f.timestamps.push_back(*parse_iso_date(testsupport::iso_day(static_cast<int>(i))));
		f.target.push_back(10.0 + static_cast<double>(i));
	}
	f.feature_names = {"gas"};
	f.features = {std::vector<double>(n)};
	for (std::size_t i = 0; i < n; ++i) {
		f.features[0][i] = std::sin(static_cast<double>(i));
	}
	return f;
}

} // namespace

TEST(LoadCsv, ThreeCompleteRows) {
	TempDir dir;
	const auto path = dir.write("a.csv", "date,price,gas,coal\n2020-01-01,10,30,1\n2020-01-02,11,31,2\n2020-01-03,12,32,3\n");
	const auto f = load_csv(path.string());
	EXPECT_EQ(f.rows(), 3u);
	EXPECT_EQ(f.feature_names, (std::vector<std::string>{"gas", "coal"}));
	EXPECT_EQ(f.target, (std::vector<double>{10, 11, 12}));
	EXPECT_NO_THROW(f.validate());
}

TEST(LoadCsv, ForwardFillsMissingFeature) {
	TempDir dir;
	const auto path = dir.write("a.csv", "date,price,gas\n2020-01-01,10,30.0\n2020-01-02,11,\n2020-01-03,12,29\n");
	const auto f = load_csv(path.string());
	EXPECT_DOUBLE_EQ(f.features[0][1], 30.0);
	EXPECT_DOUBLE_EQ(f.features[0][2], 29.0);
}

TEST(LoadCsv, SortsRowsByDate) {
	TempDir dir;
	const auto path = dir.write("a.csv", "date,price\n2020-01-03,12\n2020-01-01,10\n2020-01-02,11\n");
	const auto f = load_csv(path.string());
	EXPECT_EQ(f.target, (std::vector<double>{10, 11, 12}));
}

TEST(LoadCsv, DuplicateDateNamesTheDate) {
	TempDir dir;
	const auto path = dir.write("a.csv", "date,price\n2020-01-01,10\n2020-01-02,11\n2020-01-02,12\n");
	try {
		load_csv(path.string());
		FAIL() << "expected rejection";
	} catch (const DataError &e) {
		EXPECT_NE(std::string(e.what()).find("2020-01-02"), std::string::npos);
	}
}

TEST(LoadCsv, BadDateCarriesLineNumber) {
	TempDir dir;
	const auto path = dir.write("a.csv", "date,price\n2020-01-01,10\n2020-13-02,11\n");
	try {
		load_csv(path.string());
		FAIL() << "expected rejection";
	} catch (const DataError &e) {
		EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
	}
}

TEST(LoadCsv, MissingTargetRejected) {
	TempDir dir;
	const auto path = dir.write("a.csv", "date,price,gas\n2020-01-01,10,1\n2020-01-02,,2\n");
	EXPECT_THROW(load_csv(path.string()), DataError);
}

TEST(LoadCsv, FirstRowMustBeComplete) {
	TempDir dir;
	const auto path = dir.write("a.csv", "date,price,gas\n2020-01-01,10,\n2020-01-02,11,2\n");
	EXPECT_THROW(load_csv(path.string()), DataError);
}

TEST(LoadCsv, MissingFileRejected) { EXPECT_THROW(load_csv("/nonexistent/file.csv"), DataError); }

TEST(LoadCsv, ExplicitFeaturesAndExclusions) {
	TempDir dir;
	const auto path = dir.write("a.csv", "date,price,gas,coal,note\n2020-01-01,10,1,2,x\n2020-01-02,11,2,3,y\n");
	CsvSchema schema;
	schema.exclude = {"coal"};
	const auto auto_frame = load_csv(path.string(), schema);
	EXPECT_EQ(auto_frame.feature_names, (std::vector<std::string>{"gas"}));
	schema.features = {"coal"};
	EXPECT_EQ(load_csv(path.string(), schema).feature_names, (std::vector<std::string>{"coal"}));
}

TEST(Split, EightyTwenty) {
	const auto [train, test] = split_chronological(make_frame(100), {0.8, 0.1});
	EXPECT_EQ(train.rows(), 80u);
	EXPECT_EQ(test.rows(), 20u);
	EXPECT_LT(train.timestamps.back(), test.timestamps.front());
}

TEST(Split, FloorRule) {
	const auto [train, test] = split_chronological(make_frame(5), {0.8, 0.1});
	EXPECT_EQ(train.rows(), 4u);
	EXPECT_EQ(test.rows(), 1u);
}

TEST(Split, RejectsDegenerateFractions) {
	EXPECT_THROW(split_chronological(make_frame(10), {1.0, 0.1}), std::invalid_argument);
	EXPECT_THROW(split_chronological(make_frame(10), {0.0, 0.1}), std::invalid_argument);
	EXPECT_THROW(split_chronological(make_frame(2), {0.3, 0.1}), std::invalid_argument);
}

TEST(Split, ConcatenationReproducesFrame) {
	const auto frame = make_frame(37);
	const auto [train, test] = split_chronological(frame, {0.7, 0.1});
	auto joined = train.target;
	joined.insert(joined.end(), test.target.begin(), test.target.end());
	EXPECT_EQ(joined, frame.target);
}

TEST(Scaler, ZScoreArithmetic) {
	FeatureFrame f;
	f.target = {0.0, 2.0};
	const auto scaler = fit_scaler(f);
	EXPECT_DOUBLE_EQ(scaler.stats("price").mean, 1.0);
	EXPECT_DOUBLE_EQ(scaler.stats("price").stddev, 1.0);
	EXPECT_EQ(apply_scaler(scaler, f).target, (std::vector<double>{-1.0, 1.0}));
}

TEST(Scaler, ConstantColumnPassesThrough) {
	FeatureFrame f;
	f.target = {1.0, 2.0, 3.0};
	f.feature_names = {"flat"};
	f.features = {{5.0, 5.0, 5.0}};
	const auto scaler = fit_scaler(f);
	EXPECT_EQ(scaler.degenerate_columns(), (std::vector<std::string>{"flat"}));
	EXPECT_EQ(apply_scaler(scaler, f).features[0], f.features[0]);
}

TEST(Scaler, RoundTrip) {
	FeatureFrame f;
	f.target = testsupport::gaussian(200, 3, 7.0);
	const auto scaler = fit_scaler(f);
	const auto back = scaler.inverse_transform(scaler.transform(f));
	for (std::size_t i = 0; i < f.rows(); ++i) {
		EXPECT_NEAR(back.target[i], f.target[i], 1e-12);
	}
}

TEST(Scaler, UnfittedRejected) {
	Scaler s;
	EXPECT_THROW(s.transform(make_frame(3)), std::logic_error);
}

TEST(Scaler, StatisticsIgnoreTestRows) {
	const auto frame = make_frame(50);
	auto shifted = frame;
	for (std::size_t i = 40; i < 50; ++i) {
		shifted.target[i] = 1e6;
	}
	const auto a = fit_scaler(split_chronological(frame, {0.8, 0.1}).first);
	const auto b = fit_scaler(split_chronological(shifted, {0.8, 0.1}).first);
	EXPECT_EQ(a, b);
	EXPECT_NE(fit_scaler(shifted).stats("price").mean, a.stats("price").mean);
}

TEST(Regimes, SingleBreak) {
	const std::vector<std::size_t> b{3};
	const auto r = encode_regimes(b, 6);
	EXPECT_EQ(r.labels, (std::vector<std::size_t>{0, 0, 0, 1, 1, 1}));
	EXPECT_EQ(r.width, 2u);
}

TEST(Regimes, NoBreaks) {
	const auto r = encode_regimes(std::vector<std::size_t>{}, 4);
	EXPECT_EQ(r.labels, (std::vector<std::size_t>(4, 0)));
	EXPECT_EQ(r.width, 1u);
}

TEST(Regimes, TwoBreaks) {
	const auto r = encode_regimes(std::vector<std::size_t>{2, 4}, 6);
	EXPECT_EQ(r.labels, (std::vector<std::size_t>{0, 0, 1, 1, 2, 2}));
}

TEST(Regimes, OutOfRangeRejected) {
	EXPECT_THROW(encode_regimes(std::vector<std::size_t>{0}, 6), std::invalid_argument);
	EXPECT_THROW(encode_regimes(std::vector<std::size_t>{6}, 6), std::invalid_argument);
	EXPECT_THROW(encode_regimes(std::vector<std::size_t>{3, 3}, 6), std::invalid_argument);
}

TEST(Windows, CountFollowsFormula) {
	std::vector<double> y(100);
	std::iota(y.begin(), y.end(), 0.0);
	const auto ds = build_windows(y, {}, RegimeLabels{}, WindowSpec{30, 1});
	// n - T samples for stride 1: every step with a full window and a following target.
	EXPECT_EQ(ds.size(), 70u);
	EXPECT_EQ(ds.inputs.shape(), (std::vector<std::size_t>{70, 30, 1}));
	EXPECT_EQ(window_count(100, {30, 3}), 24u);
	EXPECT_EQ(build_windows(y, {}, RegimeLabels{}, WindowSpec{30, 3}).size(), 24u);
}

TEST(Windows, Boundary) {
	std::vector<double> y32(32, 1.0);
	std::vector<double> y31(31, 1.0);
	EXPECT_EQ(build_windows(y32, {}, RegimeLabels{}, WindowSpec{30, 1}).size(), 2u);
	std::vector<double> y30(30, 1.0);
	EXPECT_THROW(build_windows(y30, {}, RegimeLabels{}, WindowSpec{30, 1}), std::invalid_argument);
	EXPECT_EQ(build_windows(y31, {}, RegimeLabels{}, WindowSpec{30, 1}).size(), 1u);
}

TEST(Windows, DimensionOrderingAndAlignment) {
	const std::size_t n = 40;
	std::vector<double> y(n);
	std::iota(y.begin(), y.end(), 100.0);
	std::vector<std::vector<double>> feats{std::vector<double>(n), std::vector<double>(n)};
	for (std::size_t i = 0; i < n; ++i) {
		feats[0][i] = -static_cast<double>(i);
		feats[1][i] = 0.5 * static_cast<double>(i);
	}
	const auto regimes = encode_regimes(std::vector<std::size_t>{10, 25}, n);
	const auto ds = build_windows(y, feats, regimes, WindowSpec{5, 1});
	ASSERT_EQ(ds.dim(), 6u);
	for (std::size_t i = 0; i < ds.size(); ++i) {
		const auto t = ds.index_map[i];
		EXPECT_DOUBLE_EQ(ds.targets[i], y[t]);
		const auto last = ds.inputs.row(i, ds.window() - 1);
		EXPECT_DOUBLE_EQ(last[0], y[t - 1]);
		EXPECT_DOUBLE_EQ(last[1], feats[0][t - 1]);
		EXPECT_DOUBLE_EQ(last[2], feats[1][t - 1]);
		for (std::size_t s = 0; s < ds.window(); ++s) {
			const auto row = ds.inputs.row(i, s);
			EXPECT_DOUBLE_EQ(row[3] + row[4] + row[5], 1.0);
			EXPECT_DOUBLE_EQ(row[3 + regimes.labels[t - ds.window() + s]], 1.0);
		}
	}
}

TEST(Windows, SeparateLabelSeries) {
	std::vector<double> x(10, 0.0);
	std::vector<double> label(10);
	std::iota(label.begin(), label.end(), 0.0);
	const auto ds = build_windows(x, {}, RegimeLabels{}, label, WindowSpec{3, 2});
	EXPECT_EQ(ds.index_map, (std::vector<std::size_t>{3, 5, 7, 9}));
	EXPECT_EQ(ds.targets, (std::vector<double>{3, 5, 7, 9}));
}
