#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "regimecast/neural.hpp"
#include "test_support.hpp"

using namespace regimecast::neural;
using testsupport::random_batch;
using testsupport::random_targets;

namespace {

double sig(double x) { return 1.0 / (1.0 + std::exp(-x)); }

Matrix scalar(double v) { return Matrix::Constant(1, 1, v); }

LstmLayer constant_lstm_layer(std::size_t in, std::size_t h, double w, double b) {
	const auto i = static_cast<Eigen::Index>(in);
	const auto hh = static_cast<Eigen::Index>(h);
	return {Matrix::Constant(i, 4 * hh, w), Matrix::Constant(hh, 4 * hh, w), Matrix::Constant(1, 4 * hh, b)};
}

GruLayer constant_gru_layer(std::size_t in, std::size_t h, double w, double b) {
	const auto i = static_cast<Eigen::Index>(in);
	const auto hh = static_cast<Eigen::Index>(h);
	return {Matrix::Constant(i, 3 * hh, w), Matrix::Constant(hh, 3 * hh, w), Matrix::Constant(1, 3 * hh, b)};
}

Head unit_head(std::size_t h) {
	Head head{Matrix::Zero(static_cast<Eigen::Index>(h), 1), Matrix::Zero(1, 1)};
	head.weight(0, 0) = 1.0;
	return head;
}

ModelSpec small_spec(Architecture a, std::size_t dim) {
	ModelSpec s;
	s.architecture = a;
	s.input_dim = dim;
	s.hidden = 8;
	s.layers = 1;
	s.channels = 8;
	s.blocks = 2;
	s.kernel = 3;
	s.dropout = 0.0;
	return s;
}

template <class Model>
Model gradcheck_model(std::uint64_t seed);

template <>
LstmModel gradcheck_model<LstmModel>(std::uint64_t seed) {
	Rng rng(seed);
	return LstmModel::init({5, 6, 2, 0.0}, rng);
}

template <>
GruModel gradcheck_model<GruModel>(std::uint64_t seed) {
	Rng rng(seed);
	return GruModel::init({5, 6, 2, 0.0}, rng);
}

template <>
TcnModel gradcheck_model<TcnModel>(std::uint64_t seed) {
	Rng rng(seed);
	auto m = TcnModel::init({4, 6, 2, 3, 0.0}, rng);
	// Move biases off zero so ReLU kinks sit away from the probe points.
	Rng bias_rng(seed + 1);
	for (auto &blk : m.params().blocks) {
		fill_uniform(blk.conv1.b, bias_rng, 0.5);
		fill_uniform(blk.conv2.b, bias_rng, 0.5);
	}
	return m;
}

template <class Model>
class NeuralModel : public ::testing::Test {};

using ModelTypes = ::testing::Types<LstmModel, GruModel, TcnModel>;
TYPED_TEST_SUITE(NeuralModel, ModelTypes);

} // namespace

TEST(LstmCell, ZeroWeightsGiveZeroState) {
	const auto layer = constant_lstm_layer(3, 4, 0.0, 0.0);
	const auto out = lstm_cell_forward(Matrix::Ones(2, 3), Matrix::Zero(2, 4), Matrix::Zero(2, 4), layer);
	EXPECT_EQ(out.c.cwiseAbs().maxCoeff(), 0.0);
	EXPECT_EQ(out.h.cwiseAbs().maxCoeff(), 0.0);
}

TEST(LstmCell, SaturatedForgetGateKeepsMemory) {
	auto layer = constant_lstm_layer(1, 1, 0.0, 0.0);
	layer.b(0, 0) = 50.0;
	const auto out = lstm_cell_forward(scalar(0.7), scalar(0.0), scalar(1.0), layer);
	EXPECT_NEAR(out.c(0, 0), 1.0, 1e-9);
}

TEST(LstmCell, MatchesScalarOracle) {
	const auto layer = constant_lstm_layer(1, 1, 0.5, 0.1);
	const double z = 0.3;
	const double h = 0.2;
	const double c = 0.4;
	const double pre = 0.5 * z + 0.5 * h + 0.1;
	const double f = sig(pre);
	const double i = sig(pre);
	const double a = std::tanh(pre);
	const double o = sig(pre);
	const double c_new = f * c + i * a;
	const double h_new = o * std::tanh(c_new);
	const auto out = lstm_cell_forward(scalar(z), scalar(h), scalar(c), layer);
	EXPECT_NEAR(out.c(0, 0), c_new, 1e-12);
	EXPECT_NEAR(out.h(0, 0), h_new, 1e-12);
}

TEST(LstmCell, DistinctGateBlocks) {
	// Only the input gate bias is large and only the candidate weight is non-zero.
	LstmLayer layer = constant_lstm_layer(1, 1, 0.0, 0.0);
	layer.b(0, 1) = 50.0;
	layer.W(0, 2) = 1.0;
	const auto out = lstm_cell_forward(scalar(0.25), scalar(0.0), scalar(0.6), layer);
	EXPECT_NEAR(out.c(0, 0), 0.5 * 0.6 + std::tanh(0.25), 1e-12);
	EXPECT_NEAR(out.h(0, 0), 0.5 * std::tanh(out.c(0, 0)), 1e-12);
}

TEST(LstmCell, RejectsShapeMismatch) {
	const auto layer = constant_lstm_layer(3, 4, 0.1, 0.0);
	EXPECT_THROW(lstm_cell_forward(Matrix::Ones(1, 2), Matrix::Zero(1, 4), Matrix::Zero(1, 4), layer),
	             std::invalid_argument);
	EXPECT_THROW(lstm_cell_forward(Matrix::Ones(1, 3), Matrix::Zero(2, 4), Matrix::Zero(1, 4), layer),
	             std::invalid_argument);
}

TEST(GruCell, ZeroWeightsHalveState) {
	const auto layer = constant_gru_layer(2, 3, 0.0, 0.0);
	Matrix h(1, 3);
	h << 0.4, -1.0, 2.0;
	const auto out = gru_cell_forward(Matrix::Ones(1, 2), h, layer);
	EXPECT_LT((out - 0.5 * h).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(GruCell, ClosedUpdateGateKeepsState) {
	auto layer = constant_gru_layer(1, 1, 0.3, 0.0);
	layer.b(0, 0) = -50.0;
	const auto out = gru_cell_forward(scalar(0.9), scalar(0.35), layer);
	EXPECT_NEAR(out(0, 0), 0.35, 1e-9);
}

TEST(GruCell, MatchesScalarOracle) {
	const auto layer = constant_gru_layer(1, 1, 0.5, 0.5);
	const double z = 0.3;
	const double h = 0.2;
	const double u = sig(0.5 * z + 0.5 * h + 0.5);
	const double r = sig(0.5 * z + 0.5 * h + 0.5);
	const double n = std::tanh(0.5 * z + 0.5 * (r * h) + 0.5);
	const double expected = (1.0 - u) * h + u * n;
	EXPECT_NEAR(gru_cell_forward(scalar(z), scalar(h), layer)(0, 0), expected, 1e-12);
}

TEST(GruCell, RejectsShapeMismatch) {
	const auto layer = constant_gru_layer(2, 3, 0.1, 0.0);
	EXPECT_THROW(gru_cell_forward(Matrix::Ones(1, 3), Matrix::Zero(1, 3), layer), std::invalid_argument);
}

TEST(Sequence, SingleStepReducesToCell) {
	const LstmConfig lc{1, 1, 1, 0.0};
	LstmParams lp{{constant_lstm_layer(1, 1, 0.5, 0.1)}, unit_head(1)};
	const LstmModel lstm(lc, lp);
	const SequenceBatch x{scalar(0.3), 1, 1};
	const auto cell = lstm_cell_forward(scalar(0.3), scalar(0.0), scalar(0.0), lp.layers[0]);
	EXPECT_NEAR(lstm.predict(x)(0, 0), cell.h(0, 0), 1e-15);

	const GruConfig gc{1, 1, 1, 0.0};
	GruParams gp{{constant_gru_layer(1, 1, 0.5, 0.5)}, unit_head(1)};
	const GruModel gru(gc, gp);
	EXPECT_NEAR(gru.predict(x)(0, 0), gru_cell_forward(scalar(0.3), scalar(0.0), gp.layers[0])(0, 0), 1e-15);
}

TEST(Tcn, IdentitySetupReproducesLastInput) {
	const TcnConfig config{1, 1, 1, 3, 0.0};
	TcnBlock block;
	block.conv1 = {Matrix::Zero(3, 1), scalar(1.0), scalar(0.0)};
	block.conv1.v(2, 0) = 1.0; // current step
	block.conv2 = {Matrix::Ones(3, 1), scalar(0.0), scalar(0.0)};
	TcnParams params{{block}, unit_head(1)};
	const TcnModel model(config, params);
	auto x = random_batch(12, 3, 1, 5);
	x.data = x.data.cwiseAbs();
	const auto y = model.predict(x);
	for (std::size_t b = 0; b < 3; ++b) {
		EXPECT_NEAR(y(static_cast<Eigen::Index>(b), 0), x.step(11)(static_cast<Eigen::Index>(b), 0), 1e-15);
	}
}

TEST(Tcn, CausalAtEveryStep) {
	Rng rng(17);
	const auto model = TcnModel::init({3, 6, 3, 3, 0.0}, rng);
	const std::size_t T = 16;
	const std::size_t B = 2;
	const auto x = random_batch(T, B, 3, 3);
	const Matrix base = model.features(x);
	for (std::size_t t0 = 0; t0 < T; ++t0) {
		auto y = x;
		y.step(t0).array() += 3.0;
		const Matrix moved = model.features(y);
		for (std::size_t t = 0; t < T; ++t) {
			const auto rows = static_cast<Eigen::Index>(t * B);
			const double change =
			    (moved.middleRows(rows, static_cast<Eigen::Index>(B)) - base.middleRows(rows, static_cast<Eigen::Index>(B)))
			        .cwiseAbs()
			        .maxCoeff();
			if (t < t0) {
				EXPECT_EQ(change, 0.0) << "step " << t << " moved by input at " << t0;
			} else if (t == t0) {
				EXPECT_GT(change, 0.0);
			}
		}
	}
}

TEST(Tcn, ReceptiveFieldMatchesDependencyTrace) {
	const TcnConfig config{1, 4, 4, 3, 0.0};
	EXPECT_EQ(config.receptive_field(), 61u);
	Rng rng(2);
	auto model = TcnModel::init(config, rng);
	// Keep every unit active so that any dependency shows up in the output.
	for (auto &blk : model.params().blocks) {
		blk.conv1.b.setConstant(50.0);
		blk.conv2.b.setConstant(50.0);
		blk.conv1.v = blk.conv1.v.cwiseAbs();
		blk.conv2.v = blk.conv2.v.cwiseAbs();
	}
	const std::size_t T = 80;
	const auto x = random_batch(T, 1, 1, 9);
	const double base = model.predict(x)(0, 0);
	std::size_t earliest = T;
	for (std::size_t s = 0; s < T; ++s) {
		auto y = x;
		y.step(s).array() += 1.0;
		if (model.predict(y)(0, 0) != base) {
			earliest = std::min(earliest, s);
		}
	}
	EXPECT_EQ(T - earliest, config.receptive_field());
}

TEST(Tcn, RejectsDimensionMismatch) {
	Rng rng(1);
	const auto model = TcnModel::init({3, 4, 2, 3, 0.0}, rng);
	EXPECT_THROW(model.predict(random_batch(5, 2, 2, 1)), std::invalid_argument);
}

TYPED_TEST(NeuralModel, BatchOfOneMatchesBatched) {
	const auto model = gradcheck_model<TypeParam>(3);
	const auto x = random_batch(7, 5, model.input_dim(), 11);
	const Matrix all = model.predict(x);
	for (std::size_t b = 0; b < 5; ++b) {
		SequenceBatch one{Matrix(7, x.data.cols()), 7, 1};
		for (std::size_t t = 0; t < 7; ++t) {
			one.step(t) = x.step(t).row(static_cast<Eigen::Index>(b));
		}
		EXPECT_NEAR(model.predict(one)(0, 0), all(static_cast<Eigen::Index>(b), 0), 1e-13);
	}
}

TYPED_TEST(NeuralModel, PermutingBatchPermutesOutputs) {
	const auto model = gradcheck_model<TypeParam>(4);
	const auto x = random_batch(6, 4, model.input_dim(), 12);
	const std::vector<Eigen::Index> perm{2, 0, 3, 1};
	auto shuffled = x;
	for (std::size_t t = 0; t < 6; ++t) {
		for (Eigen::Index b = 0; b < 4; ++b) {
			shuffled.step(t).row(b) = x.step(t).row(perm[static_cast<std::size_t>(b)]);
		}
	}
	const Matrix a = model.predict(x);
	const Matrix c = model.predict(shuffled);
	for (Eigen::Index b = 0; b < 4; ++b) {
		EXPECT_NEAR(c(b, 0), a(perm[static_cast<std::size_t>(b)], 0), 1e-13);
	}
}

TYPED_TEST(NeuralModel, GradientsMatchFiniteDifferences) {
	const auto model = gradcheck_model<TypeParam>(21);
	const auto x = random_batch(8, 3, model.input_dim(), 22);
	const auto y = random_targets(3, 23);
	const auto check = testsupport::gradient_check(model, x, y, 250, 24);
	EXPECT_GE(check.probed, 200u);
	EXPECT_LT(check.max_relative_error, 1e-4);
}

TYPED_TEST(NeuralModel, ZeroErrorGivesZeroGradient) {
	const auto model = gradcheck_model<TypeParam>(5);
	const auto x = random_batch(5, 4, model.input_dim(), 6);
	const Matrix y = model.predict(x);
	auto grad = zeros_like(model.params());
	EXPECT_EQ(model.loss_and_gradient(x, y, 1.0, grad, nullptr), 0.0);
	EXPECT_EQ(grad.head.bias(0, 0), 0.0);
	for (double g : flatten(grad)) {
		EXPECT_EQ(g, 0.0);
	}
}

TYPED_TEST(NeuralModel, LossScaleDoublesGradient) {
	const auto model = gradcheck_model<TypeParam>(7);
	const auto x = random_batch(5, 4, model.input_dim(), 8);
	const auto y = random_targets(4, 9);
	auto g1 = zeros_like(model.params());
	auto g2 = zeros_like(model.params());
	const double l1 = model.loss_and_gradient(x, y, 1.0, g1, nullptr);
	const double l2 = model.loss_and_gradient(x, y, 2.0, g2, nullptr);
	EXPECT_DOUBLE_EQ(l2, 2.0 * l1);
	const auto a = flatten(g1);
	const auto b = flatten(g2);
	for (std::size_t k = 0; k < a.size(); ++k) {
		EXPECT_NEAR(b[k], 2.0 * a[k], 1e-13 * (1.0 + std::abs(a[k])));
	}
}

TYPED_TEST(NeuralModel, DropoutOnlyWhenRngGiven) {
	Rng rng(1);
	ModelSpec spec = small_spec(Architecture::Lstm, 3);
	spec.dropout = 0.5;
	spec.layers = 2;
	if constexpr (std::is_same_v<TypeParam, GruModel>) {
		spec.architecture = Architecture::Gru;
	} else if constexpr (std::is_same_v<TypeParam, TcnModel>) {
		spec.architecture = Architecture::Tcn;
	}
	const auto model = std::get<TypeParam>(make_model(spec, rng));
	const auto x = random_batch(6, 4, 3, 2);
	const auto y = random_targets(4, 3);
	auto g = zeros_like(model.params());
	const double plain = model.loss_and_gradient(x, y, 1.0, g, nullptr);
	EXPECT_DOUBLE_EQ(plain, mse_loss(model.predict(x), y, 1.0, nullptr));
	Rng drop(99);
	const double dropped = model.loss_and_gradient(x, y, 1.0, g, &drop);
	EXPECT_NE(dropped, plain);
}

namespace {

struct ScalarParams {
	Matrix w;

	template <class Self, class F>
	static void visit(Self &p, F &&f) {
		f("w", p.w);
	}
};

struct TwoParams {
	Matrix a;
	Matrix b;

	template <class Self, class F>
	static void visit(Self &p, F &&f) {
		f("a", p.a);
		f("b", p.b);
	}
};

} // namespace

TEST(Adam, ZeroGradientLeavesParameters) {
	ScalarParams p{scalar(0.75)};
	const ScalarParams g{scalar(0.0)};
	AdamState<ScalarParams> state(p);
	for (int k = 0; k < 5; ++k) {
		adam_step(p, g, state, AdamConfig{});
	}
	EXPECT_EQ(p.w(0, 0), 0.75);
}

TEST(Adam, FirstStepIsSignedLearningRate) {
	for (double g : {3.2, -0.5, 0.1, -250.0}) {
		ScalarParams p{scalar(1.0)};
		AdamState<ScalarParams> state(p);
		AdamConfig config;
		config.learning_rate = 0.01;
		adam_step(p, ScalarParams{scalar(g)}, state, config);
		EXPECT_NEAR(p.w(0, 0) - 1.0, -0.01 * (g > 0 ? 1.0 : -1.0), 0.01 * 1e-6);
	}
}

TEST(Adam, ThreeStepTraceMatchesFormula) {
	const AdamConfig config;
	ScalarParams p{scalar(0.5)};
	AdamState<ScalarParams> state(p);
	double w = 0.5;
	double m = 0.0;
	double v = 0.0;
	for (int t = 1; t <= 3; ++t) {
		adam_step(p, ScalarParams{scalar(1.0)}, state, config);
		m = 0.9 * m + 0.1;
		v = 0.999 * v + 0.001;
		const double mhat = m / (1.0 - std::pow(0.9, t));
		const double vhat = v / (1.0 - std::pow(0.999, t));
		w -= 0.001 * mhat / (std::sqrt(vhat) + 1e-8);
		EXPECT_NEAR(p.w(0, 0), w, 1e-15);
	}
	EXPECT_NEAR(p.w(0, 0), 0.5 - 3.0 * 0.001 / (1.0 + 1e-8), 1e-15);
	EXPECT_EQ(state.step, 3u);
}

TEST(Adam, RejectsStructureMismatch) {
	TwoParams p{scalar(1.0), Matrix::Zero(2, 1)};
	AdamState<TwoParams> state(p);
	EXPECT_THROW(adam_step(p, TwoParams{scalar(1.0), Matrix::Zero(3, 1)}, state, AdamConfig{}), std::invalid_argument);
}

TEST(Training, ConfigValidation) {
	TrainingConfig c;
	c.patience = 60;
	EXPECT_THROW(c.validate(), std::invalid_argument);
	c = TrainingConfig{};
	c.validation_fraction = 1.0;
	EXPECT_THROW(c.validate(), std::invalid_argument);
	c = TrainingConfig{};
	c.adam.beta1 = 1.0;
	EXPECT_THROW(c.validate(), std::invalid_argument);
	EXPECT_NO_THROW(TrainingConfig{}.validate());
}

TEST(Training, EmptyValidationRejected) {
	const auto ds = testsupport::decay_windows(5, 4, 1);
	TrainingConfig c;
	EXPECT_THROW(train(small_spec(Architecture::Gru, 1), ds, c), std::invalid_argument);
	EXPECT_THROW(train(small_spec(Architecture::Gru, 2), testsupport::decay_windows(50, 4, 1), c),
	             std::invalid_argument);
}

TEST(Training, SameSeedIsBitwiseIdentical) {
	const auto ds = testsupport::decay_windows(120, 6, 4);
	TrainingConfig c;
	c.max_epochs = 4;
	c.patience = 4;
	c.batch_size = 16;
	c.seed = 77;
	for (auto arch : {Architecture::Lstm, Architecture::Gru, Architecture::Tcn}) {
		auto spec = small_spec(arch, 1);
		spec.dropout = 0.2;
		spec.layers = 2;
		const auto a = train(spec, ds, c);
		const auto b = train(spec, ds, c);
		ASSERT_EQ(a.history.size(), b.history.size());
		for (std::size_t e = 0; e < a.history.size(); ++e) {
			EXPECT_EQ(a.history[e].train_mse, b.history[e].train_mse);
			EXPECT_EQ(a.history[e].val_mse, b.history[e].val_mse);
		}
		EXPECT_EQ(predict_raw(a.model, ds), predict_raw(b.model, ds));
		c.seed += 1;
		const auto other = train(spec, ds, c);
		EXPECT_NE(predict_raw(a.model, ds), predict_raw(other.model, ds));
		c.seed -= 1;
	}
}

TEST(Training, ConstantValidationStopsAfterPatience) {
	const auto ds = testsupport::decay_windows(80, 5, 2);
	TrainingConfig c;
	c.adam.learning_rate = 0.0;
	c.max_epochs = 40;
	c.patience = 6;
	const auto m = train(small_spec(Architecture::Lstm, 1), ds, c);
	EXPECT_EQ(m.history.size(), 7u);
	EXPECT_EQ(m.best_epoch, 1u);
}

TEST(Training, ReturnsBestValidationSnapshot) {
	const auto ds = testsupport::decay_windows(200, 6, 6);
	TrainingConfig c;
	c.max_epochs = 12;
	c.batch_size = 16;
	c.adam.learning_rate = 0.05; // large enough to make validation loss bounce
	const auto m = train(small_spec(Architecture::Gru, 1), ds, c);
	double best = std::numeric_limits<double>::infinity();
	for (const auto &r : m.history) {
		best = std::min(best, r.val_mse);
	}
	const auto val = ds.subset(ds.size() - validation_count(ds.size(), 0.1), ds.size());
	EXPECT_EQ(std::visit([&](const auto &model) { return mean_squared_error(model, val); }, m.model), best);
	EXPECT_EQ(m.history[m.best_epoch - 1].val_mse, best);
	EXPECT_LE(m.history.size(), c.max_epochs);
}

TYPED_TEST(NeuralModel, LearnsLinearDecay) {
	const auto ds = testsupport::decay_windows(500, 10, 31);
	Architecture arch = Architecture::Lstm;
	if constexpr (std::is_same_v<TypeParam, GruModel>) {
		arch = Architecture::Gru;
	} else if constexpr (std::is_same_v<TypeParam, TcnModel>) {
		arch = Architecture::Tcn;
	}
	TrainingConfig c;
	c.adam.learning_rate = 0.01;
	c.batch_size = 32;
	c.max_epochs = 60;
	c.patience = 15;
	const auto m = train(small_spec(arch, 1), ds, c);
	double best = std::numeric_limits<double>::infinity();
	for (const auto &r : m.history) {
		best = std::min(best, r.val_mse);
	}
	EXPECT_LT(best, 1e-3) << to_string(arch);
}

TEST(Predict, InverseScalingAndAlignment) {
	const auto ds = testsupport::decay_windows(40, 5, 8);
	TrainingConfig c;
	c.max_epochs = 2;
	c.patience = 2;
	auto m = train(small_spec(Architecture::Tcn, 1), ds, c);
	const auto raw = predict_raw(m.model, ds);
	EXPECT_EQ(predict(m, ds), raw);
	m.target_scaling = {"target", 5.0, 2.0, false};
	const auto scaled = predict(m, ds);
	ASSERT_EQ(scaled.size(), ds.index_map.size());
	for (std::size_t i = 0; i < raw.size(); ++i) {
		EXPECT_NEAR(scaled[i], raw[i] * 2.0 + 5.0, 1e-9);
	}
	regimecast::ingest::WindowedDataset wide;
	wide.inputs = regimecast::Tensor({2, 5, 2});
	wide.targets = {0.0, 0.0};
	wide.index_map = {5, 6};
	EXPECT_THROW(predict(m, wide), std::invalid_argument);
}

TEST(Checkpoint, RoundTripPreservesPredictions) {
	testsupport::TempDir dir;
	const auto ds = testsupport::decay_windows(60, 5, 9);
	TrainingConfig c;
	c.max_epochs = 3;
	c.patience = 3;
	for (auto arch : {Architecture::Lstm, Architecture::Gru, Architecture::Tcn}) {
		auto spec = small_spec(arch, 1);
		spec.layers = 2;
		auto m = train(spec, ds, c);
		m.target_scaling = {"price", 3.0, 0.5, false};
		const auto path = (dir / (std::string(to_string(arch)) + ".json")).string();
		save_checkpoint(m, path);
		const auto back = load_checkpoint(path);
		EXPECT_EQ(predict(back, ds), predict(m, ds));
		EXPECT_EQ(to_json(back).dump(), to_json(m).dump());
		EXPECT_EQ(back.history.size(), m.history.size());
		EXPECT_EQ(back.best_epoch, m.best_epoch);
		EXPECT_EQ(back.seed, m.seed);
	}
}

TEST(Checkpoint, RejectsTamperedShapes) {
	const auto ds = testsupport::decay_windows(60, 5, 9);
	TrainingConfig c;
	c.max_epochs = 1;
	c.patience = 1;
	auto j = to_json(train(small_spec(Architecture::Lstm, 1), ds, c));
	j["parameters"]["head.weight"]["rows"] = 3;
	EXPECT_THROW(trained_model_from_json(j), regimecast::DataError);
	auto v = to_json(train(small_spec(Architecture::Lstm, 1), ds, c));
	v["format_version"] = 99;
	EXPECT_THROW(trained_model_from_json(v), regimecast::DataError);
	EXPECT_THROW(load_checkpoint("/nonexistent/checkpoint.json"), regimecast::DataError);
}
