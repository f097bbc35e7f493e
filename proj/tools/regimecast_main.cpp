#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "regimecast/eval.hpp"
#include "regimecast/pipeline.hpp"

namespace {

using Overrides = std::vector<std::pair<std::string, std::string>>;

/// Turns leftover `--a.b value` / `--a.b=value` tokens into override pairs.
Overrides parse_overrides(const std::vector<std::string> &extras) {
	Overrides out;
	for (std::size_t i = 0; i < extras.size(); ++i) {
		const auto &token = extras[i];
		if (token.rfind("--", 0) != 0 || token.size() < 3) {
			throw regimecast::ConfigError("unexpected argument '" + token + "' (overrides look like --key.path VALUE)");
		}
		auto key = token.substr(2);
		if (const auto eq = key.find('='); eq != std::string::npos) {
			out.emplace_back(key.substr(0, eq), key.substr(eq + 1));
			continue;
		}
		if (i + 1 >= extras.size()) {
			throw regimecast::ConfigError("override --" + key + " has no value");
		}
		out.emplace_back(std::move(key), extras[++i]);
	}
	return out;
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"regimecast: structural breaks, wavelet denoising and neural forecasting of price series"};
	app.set_version_flag("--version", std::string(regimecast::pipeline::tool_version));
	app.require_subcommand(1);
	app.footer("Any config field can be overridden with --dotted.path VALUE, e.g. --training.max_epochs 5.\n"
	           "Outputs go to a fresh run directory under output_dir, $REGIMECAST_OUT, or ./runs.");

	std::string config_path;
	struct Command {
		const char *name;
		const char *help;
		regimecast::pipeline::RunResult (*run)(const regimecast::pipeline::RunConfig &);
	};
	const std::vector<Command> commands{
	    {"detect", "structural breaks per column -> breaks.json", regimecast::pipeline::cmd_detect},
	    {"denoise", "wavelet approximation of the target -> denoised.csv", regimecast::pipeline::cmd_denoise},
	    {"train", "train one architecture -> checkpoint.json, history.json", regimecast::pipeline::cmd_train},
	    {"evaluate", "score a checkpoint on the test split -> metrics.json, residuals.csv",
	     regimecast::pipeline::cmd_evaluate},
	    {"pipeline", "all stages for every variant, plus ranking.json", regimecast::pipeline::cmd_pipeline},
	};
	std::vector<CLI::App *> subs;
	for (const auto &c : commands) {
		auto *sub = app.add_subcommand(c.name, c.help);
		sub->add_option("-c,--config", config_path, "JSON config file")->check(CLI::ExistingFile);
		sub->allow_extras();
		subs.push_back(sub);
	}

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		const int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	try {
		for (std::size_t i = 0; i < commands.size(); ++i) {
			if (!subs[i]->parsed()) {
				continue;
			}
			const auto config = regimecast::pipeline::load_config(config_path, parse_overrides(subs[i]->remaining()));
			const auto result = commands[i].run(config);
			std::cout << "run_dir=" << result.run_dir.string() << '\n';
			if (!result.ranking.empty()) {
				std::cout << regimecast::eval::format_table(result.ranking);
			}
		}
	} catch (const regimecast::ConfigError &e) {
		std::cerr << "regimecast: config error: " << e.what() << '\n';
		return 2;
	} catch (const std::exception &e) {
		std::cerr << "regimecast: error: " << e.what() << '\n';
		return 1;
	}
	return 0;
}
