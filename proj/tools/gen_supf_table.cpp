// Regenerates include/regimecast/breaks/supf_table.hpp from a large Monte Carlo run of the
// one-break sup-Wald limit. Usage: gen_supf_table [output] [replications] [grid]
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "regimecast/breaks/supf_critical_values.hpp"

int main(int argc, char **argv) {
	const std::string output = argc > 1 ? argv[1] : "supf_table.hpp";
	const std::size_t replications = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 50000;
	const std::size_t grid = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 1000;
	const std::vector<double> trims{0.05, 0.10, 0.15, 0.20, 0.25};
	const std::vector<double> alphas{0.10, 0.05, 0.025, 0.01};
	constexpr std::size_t max_regressors = 5;
	constexpr std::size_t max_existing = 4;

	std::ofstream out(output);
	if (!out) {
		std::cerr << "cannot write " << output << '\n';
		return 1;
	}
	out << "#pragma once\n\n#include <array>\n#include <cmath>\n#include <cstddef>\n#include <optional>\n\n"
	    << "namespace regimecast::breaks::supf_table {\n\n"
	    << "// Generated by tools/gen_supf_table (" << replications << " replications, grid " << grid << ").\n"
	    << "// Quantiles of the one-break sup-Wald limit at probability (1 - alpha)^(1 / (l + 1)).\n\n"
	    << "struct Entry {\n\tstd::size_t regressors;\n\tdouble trim;\n\tdouble alpha;\n\tstd::size_t existing;\n"
	    << "\tdouble value;\n};\n\n";

	std::vector<std::string> rows;
	for (std::size_t q = 1; q <= max_regressors; ++q) {
		std::cerr << "simulating q=" << q << '\n';
		const auto samples = regimecast::breaks::simulate_supf_samples(q, trims, replications, grid, 0xC0FFEEULL + q);
		for (std::size_t t = 0; t < trims.size(); ++t) {
			for (double alpha : alphas) {
				for (std::size_t l = 0; l <= max_existing; ++l) {
					const double p = regimecast::breaks::sequential_probability(alpha, l);
					char buf[160];
					std::snprintf(buf, sizeof buf, "\t{%zu, %.2f, %.3f, %zu, %.4f},", q, trims[t], alpha, l,
					              regimecast::breaks::sample_quantile(samples[t], p));
					rows.emplace_back(buf);
				}
			}
		}
	}
	out << "inline constexpr std::array<Entry, " << rows.size() << "> entries{{\n";
	for (const auto &r : rows) {
		out << r << '\n';
	}
	out << "}};\n\n"
	    << "inline std::optional<double> lookup(std::size_t regressors, double trim, double alpha, std::size_t existing) {\n"
	    << "\tfor (const auto &e : entries) {\n"
	    << "\t\tif (e.regressors == regressors && e.existing == existing && std::abs(e.trim - trim) < 1e-9 &&\n"
	    << "\t\t    std::abs(e.alpha - alpha) < 1e-9) {\n"
	    << "\t\t\treturn e.value;\n\t\t}\n\t}\n\treturn std::nullopt;\n}\n\n"
	    << "} // namespace regimecast::breaks::supf_table\n";
	return 0;
}
