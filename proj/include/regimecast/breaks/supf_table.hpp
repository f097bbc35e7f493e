#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>

namespace regimecast::breaks::supf_table {

// Generated by tools/gen_supf_table (50000 replications, grid 1000).
// Quantiles of the one-break sup-Wald limit at probability (1 - alpha)^(1 / (l + 1)).

struct Entry {
	std::size_t regressors;
	double trim;
	double alpha;
	std::size_t existing;
	double value;
};

inline constexpr std::array<Entry, 500> entries{{
	{1, 0.05, 0.100, 0, 8.0622},
	{1, 0.05, 0.100, 1, 9.6096},
	{1, 0.05, 0.100, 2, 10.4819},
	{1, 0.05, 0.100, 3, 11.1621},
	{1, 0.05, 0.100, 4, 11.6567},
	{1, 0.05, 0.050, 0, 9.6792},
	{1, 0.05, 0.050, 1, 11.2288},
	{1, 0.05, 0.050, 2, 12.0977},
	{1, 0.05, 0.050, 3, 12.6329},
	{1, 0.05, 0.050, 4, 13.1508},
	{1, 0.05, 0.025, 0, 11.2547},
	{1, 0.05, 0.025, 1, 12.6829},
	{1, 0.05, 0.025, 2, 13.4994},
	{1, 0.05, 0.025, 3, 14.1875},
	{1, 0.05, 0.025, 4, 14.5821},
	{1, 0.05, 0.010, 0, 13.1804},
	{1, 0.05, 0.010, 1, 14.5878},
	{1, 0.05, 0.010, 2, 15.5223},
	{1, 0.05, 0.010, 3, 16.0943},
	{1, 0.05, 0.010, 4, 16.4894},
	{1, 0.10, 0.100, 0, 7.5133},
	{1, 0.10, 0.100, 1, 9.0410},
	{1, 0.10, 0.100, 2, 9.9550},
	{1, 0.10, 0.100, 3, 10.5763},
	{1, 0.10, 0.100, 4, 11.1336},
	{1, 0.10, 0.050, 0, 9.1175},
	{1, 0.10, 0.050, 1, 10.6363},
	{1, 0.10, 0.050, 2, 11.5860},
	{1, 0.10, 0.050, 3, 12.1757},
	{1, 0.10, 0.050, 4, 12.6009},
	{1, 0.10, 0.025, 0, 10.6893},
	{1, 0.10, 0.025, 1, 12.2050},
	{1, 0.10, 0.025, 2, 13.0301},
	{1, 0.10, 0.025, 3, 13.5845},
	{1, 0.10, 0.025, 4, 14.0652},
	{1, 0.10, 0.010, 0, 12.6348},
	{1, 0.10, 0.010, 1, 14.0824},
	{1, 0.10, 0.010, 2, 14.9450},
	{1, 0.10, 0.010, 3, 15.5193},
	{1, 0.10, 0.010, 4, 15.9029},
	{1, 0.15, 0.100, 0, 7.1049},
	{1, 0.15, 0.100, 1, 8.6338},
	{1, 0.15, 0.100, 2, 9.5228},
	{1, 0.15, 0.100, 3, 10.1703},
	{1, 0.15, 0.100, 4, 10.6200},
	{1, 0.15, 0.050, 0, 8.6879},
	{1, 0.15, 0.050, 1, 10.2310},
	{1, 0.15, 0.050, 2, 11.1415},
	{1, 0.15, 0.050, 3, 11.7540},
	{1, 0.15, 0.050, 4, 12.2202},
	{1, 0.15, 0.025, 0, 10.2612},
	{1, 0.15, 0.025, 1, 11.7692},
	{1, 0.15, 0.025, 2, 12.5768},
	{1, 0.15, 0.025, 3, 13.1803},
	{1, 0.15, 0.025, 4, 13.5960},
	{1, 0.15, 0.010, 0, 12.2655},
	{1, 0.15, 0.010, 1, 13.6126},
	{1, 0.15, 0.010, 2, 14.3870},
	{1, 0.15, 0.010, 3, 15.1419},
	{1, 0.15, 0.010, 4, 15.6202},
	{1, 0.20, 0.100, 0, 6.6986},
	{1, 0.20, 0.100, 1, 8.2189},
	{1, 0.20, 0.100, 2, 9.1182},
	{1, 0.20, 0.100, 3, 9.7276},
	{1, 0.20, 0.100, 4, 10.2787},
	{1, 0.20, 0.050, 0, 8.2798},
	{1, 0.20, 0.050, 1, 9.7916},
	{1, 0.20, 0.050, 2, 10.7001},
	{1, 0.20, 0.050, 3, 11.3804},
	{1, 0.20, 0.050, 4, 11.8526},
	{1, 0.20, 0.025, 0, 9.8218},
	{1, 0.20, 0.025, 1, 11.4078},
	{1, 0.20, 0.025, 2, 12.2257},
	{1, 0.20, 0.025, 3, 12.7193},
	{1, 0.20, 0.025, 4, 13.2014},
	{1, 0.20, 0.010, 0, 11.8893},
	{1, 0.20, 0.010, 1, 13.2059},
	{1, 0.20, 0.010, 2, 14.0652},
	{1, 0.20, 0.010, 3, 14.5781},
	{1, 0.20, 0.010, 4, 15.1478},
	{1, 0.25, 0.100, 0, 6.3309},
	{1, 0.25, 0.100, 1, 7.7739},
	{1, 0.25, 0.100, 2, 8.7202},
	{1, 0.25, 0.100, 3, 9.3029},
	{1, 0.25, 0.100, 4, 9.8124},
	{1, 0.25, 0.050, 0, 7.8299},
	{1, 0.25, 0.050, 1, 9.3621},
	{1, 0.25, 0.050, 2, 10.3183},
	{1, 0.25, 0.050, 3, 10.9335},
	{1, 0.25, 0.050, 4, 11.4384},
	{1, 0.25, 0.025, 0, 9.4040},
	{1, 0.25, 0.025, 1, 10.9828},
	{1, 0.25, 0.025, 2, 11.8950},
	{1, 0.25, 0.025, 3, 12.3665},
	{1, 0.25, 0.025, 4, 12.8088},
	{1, 0.25, 0.010, 0, 11.5046},
	{1, 0.25, 0.010, 1, 12.8349},
	{1, 0.25, 0.010, 2, 13.6477},
	{1, 0.25, 0.010, 3, 14.1953},
	{1, 0.25, 0.010, 4, 14.5878},
	{2, 0.05, 0.100, 0, 10.8873},
	{2, 0.05, 0.100, 1, 12.5930},
	{2, 0.05, 0.100, 2, 13.5491},
	{2, 0.05, 0.100, 3, 14.2852},
	{2, 0.05, 0.100, 4, 14.7925},
	{2, 0.05, 0.050, 0, 12.6618},
	{2, 0.05, 0.050, 1, 14.3524},
	{2, 0.05, 0.050, 2, 15.3463},
	{2, 0.05, 0.050, 3, 16.0258},
	{2, 0.05, 0.050, 4, 16.5782},
	{2, 0.05, 0.025, 0, 14.3728},
	{2, 0.05, 0.025, 1, 16.0485},
	{2, 0.05, 0.025, 2, 16.9897},
	{2, 0.05, 0.025, 3, 17.5198},
	{2, 0.05, 0.025, 4, 18.0999},
	{2, 0.05, 0.010, 0, 16.6266},
	{2, 0.05, 0.010, 1, 18.1279},
	{2, 0.05, 0.010, 2, 19.1031},
	{2, 0.05, 0.010, 3, 19.8130},
	{2, 0.05, 0.010, 4, 20.2913},
	{2, 0.10, 0.100, 0, 10.2829},
	{2, 0.10, 0.100, 1, 11.9845},
	{2, 0.10, 0.100, 2, 12.9485},
	{2, 0.10, 0.100, 3, 13.6685},
	{2, 0.10, 0.100, 4, 14.2228},
	{2, 0.10, 0.050, 0, 12.0448},
	{2, 0.10, 0.050, 1, 13.7340},
	{2, 0.10, 0.050, 2, 14.6923},
	{2, 0.10, 0.050, 3, 15.4122},
	{2, 0.10, 0.050, 4, 15.9328},
	{2, 0.10, 0.025, 0, 13.7575},
	{2, 0.10, 0.025, 1, 15.4371},
	{2, 0.10, 0.025, 2, 16.4493},
	{2, 0.10, 0.025, 3, 17.0279},
	{2, 0.10, 0.025, 4, 17.4756},
	{2, 0.10, 0.010, 0, 15.9614},
	{2, 0.10, 0.010, 1, 17.4945},
	{2, 0.10, 0.010, 2, 18.5405},
	{2, 0.10, 0.010, 3, 19.2587},
	{2, 0.10, 0.010, 4, 19.7503},
	{2, 0.15, 0.100, 0, 9.8010},
	{2, 0.15, 0.100, 1, 11.4357},
	{2, 0.15, 0.100, 2, 12.4608},
	{2, 0.15, 0.100, 3, 13.1690},
	{2, 0.15, 0.100, 4, 13.7320},
	{2, 0.15, 0.050, 0, 11.5107},
	{2, 0.15, 0.050, 1, 13.2361},
	{2, 0.15, 0.050, 2, 14.2648},
	{2, 0.15, 0.050, 3, 14.9174},
	{2, 0.15, 0.050, 4, 15.4732},
	{2, 0.15, 0.025, 0, 13.2926},
	{2, 0.15, 0.025, 1, 14.9495},
	{2, 0.15, 0.025, 2, 15.9747},
	{2, 0.15, 0.025, 3, 16.6478},
	{2, 0.15, 0.025, 4, 17.1549},
	{2, 0.15, 0.010, 0, 15.5305},
	{2, 0.15, 0.010, 1, 17.1625},
	{2, 0.15, 0.010, 2, 18.0228},
	{2, 0.15, 0.010, 3, 18.7270},
	{2, 0.15, 0.010, 4, 19.3415},
	{2, 0.20, 0.100, 0, 9.3818},
	{2, 0.20, 0.100, 1, 11.0325},
	{2, 0.20, 0.100, 2, 12.0044},
	{2, 0.20, 0.100, 3, 12.7261},
	{2, 0.20, 0.100, 4, 13.3034},
	{2, 0.20, 0.050, 0, 11.0921},
	{2, 0.20, 0.050, 1, 12.7853},
	{2, 0.20, 0.050, 2, 13.7899},
	{2, 0.20, 0.050, 3, 14.5261},
	{2, 0.20, 0.050, 4, 15.0792},
	{2, 0.20, 0.025, 0, 12.8134},
	{2, 0.20, 0.025, 1, 14.5384},
	{2, 0.20, 0.025, 2, 15.6474},
	{2, 0.20, 0.025, 3, 16.3160},
	{2, 0.20, 0.025, 4, 16.9161},
	{2, 0.20, 0.010, 0, 15.1151},
	{2, 0.20, 0.010, 1, 16.9425},
	{2, 0.20, 0.010, 2, 17.6659},
	{2, 0.20, 0.010, 3, 18.3801},
	{2, 0.20, 0.010, 4, 18.8988},
	{2, 0.25, 0.100, 0, 8.9396},
	{2, 0.25, 0.100, 1, 10.5802},
	{2, 0.25, 0.100, 2, 11.5431},
	{2, 0.25, 0.100, 3, 12.2275},
	{2, 0.25, 0.100, 4, 12.8039},
	{2, 0.25, 0.050, 0, 10.6431},
	{2, 0.25, 0.050, 1, 12.2949},
	{2, 0.25, 0.050, 2, 13.4020},
	{2, 0.25, 0.050, 3, 14.0675},
	{2, 0.25, 0.050, 4, 14.6396},
	{2, 0.25, 0.025, 0, 12.3346},
	{2, 0.25, 0.025, 1, 14.1195},
	{2, 0.25, 0.025, 2, 15.0961},
	{2, 0.25, 0.025, 3, 15.8093},
	{2, 0.25, 0.025, 4, 16.4210},
	{2, 0.25, 0.010, 0, 14.7176},
	{2, 0.25, 0.010, 1, 16.4493},
	{2, 0.25, 0.010, 2, 17.2968},
	{2, 0.25, 0.010, 3, 17.8725},
	{2, 0.25, 0.010, 4, 18.4224},
	{3, 0.05, 0.100, 0, 13.2988},
	{3, 0.05, 0.100, 1, 15.0000},
	{3, 0.05, 0.100, 2, 15.9991},
	{3, 0.05, 0.100, 3, 16.7284},
	{3, 0.05, 0.100, 4, 17.2837},
	{3, 0.05, 0.050, 0, 15.0720},
	{3, 0.05, 0.050, 1, 16.7918},
	{3, 0.05, 0.050, 2, 17.8083},
	{3, 0.05, 0.050, 3, 18.4996},
	{3, 0.05, 0.050, 4, 18.9737},
	{3, 0.05, 0.025, 0, 16.8273},
	{3, 0.05, 0.025, 1, 18.5277},
	{3, 0.05, 0.025, 2, 19.3564},
	{3, 0.05, 0.025, 3, 20.0120},
	{3, 0.05, 0.025, 4, 20.6114},
	{3, 0.05, 0.010, 0, 19.0069},
	{3, 0.05, 0.010, 1, 20.6303},
	{3, 0.05, 0.010, 2, 21.5073},
	{3, 0.05, 0.010, 3, 22.4255},
	{3, 0.05, 0.010, 4, 23.0297},
	{3, 0.10, 0.100, 0, 12.6518},
	{3, 0.10, 0.100, 1, 14.3673},
	{3, 0.10, 0.100, 2, 15.3217},
	{3, 0.10, 0.100, 3, 16.0739},
	{3, 0.10, 0.100, 4, 16.6177},
	{3, 0.10, 0.050, 0, 14.4246},
	{3, 0.10, 0.050, 1, 16.1217},
	{3, 0.10, 0.050, 2, 17.1155},
	{3, 0.10, 0.050, 3, 17.8659},
	{3, 0.10, 0.050, 4, 18.3953},
	{3, 0.10, 0.025, 0, 16.1603},
	{3, 0.10, 0.025, 1, 17.8911},
	{3, 0.10, 0.025, 2, 18.8365},
	{3, 0.10, 0.025, 3, 19.4558},
	{3, 0.10, 0.025, 4, 19.9130},
	{3, 0.10, 0.010, 0, 18.4352},
	{3, 0.10, 0.010, 1, 19.9398},
	{3, 0.10, 0.010, 2, 20.8264},
	{3, 0.10, 0.010, 3, 21.5940},
	{3, 0.10, 0.010, 4, 22.2856},
	{3, 0.15, 0.100, 0, 12.1588},
	{3, 0.15, 0.100, 1, 13.8537},
	{3, 0.15, 0.100, 2, 14.8453},
	{3, 0.15, 0.100, 3, 15.5930},
	{3, 0.15, 0.100, 4, 16.1059},
	{3, 0.15, 0.050, 0, 13.9154},
	{3, 0.15, 0.050, 1, 15.6685},
	{3, 0.15, 0.050, 2, 16.6761},
	{3, 0.15, 0.050, 3, 17.3446},
	{3, 0.15, 0.050, 4, 17.9208},
	{3, 0.15, 0.025, 0, 15.7110},
	{3, 0.15, 0.025, 1, 17.3806},
	{3, 0.15, 0.025, 2, 18.3589},
	{3, 0.15, 0.025, 3, 19.0518},
	{3, 0.15, 0.025, 4, 19.4558},
	{3, 0.15, 0.010, 0, 17.9882},
	{3, 0.15, 0.010, 1, 19.4609},
	{3, 0.15, 0.010, 2, 20.5869},
	{3, 0.15, 0.010, 3, 21.1565},
	{3, 0.15, 0.010, 4, 21.7242},
	{3, 0.20, 0.100, 0, 11.6878},
	{3, 0.20, 0.100, 1, 13.4103},
	{3, 0.20, 0.100, 2, 14.3963},
	{3, 0.20, 0.100, 3, 15.0611},
	{3, 0.20, 0.100, 4, 15.6490},
	{3, 0.20, 0.050, 0, 13.4814},
	{3, 0.20, 0.050, 1, 15.1353},
	{3, 0.20, 0.050, 2, 16.1528},
	{3, 0.20, 0.050, 3, 16.8584},
	{3, 0.20, 0.050, 4, 17.3387},
	{3, 0.20, 0.025, 0, 15.1692},
	{3, 0.20, 0.025, 1, 16.8982},
	{3, 0.20, 0.025, 2, 17.8330},
	{3, 0.20, 0.025, 3, 18.5277},
	{3, 0.20, 0.025, 4, 19.0837},
	{3, 0.20, 0.010, 0, 17.3806},
	{3, 0.20, 0.010, 1, 19.1026},
	{3, 0.20, 0.010, 2, 20.1096},
	{3, 0.20, 0.010, 3, 20.7611},
	{3, 0.20, 0.010, 4, 21.1052},
	{3, 0.25, 0.100, 0, 11.2023},
	{3, 0.25, 0.100, 1, 12.9906},
	{3, 0.25, 0.100, 2, 13.9128},
	{3, 0.25, 0.100, 3, 14.5967},
	{3, 0.25, 0.100, 4, 15.1630},
	{3, 0.25, 0.050, 0, 13.0440},
	{3, 0.25, 0.050, 1, 14.6592},
	{3, 0.25, 0.050, 2, 15.6847},
	{3, 0.25, 0.050, 3, 16.3633},
	{3, 0.25, 0.050, 4, 16.9392},
	{3, 0.25, 0.025, 0, 14.6918},
	{3, 0.25, 0.025, 1, 16.3997},
	{3, 0.25, 0.025, 2, 17.3580},
	{3, 0.25, 0.025, 3, 18.0851},
	{3, 0.25, 0.025, 4, 18.6907},
	{3, 0.25, 0.010, 0, 16.9802},
	{3, 0.25, 0.010, 1, 18.7164},
	{3, 0.25, 0.010, 2, 19.7362},
	{3, 0.25, 0.010, 3, 20.4567},
	{3, 0.25, 0.010, 4, 20.9231},
	{4, 0.05, 0.100, 0, 15.4195},
	{4, 0.05, 0.100, 1, 17.2088},
	{4, 0.05, 0.100, 2, 18.2405},
	{4, 0.05, 0.100, 3, 19.0773},
	{4, 0.05, 0.100, 4, 19.6527},
	{4, 0.05, 0.050, 0, 17.2889},
	{4, 0.05, 0.050, 1, 19.1433},
	{4, 0.05, 0.050, 2, 20.2037},
	{4, 0.05, 0.050, 3, 20.8145},
	{4, 0.05, 0.050, 4, 21.3552},
	{4, 0.05, 0.025, 0, 19.1708},
	{4, 0.05, 0.025, 1, 20.8536},
	{4, 0.05, 0.025, 2, 21.9286},
	{4, 0.05, 0.025, 3, 22.6439},
	{4, 0.05, 0.025, 4, 23.1657},
	{4, 0.05, 0.010, 0, 21.4146},
	{4, 0.05, 0.010, 1, 23.2013},
	{4, 0.05, 0.010, 2, 24.0935},
	{4, 0.05, 0.010, 3, 24.7224},
	{4, 0.05, 0.010, 4, 25.2870},
	{4, 0.10, 0.100, 0, 14.7222},
	{4, 0.10, 0.100, 1, 16.5464},
	{4, 0.10, 0.100, 2, 17.5358},
	{4, 0.10, 0.100, 3, 18.3089},
	{4, 0.10, 0.100, 4, 18.9697},
	{4, 0.10, 0.050, 0, 16.6039},
	{4, 0.10, 0.050, 1, 18.3958},
	{4, 0.10, 0.050, 2, 19.5082},
	{4, 0.10, 0.050, 3, 20.2101},
	{4, 0.10, 0.050, 4, 20.6641},
	{4, 0.10, 0.025, 0, 18.4172},
	{4, 0.10, 0.025, 1, 20.2287},
	{4, 0.10, 0.025, 2, 21.1024},
	{4, 0.10, 0.025, 3, 21.7844},
	{4, 0.10, 0.025, 4, 22.3613},
	{4, 0.10, 0.010, 0, 20.6870},
	{4, 0.10, 0.010, 1, 22.3864},
	{4, 0.10, 0.010, 2, 23.3828},
	{4, 0.10, 0.010, 3, 23.9584},
	{4, 0.10, 0.010, 4, 24.5406},
	{4, 0.15, 0.100, 0, 14.1533},
	{4, 0.15, 0.100, 1, 16.0478},
	{4, 0.15, 0.100, 2, 17.0591},
	{4, 0.15, 0.100, 3, 17.7834},
	{4, 0.15, 0.100, 4, 18.4023},
	{4, 0.15, 0.050, 0, 16.1175},
	{4, 0.15, 0.050, 1, 17.8500},
	{4, 0.15, 0.050, 2, 18.9911},
	{4, 0.15, 0.050, 3, 19.6766},
	{4, 0.15, 0.050, 4, 20.2199},
	{4, 0.15, 0.025, 0, 17.8796},
	{4, 0.15, 0.025, 1, 19.7209},
	{4, 0.15, 0.025, 2, 20.6108},
	{4, 0.15, 0.025, 3, 21.2650},
	{4, 0.15, 0.025, 4, 21.8578},
	{4, 0.15, 0.010, 0, 20.2792},
	{4, 0.15, 0.010, 1, 21.8748},
	{4, 0.15, 0.010, 2, 22.8986},
	{4, 0.15, 0.010, 3, 23.4854},
	{4, 0.15, 0.010, 4, 24.1907},
	{4, 0.20, 0.100, 0, 13.6404},
	{4, 0.20, 0.100, 1, 15.5126},
	{4, 0.20, 0.100, 2, 16.5361},
	{4, 0.20, 0.100, 3, 17.2377},
	{4, 0.20, 0.100, 4, 17.8175},
	{4, 0.20, 0.050, 0, 15.5777},
	{4, 0.20, 0.050, 1, 17.3005},
	{4, 0.20, 0.050, 2, 18.4036},
	{4, 0.20, 0.050, 3, 19.1432},
	{4, 0.20, 0.050, 4, 19.7031},
	{4, 0.20, 0.025, 0, 17.3268},
	{4, 0.20, 0.025, 1, 19.1813},
	{4, 0.20, 0.025, 2, 20.2111},
	{4, 0.20, 0.025, 3, 20.7623},
	{4, 0.20, 0.025, 4, 21.3261},
	{4, 0.20, 0.010, 0, 19.7479},
	{4, 0.20, 0.010, 1, 21.3480},
	{4, 0.20, 0.010, 2, 22.3864},
	{4, 0.20, 0.010, 3, 23.0648},
	{4, 0.20, 0.010, 4, 23.5594},
	{4, 0.25, 0.100, 0, 13.1179},
	{4, 0.25, 0.100, 1, 15.0206},
	{4, 0.25, 0.100, 2, 16.0995},
	{4, 0.25, 0.100, 3, 16.7388},
	{4, 0.25, 0.100, 4, 17.2864},
	{4, 0.25, 0.050, 0, 15.0896},
	{4, 0.25, 0.050, 1, 16.8044},
	{4, 0.25, 0.050, 2, 17.8538},
	{4, 0.25, 0.050, 3, 18.6018},
	{4, 0.25, 0.050, 4, 19.1893},
	{4, 0.25, 0.025, 0, 16.8277},
	{4, 0.25, 0.025, 1, 18.6406},
	{4, 0.25, 0.025, 2, 19.6766},
	{4, 0.25, 0.025, 3, 20.3439},
	{4, 0.25, 0.025, 4, 20.7865},
	{4, 0.25, 0.010, 0, 19.2399},
	{4, 0.25, 0.010, 1, 20.8145},
	{4, 0.25, 0.010, 2, 21.8184},
	{4, 0.25, 0.010, 3, 22.5411},
	{4, 0.25, 0.010, 4, 23.1353},
	{5, 0.05, 0.100, 0, 17.3293},
	{5, 0.05, 0.100, 1, 19.3180},
	{5, 0.05, 0.100, 2, 20.4568},
	{5, 0.05, 0.100, 3, 21.2505},
	{5, 0.05, 0.100, 4, 21.8677},
	{5, 0.05, 0.050, 0, 19.3926},
	{5, 0.05, 0.050, 1, 21.3102},
	{5, 0.05, 0.050, 2, 22.3778},
	{5, 0.05, 0.050, 3, 23.0717},
	{5, 0.05, 0.050, 4, 23.7254},
	{5, 0.05, 0.025, 0, 21.3493},
	{5, 0.05, 0.025, 1, 23.1133},
	{5, 0.05, 0.025, 2, 24.2383},
	{5, 0.05, 0.025, 3, 24.9218},
	{5, 0.05, 0.025, 4, 25.5263},
	{5, 0.05, 0.010, 0, 23.7778},
	{5, 0.05, 0.010, 1, 25.5313},
	{5, 0.05, 0.010, 2, 26.6367},
	{5, 0.05, 0.010, 3, 27.4824},
	{5, 0.05, 0.010, 4, 27.9606},
	{5, 0.10, 0.100, 0, 16.6514},
	{5, 0.10, 0.100, 1, 18.6808},
	{5, 0.10, 0.100, 2, 19.7987},
	{5, 0.10, 0.100, 3, 20.5655},
	{5, 0.10, 0.100, 4, 21.1883},
	{5, 0.10, 0.050, 0, 18.7513},
	{5, 0.10, 0.050, 1, 20.6266},
	{5, 0.10, 0.050, 2, 21.7217},
	{5, 0.10, 0.050, 3, 22.4314},
	{5, 0.10, 0.050, 4, 22.9704},
	{5, 0.10, 0.025, 0, 20.6714},
	{5, 0.10, 0.025, 1, 22.4520},
	{5, 0.10, 0.025, 2, 23.4559},
	{5, 0.10, 0.025, 3, 24.2337},
	{5, 0.10, 0.025, 4, 24.6904},
	{5, 0.10, 0.010, 0, 23.0120},
	{5, 0.10, 0.010, 1, 24.7064},
	{5, 0.10, 0.010, 2, 25.8194},
	{5, 0.10, 0.010, 3, 26.7112},
	{5, 0.10, 0.010, 4, 27.3996},
	{5, 0.15, 0.100, 0, 16.0926},
	{5, 0.15, 0.100, 1, 18.0801},
	{5, 0.15, 0.100, 2, 19.2367},
	{5, 0.15, 0.100, 3, 20.0509},
	{5, 0.15, 0.100, 4, 20.6036},
	{5, 0.15, 0.050, 0, 18.1643},
	{5, 0.15, 0.050, 1, 20.1104},
	{5, 0.15, 0.050, 2, 21.1467},
	{5, 0.15, 0.050, 3, 21.9112},
	{5, 0.15, 0.050, 4, 22.4418},
	{5, 0.15, 0.025, 0, 20.1567},
	{5, 0.15, 0.025, 1, 21.9581},
	{5, 0.15, 0.025, 2, 22.8754},
	{5, 0.15, 0.025, 3, 23.6504},
	{5, 0.15, 0.025, 4, 24.2458},
	{5, 0.15, 0.010, 0, 22.4750},
	{5, 0.15, 0.010, 1, 24.2573},
	{5, 0.15, 0.010, 2, 25.3537},
	{5, 0.15, 0.010, 3, 26.2178},
	{5, 0.15, 0.010, 4, 26.8376},
	{5, 0.20, 0.100, 0, 15.5544},
	{5, 0.20, 0.100, 1, 17.5492},
	{5, 0.20, 0.100, 2, 18.7689},
	{5, 0.20, 0.100, 3, 19.6001},
	{5, 0.20, 0.100, 4, 20.1793},
	{5, 0.20, 0.050, 0, 17.6300},
	{5, 0.20, 0.050, 1, 19.6669},
	{5, 0.20, 0.050, 2, 20.7420},
	{5, 0.20, 0.050, 3, 21.5041},
	{5, 0.20, 0.050, 4, 22.0801},
	{5, 0.20, 0.025, 0, 19.7074},
	{5, 0.20, 0.025, 1, 21.5428},
	{5, 0.20, 0.025, 2, 22.4853},
	{5, 0.20, 0.025, 3, 23.0987},
	{5, 0.20, 0.025, 4, 23.7430},
	{5, 0.20, 0.010, 0, 22.1072},
	{5, 0.20, 0.010, 1, 23.7552},
	{5, 0.20, 0.010, 2, 24.6857},
	{5, 0.20, 0.010, 3, 25.5313},
	{5, 0.20, 0.010, 4, 26.1957},
	{5, 0.25, 0.100, 0, 15.0209},
	{5, 0.25, 0.100, 1, 17.0056},
	{5, 0.25, 0.100, 2, 18.2201},
	{5, 0.25, 0.100, 3, 19.0430},
	{5, 0.25, 0.100, 4, 19.6266},
	{5, 0.25, 0.050, 0, 17.0784},
	{5, 0.25, 0.050, 1, 19.1173},
	{5, 0.25, 0.050, 2, 20.1683},
	{5, 0.25, 0.050, 3, 20.8799},
	{5, 0.25, 0.050, 4, 21.5175},
	{5, 0.25, 0.025, 0, 19.1523},
	{5, 0.25, 0.025, 1, 20.9132},
	{5, 0.25, 0.025, 2, 22.0178},
	{5, 0.25, 0.025, 3, 22.6574},
	{5, 0.25, 0.025, 4, 23.1525},
	{5, 0.25, 0.010, 0, 21.5536},
	{5, 0.25, 0.010, 1, 23.1687},
	{5, 0.25, 0.010, 2, 24.1126},
	{5, 0.25, 0.010, 3, 24.6968},
	{5, 0.25, 0.010, 4, 25.3769},
}};

inline std::optional<double> lookup(std::size_t regressors, double trim, double alpha, std::size_t existing) {
	for (const auto &e : entries) {
		if (e.regressors == regressors && e.existing == existing && std::abs(e.trim - trim) < 1e-9 &&
		    std::abs(e.alpha - alpha) < 1e-9) {
			return e.value;
		}
	}
	return std::nullopt;
}

} // namespace regimecast::breaks::supf_table
