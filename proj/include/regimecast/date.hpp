#pragma once

#include <charconv>
#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace regimecast {

using Date = std::chrono::year_month_day;

/// Parses a strict ISO-8601 calendar date (YYYY-MM-DD).
inline std::optional<Date> parse_iso_date(std::string_view text) {
	if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
		return std::nullopt;
	}
	auto parse_int = [](std::string_view part) -> std::optional<int> {
		int value = 0;
		auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
		if (ec != std::errc() || ptr != part.data() + part.size()) {
			return std::nullopt;
		}
		return value;
	};
	auto y = parse_int(text.substr(0, 4));
	auto m = parse_int(text.substr(5, 2));
	auto d = parse_int(text.substr(8, 2));
	if (!y || !m || !d) {
		return std::nullopt;
	}
	Date date{std::chrono::year{*y}, std::chrono::month{static_cast<unsigned>(*m)},
	          std::chrono::day{static_cast<unsigned>(*d)}};
	if (!date.ok()) {
		return std::nullopt;
	}
	return date;
}

inline std::string format_iso_date(const Date &date) {
	char buffer[16];
	std::snprintf(buffer, sizeof(buffer), "%04d-%02u-%02u", static_cast<int>(date.year()),
	              static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
	return buffer;
}

} // namespace regimecast
