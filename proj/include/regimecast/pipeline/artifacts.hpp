#pragma once

#include <openssl/evp.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "regimecast/error.hpp"

#ifndef REGIMECAST_VERSION
#define REGIMECAST_VERSION "0.1.0"
#endif

namespace regimecast::pipeline {

namespace fs = std::filesystem;

inline constexpr std::string_view tool_version = REGIMECAST_VERSION;
inline constexpr const char *output_root_env = "REGIMECAST_OUT";

inline std::string sha256_hex(std::string_view bytes) {
	std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
	unsigned int length = 0;
	if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
		throw std::runtime_error("SHA-256 computation failed");
	}
	std::ostringstream out;
	for (unsigned int i = 0; i < length; ++i) {
		out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
	}
	return out.str();
}

inline std::string read_file(const fs::path &path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) {
		throw DataError("cannot read '" + path.string() + "'");
	}
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

inline std::string sha256_file(const fs::path &path) { return sha256_hex(read_file(path)); }

/// Exclusive marker file held for the lifetime of a run; removed on destruction.
class RunLock {
public:
	explicit RunLock(const fs::path &root) : path_(root / ".regimecast.lock") {
		std::FILE *f = std::fopen(path_.c_str(), "wx");
		if (f == nullptr) {
			throw std::runtime_error("output root '" + root.string() + "' is locked by another run (remove " +
			                         path_.string() + " if stale)");
		}
		std::fclose(f);
	}
	RunLock(const RunLock &) = delete;
	RunLock &operator=(const RunLock &) = delete;
	~RunLock() {
		std::error_code ec;
		fs::remove(path_, ec);
	}

private:
	fs::path path_;
};

inline fs::path resolve_output_root(const std::string &configured) {
	if (!configured.empty()) {
		return configured;
	}
	if (const char *env = std::getenv(output_root_env); env != nullptr && *env != '\0') {
		return env;
	}
	return "runs";
}

/// A fresh run directory `<root>/<command>-<UTC timestamp>[-k]`; existing directories are never
/// reused. Artifacts written through it are hashed into manifest.json.
class RunDirectory {
public:
	RunDirectory(const fs::path &root, std::string command) : command_(std::move(command)) {
		fs::create_directories(root);
		const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
		std::tm utc{};
		gmtime_r(&now, &utc);
		std::ostringstream stamp;
		stamp << std::put_time(&utc, "%Y%m%dT%H%M%SZ");
		const auto base = command_ + "-" + stamp.str();
		for (int k = 0;; ++k) {
			auto candidate = root / (k == 0 ? base : base + "-" + std::to_string(k));
			if (fs::create_directory(candidate)) {
				path_ = std::move(candidate);
				break;
			}
		}
	}

	const fs::path &path() const noexcept { return path_; }
	const std::string &command() const noexcept { return command_; }

	/// Writes `content` to a relative path inside the run and records its hash.
	fs::path write(const std::string &relative, std::string_view content) {
		const auto target = path_ / relative;
		fs::create_directories(target.parent_path());
		std::ofstream out(target, std::ios::binary);
		if (!out) {
			throw DataError("cannot write '" + target.string() + "'");
		}
		out.write(content.data(), static_cast<std::streamsize>(content.size()));
		out.close();
		hashes_[relative] = sha256_hex(content);
		return target;
	}

	fs::path write_json(const std::string &relative, const nlohmann::json &doc) {
		return write(relative, doc.dump(1, '\t') + "\n");
	}

	const std::map<std::string, std::string> &artifacts() const noexcept { return hashes_; }

	/// manifest.json: tool, version, command, config hash, seed and artifact hashes. No
	/// timestamps, so identical inputs give an identical manifest.
	void write_manifest(const std::string &config_sha256, std::uint64_t seed) {
		nlohmann::json doc = {{"tool", "regimecast"},
		                      {"version", std::string(tool_version)},
		                      {"command", command_},
		                      {"config_sha256", config_sha256},
		                      {"seed", seed},
		                      {"artifacts", hashes_}};
		std::ofstream out(path_ / "manifest.json", std::ios::binary);
		out << doc.dump(1, '\t') << '\n';
	}

private:
	std::string command_;
	fs::path path_;
	std::map<std::string, std::string> hashes_;
};

} // namespace regimecast::pipeline
