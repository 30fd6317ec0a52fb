#pragma once

// Needs cpp-httplib and OpenSSL (link OpenSSL::SSL and OpenSSL::Crypto).

#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include <httplib.h>
#include <openssl/evp.h>

#include "defectlab/errors.hpp"

namespace defectlab {

inline std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return out.str();
}

inline std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("DEFECT_LAB_CACHE"); env && *env) return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "defect-lab";
    return std::filesystem::temp_directory_path() / "defect-lab-cache";
}

struct FetchOptions {
    std::filesystem::path cache_dir = default_cache_dir();
    bool offline = false;
    int timeout_seconds = 60;
};

struct FetchResult {
    std::filesystem::path path;
    std::string content_sha256;
    bool from_cache = false;
};

namespace detail {

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw FetchError("cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline void write_file_atomic(const std::filesystem::path& p, const std::string& data) {
    auto tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw FetchError("cannot write " + tmp.string());
        out << data;
    }
    std::filesystem::rename(tmp, p);
}

inline bool is_url(const std::string& s) { return s.rfind("http://", 0) == 0 || s.rfind("https://", 0) == 0; }

inline std::string http_get(const std::string& url, int timeout_seconds) {
    auto scheme_end = url.find("://");
    auto path_start = url.find('/', scheme_end + 3);
    std::string origin = path_start == std::string::npos ? url : url.substr(0, path_start);
    std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
    httplib::Client cli(origin);
    cli.set_follow_location(true);
    cli.set_connection_timeout(timeout_seconds);
    cli.set_read_timeout(timeout_seconds);
    auto res = cli.Get(path);
    if (!res) throw FetchError("fetching " + url + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200) throw FetchError("fetching " + url + " returned HTTP " + std::to_string(res->status));
    return res->body;
}

}  // namespace detail

// Local paths are returned as they are. URLs are cached under the digest of
// the URL, next to a record of the content digest; a cached entry whose
// content no longer matches its record raises IntegrityError.
inline FetchResult fetch_dataset(const std::string& source, const FetchOptions& opt = {}) {
    namespace fs = std::filesystem;
    if (!detail::is_url(source)) {
        if (!fs::exists(source)) throw FetchError("no such file: " + source);
        return {source, sha256_hex(detail::read_file(source)), true};
    }
    fs::create_directories(opt.cache_dir);
    const std::string key = sha256_hex(source);
    const fs::path data = opt.cache_dir / (key + ".g6");
    const fs::path digest = opt.cache_dir / (key + ".sha256");
    if (fs::exists(data) && fs::exists(digest)) {
        std::string recorded = detail::read_file(digest);
        while (!recorded.empty() && std::isspace(static_cast<unsigned char>(recorded.back()))) recorded.pop_back();
        std::string actual = sha256_hex(detail::read_file(data));
        if (actual != recorded)
            throw IntegrityError("cache entry " + data.string() + " is corrupted; delete it and fetch again");
        return {data, actual, true};
    }
    if (opt.offline) throw FetchError("offline and " + source + " is not cached");
    std::string body = detail::http_get(source, opt.timeout_seconds);
    std::string sum = sha256_hex(body);
    detail::write_file_atomic(data, body);
    detail::write_file_atomic(digest, sum + "\n");
    return {data, sum, false};
}

}  // namespace defectlab
