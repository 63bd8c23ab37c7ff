#include "fetch.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <openssl/evp.h>

namespace lift::cli {

namespace fs = std::filesystem;

bool looks_like_url(const std::string& s) {
  return s.rfind("http://", 0) == 0 || s.rfind("https://", 0) == 0;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

namespace {

fs::path cache_dir() {
  if (const char* dir = std::getenv("LF_CACHE_DIR")) return fs::path(dir);
  if (const char* home = std::getenv("HOME")) return fs::path(home) / ".cache" / "lift";
  return fs::temp_directory_path() / "lift-cache";
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& data) {
  std::ofstream out(p, std::ios::binary);
  out << data;
}

std::string http_get(const std::string& url) {
  auto scheme_end = url.find("://");
  auto path_start = url.find('/', scheme_end + 3);
  std::string base = path_start == std::string::npos ? url : url.substr(0, path_start);
  std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

  httplib::Client client(base);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  client.set_follow_location(true);
  auto res = client.Get(path);
  if (!res)
    throw fetch_error("unreachable URL " + url + ": " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw fetch_error("fetch of " + url + " failed with HTTP status " +
                      std::to_string(res->status));
  return res->body;
}

}  // namespace

std::string fetch_with_cache(const std::string& url) {
  fs::path dir = cache_dir();
  std::error_code ec;
  fs::create_directories(dir, ec);

  fs::path index = dir / ("url-" + sha256_hex(url));
  if (fs::exists(index)) {
    fs::path body = dir / read_file(index);
    if (fs::exists(body)) return read_file(body);
  }

  std::string body = http_get(url);
  std::string digest = "body-" + sha256_hex(body);
  write_file(dir / digest, body);
  write_file(index, digest);
  return body;
}

}  // namespace lift::cli
