#pragma once

#include <stdexcept>
#include <string>

namespace lift::cli {

class fetch_error : public std::runtime_error {
public:
  explicit fetch_error(const std::string& what) : std::runtime_error(what) {}
};

bool looks_like_url(const std::string& s);

/// Body of the URL, served from the on-disk cache when possible. The
/// cache directory is $LF_CACHE_DIR (default ~/.cache/lift); bodies are
/// stored under their own content digest with a per-URL index entry.
std::string fetch_with_cache(const std::string& url);

std::string sha256_hex(const std::string& data);

}  // namespace lift::cli
