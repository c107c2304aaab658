#include "zagreb/limits.hpp"

#include "zagreb/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

namespace zagreb {

namespace {

int read_env_limit() {
  const char *raw = std::getenv("ZAGREB_MAX_N");
  if (raw == nullptr)
    return kDefaultMaxVertices;
  std::string_view text(raw);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1)
    return kDefaultMaxVertices;
  return std::min(value, kHardMaxVertices);
}

} // namespace

int max_vertices() {
  static const int limit = read_env_limit();
  return limit;
}

void check_vertex_limit(int n, const char *what) {
  if (n > max_vertices())
    throw SizeLimitError(std::string(what) + ": n = " + std::to_string(n) +
                         " exceeds the supported maximum of " +
                         std::to_string(max_vertices()));
}

} // namespace zagreb
