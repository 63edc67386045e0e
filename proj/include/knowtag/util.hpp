#pragma once

#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <mutex>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace knowtag {

std::string ltrim(std::string_view s);
std::string rtrim(std::string_view s);
std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
bool contains_ci(std::string_view haystack, std::string_view needle);

// Splits on \n after converting \r\n and bare \r; keeps empty lines.
std::vector<std::string> split_lines(std::string_view text);
std::string normalize_newlines(std::string_view text);

std::uint64_t fnv1a64(std::string_view data,
                      std::uint64_t seed = 1469598103934665603ULL);
std::string fnv1a64_hex(std::string_view data);

// Shortest round-trip decimal form, identical on every platform.
std::string format_double(double v);

std::string utc_timestamp();

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Uniform draw in [0, n). Uses rejection sampling over mt19937_64 output so
// the result stream is identical across standard library implementations
// (std::uniform_int_distribution is not portable).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

class Semaphore {
 public:
  explicit Semaphore(int count);
  void acquire();
  void release();

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  int count_;
};

}  // namespace knowtag
