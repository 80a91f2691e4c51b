#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace jring {

// Input/data errors carry a human-readable message; callers that know a
// position (byte offset, line number) put it in the message.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)),
        position_(position) {}
  explicit ParseError(const std::string& what)
      : std::runtime_error(what), position_(0) {}
  static ParseError at_line(const std::string& what, std::size_t line) {
    ParseError e(what + " at line " + std::to_string(line));
    e.position_ = line;
    return e;
  }
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// FNV-1a over a byte range; used for stable descriptor hashes in cache files.
inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t seed = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t fnv1a(const std::string& s) {
  return fnv1a(s.data(), s.size());
}

// Runs fn(i) for i in [0, n) on up to `threads` workers.  Work items must be
// independent; result assembly is the caller's job (write to slot i).
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::size_t nworkers = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  pool.reserve(nworkers);
  for (std::size_t t = 0; t < nworkers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace jring
