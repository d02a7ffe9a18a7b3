#include "altperm/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace altperm {

namespace {

class LockedFd {
 public:
  LockedFd(const std::filesystem::path& path, int flags, int lock) {
    fd_ = ::open(path.c_str(), flags, 0644);
    if (fd_ < 0) return;
    if (::flock(fd_, lock) != 0) {
      ::close(fd_);
      fd_ = -1;
    }
  }
  ~LockedFd() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  LockedFd(const LockedFd&) = delete;
  LockedFd& operator=(const LockedFd&) = delete;
  int fd() const { return fd_; }

 private:
  int fd_ = -1;
};

std::optional<CacheEntry> parse_record(const std::string& line) {
  std::istringstream in(line);
  CacheEntry e;
  std::string count, ts;
  if (!std::getline(in, e.key, '\t') || !std::getline(in, count, '\t') ||
      !std::getline(in, e.version, '\t') || !std::getline(in, ts)) {
    return std::nullopt;
  }
  try {
    e.count = std::stoull(count);
    e.timestamp = std::stoll(ts);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return e;
}

}  // namespace

CountCache::CountCache(std::filesystem::path dir) {
  std::filesystem::create_directories(dir);
  file_ = dir / "counts.tsv";
}

std::filesystem::path CountCache::default_dir() {
  if (const char* env = std::getenv("ALTPERM_CACHE"); env && *env) {
    return env;
  }
  return ".altperm-cache";
}

void CountCache::load() {
  loaded_ = true;
  LockedFd f(file_, O_RDONLY, LOCK_SH);
  if (f.fd() < 0) return;
  std::string data;
  char buf[65536];
  for (;;) {
    const ssize_t got = ::read(f.fd(), buf, sizeof buf);
    if (got <= 0) break;
    data.append(buf, static_cast<std::size_t>(got));
  }
  std::istringstream in(data);
  std::string line;
  while (std::getline(in, line)) {
    // A torn final line from an interrupted writer is skipped.
    if (auto e = parse_record(line)) memo_[e->key] = *e;
  }
}

std::optional<std::uint64_t> CountCache::lookup(const std::string& key) {
  if (!loaded_) load();
  auto it = memo_.find(key);
  if (it == memo_.end()) return std::nullopt;
  return it->second.count;
}

void CountCache::store(const std::string& key, std::uint64_t count) {
  if (!loaded_) load();
  if (key.find_first_of("\t\n") != std::string::npos) {
    throw std::invalid_argument("cache key contains a tab or newline");
  }
  CacheEntry e{key, count, kToolVersion,
               std::chrono::duration_cast<std::chrono::seconds>(
                   std::chrono::system_clock::now().time_since_epoch())
                   .count()};
  std::ostringstream rec;
  rec << e.key << '\t' << e.count << '\t' << e.version << '\t' << e.timestamp
      << '\n';
  const std::string s = rec.str();
  LockedFd f(file_, O_WRONLY | O_CREAT | O_APPEND, LOCK_EX);
  if (f.fd() < 0) throw std::runtime_error("cannot open cache file");
  if (::write(f.fd(), s.data(), s.size()) != static_cast<ssize_t>(s.size())) {
    throw std::runtime_error("short write to cache file");
  }
  memo_[key] = e;
}

std::map<std::string, CacheEntry> CountCache::entries() {
  if (!loaded_) load();
  return memo_;
}

}  // namespace altperm
