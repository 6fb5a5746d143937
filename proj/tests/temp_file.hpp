#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <string>

namespace testutil {

// Self-deleting scratch file seeded with contents.
struct TempFile {
  std::filesystem::path path;

  explicit TempFile(const std::string& contents, const std::string& tag = "scratch") {
    static std::atomic<int> counter{0};
    path = std::filesystem::temp_directory_path() /
           ("taglinegen_" + tag + "_" + std::to_string(counter.fetch_add(1)) + ".tmp");
    std::ofstream out(path, std::ios::binary);
    out << contents;
  }

  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }

  std::string str() const { return path.string(); }
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace testutil
