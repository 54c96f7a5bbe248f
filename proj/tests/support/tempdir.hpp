#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

namespace mctest {

// Scratch directory removed at scope exit.
class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path()
                / ("modecluster_test_" + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::filesystem::path path() const { return path_; }

    std::string write(const std::string& name, const std::string& content) const {
        const auto p = path_ / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    }

private:
    std::filesystem::path path_;
};

}  // namespace mctest
