#pragma once

#include <json.hpp>

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace gm::cli {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> row);
    const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }
    void write(std::ostream& os) const;
    void write(const std::filesystem::path& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Manifest sidecar written next to every result file as <out>.manifest.json.
nlohmann::json make_manifest(const std::string& command, nlohmann::json config, nlohmann::json seeds,
                             const std::vector<std::filesystem::path>& outputs);
std::filesystem::path manifest_path(const std::filesystem::path& out);
void write_json(const nlohmann::json& doc, const std::filesystem::path& path);

/// Worker count: hardware concurrency, capped by GM_THREADS when set.
unsigned worker_count();

/// Runs task(i) for i in [0, count) on up to worker_count() threads. The
/// first exception thrown by any task is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

} // namespace gm::cli
