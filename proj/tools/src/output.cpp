#include "gm/cli/output.hpp"

#include "gm/error.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#ifndef GM_VERSION
#define GM_VERSION "unknown"
#endif

namespace gm::cli {

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> row)
{
    if (row.size() != header_.size())
        throw ValidationError("csv row width does not match header");
    rows_.push_back(std::move(row));
}

void CsvTable::write(std::ostream& os) const
{
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            os << (i ? "," : "") << cells[i];
        os << '\n';
    };
    line(header_);
    for (const auto& r : rows_)
        line(r);
}

void CsvTable::write(const std::filesystem::path& path) const
{
    std::ofstream os(path);
    if (!os)
        throw ValidationError("cannot write " + path.string());
    write(os);
    if (!os)
        throw ValidationError("write failed for " + path.string());
}

namespace {

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

nlohmann::json make_manifest(const std::string& command, nlohmann::json config, nlohmann::json seeds,
                             const std::vector<std::filesystem::path>& outputs)
{
    nlohmann::json m;
    m["command"] = command;
    m["config"] = std::move(config);
    m["seeds"] = std::move(seeds);
    m["timestamp"] = utc_timestamp();
    m["version"] = GM_VERSION;
    m["outputs"] = nlohmann::json::array();
    for (const auto& p : outputs)
        m["outputs"].push_back(p.string());
    return m;
}

std::filesystem::path manifest_path(const std::filesystem::path& out)
{
    return std::filesystem::path(out.string() + ".manifest.json");
}

void write_json(const nlohmann::json& doc, const std::filesystem::path& path)
{
    std::ofstream os(path);
    if (!os)
        throw ValidationError("cannot write " + path.string());
    os << doc.dump(2) << '\n';
    if (!os)
        throw ValidationError("write failed for " + path.string());
}

unsigned worker_count()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("GM_THREADS")) {
        unsigned cap = 0;
        const std::string_view s(env);
        const auto res = std::from_chars(s.data(), s.data() + s.size(), cap);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size() || cap == 0)
            throw ValidationError("GM_THREADS must be a positive integer");
        n = std::min(n, cap);
    }
    return n;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task)
{
    const auto workers = static_cast<std::size_t>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load())
                return;
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed.store(true);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(run);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace gm::cli
