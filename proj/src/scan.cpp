// Catalog scanning: a bounded worker pool over batches of input lines, with
// results written back in input order.

#include <algorithm>
#include <atomic>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "qwalk/error.hpp"
#include "qwalk/report.hpp"

namespace qwalk::report {

namespace {

struct Job {
    std::size_t line_no;
    std::string text;
    std::string output;
    bool ok = false;
};

constexpr std::size_t kBatchPerWorker = 64;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

void run_one(Job& job, const AnalysisConfig& config) {
    Json rec;
    try {
        rec = scan_record(job.text, job.line_no, config);
    } catch (const InvariantViolation&) {
        throw;
    } catch (const Error& e) {
        // analysis-level failure on one graph: report inline, keep going
        rec = Json();
        rec["schema_version"] = kSchemaVersion;
        rec["line"] = job.line_no;
        rec["id"] = job.text;
        rec["error"] = e.what();
        rec["offset"] = nullptr;
    }
    job.ok = !rec.contains("error");
    job.output = dump(rec);
}

void run_batch(std::vector<Job>& batch, const AnalysisConfig& config) {
    const std::size_t workers = std::min<std::size_t>(config.jobs, batch.size());
    if (workers <= 1) {
        for (auto& job : batch) run_one(job, config);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= batch.size()) return;
            try {
                run_one(batch[i], config);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(batch.size());
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

ScanStats scan(std::istream& in, std::ostream& out, const AnalysisConfig& config) {
    config.validate();
    ScanStats stats;
    const std::size_t batch_size = kBatchPerWorker * config.jobs;
    std::vector<Job> batch;
    std::string line;
    std::size_t line_no = 0;

    auto flush = [&] {
        run_batch(batch, config);
        for (const auto& job : batch) {
            out << job.output << '\n';
            ++stats.records;
            if (job.ok) ++stats.graphs;
            else ++stats.errors;
        }
        batch.clear();
    };

    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view t = trim(line);
        if (t.empty() || t == ">>graph6<<") continue;
        batch.push_back({line_no, std::string(t), {}, false});
        if (batch.size() >= batch_size) flush();
    }
    if (!batch.empty()) flush();
    out.flush();
    return stats;
}

}  // namespace qwalk::report
