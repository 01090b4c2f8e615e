#pragma once

// Checkpointable prime-range sweep with JSONL output. Chunks are fixed
// numeric ranges, workers pull chunks from an atomic counter, and records
// are emitted strictly in chunk order, so the output stream is bit-identical
// for every worker count. Resuming from a checkpoint reproduces the
// uninterrupted output exactly.

#include <atomic>
#include <charconv>
#include <condition_variable>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "simroots/counting.hpp"
#include "simroots/parallel.hpp"
#include "simroots/polynomial.hpp"

namespace simroots {

class CheckpointMismatchError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Content hash (FNV-1a 64) of the sweep parameters; a resume with a
// different digest is an error, never a silent merge.
inline std::string sweep_params_digest(i64 z, const std::string& poly_text) {
    const std::string key = "sweep|z=" + std::to_string(z) + "|poly=" + poly_text;
    u64 h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct SweepCheckpoint {
    int schema_version = 1;
    std::string params_digest;
    u64 last_prime = 0;
    u64 pi = 0;    // primes evaluated so far
    u64 pi_f = 0;  // hits so far
};

inline void save_checkpoint(const std::string& path, const SweepCheckpoint& cp) {
    nlohmann::ordered_json j;
    j["schema_version"] = cp.schema_version;
    j["params_digest"] = cp.params_digest;
    j["last_prime"] = cp.last_prime;
    j["counters"] = {{"pi", cp.pi}, {"pi_f", cp.pi_f}};
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint: " + tmp);
        out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

inline SweepCheckpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read checkpoint: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    SweepCheckpoint cp;
    cp.schema_version = j.at("schema_version").get<int>();
    if (cp.schema_version != 1)
        throw std::runtime_error("unsupported checkpoint schema_version");
    cp.params_digest = j.at("params_digest").get<std::string>();
    cp.last_prime = j.at("last_prime").get<u64>();
    cp.pi = j.at("counters").at("pi").get<u64>();
    cp.pi_f = j.at("counters").at("pi_f").get<u64>();
    return cp;
}

struct SweepOptions {
    i64 z = 2;
    IntPolynomial poly;
    u64 x_max = 100;
    unsigned workers = 0;           // 0 -> SIMROOTS_WORKERS or 1
    std::string checkpoint_path;    // empty: no checkpointing
    bool resume = false;
    u64 checkpoint_every = 100'000; // primes between checkpoint writes
    u64 chunk_width = default_chunk_width;
};

struct SweepSummary {
    u64 x = 0;
    u64 pi_f = 0;
    u64 pi = 0;
    double ratio = 0.0;
};

namespace detail {

inline std::string double_to_string(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

inline std::string record_line(const SweepRecord& r) {
    std::string line = "{\"p\":" + std::to_string(r.p) + ",\"hit\":";
    line += r.hit ? "true" : "false";
    line += "}";
    return line;
}

inline std::string summary_line(const SweepSummary& s) {
    return "{\"summary\":{\"x\":" + std::to_string(s.x) + ",\"pi_f\":" + std::to_string(s.pi_f) +
           ",\"pi\":" + std::to_string(s.pi) + ",\"ratio\":" + double_to_string(s.ratio) + "}}";
}

// Runs map(chunk) on a worker pool and hands the results to emit(index,
// result) in ascending chunk order on the calling thread, streaming instead
// of buffering the whole sweep.
template <class Result, class MapFn, class EmitFn>
void ordered_chunk_stream(const std::vector<ChunkRange>& chunks, unsigned workers, MapFn map,
                          EmitFn emit) {
    workers = resolve_workers(workers);
    const std::size_t n = chunks.size();
    if (n == 0) return;
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) emit(i, map(chunks[i]));
        return;
    }
    std::mutex mu;
    std::condition_variable cv;
    std::map<std::size_t, Result> ready;
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            Result r = map(chunks[i]);
            {
                std::lock_guard<std::mutex> lock(mu);
                ready.emplace(i, std::move(r));
            }
            cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    const unsigned count = workers < n ? workers : static_cast<unsigned>(n);
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(body);
    for (std::size_t want = 0; want < n; ++want) {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return ready.count(want) != 0; });
        Result r = std::move(ready.at(want));
        ready.erase(want);
        lock.unlock();
        emit(want, std::move(r));
    }
    for (auto& th : pool) th.join();
}

// Keeps only the records with p <= last_prime from an existing JSONL file
// (summary lines and anything newer are dropped) so a resumed run continues
// a consistent prefix.
inline void truncate_jsonl_to(const std::string& path, u64 last_prime) {
    std::ifstream in(path);
    if (!in) return;  // nothing to truncate
    std::vector<std::string> keep;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("p")) continue;
        if (j["p"].get<u64>() <= last_prime) keep.push_back(line);
    }
    in.close();
    std::ofstream out(path, std::ios::trunc);
    for (const std::string& l : keep) out << l << "\n";
}

}  // namespace detail

namespace detail {

struct SweepStart {
    u64 first = 2;  // first value to scan
    u64 pi = 0;     // counters carried in from a checkpoint
    u64 pi_f = 0;
};

// Validates a resume request against the parameter digest and returns the
// scan start plus the carried counters.
inline SweepStart resolve_start(const SweepOptions& opts, const std::string& digest) {
    SweepStart s;
    if (!opts.resume) return s;
    if (opts.checkpoint_path.empty())
        throw std::runtime_error("resume requested without a checkpoint path");
    const SweepCheckpoint cp = load_checkpoint(opts.checkpoint_path);
    if (cp.params_digest != digest)
        throw CheckpointMismatchError("checkpoint params_digest mismatch: expected " + digest +
                                      ", found " + cp.params_digest);
    if (cp.last_prime > opts.x_max)
        throw std::runtime_error("checkpoint already covers primes beyond --x-max");
    s.first = cp.last_prime + 1;
    s.pi = cp.pi;
    s.pi_f = cp.pi_f;
    return s;
}

// Emits the record lines for primes in [start.first, x_max] followed by the
// summary line; checkpoints every checkpoint_every primes and at the end.
inline SweepSummary sweep_emit(const SweepOptions& opts, const SweepStart& start,
                               const std::string& digest, std::ostream& out) {
    SweepSummary summary;
    summary.x = opts.x_max;
    summary.pi = start.pi;
    summary.pi_f = start.pi_f;
    const std::vector<IntPolynomial> polys{opts.poly};
    u64 since_checkpoint = 0;
    u64 last_prime = start.first > 2 ? start.first - 1 : 0;
    if (start.first <= opts.x_max) {
        ordered_chunk_stream<std::vector<SweepRecord>>(
            make_chunks(start.first, opts.x_max, opts.chunk_width), opts.workers,
            [&](ChunkRange r) {
                std::vector<SweepRecord> recs;
                for_each_prime(r.lo, r.hi,
                               [&](u64 p) { recs.push_back({p, simultaneous_hit(opts.z, polys, p)}); });
                return recs;
            },
            [&](std::size_t, const std::vector<SweepRecord>& recs) {
                for (const SweepRecord& r : recs) {
                    out << record_line(r) << "\n";
                    ++summary.pi;
                    if (r.hit) ++summary.pi_f;
                    last_prime = r.p;
                    ++since_checkpoint;
                }
                if (!opts.checkpoint_path.empty() && since_checkpoint >= opts.checkpoint_every) {
                    out.flush();
                    save_checkpoint(opts.checkpoint_path,
                                    {1, digest, last_prime, summary.pi, summary.pi_f});
                    since_checkpoint = 0;
                }
            });
    }
    summary.ratio = summary.pi == 0
                        ? 0.0
                        : static_cast<double>(summary.pi_f) / static_cast<double>(summary.pi);
    if (!opts.checkpoint_path.empty())
        save_checkpoint(opts.checkpoint_path, {1, digest, last_prime, summary.pi, summary.pi_f});
    out << summary_line(summary) << "\n";
    out.flush();
    return summary;
}

}  // namespace detail

// Sweep into an arbitrary stream. On resume only the records after the
// checkpointed prime are emitted (an existing stream cannot be rewound).
inline SweepSummary run_sweep_stream(const SweepOptions& opts, std::ostream& out) {
    const std::string digest = sweep_params_digest(opts.z, to_string(opts.poly));
    return detail::sweep_emit(opts, detail::resolve_start(opts, digest), digest, out);
}

// Full sweep with JSONL emission to out_path: one {"p","hit"} record per
// prime <= x_max, then a final {"summary":...} line. On resume the existing
// file is truncated back to the checkpointed prefix and extended, so the
// result is byte-identical to an uninterrupted run.
inline SweepSummary run_sweep_to_file(const SweepOptions& opts, const std::string& out_path) {
    const std::string digest = sweep_params_digest(opts.z, to_string(opts.poly));
    const detail::SweepStart start = detail::resolve_start(opts, digest);
    if (opts.resume) {
        detail::truncate_jsonl_to(out_path, start.first - 1);
    } else {
        std::ofstream wipe(out_path, std::ios::trunc);
        if (!wipe) throw std::runtime_error("cannot write sweep output: " + out_path);
    }
    std::ofstream out(out_path, std::ios::app);
    if (!out) throw std::runtime_error("cannot write sweep output: " + out_path);
    return detail::sweep_emit(opts, start, digest, out);
}

}  // namespace simroots
