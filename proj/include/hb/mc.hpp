#pragma once

// Chunked Monte Carlo driver. Chunk c of stream s draws from a generator
// seeded by splitmix64 of (seed, s, c); chunk results are merged in chunk
// order, so the estimate does not depend on the number of threads.

#include <algorithm>
#include <atomic>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hb {

struct MCConfig {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    std::uint64_t chunk = 4096;
    unsigned threads = 0;  // 0: hardware concurrency
    /// Called from worker threads after each finished chunk.
    std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

struct Estimate {
    std::complex<double> value;
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t chunk)
{
    return splitmix64(splitmix64(splitmix64(seed) ^ stream) + chunk);
}

/// Running mean and sum of squared deviations of complex samples.
struct Accumulator {
    std::uint64_t n = 0;
    std::complex<double> mean = 0.0;
    double m2 = 0.0;

    void add(std::complex<double> w)
    {
        ++n;
        const std::complex<double> delta = w - mean;
        mean += delta / static_cast<double>(n);
        m2 += std::real(delta * std::conj(w - mean));
    }

    void merge(const Accumulator& o)
    {
        if (o.n == 0) return;
        if (n == 0) {
            *this = o;
            return;
        }
        const double na = static_cast<double>(n), nb = static_cast<double>(o.n);
        const std::complex<double> delta = o.mean - mean;
        const double total = na + nb;
        mean += delta * (nb / total);
        m2 += o.m2 + std::norm(delta) * na * nb / total;
        n += o.n;
    }

    Estimate estimate() const
    {
        Estimate e;
        e.value = mean;
        e.samples = n;
        e.std_error = n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0;
        return e;
    }
};

/// f(std::mt19937_64&) -> std::complex<double> is called once per sample.
template <class SampleFn>
Estimate monte_carlo(const MCConfig& cfg, std::uint64_t stream, SampleFn&& f)
{
    if (cfg.samples < 1) throw std::invalid_argument("monte carlo: samples must be at least 1");
    if (cfg.chunk < 1) throw std::invalid_argument("monte carlo: chunk must be at least 1");
    const std::uint64_t nchunks = (cfg.samples + cfg.chunk - 1) / cfg.chunk;
    std::vector<Accumulator> parts(nchunks);

    unsigned nthreads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    nthreads = static_cast<unsigned>(std::min<std::uint64_t>(nthreads, nchunks));

    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> done{0};
    auto worker = [&] {
        for (std::uint64_t c = next++; c < nchunks; c = next++) {
            std::mt19937_64 rng(chunk_seed(cfg.seed, stream, c));
            const std::uint64_t begin = c * cfg.chunk;
            const std::uint64_t end = std::min(cfg.samples, begin + cfg.chunk);
            Accumulator acc;
            for (std::uint64_t k = begin; k < end; ++k) acc.add(f(rng));
            parts[c] = acc;
            const std::uint64_t d = done += end - begin;
            if (cfg.progress) cfg.progress(d, cfg.samples);
        }
    };
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    Accumulator total;
    for (const auto& p : parts) total.merge(p);
    return total.estimate();
}

}  // namespace hb
