#pragma once

/// Irregular-pair discovery and the residue-class distribution tables.
///
/// A pair (p, t) is irregular when p divides B_t for even 2 <= t <= p-3.
/// Detection walks the series-inversion residue table; every candidate is
/// then confirmed by the independent power-sum oracle before it enters the
/// cache. The cache is a plain-text CSV with a high-water mark, append-only
/// in effect and resumable.

#include "mhs/bernoulli.hpp"
#include "mhs/modular.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace mhs {

struct IrregularPair {
    std::uint64_t p = 0;
    std::uint64_t t = 0;

    friend bool operator==(const IrregularPair& a, const IrregularPair& b) {
        return a.p == b.p && a.t == b.t;
    }
    friend bool operator<(const IrregularPair& a, const IrregularPair& b) {
        return a.p != b.p ? a.p < b.p : a.t < b.t;
    }
};

/// Sorted by (p, t); complete for every prime <= p_max.
struct PairCache {
    std::vector<IrregularPair> pairs;
    std::uint64_t p_max = 0;
};

/// All even t with (p, t) irregular, each confirmed by the power-sum
/// oracle. Disagreement between the two routes is a hard error.
inline std::vector<std::uint64_t> irregular_pairs_of(std::uint64_t p) {
    BernoulliModTable table(p);
    std::vector<std::uint64_t> out = table.zero_indices();
    for (std::uint64_t t : out) {
        if (t == 2) throw std::logic_error("irregular_pairs_of: B_2 = 1/6 cannot vanish");
        if (bernoulli_single_mod(t, p) != 0)
            throw std::logic_error("irregular_pairs_of: table zero at (" +
                                   std::to_string(p) + "," + std::to_string(t) +
                                   ") rejected by the power-sum oracle");
    }
    return out;
}

inline std::size_t irregular_index(std::uint64_t p) {
    return irregular_pairs_of(p).size();
}

// ---- cache persistence ----

inline void save_cache(const PairCache& cache, const std::string& path) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write cache file: " + tmp);
        os << "# pmax=" << cache.p_max << "\n";
        for (const auto& pr : cache.pairs) os << pr.p << "," << pr.t << "\n";
        if (!os) throw std::runtime_error("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

inline PairCache load_cache(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open cache file: " + path);
    PairCache cache;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto pos = line.find("pmax=");
            if (pos != std::string::npos)
                cache.p_max = std::stoull(line.substr(pos + 5));
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("malformed cache row: " + line);
        cache.pairs.push_back(IrregularPair{std::stoull(line.substr(0, comma)),
                                            std::stoull(line.substr(comma + 1))});
    }
    return cache;
}

/// Extends the cache to p_max. Idempotent: already-covered primes are not
/// rescanned. Progress and checkpointing are optional hooks; checkpoints
/// always leave a fully consistent file behind.
inline PairCache scan(std::uint64_t p_max, PairCache cache,
                      unsigned parallelism = 1,
                      const std::function<void(std::uint64_t)>& progress = {},
                      const std::function<void(const PairCache&)>& checkpoint = {}) {
    if (p_max <= cache.p_max) return cache;
    auto primes = primes_in(std::max<std::uint64_t>(cache.p_max + 1, 5), p_max);
    std::vector<std::vector<std::uint64_t>> found(primes.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= primes.size()) break;
            found[i] = irregular_pairs_of(primes[i]);
            if (progress) progress(primes[i]);
        }
    };
    unsigned workers = std::max(1u, parallelism);
    if (workers <= 1 || primes.size() <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    const std::size_t checkpoint_stride = 64;
    std::size_t since_checkpoint = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::uint64_t t : found[i]) cache.pairs.push_back({primes[i], t});
        cache.p_max = primes[i];
        if (checkpoint && ++since_checkpoint >= checkpoint_stride) {
            checkpoint(cache);
            since_checkpoint = 0;
        }
    }
    cache.p_max = p_max;
    if (checkpoint) checkpoint(cache);
    return cache;
}

// ---- distribution tables ----

struct DistributionTable {
    std::uint64_t modulus = 3;
    std::vector<std::uint64_t> milestones;
    // counts[c][j] = #{pairs among the first milestones[j] with p-t = c (mod M)}
    std::vector<std::vector<std::uint64_t>> counts;

    /// Percentage 100*count/m rounded half-up to 2 decimals, rendered as a
    /// string like "32.20".
    static std::string percent(std::uint64_t count, std::uint64_t m) {
        std::uint64_t scaled = (20000 * count + m) / (2 * m); // hundredths
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%llu.%02llu",
                      static_cast<unsigned long long>(scaled / 100),
                      static_cast<unsigned long long>(scaled % 100));
        return buf;
    }

    std::string to_csv() const {
        std::ostringstream os;
        os << "class,milestone,count,percent\n";
        for (std::uint64_t c = 0; c < modulus; ++c)
            for (std::size_t j = 0; j < milestones.size(); ++j)
                os << c << "," << milestones[j] << "," << counts[c][j] << ","
                   << percent(counts[c][j], milestones[j]) << "\n";
        return os.str();
    }

    std::string to_text() const {
        auto cell = [](const std::string& s) {
            std::string out = s;
            while (out.size() < 10) out.insert(out.begin(), ' ');
            return out;
        };
        std::ostringstream os;
        os << cell("m");
        for (auto m : milestones) os << cell(std::to_string(m));
        os << "\n";
        for (std::uint64_t c = 0; c < modulus; ++c) {
            os << cell("N(" + std::to_string(c) + ",m)");
            for (std::size_t j = 0; j < milestones.size(); ++j)
                os << cell(std::to_string(counts[c][j]));
            os << "\n";
            os << cell("P(" + std::to_string(c) + ",m)");
            for (std::size_t j = 0; j < milestones.size(); ++j)
                os << cell(percent(counts[c][j], milestones[j]));
            os << "\n";
        }
        return os.str();
    }
};

/// Counts p-t mod M over the first m pairs (ordered by (p, t)) for each
/// milestone m, optionally restricted to pairs whose prime has the given
/// irregular index.
inline DistributionTable tabulate(const PairCache& cache, std::uint64_t modulus,
                                  std::vector<std::uint64_t> milestones,
                                  std::optional<std::size_t> index_filter = {}) {
    if (modulus < 2) throw std::invalid_argument("tabulate: modulus must be >= 2");
    std::vector<IrregularPair> pool;
    if (index_filter) {
        std::map<std::uint64_t, std::size_t> index_of;
        for (const auto& pr : cache.pairs) ++index_of[pr.p];
        for (const auto& pr : cache.pairs)
            if (index_of[pr.p] == *index_filter) pool.push_back(pr);
    } else {
        pool = cache.pairs;
    }
    std::sort(milestones.begin(), milestones.end());
    if (!milestones.empty() && milestones.back() > pool.size())
        throw std::invalid_argument(
            "tabulate: milestone " + std::to_string(milestones.back()) +
            " exceeds the " + std::to_string(pool.size()) + " cached pairs");
    DistributionTable table;
    table.modulus = modulus;
    table.milestones = milestones;
    table.counts.assign(modulus, std::vector<std::uint64_t>(milestones.size(), 0));
    std::vector<std::uint64_t> running(modulus, 0);
    std::size_t mi = 0;
    for (std::size_t i = 0; i < pool.size() && mi < milestones.size(); ++i) {
        ++running[(pool[i].p - pool[i].t) % modulus];
        while (mi < milestones.size() && i + 1 == milestones[mi]) {
            for (std::uint64_t c = 0; c < modulus; ++c) table.counts[c][mi] = running[c];
            ++mi;
        }
    }
    return table;
}

} // namespace mhs
