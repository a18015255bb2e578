// Linear codes over GF(q): rank-validated generator matrices, encoding,
// exact minimum distance by exhaustive message enumeration (with a hard
// work guard), the Singleton check, and the CSV matrix format used by the
// CLI (`q=..,k=..,n=..` header, one row per line).

#pragma once

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "agcodes/gf2m.hpp"
#include "agcodes/rational.hpp"

namespace agcodes {

struct WorkLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GeneratorMatrix {
    std::shared_ptr<const GF2m> field;
    std::size_t k = 0, n = 0;
    std::vector<std::uint32_t> e;  // row-major, k*n entries

    std::uint32_t at(std::size_t i, std::size_t j) const { return e[i * n + j]; }
    std::uint32_t& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
};

// Row-echelon rank over GF(q); does not modify the input.
inline std::size_t matrix_rank(const GF2m& f, std::size_t rows, std::size_t cols,
                               std::vector<std::uint32_t> a) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols,
                         a.begin() + rank * cols);
        const std::uint32_t inv = f.inv(a[rank * cols + col]);
        for (std::size_t j = col; j < cols; ++j) a[rank * cols + j] = f.mul(a[rank * cols + j], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r * cols + col] == 0) continue;
            const std::uint32_t s = a[r * cols + col];
            for (std::size_t j = col; j < cols; ++j)
                a[r * cols + j] = f.add(a[r * cols + j], f.mul(s, a[rank * cols + j]));
        }
        ++rank;
    }
    return rank;
}

// Full-rank validation happens here so dimension claims hold downstream.
inline GeneratorMatrix make_generator_matrix(std::shared_ptr<const GF2m> field, std::size_t k,
                                             std::size_t n, std::vector<std::uint32_t> entries) {
    if (k == 0 || n == 0 || entries.size() != k * n)
        throw std::invalid_argument("make_generator_matrix: bad shape");
    if (matrix_rank(*field, k, n, entries) != k)
        throw std::invalid_argument("make_generator_matrix: rows are not independent (rank < k)");
    return GeneratorMatrix{std::move(field), k, n, std::move(entries)};
}

inline std::vector<std::uint32_t> encode(const GeneratorMatrix& g,
                                         const std::vector<std::uint32_t>& msg) {
    if (msg.size() != g.k) throw std::invalid_argument("encode: message length != k");
    const GF2m& f = *g.field;
    std::vector<std::uint32_t> cw(g.n, 0);
    for (std::size_t i = 0; i < g.k; ++i) {
        if (msg[i] == 0) continue;
        for (std::size_t j = 0; j < g.n; ++j)
            cw[j] = f.add(cw[j], f.mul(msg[i], g.at(i, j)));
    }
    return cw;
}

// Exact minimum Hamming weight over all q^k - 1 nonzero messages. Messages
// are stepped through base-q odometer order with incremental codeword
// updates (each digit change adds (new - old) times a single row). With
// jobs > 1 the message space is partitioned by the value of the last
// coordinate and min-reduced, so the result is independent of the worker
// count.
inline long long min_distance_exhaustive(const GeneratorMatrix& g,
                                         std::uint64_t work_limit = std::uint64_t(1) << 24,
                                         unsigned jobs = 1) {
    const GF2m& f = *g.field;
    const std::uint32_t q = f.q();
    // q^k <= work_limit, checked without overflow
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < g.k; ++i) {
        if (total > work_limit / q)
            throw WorkLimitExceeded("min_distance_exhaustive: q^k exceeds work limit");
        total *= q;
    }
    const std::size_t kfree = g.k - 1;  // odometer digits; the last digit is the partition
    const std::uint64_t per_part = total / q;

    auto scan_partition = [&](std::uint32_t last) {
        std::vector<std::uint32_t> digits(kfree, 0), cw(g.n, 0);
        if (last != 0)
            for (std::size_t j = 0; j < g.n; ++j) cw[j] = f.mul(last, g.at(kfree, j));
        long long best = static_cast<long long>(g.n) + 1;
        auto weigh = [&]() {
            long long w = 0;
            for (std::size_t j = 0; j < g.n; ++j) w += (cw[j] != 0);
            if (w < best) best = w;
        };
        if (last != 0) weigh();  // the all-zero-prefix message of this partition
        for (std::uint64_t step = 1; step < per_part; ++step) {
            for (std::size_t pos = 0;; ++pos) {
                const std::uint32_t old = digits[pos];
                const std::uint32_t next = (old + 1) % q;
                digits[pos] = next;
                const std::uint32_t delta = old ^ next;  // field subtraction
                for (std::size_t j = 0; j < g.n; ++j)
                    cw[j] = f.add(cw[j], f.mul(delta, g.at(pos, j)));
                if (next != 0) break;
            }
            weigh();
        }
        return best;
    };

    long long best = static_cast<long long>(g.n) + 1;
    if (jobs <= 1) {
        for (std::uint32_t last = 0; last < q; ++last) best = std::min(best, scan_partition(last));
    } else {
        std::vector<long long> part(q, 0);
        std::vector<std::thread> threads;
        std::atomic<std::uint32_t> next{0};
        for (unsigned w = 0; w < jobs; ++w)
            threads.emplace_back([&] {
                for (;;) {
                    const std::uint32_t v = next.fetch_add(1);
                    if (v >= q) break;
                    part[v] = scan_partition(v);
                }
            });
        for (auto& t : threads) t.join();
        for (std::uint32_t v = 0; v < q; ++v) best = std::min(best, part[v]);
    }
    return best;
}

struct CodeParams {
    long long n = 0, k = 0, d = 0;
    bool d_exact = false;  // false: d is a lower bound
    Rat rate, delta;
};

inline bool singleton_check(const CodeParams& p) { return p.n + 1 >= p.k + p.d; }

// Validating constructor; every emitted CodeParams passes through here.
inline CodeParams make_code_params(long long n, long long k, long long d, bool d_exact) {
    CodeParams p{n, k, d, d_exact, Rat(k, n), Rat(d, n)};
    if (!(0 < k && k <= n)) throw std::invalid_argument("CodeParams: need 0 < k <= n");
    if (!(1 <= d && d <= n)) throw std::invalid_argument("CodeParams: need 1 <= d <= n");
    if (!singleton_check(p)) throw std::invalid_argument("CodeParams: Singleton bound violated");
    return p;
}

// Same row space iff stacking does not increase the rank.
inline bool row_space_equal(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    if (a.n != b.n || !(*a.field == *b.field)) return false;
    std::vector<std::uint32_t> stacked = a.e;
    stacked.insert(stacked.end(), b.e.begin(), b.e.end());
    const std::size_t ra = matrix_rank(*a.field, a.k, a.n, a.e);
    const std::size_t rb = matrix_rank(*b.field, b.k, b.n, b.e);
    const std::size_t rs = matrix_rank(*a.field, a.k + b.k, a.n, stacked);
    return ra == rb && rb == rs;
}

// --- CSV serialization -----------------------------------------------------

inline void write_generator_csv(std::ostream& os, const GeneratorMatrix& g) {
    os << "q=" << g.field->q() << ",k=" << g.k << ",n=" << g.n << "\n";
    for (std::size_t i = 0; i < g.k; ++i) {
        for (std::size_t j = 0; j < g.n; ++j) os << (j ? "," : "") << g.at(i, j);
        os << "\n";
    }
}

inline GeneratorMatrix read_generator_csv(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::invalid_argument("generator csv: empty input");
    unsigned long q = 0, k = 0, n = 0;
    if (std::sscanf(header.c_str(), "q=%lu,k=%lu,n=%lu", &q, &k, &n) != 3)
        throw std::invalid_argument("generator csv: bad header: " + header);
    unsigned m = 0;
    while ((1ul << (m + 1)) <= q && m < kMaxExtensionDegree) ++m;
    if ((1ul << m) != q) throw std::invalid_argument("generator csv: q is not a supported power of 2");
    auto field = make_field(m);
    std::vector<std::uint32_t> entries;
    entries.reserve(k * n);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            const unsigned long v = std::stoul(cell);
            if (v >= q) throw std::invalid_argument("generator csv: entry out of field range");
            entries.push_back(static_cast<std::uint32_t>(v));
        }
    }
    if (entries.size() != k * n) throw std::invalid_argument("generator csv: entry count mismatch");
    return make_generator_matrix(std::move(field), k, n, std::move(entries));
}

}  // namespace agcodes
