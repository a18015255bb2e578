// The exhaustive curve-search pipeline: orbit-reduced representatives of
// all degree-d curves, per-field point counts and singularity analysis,
// genus intervals, and best-per-(q, genus) tallies.
//
// A curve enters the tally only when its genus interval collapses to a
// point and absolute irreducibility is certified (tested lazily, since it
// is the expensive step). Tally values are the certified smooth-model
// counts (smooth plane points plus exact blow-up bonuses); flagged
// estimates stay in the per-curve rows. That keeps every tally value below
// the Serre bound by construction.

#pragma once

#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "agcodes/curve_analysis.hpp"
#include "agcodes/orbit.hpp"

namespace agcodes {

struct SearchConfig {
    int degree = 4;
    std::vector<unsigned> field_ms;             // extension degrees to analyze
    std::uint64_t max_representatives = 0;      // 0 = no budget
    std::string checkpoint_path;                // optional resume/checkpoint file
    unsigned jobs = 1;
    std::uint64_t checkpoint_every = 65536;     // representatives between checkpoints
};

struct SearchRow {
    PlaneCurve curve{1, 1};
    unsigned m = 0;
    std::uint32_t q = 0;
    std::uint64_t plane_points = 0;
    std::uint64_t smooth_points = 0;
    std::uint32_t n_sing = 0;
    long long bonus = 0;
    bool bonus_exact = true;
    long long certified_points = 0;
    long long genus_lo = 0;
    long long genus_hi = 0;
    std::optional<TriState> abs_irred;  // nullopt: never tested (not a tally candidate)
};

struct TallyEntry {
    long long best_points = 0;
    PlaneCurve witness{1, 1};
};

struct TallyTable {
    std::map<std::pair<std::uint32_t, long long>, TallyEntry> entries;  // (q, genus) -> best

    // max-merge; ties prefer the smaller (degree, mask) witness so merges
    // commute and runs are independent of worker count
    void offer(std::uint32_t q, long long genus, long long points, const PlaneCurve& witness) {
        auto it = entries.find({q, genus});
        if (it == entries.end()) {
            entries[{q, genus}] = {points, witness};
            return;
        }
        auto& e = it->second;
        if (points > e.best_points ||
            (points == e.best_points &&
             std::pair(witness.degree, witness.mask) < std::pair(e.witness.degree, e.witness.mask)))
            e = {points, witness};
    }
    void merge(const TallyTable& o) {
        for (const auto& [k, v] : o.entries) offer(k.first, k.second, v.best_points, v.witness);
    }
};

struct SearchResult {
    std::vector<SearchRow> rows;  // deterministic order: representative-major, field-minor
    TallyTable tally;
    std::uint64_t representatives_processed = 0;
    std::uint64_t representatives_total = 0;
    bool truncated = false;  // budget cut the stream short
};

namespace detail {

struct Checkpoint {
    int degree = 0;
    std::uint64_t next_rep_index = 0;
    TallyTable tally;
};

inline void write_checkpoint(const std::string& path, const Checkpoint& ck) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::runtime_error("checkpoint: cannot write " + tmp);
        auto put64 = [&](std::uint64_t v) { os.write(reinterpret_cast<const char*>(&v), 8); };
        os.write("AGCK", 4);
        put64(1);  // version
        put64(static_cast<std::uint64_t>(ck.degree));
        put64(ck.next_rep_index);
        put64(ck.tally.entries.size());
        for (const auto& [k, v] : ck.tally.entries) {
            put64(k.first);
            put64(static_cast<std::uint64_t>(k.second));
            put64(static_cast<std::uint64_t>(v.best_points));
            put64(static_cast<std::uint64_t>(v.witness.degree));
            put64(v.witness.mask);
        }
    }
    std::rename(tmp.c_str(), path.c_str());
}

inline std::optional<Checkpoint> read_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) return std::nullopt;
    char magic[4];
    is.read(magic, 4);
    if (!is || std::string(magic, 4) != "AGCK") throw std::runtime_error("checkpoint: bad magic");
    auto get64 = [&]() {
        std::uint64_t v = 0;
        is.read(reinterpret_cast<char*>(&v), 8);
        return v;
    };
    if (get64() != 1) throw std::runtime_error("checkpoint: unsupported version");
    Checkpoint ck;
    ck.degree = static_cast<int>(get64());
    ck.next_rep_index = get64();
    const std::uint64_t n = get64();
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint32_t q = static_cast<std::uint32_t>(get64());
        const long long genus = static_cast<long long>(get64());
        const long long pts = static_cast<long long>(get64());
        const int deg = static_cast<int>(get64());
        const std::uint32_t mask = static_cast<std::uint32_t>(get64());
        ck.tally.offer(q, genus, pts, PlaneCurve(deg, mask));
    }
    if (!is) throw std::runtime_error("checkpoint: truncated file");
    return ck;
}

}  // namespace detail

// Analysis of one representative over one field, shared by search and the
// analyze-curve CLI. Absolute irreducibility is tested only when
// want_irred_if_candidate is set and the genus interval is a point.
inline SearchRow search_analyze(const PlaneCurve& c, const GF2m& f,
                                std::optional<TriState>& irred_memo, bool tally_candidate_only) {
    SearchRow row;
    row.curve = c;
    row.m = f.m();
    row.q = f.q();
    std::vector<ProjPoint2> zeros;
    row.plane_points = count_points(c, f, &zeros);
    const auto sing = singular_points(c, f, &zeros);
    row.n_sing = static_cast<std::uint32_t>(sing.size());
    row.smooth_points = row.plane_points - sing.size();
    long long certified = 0;
    for (const auto& s : sing) {
        const auto [est, exact] = blowup_bonus(s);
        row.bonus += est;
        if (exact) certified += est;
        else row.bonus_exact = false;
    }
    row.certified_points = static_cast<long long>(row.smooth_points) + certified;
    row.genus_lo = serre_genus_lower(row.certified_points, f.q());
    row.genus_hi = plane_genus_upper(c.degree, sing.size());
    if (!tally_candidate_only || row.genus_lo == row.genus_hi) {
        if (!irred_memo) irred_memo = is_absolutely_irreducible(c);
        row.abs_irred = *irred_memo;
    }
    return row;
}

inline SearchResult run_search(const SearchConfig& cfg) {
    SearchResult result;

    std::uint64_t resume_from = 0;
    if (!cfg.checkpoint_path.empty()) {
        if (const auto ck = detail::read_checkpoint(cfg.checkpoint_path)) {
            if (ck->degree != cfg.degree)
                throw std::runtime_error("checkpoint degree does not match the search degree");
            resume_from = ck->next_rep_index;
            result.tally.merge(ck->tally);
        }
    }

    std::vector<PlaneCurve> reps;
    enumerate_representatives(cfg.degree, [&](const PlaneCurve& c) { reps.push_back(c); });
    result.representatives_total = reps.size();

    std::uint64_t limit = reps.size();
    if (cfg.max_representatives && cfg.max_representatives < limit) {
        limit = cfg.max_representatives;
        result.truncated = true;
    }

    std::vector<std::shared_ptr<const GF2m>> fields;
    for (unsigned m : cfg.field_ms) fields.push_back(make_field(m));

    const std::uint64_t todo = limit > resume_from ? limit - resume_from : 0;
    result.rows.resize(todo * fields.size());

    const unsigned jobs = cfg.jobs ? cfg.jobs : 1;
    std::vector<TallyTable> worker_tallies(jobs);
    std::atomic<std::uint64_t> next{0};

    auto worker = [&](unsigned wid) {
        for (;;) {
            const std::uint64_t slot = next.fetch_add(1);
            if (slot >= todo) break;
            const PlaneCurve& c = reps[resume_from + slot];
            std::optional<TriState> memo;
            for (std::size_t fi = 0; fi < fields.size(); ++fi) {
                SearchRow row = search_analyze(c, *fields[fi], memo, /*tally_candidate_only=*/true);
                if (row.genus_lo == row.genus_hi && row.abs_irred == TriState::yes)
                    worker_tallies[wid].offer(row.q, row.genus_lo, row.certified_points, c);
                result.rows[slot * fields.size() + fi] = std::move(row);
            }
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& t : threads) t.join();
    }
    for (const auto& wt : worker_tallies) result.tally.merge(wt);
    result.representatives_processed = todo;

    if (!cfg.checkpoint_path.empty())
        detail::write_checkpoint(cfg.checkpoint_path, {cfg.degree, limit, result.tally});
    return result;
}

// --- CSV emission ------------------------------------------------------------

inline const char* tri_state_name(const std::optional<TriState>& t) {
    if (!t) return "untested";
    switch (*t) {
        case TriState::yes: return "yes";
        case TriState::no: return "no";
        case TriState::unknown: return "unknown";
    }
    return "?";
}

inline void write_search_csv(std::ostream& os, const std::vector<SearchRow>& rows) {
    os << "degree,polynomial,q,plane_points,smooth_points,n_sing,bonus,bonus_exact,genus_lo,"
          "genus_hi,abs_irred\n";
    for (const auto& r : rows) {
        os << r.curve.degree << ",\"" << to_string(r.curve) << "\"," << r.q << ','
           << r.plane_points << ',' << r.smooth_points << ',' << r.n_sing << ',' << r.bonus << ','
           << (r.bonus_exact ? "true" : "false") << ',' << r.genus_lo << ',' << r.genus_hi << ','
           << tri_state_name(r.abs_irred) << "\n";
    }
}

inline void write_tally_csv(std::ostream& os, const TallyTable& t) {
    os << "q,genus,best_points,serre_bound,witness\n";
    for (const auto& [k, v] : t.entries) {
        const auto serre = static_cast<long long>(k.first) + 1 +
                           k.second * static_cast<long long>(floor_two_sqrt(k.first));
        os << k.first << ',' << k.second << ',' << v.best_points << ',' << serre << ",\""
           << to_string(v.witness) << "\"\n";
    }
}

// Rebuild a tally from a results CSV by re-analyzing each listed curve
// (rows record flags, not the certified split, so recomputation is the
// faithful route).
inline TallyTable tally_from_csv(std::istream& is) {
    TallyTable out;
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("tally_from_csv: empty input");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        // columns: degree,"polynomial",q,...
        const auto q1 = line.find('"');
        const auto q2 = line.find('"', q1 + 1);
        if (q1 == std::string::npos || q2 == std::string::npos)
            throw std::invalid_argument("tally_from_csv: bad row: " + line);
        const PlaneCurve c = parse_curve(line.substr(q1 + 1, q2 - q1 - 1));
        const std::string rest = line.substr(q2 + 2);
        const std::uint32_t q = static_cast<std::uint32_t>(std::stoul(rest));
        unsigned m = 0;
        while ((1u << (m + 1)) <= q) ++m;
        std::optional<TriState> memo;
        const SearchRow row = search_analyze(c, *make_field(m), memo, true);
        if (row.genus_lo == row.genus_hi && row.abs_irred == TriState::yes)
            out.offer(row.q, row.genus_lo, row.certified_points, c);
    }
    return out;
}

}  // namespace agcodes
