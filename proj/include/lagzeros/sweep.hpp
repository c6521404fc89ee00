#pragma once

// Seeded parameter sweeps over R/S combinations, one record per
// (sample, comparison target), with byte-stable CSV/JSON rendering.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "lagzeros/errors.hpp"
#include "lagzeros/interlace.hpp"
#include "lagzeros/laguerre.hpp"
#include "lagzeros/rootfind.hpp"

namespace lagzeros {

/// Laguerre polynomial a combination's zeros are compared against.
enum class Target { L_n_alpha, L_nm1_alpha, L_n_alpha_t, L_nm1_alpha_t };

inline std::string_view to_string(Target t) {
    switch (t) {
        case Target::L_n_alpha: return "L_n^alpha";
        case Target::L_nm1_alpha: return "L_{n-1}^alpha";
        case Target::L_n_alpha_t: return "L_n^{alpha+t}";
        case Target::L_nm1_alpha_t: return "L_{n-1}^{alpha+t}";
    }
    return "?";
}

inline Target parse_target(std::string_view s) {
    for (Target t : {Target::L_n_alpha, Target::L_nm1_alpha, Target::L_n_alpha_t, Target::L_nm1_alpha_t})
        if (s == to_string(t)) return t;
    throw DomainError("unknown target '" + std::string(s) +
                      "' (expected L_n^alpha, L_{n-1}^alpha, L_n^{alpha+t} or L_{n-1}^{alpha+t})");
}

inline ZeroSet target_zeros(Target target, int n, double alpha, double t) {
    switch (target) {
        case Target::L_n_alpha: return laguerre_zeros(n, alpha);
        case Target::L_nm1_alpha: return laguerre_zeros(n - 1, alpha);
        case Target::L_n_alpha_t: return laguerre_zeros(n, alpha + t);
        case Target::L_nm1_alpha_t: return laguerre_zeros(n - 1, alpha + t);
    }
    throw DomainError("unknown target");
}

struct SweepConfig {
    std::size_t samples = 100;
    std::optional<std::uint64_t> seed;
    int n_min = 2, n_max = 10;
    double alpha_min = -0.99, alpha_max = 8.0;
    double t_min = 0.0, t_max = 2.0;
    double coeff_min = -10.0, coeff_max = 10.0;
    Family family = Family::S;
    std::vector<Target> targets;  // empty: the two targets of the family's interlacing theorem
    std::string out;              // empty: standard output
};

inline std::vector<Target> default_targets(Family f) {
    if (f == Family::R) return {Target::L_n_alpha, Target::L_n_alpha_t};
    return {Target::L_n_alpha, Target::L_nm1_alpha_t};
}

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline double parse_real(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || !std::isfinite(out)) throw DomainError("config key '" + key + "': not a real: '" + v + "'");
    return out;
}

inline long long parse_integer(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    long long out = 0;
    try {
        out = std::stoll(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size()) throw DomainError("config key '" + key + "': not an integer: '" + v + "'");
    return out;
}

}  // namespace detail

/// Rejects empty or inverted ranges and parameters outside alpha > -1, alpha + t > -1.
inline void validate(const SweepConfig& c) {
    if (!c.seed) throw DomainError("sweep config: seed is mandatory");
    if (c.samples == 0) throw DomainError("sweep config: samples must be positive");
    if (c.n_min < 2 || c.n_max < c.n_min) throw DomainError("sweep config: need 2 <= n_min <= n_max");
    if (!(c.alpha_min >= -1.0 && c.alpha_max > c.alpha_min))
        throw DomainError("sweep config: need -1 <= alpha_min < alpha_max");
    if (!(c.t_max > c.t_min)) throw DomainError("sweep config: need t_min < t_max");
    if (!(c.alpha_min + c.t_min >= -1.0)) throw DomainError("sweep config: need alpha_min + t_min >= -1");
    if (!(c.coeff_max > c.coeff_min)) throw DomainError("sweep config: need coeff_min < coeff_max");
    if (c.coeff_min == 0.0 && c.coeff_max == 0.0) throw DomainError("sweep config: coefficient range is {0}");
}

/// Parses `key = value` lines; blank lines and `#` comments are ignored.
inline SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = detail::trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw DomainError("sweep config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = detail::trim(std::string_view(body).substr(0, eq));
        const std::string val = detail::trim(std::string_view(body).substr(eq + 1));

        if (key == "samples") {
            const auto s = detail::parse_integer(key, val);
            if (s <= 0) throw DomainError("sweep config: samples must be positive");
            c.samples = static_cast<std::size_t>(s);
        } else if (key == "seed") {
            const auto s = detail::parse_integer(key, val);
            if (s < 0) throw DomainError("sweep config: seed must be non-negative");
            c.seed = static_cast<std::uint64_t>(s);
        } else if (key == "n_min") {
            c.n_min = static_cast<int>(detail::parse_integer(key, val));
        } else if (key == "n_max") {
            c.n_max = static_cast<int>(detail::parse_integer(key, val));
        } else if (key == "alpha_min") {
            c.alpha_min = detail::parse_real(key, val);
        } else if (key == "alpha_max") {
            c.alpha_max = detail::parse_real(key, val);
        } else if (key == "t_min") {
            c.t_min = detail::parse_real(key, val);
        } else if (key == "t_max") {
            c.t_max = detail::parse_real(key, val);
        } else if (key == "coeff_min") {
            c.coeff_min = detail::parse_real(key, val);
        } else if (key == "coeff_max") {
            c.coeff_max = detail::parse_real(key, val);
        } else if (key == "family") {
            c.family = parse_family(val);
        } else if (key == "targets") {
            c.targets.clear();
            std::stringstream ss(val);
            std::string item;
            while (std::getline(ss, item, ',')) {
                item = detail::trim(item);
                if (!item.empty()) c.targets.push_back(parse_target(item));
            }
        } else if (key == "out") {
            c.out = val;
        } else {
            throw DomainError("sweep config: unknown key '" + key + "'");
        }
    }
    validate(c);
    return c;
}

struct SweepRecord {
    Family family = Family::S;
    int n = 0;
    double alpha = 0.0, t = 0.0, coeff = 0.0;
    Target target = Target::L_n_alpha;
    Verdict verdict = Verdict::fails;
    double min_gap = 0.0;
    bool complete = false;
};

/// One sweep sample. The draw order (n, alpha, t, coeff) is part of the output contract.
struct SweepSample {
    int n;
    double alpha, t, coeff;
};

/// Deterministic across platforms: raw 64-bit draws only, no std distributions.
class SweepSampler {
public:
    explicit SweepSampler(const SweepConfig& c) : config_(c), rng_(*c.seed) {}

    SweepSample next() {
        SweepSample s{};
        const auto span = static_cast<std::uint64_t>(config_.n_max - config_.n_min + 1);
        s.n = config_.n_min + static_cast<int>(rng_() % span);
        s.alpha = half_open(config_.alpha_min, config_.alpha_max);
        s.t = half_open(config_.t_min, config_.t_max);
        do {
            s.coeff = half_open(config_.coeff_min, config_.coeff_max);
        } while (s.coeff == 0.0);
        return s;
    }

private:
    /// Uniform on (lo, hi].
    double half_open(double lo, double hi) {
        const double u = static_cast<double>((rng_() >> 11) + 1) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    const SweepConfig& config_;
    std::mt19937_64 rng_;
};

/// Records for one sample, one per target, in target order.
inline std::vector<SweepRecord> evaluate_sample(Family family, const SweepSample& s, const std::vector<Target>& targets) {
    const CombinationSpec spec(family, {s.n, s.alpha, s.t, s.coeff});
    const ZeroSet combo = combination_zeros(spec);
    std::vector<SweepRecord> out;
    for (Target target : targets) {
        SweepRecord r{family, s.n, s.alpha, s.t, s.coeff, target, Verdict::fails,
                      std::numeric_limits<double>::quiet_NaN(), combo.complete};
        const ZeroSet tz = target_zeros(target, s.n, s.alpha, s.t);
        const auto diff = combo.size() > tz.size() ? combo.size() - tz.size() : tz.size() - combo.size();
        if (diff <= 1) {
            const auto report = interlace_check(combo, tz);
            r.verdict = report.verdict;
            r.min_gap = report.min_gap;
        }
        out.push_back(r);
    }
    return out;
}

/// Runs the sweep; records come back in sample order regardless of `threads`.
inline std::vector<SweepRecord> run_sweep(const SweepConfig& config, unsigned threads = 1) {
    validate(config);
    const auto targets = config.targets.empty() ? default_targets(config.family) : config.targets;

    std::vector<SweepSample> samples;
    samples.reserve(config.samples);
    SweepSampler sampler(config);
    for (std::size_t i = 0; i < config.samples; ++i) samples.push_back(sampler.next());

    std::vector<std::vector<SweepRecord>> per_sample(samples.size());
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(samples.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < samples.size(); i += threads)
                    per_sample[i] = evaluate_sample(config.family, samples[i], targets);
            });
        }
    }
    std::vector<SweepRecord> out;
    for (auto& recs : per_sample) out.insert(out.end(), recs.begin(), recs.end());
    return out;
}

/// Shortest round-trip decimal representation, `.` separator, independent of locale.
inline std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

inline constexpr std::string_view sweep_csv_header = "family,n,alpha,t,coeff,target,verdict,min_gap,complete";

inline void write_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
    os << sweep_csv_header << '\n';
    for (const auto& r : records) {
        os << to_string(r.family) << ',' << r.n << ',' << format_real(r.alpha) << ',' << format_real(r.t) << ','
           << format_real(r.coeff) << ',' << to_string(r.target) << ',' << to_string(r.verdict) << ','
           << format_real(r.min_gap) << ',' << (r.complete ? "true" : "false") << '\n';
    }
}

inline nlohmann::json to_json(const SweepRecord& r) {
    nlohmann::json j;
    j["family"] = to_string(r.family);
    j["n"] = r.n;
    j["alpha"] = r.alpha;
    j["t"] = r.t;
    j["coeff"] = r.coeff;
    j["target"] = to_string(r.target);
    j["verdict"] = to_string(r.verdict);
    if (std::isfinite(r.min_gap)) {
        j["min_gap"] = r.min_gap;
    } else {
        j["min_gap"] = nullptr;
    }
    j["complete"] = r.complete;
    return j;
}

inline void write_json(std::ostream& os, const std::vector<SweepRecord>& records) {
    auto arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    os << arr.dump(2) << '\n';
}

inline void write_table(std::ostream& os, const std::vector<SweepRecord>& records) {
    char line[256];
    std::snprintf(line, sizeof line, "%-6s %3s %12s %12s %12s  %-18s %-11s %12s %s\n", "family", "n", "alpha", "t",
                  "coeff", "target", "verdict", "min_gap", "complete");
    os << line;
    for (const auto& r : records) {
        std::snprintf(line, sizeof line, "%-6s %3d %12.6g %12.6g %12.6g  %-18s %-11s %12.4e %s\n",
                      std::string(to_string(r.family)).c_str(), r.n, r.alpha, r.t, r.coeff,
                      std::string(to_string(r.target)).c_str(), std::string(to_string(r.verdict)).c_str(), r.min_gap,
                      r.complete ? "yes" : "no");
        os << line;
    }
}

}  // namespace lagzeros
