#include "lpwan/metrics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lpwan {
namespace {

std::optional<double> ratio(std::uint64_t num, std::uint64_t den) {
    if (den == 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

RateSeries windowed_rate(const ReplicationResult& res, std::uint64_t window) {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    const std::uint64_t n_slots = res.attempts.size();
    if (window > n_slots)
        throw std::invalid_argument("window larger than horizon");
    RateSeries s;
    s.window = window;
    for (std::uint64_t start = 0; start < n_slots; start += window) {
        const std::uint64_t end = std::min(start + window, n_slots);
        std::uint64_t att = 0, succ = 0, drop = 0;
        for (std::uint64_t t = start; t < end; ++t) {
            att += res.attempts[t];
            succ += res.successes[t];
            drop += res.drops[t];
        }
        s.rate.push_back(ratio(succ, att));
        s.packet_rate.push_back(ratio(succ, succ + drop));
    }
    return s;
}

RateSeries cumulative_rate(const ReplicationResult& res,
                           std::uint64_t window) {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    const std::uint64_t n_slots = res.attempts.size();
    if (window > n_slots)
        throw std::invalid_argument("window larger than horizon");
    RateSeries s;
    s.window = window;
    std::uint64_t att = 0, succ = 0, drop = 0;
    std::uint64_t next_bucket = window;
    for (std::uint64_t t = 0; t < n_slots; ++t) {
        att += res.attempts[t];
        succ += res.successes[t];
        drop += res.drops[t];
        if (t + 1 == next_bucket || t + 1 == n_slots) {
            s.rate.push_back(ratio(succ, att));
            s.packet_rate.push_back(ratio(succ, succ + drop));
            next_bucket += window;
        }
    }
    return s;
}

std::vector<SeriesPoint> aggregate(const std::vector<RateSeries>& series) {
    if (series.empty()) return {};
    const std::uint64_t window = series.front().window;
    const std::size_t n_buckets = series.front().rate.size();
    for (const RateSeries& s : series)
        if (s.window != window || s.rate.size() != n_buckets)
            throw std::invalid_argument("mismatched series bucketing");

    std::vector<SeriesPoint> out;
    out.reserve(n_buckets);
    for (std::size_t b = 0; b < n_buckets; ++b) {
        SeriesPoint pt;
        pt.slot_bucket = window * (b + 1);
        double sum = 0.0, sum_sq = 0.0;
        double pkt_sum = 0.0;
        std::uint32_t n = 0, pkt_n = 0;
        for (const RateSeries& s : series) {
            if (s.rate[b]) {
                sum += *s.rate[b];
                sum_sq += *s.rate[b] * *s.rate[b];
                ++n;
            }
            if (s.packet_rate[b]) {
                pkt_sum += *s.packet_rate[b];
                ++pkt_n;
            }
        }
        pt.n_reps = n;
        if (n > 0) pt.mean_rate = sum / n;
        if (n > 1) {
            const double var =
                std::max(0.0, (sum_sq - sum * sum / n) / (n - 1));
            pt.stderr_rate = std::sqrt(var / n);
        }
        if (pkt_n > 0) pt.mean_packet_rate = pkt_sum / pkt_n;
        out.push_back(pt);
    }
    return out;
}

std::pair<double, double> collision_estimates(const ReplicationResult& res) {
    if (res.first_attempt_count == 0 || res.second_attempt_count == 0)
        throw std::runtime_error(
            "collision_estimates: no attempts at the required stage");
    return {static_cast<double>(res.first_attempt_collisions) /
                static_cast<double>(res.first_attempt_count),
            static_cast<double>(res.second_attempt_collisions) /
                static_cast<double>(res.second_attempt_count)};
}

std::pair<double, double> final_window_stats(
    const std::vector<ReplicationResult>& results, double fraction) {
    if (results.empty()) throw std::invalid_argument("no replications");
    std::vector<double> rates;
    for (const ReplicationResult& res : results) {
        const std::uint64_t n_slots = res.attempts.size();
        const std::uint64_t start = static_cast<std::uint64_t>(
            std::ceil(n_slots * (1.0 - fraction)));
        std::uint64_t att = 0, succ = 0;
        for (std::uint64_t t = start; t < n_slots; ++t) {
            att += res.attempts[t];
            succ += res.successes[t];
        }
        if (att > 0)
            rates.push_back(static_cast<double>(succ) /
                            static_cast<double>(att));
    }
    if (rates.empty())
        throw std::runtime_error("no attempts in the final window");
    const double n = static_cast<double>(rates.size());
    const double mean =
        std::accumulate(rates.begin(), rates.end(), 0.0) / n;
    double sq = 0.0;
    for (double r : rates) sq += (r - mean) * (r - mean);
    const double se = rates.size() > 1 ? std::sqrt(sq / (n - 1) / n) : 0.0;
    return {mean, se};
}

}  // namespace lpwan
