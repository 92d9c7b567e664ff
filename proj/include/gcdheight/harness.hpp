#pragma once

#include "gcdheight/auxdiv.hpp"
#include "gcdheight/heights.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gcdheight {

enum class SampleMode { Exhaustive, Random };

std::string to_string(SampleMode mode);
SampleMode parse_sample_mode(const std::string& text);

struct SampleSpec {
    int n = 2;
    long height_bound = 1;
    SampleMode mode = SampleMode::Exhaustive;
    long count = 0;          // random mode
    std::uint64_t seed = 0;  // random mode
    /// Exhaustive mode refuses boxes with more raw vectors than this.
    std::uint64_t cap = 100'000'000;
};

/// Number of canonical points of P^n with max |coordinate| <= H:
/// (1/2) * sum_{k=1..H} mu(k) * ((2 floor(H/k) + 1)^(n+1) - 1).
BigInt primitive_point_count(int n, long height_bound);

/// Canonical, deduplicated points in increasing (lexicographic) order.
/// Exhaustive mode lists every canonical point in the box; random mode draws
/// coordinates uniformly from [-H, H] (mt19937_64 seeded with `seed`),
/// canonicalizes and rejects duplicates until `count` points are collected.
std::vector<ProjPoint> sample_points(const SampleSpec& spec);

/// Exhaustive mode streams points in the same order without storing them.
void for_each_point(const SampleSpec& spec, const std::function<void(const ProjPoint&)>& fn);

struct ReportRow {
    ProjPoint point;
    HeightBreakdown heights;
    double slope_bound = 0;  // slope * weil
    std::optional<double> excess;
    bool excluded = false;
};

/// Per point: excluded when F(x) = 0 or x lies on Y; otherwise the heights
/// and excess = gcd_total - (m/r) * weil. Rows come back in input order;
/// `threads` = 0 uses the hardware concurrency.
std::vector<ReportRow> evaluate_bound(const Certificate& cert, std::span<const ProjPoint> points, unsigned threads = 0);

struct Summary {
    std::size_t n_points = 0;
    std::size_t n_excluded = 0;
    double max_excess = 0;
    double mean_excess = 0;
    double max_ratio = 0;  // max gcd_total / weil over rows with weil > 0
};

/// Deterministic fold over rows in order.
class SummaryAccumulator {
public:
    void add(const ReportRow& row);
    /// Throws Error{AllExcluded} if no row was kept.
    Summary finish() const;

private:
    std::size_t points_ = 0;
    std::size_t excluded_ = 0;
    std::size_t kept_ = 0;
    double max_excess_ = 0;
    double sum_excess_ = 0;
    double max_ratio_ = 0;
};

Summary summarize(std::span<const ReportRow> rows);

std::string report_csv_header();
std::string report_csv_row(const ReportRow& row);

/// {slope, coefficient, n_points, n_excluded, max_excess, mean_excess,
///  max_ratio, spec: {...}, certificate_digest}
std::string summary_json(const Summary& summary, const Certificate& cert, const SampleSpec& spec);

/// Samples, evaluates in chunks and folds the summary. When `csv` is given,
/// the report (header and rows, in canonical point order) is streamed to it.
Summary run_bound(const Certificate& cert, const SampleSpec& spec, std::ostream* csv = nullptr,
                  unsigned threads = 0);

}  // namespace gcdheight
