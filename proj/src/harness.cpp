#include "gcdheight/harness.hpp"

#include "gcdheight/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <thread>

namespace gcdheight {

std::string to_string(SampleMode mode) { return mode == SampleMode::Exhaustive ? "exhaustive" : "random"; }

SampleMode parse_sample_mode(const std::string& text) {
    if (text == "exhaustive") return SampleMode::Exhaustive;
    if (text == "random") return SampleMode::Random;
    throw Error(ErrorKind::Syntax, "unknown sample mode '" + text + "' (expected exhaustive or random)");
}

BigInt primitive_point_count(int n, long height_bound) {
    if (height_bound < 1) return 0;
    const auto h = static_cast<std::size_t>(height_bound);
    // Moebius function by a linear sieve.
    std::vector<int> mu(h + 1, 1);
    std::vector<bool> composite(h + 1, false);
    std::vector<std::size_t> primes;
    for (std::size_t i = 2; i <= h; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (std::size_t p : primes) {
            if (i * p > h) break;
            composite[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    BigInt total = 0;
    BigInt term;
    for (std::size_t k = 1; k <= h; ++k) {
        if (mu[k] == 0) continue;
        const unsigned long side = 2 * (h / k) + 1;
        mpz_ui_pow_ui(term.get_mpz_t(), side, static_cast<unsigned long>(n + 1));
        term -= 1;
        if (mu[k] > 0) total += term;
        else total -= term;
    }
    return total / 2;
}

namespace {

void check_spec(const SampleSpec& spec) {
    if (spec.n < 1) throw Error(ErrorKind::Domain, "sample: n must be >= 1");
    if (spec.height_bound < 1) throw Error(ErrorKind::Domain, "sample: height_bound must be >= 1");
    if (spec.mode == SampleMode::Random && spec.count < 1)
        throw Error(ErrorKind::Domain, "sample: random mode needs count >= 1");
}

void enumerate_exhaustive(const SampleSpec& spec, const std::function<void(const ProjPoint&)>& fn) {
    const std::size_t len = static_cast<std::size_t>(spec.n) + 1;
    const long h = spec.height_bound;
    BigInt raw;
    mpz_ui_pow_ui(raw.get_mpz_t(), static_cast<unsigned long>(2 * h + 1), len);
    if (raw > BigInt(std::to_string(spec.cap)))
        throw Error(ErrorKind::Domain, "sample: exhaustive box has " + raw.get_str() + " vectors, above the cap of " +
                                           std::to_string(spec.cap));
    // Odometer over [-h, h]^len in lexicographic order, keeping canonical vectors.
    std::vector<long> v(len, -h);
    std::vector<BigInt> coords(len);
    for (;;) {
        std::size_t lead = 0;
        while (lead < len && v[lead] == 0) ++lead;
        if (lead < len && v[lead] > 0) {
            long g = 0;
            for (long x : v) g = std::gcd(g, x);
            if (g == 1) {
                for (std::size_t i = 0; i < len; ++i) coords[i] = v[i];
                fn(ProjPoint(coords));
            }
        }
        std::size_t k = len;
        while (k > 0 && v[k - 1] == h) {
            v[k - 1] = -h;
            --k;
        }
        if (k == 0) break;
        ++v[k - 1];
    }
}

std::vector<ProjPoint> sample_random(const SampleSpec& spec) {
    const BigInt available = primitive_point_count(spec.n, spec.height_bound);
    const auto target =
        available < spec.count ? static_cast<std::size_t>(available.get_ui()) : static_cast<std::size_t>(spec.count);
    std::mt19937_64 rng(spec.seed);
    const auto side = static_cast<std::uint64_t>(2 * spec.height_bound + 1);
    std::set<ProjPoint> seen;
    std::vector<long> raw(static_cast<std::size_t>(spec.n) + 1);
    const std::uint64_t max_draws = 1000 * static_cast<std::uint64_t>(target) + 1000;
    for (std::uint64_t draw = 0; seen.size() < target && draw < max_draws; ++draw) {
        for (long& x : raw) x = static_cast<long>(rng() % side) - spec.height_bound;
        if (std::all_of(raw.begin(), raw.end(), [](long x) { return x == 0; })) continue;
        seen.insert(normalize_point(std::span<const long>(raw)));
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<ProjPoint> sample_points(const SampleSpec& spec) {
    check_spec(spec);
    if (spec.mode == SampleMode::Random) return sample_random(spec);
    std::vector<ProjPoint> out;
    enumerate_exhaustive(spec, [&](const ProjPoint& p) { out.push_back(p); });
    return out;
}

void for_each_point(const SampleSpec& spec, const std::function<void(const ProjPoint&)>& fn) {
    check_spec(spec);
    if (spec.mode == SampleMode::Exhaustive) {
        enumerate_exhaustive(spec, fn);
        return;
    }
    for (const auto& p : sample_random(spec)) fn(p);
}

// ---------------------------------------------------------------------------

namespace {

struct PreparedCertificate {
    IntegerGenerators generators;
    IntegerGenerators form;
    double slope;
};

PreparedCertificate prepare(const Certificate& cert) {
    Ideal ideal = cert.ideal();
    return {IntegerGenerators(ideal), IntegerGenerators(Ideal(cert.nvars, {cert.F})), cert.slope().get_d()};
}

ReportRow evaluate_one(const PreparedCertificate& prep, const ProjPoint& x) {
    thread_local std::vector<BigInt> form_value;
    ReportRow row{x, {}, 0, std::nullopt, false};
    row.heights = gcd_height(x, prep.generators);
    row.slope_bound = prep.slope * row.heights.weil;
    prep.form.evaluate(x, form_value);
    row.excluded = row.heights.vanishing || form_value.empty() || form_value[0] == 0;
    if (!row.excluded) row.excess = row.heights.gcd_total - row.slope_bound;
    return row;
}

void evaluate_into(const PreparedCertificate& prep, std::span<const ProjPoint> points, std::vector<ReportRow>& rows,
                   unsigned threads) {
    rows.clear();
    rows.reserve(points.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads == 1 || points.size() < 1024) {
        for (const auto& p : points) rows.push_back(evaluate_one(prep, p));
        return;
    }
    // Each worker fills a disjoint block of pre-sized slots; order is preserved.
    std::vector<std::optional<ReportRow>> slots(points.size());
    const std::size_t block = (points.size() + threads - 1) / threads;
    {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t lo = t * block;
            const std::size_t hi = std::min(points.size(), lo + block);
            if (lo >= hi) break;
            workers.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i) slots[i] = evaluate_one(prep, points[i]);
            });
        }
    }
    for (auto& s : slots) rows.push_back(std::move(*s));
}

}  // namespace

std::vector<ReportRow> evaluate_bound(const Certificate& cert, std::span<const ProjPoint> points, unsigned threads) {
    const PreparedCertificate prep = prepare(cert);
    for (const auto& p : points)
        if (p.n() + 1 != cert.nvars)
            throw Error(ErrorKind::Domain, "evaluate_bound: point " + p.to_string() + " has the wrong dimension");
    std::vector<ReportRow> rows;
    evaluate_into(prep, points, rows, threads);
    return rows;
}

void SummaryAccumulator::add(const ReportRow& row) {
    ++points_;
    if (row.excluded || !row.excess) {
        ++excluded_;
        return;
    }
    const double excess = *row.excess;
    if (kept_ == 0 || excess > max_excess_) max_excess_ = excess;
    sum_excess_ += excess;
    ++kept_;
    if (row.heights.weil > 0) max_ratio_ = std::max(max_ratio_, row.heights.gcd_total / row.heights.weil);
}

Summary SummaryAccumulator::finish() const {
    if (kept_ == 0)
        throw Error(ErrorKind::AllExcluded, "summarize: all " + std::to_string(points_) + " points are excluded");
    Summary s;
    s.n_points = points_;
    s.n_excluded = excluded_;
    s.max_excess = max_excess_;
    s.mean_excess = sum_excess_ / static_cast<double>(kept_);
    s.max_ratio = max_ratio_;
    return s;
}

Summary summarize(std::span<const ReportRow> rows) {
    SummaryAccumulator acc;
    for (const auto& row : rows) acc.add(row);
    return acc.finish();
}

std::string report_csv_header() { return "point,weil,gcd_finite,gcd_arch,gcd_total,slope_bound,excess,excluded\n"; }

std::string report_csv_row(const ReportRow& row) {
    std::string out = row.point.to_string();
    for (double v : {row.heights.weil, row.heights.gcd_finite, row.heights.gcd_arch, row.heights.gcd_total,
                     row.slope_bound}) {
        out += ',';
        out += format_real(v);
    }
    out += ',';
    if (row.excess) out += format_real(*row.excess);
    out += row.excluded ? ",1\n" : ",0\n";
    return out;
}

namespace {

double rounded(double x) { return std::stod(format_real(x)); }

}  // namespace

std::string summary_json(const Summary& summary, const Certificate& cert, const SampleSpec& spec) {
    nlohmann::ordered_json j;
    j["slope"] = cert.slope().get_str();
    j["coefficient"] = cert.coefficient;
    j["n_points"] = summary.n_points;
    j["n_excluded"] = summary.n_excluded;
    j["max_excess"] = rounded(summary.max_excess);
    j["mean_excess"] = rounded(summary.mean_excess);
    j["max_ratio"] = rounded(summary.max_ratio);
    nlohmann::ordered_json s;
    s["n"] = spec.n;
    s["height_bound"] = spec.height_bound;
    s["mode"] = to_string(spec.mode);
    s["count"] = spec.count;
    s["seed"] = spec.seed;
    j["spec"] = s;
    j["certificate_digest"] = certificate_digest(cert);
    return j.dump(2) + "\n";
}

Summary run_bound(const Certificate& cert, const SampleSpec& spec, std::ostream* csv, unsigned threads) {
    if (spec.n + 1 != cert.nvars)
        throw Error(ErrorKind::Domain, "run_bound: sample dimension n=" + std::to_string(spec.n) +
                                           " does not match the certificate's P^" + std::to_string(cert.nvars - 1));
    const PreparedCertificate prep = prepare(cert);
    SummaryAccumulator acc;
    if (csv) *csv << report_csv_header();

    constexpr std::size_t kChunk = 1 << 16;
    std::vector<ProjPoint> chunk;
    std::vector<ReportRow> rows;
    auto flush = [&] {
        evaluate_into(prep, chunk, rows, threads);
        for (const auto& row : rows) {
            acc.add(row);
            if (csv) *csv << report_csv_row(row);
        }
        chunk.clear();
    };
    for_each_point(spec, [&](const ProjPoint& p) {
        chunk.push_back(p);
        if (chunk.size() == kChunk) flush();
    });
    if (!chunk.empty()) flush();
    return acc.finish();
}

}  // namespace gcdheight
