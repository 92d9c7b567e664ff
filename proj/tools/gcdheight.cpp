// gcdheight: command-line frontend for the GCD-height toolkit.
//
// Exit codes: 0 ok, 1 inequality check flagged, 2 malformed input,
// 3 empty subscheme / invalid profile, 4 search budget exhausted,
// 5 invalid certificate, 6 all sample points excluded, 7 inconsistent profile.

#include "gcdheight/auxdiv.hpp"
#include "gcdheight/error.hpp"
#include "gcdheight/harness.hpp"
#include "gcdheight/ideal.hpp"
#include "gcdheight/rr_lab.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using namespace gcdheight;

namespace {

enum Exit : int {
    kOk = 0,
    kViolation = 1,
    kMalformed = 2,
    kEmpty = 3,
    kBudget = 4,
    kInvalidCertificate = 5,
    kAllExcluded = 6,
    kInconsistent = 7,
};

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Syntax:
        case ErrorKind::Domain:
        case ErrorKind::Io: return kMalformed;
        case ErrorKind::EmptySubscheme:
        case ErrorKind::InvalidProfile:
        case ErrorKind::WindowInstability: return kEmpty;
        case ErrorKind::BudgetExhausted: return kBudget;
        case ErrorKind::AllExcluded: return kAllExcluded;
        case ErrorKind::InconsistentProfile: return kInconsistent;
    }
    return kMalformed;
}

/// Exact p/q text, denominator always shown.
std::string fraction_text(const Rat& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

void require_file(const std::string& path, const char* what) {
    if (path.empty()) throw Error(ErrorKind::Io, std::string("missing ") + what + " path");
    if (!fs::is_regular_file(path)) throw Error(ErrorKind::Io, std::string(what) + " not found: " + path);
}

fs::path prepare_out_dir(const std::string& dir) {
    fs::path out(dir.empty() ? "." : dir);
    std::error_code ec;
    fs::create_directories(out, ec);
    if (!fs::is_directory(out)) throw Error(ErrorKind::Io, "cannot create output directory " + out.string());
    return out;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << text;
}

struct Options {
    std::string ideal;
    std::string cert;
    double epsilon = 0.1;
    int r_budget = 4;
    int m_budget = 12;
    long height_bound = 10;
    std::string mode = "exhaustive";
    long count = 100;
    std::uint64_t seed = 0;
    std::string out = ".";
    std::string format = "csv";
    int n = 2;
    int m = -1;
    int r_max = -1;
    int r = 1;
    int m_max = -1;
    unsigned threads = 0;
};

// ---------------------------------------------------------------------------

int cmd_profile(const Options& o) {
    require_file(o.ideal, "ideal file");
    const Ideal ideal = read_ideal_file(o.ideal);
    const GeomProfile p = hilbert_profile(ideal);
    std::string coefficient = "n/a";
    try {
        coefficient = format_real(bound_coefficient(p));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InvalidProfile) throw;
    }
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["n"] = p.n;
        j["d"] = p.d;
        j["c"] = p.c;
        j["degY"] = p.degY.get_str();
        j["eY"] = p.eY;
        j["coefficient"] = coefficient;
        std::vector<std::string> hp;
        for (const auto& q : p.hilbert_polynomial) hp.push_back(q.get_str());
        j["hilbert_polynomial"] = hp;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n=" << p.n << " d=" << p.d << " c=" << p.c << " degY=" << p.degY.get_str()
                  << " coefficient=" << coefficient << "\n";
    }
    return kOk;
}

int cmd_search(const Options& o) {
    require_file(o.ideal, "ideal file");
    if (!(o.epsilon > 0)) throw Error(ErrorKind::Domain, "--epsilon must be > 0");
    if (o.r_budget < 1 || o.m_budget < 0) throw Error(ErrorKind::Domain, "budgets must be >= 1");
    const fs::path out = prepare_out_dir(o.out);
    const Ideal ideal = read_ideal_file(o.ideal);
    try {
        SearchResult result = search_certificate(ideal, o.epsilon, o.r_budget, o.m_budget);
        result.certificate.created_by = "gcdheight search";
        write_text(out / "certificate.json", certificate_to_json(result.certificate));
        std::cout << "slope=" << fraction_text(result.certificate.slope())
                  << " coefficient=" << result.certificate.coefficient
                  << " within_epsilon=" << (result.within_epsilon ? "true" : "false") << "\n";
    } catch (const BudgetExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.best()) std::cerr << "best slope found: " << e.best()->first << "/" << e.best()->second << "\n";
        return kBudget;
    }
    return kOk;
}

int cmd_verify(const Options& o) {
    require_file(o.cert, "certificate");
    const Certificate cert = certificate_from_json(read_text(o.cert));
    const auto issues = certificate_diagnostics(cert);
    if (issues.empty()) {
        std::cout << "valid: F in I^" << cert.r << ", degree " << cert.m << ", slope "
                  << fraction_text(cert.slope()) << "\n";
        return kOk;
    }
    for (const auto& issue : issues) std::cout << issue << "\n";
    return kInvalidCertificate;
}

int cmd_bound(const Options& o) {
    require_file(o.cert, "certificate");
    const fs::path out = prepare_out_dir(o.out);
    const Certificate cert = certificate_from_json(read_text(o.cert));
    if (const auto issues = certificate_diagnostics(cert); !issues.empty()) {
        for (const auto& issue : issues) std::cerr << issue << "\n";
        return kInvalidCertificate;
    }
    SampleSpec spec;
    spec.n = cert.nvars - 1;
    spec.height_bound = o.height_bound;
    spec.mode = parse_sample_mode(o.mode);
    spec.count = o.count;
    spec.seed = o.seed;

    std::ofstream csv(out / "report.csv", std::ios::binary);
    if (!csv) throw Error(ErrorKind::Io, "cannot write " + (out / "report.csv").string());
    const Summary summary = run_bound(cert, spec, &csv, o.threads);
    write_text(out / "summary.json", summary_json(summary, cert, spec));
    std::cout << "points=" << summary.n_points << " excluded=" << summary.n_excluded
              << " max_excess=" << format_real(summary.max_excess) << " mean_excess=" << format_real(summary.mean_excess)
              << " max_ratio=" << format_real(summary.max_ratio) << "\n";
    return kOk;
}

std::string fit_csv(const AsymptoticFit& fit) {
    std::string text = fit.variable + ",computed_dim,predicted_leading_term,residual\n";
    for (const auto& row : fit.rows)
        text += std::to_string(row.x) + "," + row.computed.get_str() + "," + row.predicted_term.get_str() + "," +
                row.residual.get_str() + "\n";
    return text;
}

int cmd_rrlab(const Options& o) {
    require_file(o.ideal, "ideal file");
    const fs::path out = prepare_out_dir(o.out);
    const Ideal ideal = read_ideal_file(o.ideal);
    const int n = ideal.n();
    const int maxdeg = std::max(1, ideal.max_generator_degree());
    const int r_max = o.r_max > 0 ? o.r_max : std::max(4, n + 1);
    const int m = o.m >= 0 ? o.m : maxdeg * r_max + n;
    const int m_max = o.m_max > 0 ? o.m_max : maxdeg * o.r + n + 6;

    const GeomProfile profile = hilbert_profile(ideal);
    const AsymptoticFit in_r = check_rr_inequality(ideal, profile, m, r_max);
    const AsymptoticFit in_m = rr_growth_in_m(ideal, o.r, m_max);
    write_text(out / "rr_inequality.csv", fit_csv(in_r));
    write_text(out / "rr_growth.csv", fit_csv(in_m));

    std::string lemma = "n,e,h0,bound,holds,equality\n";
    bool lemma_ok = true;
    for (int nn = 1; nn <= 6; ++nn)
        for (int e = 1; e <= 20; ++e) {
            const auto chk = lemma_h0(nn, e);
            lemma_ok = lemma_ok && chk.holds;
            lemma += std::to_string(nn) + "," + std::to_string(e) + "," + chk.h0.get_str() + "," + chk.bound.get_str() +
                     "," + (chk.holds ? "1" : "0") + "," + (chk.equality ? "1" : "0") + "\n";
        }
    write_text(out / "lemma_h0.csv", lemma);

    std::cout << "in_r: exponent=" << in_r.exponent << " leading=" << fraction_text(in_r.leading)
              << " predicted=" << fraction_text(in_r.predicted) << " K=" << fraction_text(in_r.calibrated_constant)
              << " violation=" << (in_r.violation ? "true" : "false") << "\n";
    std::cout << "in_m: exponent=" << in_m.exponent << " leading=" << fraction_text(in_m.leading)
              << " predicted=" << fraction_text(in_m.predicted) << "\n";
    std::cout << "lemma_h0: " << (lemma_ok ? "holds" : "FAILS") << " on 1<=n<=6, 1<=e<=20\n";
    return (in_r.violation || !lemma_ok) ? kViolation : kOk;
}

int cmd_sample(const Options& o, bool n_given) {
    SampleSpec spec;
    spec.n = o.n;
    if (!n_given && !o.ideal.empty()) {
        require_file(o.ideal, "ideal file");
        spec.n = read_ideal_file(o.ideal).n();
    }
    spec.height_bound = o.height_bound;
    spec.mode = parse_sample_mode(o.mode);
    spec.count = o.count;
    spec.seed = o.seed;
    const auto points = sample_points(spec);
    std::string text;
    if (o.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& p : points) {
            std::vector<std::string> coords;
            for (const auto& c : p.coords()) coords.push_back(c.get_str());
            j.push_back(coords);
        }
        text = j.dump() + "\n";
    } else {
        text = "point\n";
        for (const auto& p : points) text += p.to_string() + "\n";
    }
    if (o.out.empty() || o.out == "-") {
        std::cout << text;
    } else {
        const fs::path out = prepare_out_dir(o.out);
        write_text(out / (o.format == "json" ? "points.json" : "points.csv"), text);
        std::cout << "points=" << points.size() << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized GCD heights on projective space: Hilbert dimensions, auxiliary divisors, bounds"};
    app.set_config("--config", "", "Optional TOML/INI config; command-line flags take precedence");
    app.require_subcommand(1);
    Options o;

    auto* profile = app.add_subcommand("profile", "Dimension, degree and bound coefficient of Y");
    profile->add_option("--ideal", o.ideal, "Ideal definition file")->required();
    profile->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    auto* search = app.add_subcommand("search", "Search for an auxiliary divisor certificate");
    search->add_option("--ideal", o.ideal, "Ideal definition file")->required();
    search->add_option("--epsilon", o.epsilon, "Tolerance above the bound coefficient");
    search->add_option("--r-budget", o.r_budget, "Largest multiplicity r to try");
    search->add_option("--m-budget", o.m_budget, "Largest degree m to try");
    search->add_option("--out", o.out, "Output directory");

    auto* verify = app.add_subcommand("verify", "Recheck a certificate from scratch");
    verify->add_option("cert,--cert", o.cert, "Certificate JSON");

    auto* bound = app.add_subcommand("bound", "Evaluate the height bound on sampled points");
    bound->add_option("--cert", o.cert, "Certificate JSON")->required();
    bound->add_option("--height-bound", o.height_bound, "Max absolute coordinate");
    bound->add_option("--mode", o.mode, "Sampling mode")->check(CLI::IsMember({"exhaustive", "random"}));
    bound->add_option("--count", o.count, "Number of random points");
    bound->add_option("--seed", o.seed, "Random seed");
    bound->add_option("--out", o.out, "Output directory");
    bound->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");

    auto* rrlab = app.add_subcommand("rrlab", "Riemann-Roch growth fits and the h0 inequality grid");
    rrlab->add_option("--ideal", o.ideal, "Ideal definition file")->required();
    rrlab->add_option("--m", o.m, "Degree m for the fit in r");
    rrlab->add_option("--r-max", o.r_max, "Largest r for the fit in r");
    rrlab->add_option("--r", o.r, "Power r for the fit in m");
    rrlab->add_option("--m-max", o.m_max, "Largest m for the fit in m");
    rrlab->add_option("--out", o.out, "Output directory");

    auto* sample = app.add_subcommand("sample", "List sample points of P^n");
    auto* n_opt = sample->add_option("--n", o.n, "Dimension n of P^n");
    sample->add_option("--ideal", o.ideal, "Take n from this ideal file");
    sample->add_option("--height-bound", o.height_bound, "Max absolute coordinate");
    sample->add_option("--mode", o.mode, "Sampling mode")->check(CLI::IsMember({"exhaustive", "random"}));
    sample->add_option("--count", o.count, "Number of random points");
    sample->add_option("--seed", o.seed, "Random seed");
    sample->add_option("--out", o.out, "Output directory ('-' for stdout)");
    sample->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kMalformed;
    }

    try {
        if (*profile) return cmd_profile(o);
        if (*search) return cmd_search(o);
        if (*verify) return cmd_verify(o);
        if (*bound) return cmd_bound(o);
        if (*rrlab) return cmd_rrlab(o);
        if (*sample) {
            if (sample->count("--out") == 0) o.out = "-";
            return cmd_sample(o, n_opt->count() > 0);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    }
    return kMalformed;
}
