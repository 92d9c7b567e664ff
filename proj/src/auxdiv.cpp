#include "gcdheight/auxdiv.hpp"

#include "gcdheight/error.hpp"
#include "gcdheight/interpolation.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <cmath>
#include <cstdio>

namespace gcdheight {

using ordered_json = nlohmann::ordered_json;

Ideal Certificate::ideal() const {
    std::vector<Poly> gens;
    for (const auto& g : generators) gens.push_back(parse_poly(g, nvars));
    return Ideal(nvars, std::move(gens));
}

BigInt bound_radicand(const GeomProfile& profile) {
    validate(profile);
    return profile.degY * factorial(profile.n) / factorial(profile.c);
}

double bound_coefficient(const GeomProfile& profile) {
    const BigInt radicand = bound_radicand(profile);
    const double value = radicand.get_d();
    if (profile.c == 2) return std::sqrt(value);
    return std::pow(value, 1.0 / profile.c);
}

namespace {

bool criterion_on_power(const Ideal& power, int m) {
    const BigInt total = binomial(power.n() + m, power.n());
    return total > static_cast<unsigned long>(quotient_dim(power, m));
}

}  // namespace

bool dimension_criterion(const Ideal& ideal, int m, int r) {
    if (m < 0 || r < 1) throw Error(ErrorKind::Domain, "dimension_criterion: need m >= 0 and r >= 1");
    return criterion_on_power(ideal_power(ideal, r), m);
}

std::optional<Poly> find_section(const Ideal& ideal, int m, int r) {
    if (m < 0 || r < 1) throw Error(ErrorKind::Domain, "find_section: need m >= 0 and r >= 1");
    const GradedPiece piece = graded_piece(ideal_power(ideal, r), m);
    if (piece.echelon.rank() == 0) return std::nullopt;
    const std::size_t first_pivot = piece.echelon.rows().begin()->first;
    return piece.to_poly(piece.echelon.fully_reduced(first_pivot), ideal.nvars()).primitive();
}

SearchResult search_certificate(const Ideal& ideal, double epsilon, int r_budget, int m_budget) {
    if (!(epsilon > 0)) throw Error(ErrorKind::Domain, "search_certificate: epsilon must be > 0");
    if (r_budget < 1 || m_budget < 0) throw Error(ErrorKind::Domain, "search_certificate: invalid budgets");
    if (ideal.is_zero()) throw Error(ErrorKind::EmptySubscheme, "search_certificate: zero ideal defines all of P^n");

    SearchResult out;
    out.profile = hilbert_profile(ideal);
    out.coefficient = bound_coefficient(out.profile);

    std::optional<std::pair<int, int>> best;  // (m, r)
    const int min_deg = ideal.min_generator_degree();
    for (int r = 1; r <= r_budget; ++r) {
        std::optional<int> found;
        const Ideal power = ideal_power(ideal, r);
        // Every element of I^r has degree >= r * min_deg.
        for (int m = std::max(1, r * min_deg); m <= m_budget; ++m) {
            if (criterion_on_power(power, m)) {
                found = m;
                break;
            }
        }
        out.minimal_m.push_back(found);
        if (!found) continue;
        // Strict improvement only: ties keep the smaller r.
        if (!best || static_cast<long>(*found) * best->second < static_cast<long>(best->first) * r)
            best = std::make_pair(*found, r);
    }
    if (!best)
        throw BudgetExhausted("search_certificate: no (m, r) with r <= " + std::to_string(r_budget) +
                                  " and m <= " + std::to_string(m_budget) + " passes the dimension criterion",
                              std::nullopt);

    Certificate& cert = out.certificate;
    cert.nvars = ideal.nvars();
    for (const auto& g : ideal.generators()) cert.generators.push_back(to_string(g));
    cert.m = best->first;
    cert.r = best->second;
    cert.F = *find_section(ideal, cert.m, cert.r);
    cert.slope_fraction = {cert.m, cert.r};
    cert.coefficient = format_real(out.coefficient);
    out.within_epsilon = cert.slope().get_d() <= out.coefficient + epsilon;
    return out;
}

std::vector<std::string> certificate_diagnostics(const Certificate& cert) {
    std::vector<std::string> issues;
    if (cert.m < 1 || cert.r < 1) issues.emplace_back("invalid parameters: need m >= 1 and r >= 1");
    if (cert.slope_fraction != std::make_pair(cert.m, cert.r)) issues.emplace_back("slope mismatch");
    if (cert.F.nvars() != cert.nvars) {
        issues.emplace_back("variable count mismatch");
        return issues;
    }
    if (cert.F.is_zero()) {
        issues.emplace_back("zero form");
        return issues;
    }
    if (!cert.F.is_homogeneous()) issues.emplace_back("not homogeneous");
    else if (*cert.F.degree() != cert.m) issues.emplace_back("degree mismatch");
    if (cert.r < 1) return issues;

    std::optional<Ideal> ideal;
    try {
        ideal = cert.ideal();
    } catch (const Error& e) {
        issues.emplace_back(std::string("invalid ideal: ") + e.what());
        return issues;
    }
    if (ideal->is_zero()) {
        issues.emplace_back("invalid ideal: no generators");
        return issues;
    }
    if (!membership(cert.F, ideal_power(*ideal, cert.r))) issues.emplace_back("membership fails");
    return issues;
}

bool verify_certificate(const Certificate& cert) { return certificate_diagnostics(cert).empty(); }

std::string certificate_to_json(const Certificate& cert) {
    ordered_json j;
    j["nvars"] = cert.nvars;
    j["generators"] = cert.generators;
    j["m"] = cert.m;
    j["r"] = cert.r;
    j["F"] = to_string(cert.F);
    j["slope"] = {cert.slope_fraction.first, cert.slope_fraction.second};
    j["coefficient"] = cert.coefficient;
    j["created_by"] = cert.created_by;
    j["toolkit_version"] = cert.toolkit_version;
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    Certificate cert;
    try {
        const auto j = nlohmann::json::parse(text);
        cert.nvars = j.at("nvars").get<int>();
        if (cert.nvars < 1) throw Error(ErrorKind::Syntax, "certificate: nvars must be positive");
        cert.generators = j.at("generators").get<std::vector<std::string>>();
        for (const auto& g : cert.generators) (void)parse_poly(g, cert.nvars);
        cert.m = j.at("m").get<int>();
        cert.r = j.at("r").get<int>();
        cert.F = parse_poly(j.at("F").get<std::string>(), cert.nvars);
        const auto slope = j.at("slope").get<std::vector<int>>();
        if (slope.size() != 2) throw Error(ErrorKind::Syntax, "certificate: slope must be [m, r]");
        cert.slope_fraction = {slope[0], slope[1]};
        cert.coefficient = j.at("coefficient").get<std::string>();
        cert.created_by = j.value("created_by", "");
        cert.toolkit_version = j.value("toolkit_version", "");
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Syntax, std::string("certificate JSON: ") + e.what());
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Syntax) throw;
        throw Error(ErrorKind::Syntax, std::string("certificate: ") + e.what());
    }
    return cert;
}

std::string certificate_digest(const Certificate& cert) {
    const std::string text = certificate_to_json(cert);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

}  // namespace gcdheight
