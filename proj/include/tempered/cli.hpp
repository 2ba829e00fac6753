#pragma once

#include "tempered/adjoint.hpp"
#include "tempered/archimedean.hpp"
#include "tempered/corpus.hpp"
#include "tempered/dirichlet.hpp"
#include "tempered/lift.hpp"
#include "tempered/primes.hpp"
#include "tempered/qexpansion.hpp"
#include "tempered/satake.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace tempered::cli {

using json = nlohmann::ordered_json;

struct RunConfig {
    std::int64_t p_max = 1000;
    int m_max = 5;
    double delta = 1e-9;
    enum class ExactMode { Auto, Force, Off };
    ExactMode exact_mode = ExactMode::Auto;
    std::set<std::int64_t> excluded;
    bool use_oracle = true;
    int threads = 1;
};

struct CmdResult {
    json report;
    int exit_code = 0;
};

namespace detail {

inline std::string provenance_name(Gl3Corpus::Provenance p) {
    switch (p) {
        case Gl3Corpus::Provenance::LiftedFromNewform: return "lifted";
        case Gl3Corpus::Provenance::Synthetic: return "synthetic";
        default: return "file";
    }
}

/// True exact-arithmetic decision for this run; Force on a floating corpus is
/// a usage error.
inline bool resolve_exact(const Gl3Corpus& corpus, const RunConfig& cfg) {
    switch (cfg.exact_mode) {
        case RunConfig::ExactMode::Off: return false;
        case RunConfig::ExactMode::Force:
            if (!corpus.exact()) throw Error("--exact requested but corpus has no exact data");
            return true;
        default: return corpus.exact();
    }
}

/// Primes actually dropped from the window: user exclusions plus ramified.
inline std::set<std::int64_t> effective_excluded(const Gl3Corpus& corpus, const RunConfig& cfg) {
    std::set<std::int64_t> out = cfg.excluded;
    out.insert(corpus.ramified.begin(), corpus.ramified.end());
    return out;
}

inline void require_window_coverage(const Gl3Corpus& corpus, const RunConfig& cfg,
                                    const std::set<std::int64_t>& excluded) {
    std::vector<std::int64_t> missing;
    for (std::int64_t p : primes_up_to(cfg.p_max))
        if (!excluded.count(p) && !corpus.entries.count(p)) missing.push_back(p);
    if (missing.empty()) return;
    std::string names;
    for (std::int64_t p : missing) names += (names.empty() ? "" : ", ") + std::to_string(p);
    throw IncompleteDataError("corpus has no data for primes: " + names, missing.front());
}

inline json window_json(const RunConfig& cfg) {
    return json{{"p_max", cfg.p_max}, {"m_max", cfg.m_max}};
}

inline json excluded_json(const std::set<std::int64_t>& excluded, std::int64_t p_max) {
    json arr = json::array();
    for (std::int64_t p : excluded)
        if (p <= p_max) arr.push_back(p);
    return arr;
}

inline json complex_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

/// Renders a JSON scalar exactly as the JSON report does, so the text and
/// JSON formats carry identical numbers.
inline std::string num(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

struct CertifyRow {
    std::int64_t p = 0;
    std::string verdict;
    std::string reason;
    std::optional<int> witness_m;
    std::optional<double> witness_modulus;
    std::string message;
};

inline CertifyRow certify_row(const CorpusEntry& entry, bool exact, const RunConfig& cfg) {
    CertifyRow row;
    row.p = entry.approx.p;
    CertifyOptions opts;
    opts.use_oracle = cfg.use_oracle;
    try {
        const RamanujanCertificate cert =
            exact ? certify_prime(*entry.exact, cfg.m_max, cfg.delta, opts)
                  : certify_prime(entry.approx, cfg.m_max, cfg.delta, opts);
        row.verdict = to_string(cert.verdict);
        row.reason = to_string(cert.reason);
        row.witness_m = cert.witness_m;
        row.witness_modulus = cert.witness_modulus;
    } catch (const Error& e) {
        row.verdict = "inconsistent";
        row.reason = "none";
        row.message = e.what();
    }
    return row;
}

}  // namespace detail

/// Certifies every unramified prime in the window. Exit code 2 when any row
/// is inconsistent, 0 otherwise. Deterministic for any thread count: rows are
/// emitted in prime order regardless of completion order.
inline CmdResult cmd_certify(const Gl3Corpus& corpus, const RunConfig& cfg) {
    const bool exact = detail::resolve_exact(corpus, cfg);
    const auto excluded = detail::effective_excluded(corpus, cfg);
    detail::require_window_coverage(corpus, cfg, excluded);

    std::vector<const CorpusEntry*> items;
    for (const auto& [p, entry] : corpus.entries)
        if (p <= cfg.p_max && !excluded.count(p)) items.push_back(&entry);

    std::vector<detail::CertifyRow> rows(items.size());
    const int threads = std::max(1, cfg.threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < items.size(); ++i)
            rows[i] = detail::certify_row(*items[i], exact, cfg);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= items.size()) break;
                rows[i] = detail::certify_row(*items[i], exact, cfg);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::map<std::string, int> counts{
        {"ramanujan", 0}, {"non-tempered", 0}, {"undetermined", 0}, {"inconsistent", 0}};
    json results = json::array();
    for (const auto& row : rows) {
        ++counts[row.verdict];
        json r{{"p", row.p}, {"verdict", row.verdict}, {"reason", row.reason}};
        r["witness_m"] = row.witness_m ? json(*row.witness_m) : json(nullptr);
        r["witness_modulus"] = row.witness_modulus ? json(*row.witness_modulus) : json(nullptr);
        if (!row.message.empty()) r["message"] = row.message;
        results.push_back(std::move(r));
    }

    CmdResult out;
    out.report = json{{"command", "certify"},
                      {"provenance", detail::provenance_name(corpus.provenance)},
                      {"level", corpus.level},
                      {"window", detail::window_json(cfg)},
                      {"delta", cfg.delta},
                      {"exact", exact},
                      {"oracle", cfg.use_oracle},
                      {"excluded", detail::excluded_json(excluded, cfg.p_max)},
                      {"results", std::move(results)},
                      {"counts", json{{"ramanujan", counts["ramanujan"]},
                                      {"non-tempered", counts["non-tempered"]},
                                      {"undetermined", counts["undetermined"]},
                                      {"inconsistent", counts["inconsistent"]}}},
                      {"all_certified", counts["ramanujan"] == static_cast<int>(rows.size())}};
    out.exit_code = counts["inconsistent"] > 0 ? 2 : 0;
    return out;
}

/// Positivity scan plus the per-prime witness report over the window.
inline CmdResult cmd_scan(const Gl3Corpus& corpus, const RunConfig& cfg) {
    const bool exact = detail::resolve_exact(corpus, cfg);
    const auto excluded = detail::effective_excluded(corpus, cfg);
    detail::require_window_coverage(corpus, cfg, excluded);

    json first_negative = nullptr;
    json witnesses = json::array();
    bool positive_type = false;
    std::size_t negative_count = 0, scanned = 0, scanned_primes = 0;
    double density = 0.0;

    if (exact) {
        const auto series =
            build_adjoint_log_series(corpus.exact_data(), excluded, cfg.p_max, cfg.m_max);
        const auto rep = positive_type_scan(series);
        const auto wit = witness_report(series);
        positive_type = rep.is_positive_type;
        negative_count = rep.negative_count;
        scanned = rep.scanned;
        if (rep.first_negative)
            first_negative = json{{"p", rep.first_negative->p},
                                  {"m", rep.first_negative->m},
                                  {"value", to_string(rep.first_negative->value)}};
        for (const auto& w : wit.witnesses)
            witnesses.push_back(json{{"p", w.p}, {"m", w.m}, {"value", to_string(w.value)}});
        scanned_primes = wit.scanned_primes;
        density = wit.density;
    } else {
        const auto series =
            build_adjoint_log_series(corpus.floating_data(), excluded, cfg.p_max, cfg.m_max);
        const auto rep = positive_type_scan(series, cfg.delta);
        const auto wit = witness_report(series, cfg.delta);
        positive_type = rep.is_positive_type;
        negative_count = rep.negative_count;
        scanned = rep.scanned;
        if (rep.first_negative)
            first_negative = json{{"p", rep.first_negative->p},
                                  {"m", rep.first_negative->m},
                                  {"value", rep.first_negative->value}};
        for (const auto& w : wit.witnesses)
            witnesses.push_back(json{{"p", w.p}, {"m", w.m}, {"value", w.value}});
        scanned_primes = wit.scanned_primes;
        density = wit.density;
    }

    CmdResult out;
    out.report = json{{"command", "scan"},
                      {"provenance", detail::provenance_name(corpus.provenance)},
                      {"window", detail::window_json(cfg)},
                      {"delta", cfg.delta},
                      {"exact", exact},
                      {"excluded", detail::excluded_json(excluded, cfg.p_max)},
                      {"positive_type", positive_type},
                      {"first_negative", std::move(first_negative)},
                      {"negative_count", negative_count},
                      {"scanned", scanned},
                      {"witness_count", witnesses.size()},
                      {"witnesses", std::move(witnesses)},
                      {"scanned_primes", scanned_primes},
                      {"density", density}};
    return out;
}

/// Evaluates the incomplete adjoint L-function at real s > 2 and checks the
/// local factorization identity across the window.
inline CmdResult cmd_eval(const Gl3Corpus& corpus, const RunConfig& cfg, double s) {
    const bool empty = corpus.entries.empty();
    const bool exact = empty ? false : detail::resolve_exact(corpus, cfg);
    const auto excluded = detail::effective_excluded(corpus, cfg);
    if (!empty) detail::require_window_coverage(corpus, cfg, excluded);

    EvalResult ev{};
    if (empty) {
        LogDirichletSeries<double> series;  // empty product: value 1, tail per formula
        series.excluded = excluded;
        series.p_max = cfg.p_max;
        series.m_max = cfg.m_max;
        ev = evaluate_incomplete(series, s);
    } else if (exact) {
        ev = evaluate_incomplete(
            build_adjoint_log_series(corpus.exact_data(), excluded, cfg.p_max, cfg.m_max), s);
    } else {
        ev = evaluate_incomplete(
            build_adjoint_log_series(corpus.floating_data(), excluded, cfg.p_max, cfg.m_max), s);
    }

    double max_residual = 0.0;
    std::int64_t argmax_p = 0;
    std::size_t checked = 0;
    json skipped = json::array();
    for (const auto& [p, entry] : corpus.entries) {
        if (p > cfg.p_max || excluded.count(p)) continue;
        try {
            const UnitaryClass3 c = satake_class(entry.approx);
            const Complex rankin = local_factor_rankin(c, Complex(s, 0.0));
            const Complex split = zeta_local(p, Complex(s, 0.0)) * local_factor_adjoint(c, Complex(s, 0.0));
            const double rel = std::abs(rankin - split) / std::max(1.0, std::abs(rankin));
            ++checked;
            if (rel > max_residual) {
                max_residual = rel;
                argmax_p = p;
            }
        } catch (const Error&) {
            skipped.push_back(p);
        }
    }

    CmdResult out;
    out.report = json{{"command", "eval"},
                      {"provenance", detail::provenance_name(corpus.provenance)},
                      {"window", detail::window_json(cfg)},
                      {"exact", exact},
                      {"excluded", detail::excluded_json(excluded, cfg.p_max)},
                      {"s", s},
                      {"value", ev.value},
                      {"log_value", std::log(ev.value)},
                      {"tail_bound", ev.tail_bound},
                      {"factorization", json{{"max_residual", max_residual},
                                             {"argmax_p", argmax_p},
                                             {"checked", checked},
                                             {"skipped", std::move(skipped)}}}};
    return out;
}

/// Archimedean report: consistency, the adjoint parameter multiset, the pole
/// order at s = 0, and the adjoint gamma factor at the requested point.
inline CmdResult cmd_gamma(const ArchParams& params, Complex s) {
    const bool consistent = arch_params_consistent(params);

    CmdResult out;
    out.report = json{{"command", "gamma"},
                      {"z", json::array({detail::complex_json(params.z[0]),
                                         detail::complex_json(params.z[1]),
                                         detail::complex_json(params.z[2])})},
                      {"parity", json::array({params.delta[0], params.delta[1], params.delta[2]})},
                      {"consistent", consistent}};
    if (!consistent) {
        out.report["pole_order_at_zero"] = nullptr;
        out.report["B"] = nullptr;
        out.exit_code = 1;
        return out;
    }

    const ArchAdjointSet set = arch_adjoint_set(params);
    json b = json::array();
    for (const Complex& z : set.B) b.push_back(detail::complex_json(z));
    out.report["pole_order_at_zero"] = pole_order_at_zero(params);
    out.report["B"] = std::move(b);
    out.report["s"] = detail::complex_json(s);
    try {
        out.report["value"] = detail::complex_json(adjoint_gamma_factor(params, s));
        out.report["pole_order_at_s"] = 0;
    } catch (const PoleError& e) {
        out.report["value"] = nullptr;
        out.report["pole_order_at_s"] = e.order();
    }
    return out;
}

namespace detail {

struct SelfTestCheck {
    std::string name;
    bool ok = true;
    std::string note;
};

inline UnitaryClass3 random_tempered_class(std::mt19937_64& rng, std::int64_t p) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    return UnitaryClass3{{std::polar(1.0, angle(rng)), std::polar(1.0, angle(rng)),
                          std::polar(1.0, angle(rng))},
                         p};
}

inline SelfTestCheck check_newton_oracle(std::mt19937_64& rng) {
    SelfTestCheck c{"newton-oracle"};
    for (int trial = 0; trial < 200 && c.ok; ++trial) {
        const UnitaryClass3 cls = random_tempered_class(rng, 7);
        const Complex e1 = cls.alphas[0] + cls.alphas[1] + cls.alphas[2];
        const Complex e2 = cls.alphas[0] * cls.alphas[1] + cls.alphas[0] * cls.alphas[2] +
                           cls.alphas[1] * cls.alphas[2];
        const Complex e3 = cls.alphas[0] * cls.alphas[1] * cls.alphas[2];
        const auto traces = power_traces(e1, e2, e3, 12);
        for (int m = 1; m <= 12; ++m) {
            Complex direct = 0.0;
            for (const Complex& a : cls.alphas) direct += std::pow(a, m);
            if (std::abs(traces[static_cast<std::size_t>(m - 1)] - direct) > 1e-9) {
                c.ok = false;
                c.note = "trace mismatch at m=" + std::to_string(m);
                break;
            }
        }
    }
    return c;
}

inline SelfTestCheck check_factorization(std::mt19937_64& rng) {
    SelfTestCheck c{"factorization"};
    for (int trial = 0; trial < 100 && c.ok; ++trial) {
        const UnitaryClass3 cls = random_tempered_class(rng, 11);
        for (double s : {2.5, 3.0}) {
            const Complex rankin = local_factor_rankin(cls, Complex(s, 0.0));
            const Complex split =
                zeta_local(cls.p, Complex(s, 0.0)) * local_factor_adjoint(cls, Complex(s, 0.0));
            if (std::abs(rankin - split) > 1e-10 * std::max(1.0, std::abs(rankin))) {
                c.ok = false;
                c.note = "residual too large at s=" + std::to_string(s);
                break;
            }
        }
    }
    return c;
}

inline SelfTestCheck check_local_positivity(std::mt19937_64& rng) {
    SelfTestCheck c{"local-positivity"};
    std::uniform_real_distribution<double> t_dist(0.05, 0.45);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    const std::int64_t primes[] = {2, 3, 5, 7, 11};
    for (int trial = 0; trial < 100 && c.ok; ++trial) {
        const std::int64_t p = primes[trial % 5];
        const double t = t_dist(rng);
        NonTemperedShape shape{t, std::polar(1.0, angle(rng)), std::polar(1.0, angle(rng)), 0.0};
        shape.theta = std::arg(std::conj(shape.u) * shape.w);
        const UnitaryClass3 cls = reconstruct_shape(shape, p);
        const HeckeDatumF d{p, cls.alphas[0] + cls.alphas[1] + cls.alphas[2],
                            cls.alphas[0] * cls.alphas[1] * cls.alphas[2]};
        const auto coeffs = adjoint_coefficients(d, 6);
        for (int m = 1; m <= 6; ++m) {
            const double closed = adjoint_coefficient_closed(p, t, shape.theta, m);
            const double got = coeffs[static_cast<std::size_t>(m - 1)];
            if (std::abs(got - closed) > 1e-8 * std::max(1.0, std::abs(closed)) || got <= 0.0) {
                c.ok = false;
                c.note = "positivity/closed-form failure at m=" + std::to_string(m);
                break;
            }
        }
    }
    return c;
}

inline SelfTestCheck check_lift(bool inject_failure) {
    SelfTestCheck c{"lift"};
    const NewformRecord delta = delta_newform(13);
    const std::map<std::int64_t, BigInt> expected{
        {2, BigInt(-24) + (inject_failure ? 1 : 0)}, {3, 252},          {5, 4830},
        {7, -16744},                                 {11, 534612},      {13, -577738}};
    for (const auto& [p, tau] : expected) {
        if (delta.coefficients.at(p) != tau) {
            c.ok = false;
            c.note = "tau(" + std::to_string(p) + ") mismatch";
            return c;
        }
        if (!deligne_bound_holds(delta.coefficients.at(p), p, 12)) {
            c.ok = false;
            c.note = "Deligne bound violated at p=" + std::to_string(p);
            return c;
        }
    }
    const auto lifted = lift_newform(delta);
    const auto cert = certify_prime(lifted.at(2), 3, 0.0, CertifyOptions{false, kDefaultTol});
    if (cert.verdict != CertVerdict::RamanujanCertified) {
        c.ok = false;
        c.note = "p=2 symmetric-square certificate missing";
    }
    return c;
}

inline SelfTestCheck check_gamma(std::mt19937_64& rng) {
    SelfTestCheck c{"gamma"};
    std::uniform_real_distribution<double> re(0.3, 4.0), im(-3.0, 3.0);
    for (int trial = 0; trial < 50 && c.ok; ++trial) {
        const Complex s(re(rng), im(rng));
        const Complex lhs = gamma_R(s + 2.0);
        const Complex rhs = s / (2.0 * M_PI) * gamma_R(s);
        if (std::abs(lhs - rhs) > 1e-10 * std::max(1.0, std::abs(rhs))) {
            c.ok = false;
            c.note = "functional equation failure";
        }
    }
    if (c.ok && std::abs(gamma_R(Complex(1.0, 0.0)) - Complex(1.0, 0.0)) > 1e-12) {
        c.ok = false;
        c.note = "gamma_R(1) != 1";
    }
    if (c.ok) {
        const ArchParams sym{{Complex(0.0, 1.0), Complex(0.0, 0.0), Complex(0.0, -1.0)},
                             {0, 0, 0}};
        if (pole_order_at_zero(sym) != 2) {
            c.ok = false;
            c.note = "pole order at zero mismatch";
        }
    }
    return c;
}

}  // namespace detail

/// Seeded end-to-end consistency battery. Exit code 3 on any failure.
inline CmdResult cmd_selftest(std::uint64_t seed, bool inject_failure = false) {
    std::mt19937_64 rng(seed);
    std::vector<detail::SelfTestCheck> checks;
    checks.push_back(detail::check_newton_oracle(rng));
    checks.push_back(detail::check_factorization(rng));
    checks.push_back(detail::check_local_positivity(rng));
    checks.push_back(detail::check_lift(inject_failure));
    checks.push_back(detail::check_gamma(rng));

    bool passed = true;
    json arr = json::array();
    for (const auto& c : checks) {
        passed = passed && c.ok;
        json item{{"name", c.name}, {"ok", c.ok}};
        if (!c.note.empty()) item["note"] = c.note;
        arr.push_back(std::move(item));
    }

    CmdResult out;
    out.report = json{{"command", "selftest"},
                      {"seed", seed},
                      {"checks", std::move(arr)},
                      {"passed", passed}};
    out.exit_code = passed ? 0 : 3;
    return out;
}

/// Ramanujan tau values at primes up to p_max, from the Delta q-expansion.
inline CmdResult cmd_tau(std::int64_t p_max) {
    const auto tau = delta_qexpansion(p_max);
    json values = json::object();
    for (const auto& [p, v] : tau) values[std::to_string(p)] = v.str();
    CmdResult out;
    out.report = json{{"command", "tau"}, {"p_max", p_max}, {"tau", std::move(values)}};
    return out;
}

/// Text rendering with the same numeric payload as the JSON report.
inline std::string render_text(const json& report) {
    using detail::num;
    std::ostringstream out;
    const std::string command = report.at("command").get<std::string>();

    auto window_line = [&](const json& r) {
        out << "window: p <= " << num(r["window"]["p_max"]) << ", m <= "
            << num(r["window"]["m_max"]) << "\n";
    };
    auto excluded_line = [&](const json& r) {
        out << "excluded:";
        if (r["excluded"].empty()) out << " none";
        for (const auto& p : r["excluded"]) out << ' ' << num(p);
        out << "\n";
    };

    if (command == "certify") {
        out << "certify (" << num(report["provenance"]) << ", level " << num(report["level"])
            << ", " << (report["exact"].get<bool>() ? "exact" : "floating")
            << ", delta=" << num(report["delta"])
            << ", oracle=" << (report["oracle"].get<bool>() ? "on" : "off") << ")\n";
        window_line(report);
        excluded_line(report);
        for (const auto& r : report["results"]) {
            out << "p=" << num(r["p"]) << ' ' << num(r["verdict"]);
            if (num(r["reason"]) != "none") out << ' ' << num(r["reason"]);
            if (!r["witness_m"].is_null()) out << " m=" << num(r["witness_m"]);
            if (!r["witness_modulus"].is_null()) out << " |alpha|=" << num(r["witness_modulus"]);
            if (r.contains("message")) out << " (" << num(r["message"]) << ")";
            out << "\n";
        }
        const auto& c = report["counts"];
        out << "counts: ramanujan=" << num(c["ramanujan"]) << " non-tempered="
            << num(c["non-tempered"]) << " undetermined=" << num(c["undetermined"])
            << " inconsistent=" << num(c["inconsistent"]) << "\n";
        out << "all_certified: " << (report["all_certified"].get<bool>() ? "yes" : "no") << "\n";
    } else if (command == "scan") {
        out << "scan (" << num(report["provenance"]) << ", "
            << (report["exact"].get<bool>() ? "exact" : "floating")
            << ", delta=" << num(report["delta"]) << ")\n";
        window_line(report);
        excluded_line(report);
        out << "positive_type: " << (report["positive_type"].get<bool>() ? "yes" : "no") << "\n";
        if (report["first_negative"].is_null()) {
            out << "first_negative: none\n";
        } else {
            const auto& f = report["first_negative"];
            out << "first_negative: p=" << num(f["p"]) << " m=" << num(f["m"]) << " value="
                << num(f["value"]) << "\n";
        }
        out << "negative terms: " << num(report["negative_count"]) << " of "
            << num(report["scanned"]) << " scanned\n";
        for (const auto& w : report["witnesses"])
            out << "witness p=" << num(w["p"]) << " m=" << num(w["m"]) << " value="
                << num(w["value"]) << "\n";
        out << "witnesses: " << num(report["witness_count"]) << " of "
            << num(report["scanned_primes"]) << " primes (density " << num(report["density"])
            << ")\n";
    } else if (command == "eval") {
        out << "eval (" << num(report["provenance"]) << ", "
            << (report["exact"].get<bool>() ? "exact" : "floating") << ")\n";
        window_line(report);
        excluded_line(report);
        out << "s: " << num(report["s"]) << "\n";
        out << "value: " << num(report["value"]) << "\n";
        out << "log_value: " << num(report["log_value"]) << "\n";
        out << "tail_bound: " << num(report["tail_bound"]) << "\n";
        const auto& f = report["factorization"];
        out << "factorization residual: max=" << num(f["max_residual"]) << " at p="
            << num(f["argmax_p"]) << " over " << num(f["checked"]) << " primes\n";
        if (!f["skipped"].empty()) {
            out << "factorization skipped:";
            for (const auto& p : f["skipped"]) out << ' ' << num(p);
            out << "\n";
        }
    } else if (command == "gamma") {
        out << "gamma\n";
        out << "z:";
        for (const auto& z : report["z"])
            out << " (" << num(z[0]) << ", " << num(z[1]) << ")";
        out << "\n";
        out << "parity:";
        for (const auto& d : report["parity"]) out << ' ' << num(d);
        out << "\n";
        out << "consistent: " << (report["consistent"].get<bool>() ? "yes" : "no") << "\n";
        if (report["consistent"].get<bool>()) {
            out << "pole_order_at_zero: " << num(report["pole_order_at_zero"]) << "\n";
            out << "B:";
            for (const auto& b : report["B"])
                out << " (" << num(b[0]) << ", " << num(b[1]) << ")";
            out << "\n";
            out << "s: (" << num(report["s"][0]) << ", " << num(report["s"][1]) << ")\n";
            if (report["value"].is_null()) {
                out << "value: pole of order " << num(report["pole_order_at_s"]) << "\n";
            } else {
                out << "value: (" << num(report["value"][0]) << ", " << num(report["value"][1])
                    << ")\n";
            }
        }
    } else if (command == "selftest") {
        out << "selftest seed=" << num(report["seed"]) << "\n";
        for (const auto& c : report["checks"]) {
            out << (c["ok"].get<bool>() ? "ok " : "FAIL ") << num(c["name"]);
            if (c.contains("note")) out << " (" << num(c["note"]) << ")";
            out << "\n";
        }
        out << "passed: " << (report["passed"].get<bool>() ? "yes" : "no") << "\n";
    } else if (command == "tau") {
        out << "tau p <= " << num(report["p_max"]) << "\n";
        for (const auto& [key, value] : report["tau"].items())
            out << "tau(" << key << ") = " << num(value) << "\n";
    } else {
        out << report.dump(2) << "\n";
    }
    return out.str();
}

}  // namespace tempered::cli
