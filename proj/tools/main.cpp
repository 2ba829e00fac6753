// tempered: certify primes as Ramanujan (tempered) for GL(3) Hecke data.

#include "tempered/cli.hpp"

#include <CLI11.hpp>

#include <complex>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using tempered::Complex;
using tempered::Error;
using tempered::cli::CmdResult;
using tempered::cli::RunConfig;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

void parse_window(const std::string& text, RunConfig& cfg) {
    const auto parts = split(text, ',');
    try {
        if (parts.size() != 2) throw std::invalid_argument("window");
        cfg.p_max = std::stoll(parts[0]);
        cfg.m_max = std::stoi(parts[1]);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--window", "expected P,M (e.g. 1000,5)");
    }
    if (cfg.p_max < 2 || cfg.m_max < 1)
        throw CLI::ValidationError("--window", "window must satisfy P >= 2, M >= 1");
}

void parse_exclude(const std::string& text, RunConfig& cfg) {
    for (const auto& item : split(text, ',')) {
        if (item.empty()) continue;
        try {
            cfg.excluded.insert(std::stoll(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--exclude", "expected a comma-separated prime list");
        }
    }
}

Complex parse_complex(const std::string& text) {
    const auto parts = split(text, ',');
    try {
        if (parts.size() == 1) return Complex(std::stod(parts[0]), 0.0);
        if (parts.size() == 2) return Complex(std::stod(parts[0]), std::stod(parts[1]));
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("complex", "expected re or re,im: '" + text + "'");
}

struct CommonFlags {
    std::string corpus_path;
    std::string window = "1000,5";
    std::string exclude;
    double delta = 1e-9;
    bool force_exact = false;
    bool force_floating = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("corpus", flags.corpus_path, "corpus file (gl3, gl2 or synthetic format)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--window", flags.window, "window P,M: primes <= P, coefficients m <= M")
        ->capture_default_str();
    cmd->add_option("--delta", flags.delta, "negativity margin for floating-point data")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_flag("--exact", flags.force_exact, "require exact rational arithmetic");
    cmd->add_flag("--no-exact", flags.force_floating, "force floating-point arithmetic");
    cmd->add_option("--exclude", flags.exclude, "comma-separated primes to drop from the window");
}

RunConfig make_config(const CommonFlags& flags) {
    RunConfig cfg;
    parse_window(flags.window, cfg);
    parse_exclude(flags.exclude, cfg);
    cfg.delta = flags.delta;
    if (flags.force_exact && flags.force_floating)
        throw CLI::ValidationError("--exact", "cannot combine --exact with --no-exact");
    if (flags.force_exact) cfg.exact_mode = RunConfig::ExactMode::Force;
    if (flags.force_floating) cfg.exact_mode = RunConfig::ExactMode::Off;
    return cfg;
}

void emit(const CmdResult& result, const std::string& format, const std::string& out_path) {
    std::ostringstream body;
    if (format == "json")
        body << result.report.dump(2) << "\n";
    else
        body << tempered::cli::render_text(result.report);
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write report to " + out_path);
        out << body.str();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certify primes as Ramanujan (tempered) for GL(3) Hecke data"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write the report to a file instead of stdout");

    std::function<CmdResult()> runner;

    auto* certify = app.add_subcommand("certify", "per-prime Ramanujan certificates");
    {
        static CommonFlags flags;
        static bool no_oracle = false;
        static int threads = 1;
        add_common(certify, flags);
        certify->add_flag("--no-oracle", no_oracle, "skip the root-finding oracle stage");
        certify->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
        certify->callback([&] {
            runner = [&] {
                RunConfig cfg = make_config(flags);
                cfg.use_oracle = !no_oracle;
                cfg.threads = threads;
                return tempered::cli::cmd_certify(tempered::parse_corpus(flags.corpus_path), cfg);
            };
        });
    }

    auto* scan = app.add_subcommand("scan", "positivity scan and temperedness witnesses");
    {
        static CommonFlags flags;
        add_common(scan, flags);
        scan->callback([&] {
            runner = [&] {
                return tempered::cli::cmd_scan(tempered::parse_corpus(flags.corpus_path),
                                               make_config(flags));
            };
        });
    }

    auto* eval = app.add_subcommand("eval", "evaluate the incomplete adjoint L-function");
    {
        static CommonFlags flags;
        static double s = 3.0;
        add_common(eval, flags);
        eval->add_option("--s", s, "real evaluation point, s > 2")->capture_default_str();
        eval->callback([&] {
            runner = [&] {
                if (s <= 2.0) throw Error("eval requires s > 2 (tail bound diverges otherwise)");
                return tempered::cli::cmd_eval(tempered::parse_corpus(flags.corpus_path),
                                               make_config(flags), s);
            };
        });
    }

    auto* gamma = app.add_subcommand("gamma", "archimedean adjoint gamma-factor report");
    {
        static std::vector<std::string> z_text;
        static std::vector<int> parity;
        static std::string s_text = "2";
        gamma->add_option("--z", z_text, "three spectral parameters, each re or re,im")
            ->required()
            ->expected(3);
        gamma->add_option("--parity", parity, "three parity bits (0 or 1)")->expected(3);
        gamma->add_option("--s", s_text, "evaluation point, re or re,im")->capture_default_str();
        gamma->callback([&] {
            runner = [&] {
                tempered::ArchParams params;
                for (int i = 0; i < 3; ++i) params.z[static_cast<std::size_t>(i)] = parse_complex(z_text[static_cast<std::size_t>(i)]);
                if (!parity.empty())
                    for (int i = 0; i < 3; ++i) params.delta[static_cast<std::size_t>(i)] = parity[static_cast<std::size_t>(i)];
                return tempered::cli::cmd_gamma(params, parse_complex(s_text));
            };
        });
    }

    auto* selftest = app.add_subcommand("selftest", "run the embedded invariant suite");
    {
        static std::uint64_t seed = 12345;
        static bool inject = false;
        selftest->add_option("--seed", seed, "RNG seed")->capture_default_str();
        selftest->add_flag("--inject-failure", inject)->group("");  // hidden: test hook
        selftest->callback([&] {
            runner = [&] { return tempered::cli::cmd_selftest(seed, inject); };
        });
    }

    auto* tau = app.add_subcommand("tau", "Ramanujan tau values at primes from the Delta q-expansion");
    {
        static std::int64_t p_max = 100;
        tau->add_option("p_max", p_max, "largest prime")->check(CLI::Range(std::int64_t(2), std::int64_t(10000)))->capture_default_str();
        tau->callback([&] {
            runner = [&] { return tempered::cli::cmd_tau(p_max); };
        });
    }

    // Let --format/--out appear after the subcommand as well as before it.
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        const CmdResult result = runner();
        emit(result, format, out_path);
        return result.exit_code;
    } catch (const tempered::CorpusError& e) {
        std::cerr << "error: line " << e.line() << ": " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
