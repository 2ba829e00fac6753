#pragma once

#include "tempered/errors.hpp"
#include "tempered/lift.hpp"
#include "tempered/primes.hpp"
#include "tempered/rational.hpp"
#include "tempered/satake.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace tempered {

struct CorpusEntry {
    HeckeDatumF approx;
    std::optional<HeckeDatumQ> exact;
};

/// Per-prime GL(3) Hecke data with provenance and the ramified prime set
/// (the primes dividing the declared level). Immutable once parsed.
struct Gl3Corpus {
    enum class Provenance { LiftedFromNewform, Synthetic, File };

    std::map<std::int64_t, CorpusEntry> entries;
    std::set<std::int64_t> ramified;
    std::int64_t level = 1;
    Provenance provenance = Provenance::File;
    std::map<std::int64_t, bool> deligne_flags;  // lifted corpora only

    bool exact() const {
        if (entries.empty()) return false;
        for (const auto& [p, e] : entries)
            if (!e.exact) return false;
        return true;
    }

    std::map<std::int64_t, HeckeDatumF> floating_data() const {
        std::map<std::int64_t, HeckeDatumF> out;
        for (const auto& [p, e] : entries) out.emplace(p, e.approx);
        return out;
    }

    std::map<std::int64_t, HeckeDatumQ> exact_data() const {
        std::map<std::int64_t, HeckeDatumQ> out;
        for (const auto& [p, e] : entries) {
            if (!e.exact) throw Error("corpus holds no exact data for prime " + std::to_string(p));
            out.emplace(p, *e.exact);
        }
        return out;
    }
};

namespace detail {

inline std::set<std::int64_t> primes_dividing(std::int64_t n) {
    std::set<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            out.insert(d);
            n /= d;
        }
    if (n > 1) out.insert(n);
    return out;
}

inline bool parse_strict_double(const std::string& token, double& out) {
    std::size_t pos = 0;
    try {
        out = std::stod(token, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == token.size() && std::isfinite(out);
}

inline bool parse_strict_int(const std::string& token, std::int64_t& out) {
    std::size_t pos = 0;
    try {
        out = std::stoll(token, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == token.size();
}

/// A numeric token in a gl3 row: always carries a double, and an exact
/// rational when written as an integer or a/b fraction.
struct ValueToken {
    double value = 0.0;
    std::optional<Rational> exact;
};

inline bool parse_value_token(const std::string& token, ValueToken& out) {
    out.exact = parse_exact(token);
    if (out.exact) {
        out.value = to_double(*out.exact);
        return true;
    }
    return parse_strict_double(token, out.value);
}

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct HeaderInfo {
    std::string mode;
    std::map<std::string, std::string> kv;
};

inline HeaderInfo parse_header(const std::string& line, std::size_t line_no) {
    std::istringstream ss(line);
    HeaderInfo header;
    ss >> header.mode;
    std::string item;
    while (ss >> item) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("bad header item '" + item + "' (expected key=value)", line_no);
        header.kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return header;
}

}  // namespace detail

/// Parses one of the three tabular corpus formats. The first non-comment line
/// declares the mode:
///   gl2 weight=K [level=N]   rows: p a_p          (integers; auto-lifted)
///   gl3 [level=N]            rows: p Re(a) Im(a) Re(w) Im(w)
///   synthetic                rows: p t theta arg_u arg_w
/// gl3 values written as integers or a/b fractions are kept exact.
inline Gl3Corpus parse_corpus(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++line_no;
            std::size_t i = 0;
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i == line.size() || line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header_line;
    if (!next_line(header_line)) throw ParseError("empty corpus: no header line", line_no);
    const detail::HeaderInfo header = detail::parse_header(header_line, line_no);

    Gl3Corpus corpus;
    if (auto it = header.kv.find("level"); it != header.kv.end()) {
        std::int64_t level = 0;
        if (!detail::parse_strict_int(it->second, level) || level < 1)
            throw ParseError("bad level '" + it->second + "'", line_no);
        corpus.level = level;
    }
    corpus.ramified = detail::primes_dividing(corpus.level);

    NewformRecord record;  // gl2 mode accumulates here
    if (header.mode == "gl2") {
        auto it = header.kv.find("weight");
        if (it == header.kv.end()) throw ParseError("gl2 header requires weight=K", line_no);
        std::int64_t weight = 0;
        if (!detail::parse_strict_int(it->second, weight) || weight <= 0 || weight % 2 != 0)
            throw ParseError("gl2 weight must be a positive even integer", line_no);
        record.weight = static_cast<int>(weight);
        record.level = corpus.level;
        corpus.provenance = Gl3Corpus::Provenance::LiftedFromNewform;
    } else if (header.mode == "gl3") {
        corpus.provenance = Gl3Corpus::Provenance::File;
    } else if (header.mode == "synthetic") {
        corpus.provenance = Gl3Corpus::Provenance::Synthetic;
    } else {
        throw ParseError("unknown corpus mode '" + header.mode + "'", line_no);
    }

    std::string row;
    while (next_line(row)) {
        std::istringstream ss(row);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);

        std::int64_t p = 0;
        if (tokens.empty() || !detail::parse_strict_int(tokens[0], p))
            throw ParseError("bad prime column", line_no);
        if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime", line_no);
        if (corpus.entries.count(p) || (header.mode == "gl2" && record.coefficients.count(p)))
            throw DuplicatePrimeError("duplicate prime " + std::to_string(p), line_no);

        if (header.mode == "gl2") {
            if (tokens.size() != 2) throw ParseError("gl2 rows need exactly 2 columns", line_no);
            const auto a = parse_exact(tokens[1]);
            if (!a || boost::multiprecision::denominator(*a) != 1)
                throw ParseError("gl2 eigenvalue must be an integer", line_no);
            record.coefficients.emplace(p, boost::multiprecision::numerator(*a));
        } else if (header.mode == "gl3") {
            if (tokens.size() != 5) throw ParseError("gl3 rows need exactly 5 columns", line_no);
            std::array<detail::ValueToken, 4> v{};
            for (std::size_t i = 0; i < 4; ++i)
                if (!detail::parse_value_token(tokens[i + 1], v[i]))
                    throw ParseError("bad numeric token '" + tokens[i + 1] + "'", line_no);
            CorpusEntry entry;
            entry.approx = {p, Complex(v[0].value, v[1].value), Complex(v[2].value, v[3].value)};
            if (v[0].exact && v[1].exact && v[2].exact && v[3].exact) {
                entry.exact = HeckeDatumQ{p, RationalComplex(*v[0].exact, *v[1].exact),
                                          RationalComplex(*v[2].exact, *v[3].exact)};
            }
            corpus.entries.emplace(p, entry);
        } else {  // synthetic
            if (tokens.size() != 5) throw ParseError("synthetic rows need exactly 5 columns", line_no);
            std::array<double, 4> v{};
            for (std::size_t i = 0; i < 4; ++i)
                if (!detail::parse_strict_double(tokens[i + 1], v[i]))
                    throw ParseError("bad numeric token '" + tokens[i + 1] + "'", line_no);
            const double t = v[0], theta = v[1], arg_u = v[2], arg_w = v[3];
            if (t <= 0.0) throw ValidationError("synthetic rows require t > 0", line_no);
            const Complex u = std::polar(1.0, arg_u);
            const Complex w = std::polar(1.0, arg_w);
            if (std::abs(std::polar(1.0, theta) - std::conj(u) * w) > 1e-6)
                throw ValidationError("theta does not match arg_w - arg_u", line_no);
            const double pt = std::pow(static_cast<double>(p), t);
            CorpusEntry entry;
            entry.approx = {p, u * pt + u / pt + w, u * u * w};
            corpus.entries.emplace(p, entry);
        }
    }

    if (header.mode == "gl2") {
        const auto lifted = lift_newform(record);
        for (const auto& [p, a] : record.coefficients) {
            CorpusEntry entry;
            entry.exact = lifted.at(p);
            entry.approx = to_floating(*entry.exact);
            corpus.entries.emplace(p, entry);
            corpus.deligne_flags.emplace(p, deligne_bound_holds(a, p, record.weight));
        }
    }
    return corpus;
}

inline Gl3Corpus parse_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus file: " + path);
    return parse_corpus(in);
}

/// Canonical gl3-mode serialization. Exact corpora emit rational tokens and
/// round-trip exactly; floating corpora emit %.17g decimals, which reparse to
/// the identical doubles.
inline void serialize(const Gl3Corpus& corpus, std::ostream& out) {
    out << "gl3 level=" << corpus.level << "\n";
    out << "# p  Re(a)  Im(a)  Re(omega)  Im(omega)\n";
    const bool exact = corpus.exact();
    for (const auto& [p, e] : corpus.entries) {
        out << p;
        if (exact) {
            const HeckeDatumQ& d = *e.exact;
            out << ' ' << to_string(d.a.re) << ' ' << to_string(d.a.im) << ' '
                << to_string(d.omega.re) << ' ' << to_string(d.omega.im);
        } else {
            const HeckeDatumF& d = e.approx;
            out << ' ' << detail::format_double(d.a.real()) << ' '
                << detail::format_double(d.a.imag()) << ' '
                << detail::format_double(d.omega.real()) << ' '
                << detail::format_double(d.omega.imag());
        }
        out << "\n";
    }
}

inline std::string serialize(const Gl3Corpus& corpus) {
    std::ostringstream out;
    serialize(corpus, out);
    return out.str();
}

/// Ignores provenance: two corpora are the same when they carry the same
/// primes, values, level and ramified set.
inline bool semantically_equal(const Gl3Corpus& a, const Gl3Corpus& b) {
    if (a.level != b.level || a.ramified != b.ramified) return false;
    if (a.entries.size() != b.entries.size()) return false;
    for (const auto& [p, ea] : a.entries) {
        const auto it = b.entries.find(p);
        if (it == b.entries.end()) return false;
        const CorpusEntry& eb = it->second;
        if (ea.approx.a != eb.approx.a || ea.approx.omega != eb.approx.omega) return false;
        if (ea.exact.has_value() != eb.exact.has_value()) return false;
        if (ea.exact && !(ea.exact->a == eb.exact->a && ea.exact->omega == eb.exact->omega))
            return false;
    }
    return true;
}

}  // namespace tempered
