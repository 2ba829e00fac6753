#include "tempered/corpus.hpp"
#include "tempered/lift.hpp"

#include "helpers.hpp"
#include "tempered/adjoint.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>
#include <string>

using namespace tempered;

TEST_CASE("normalized eigenvalue squares are exact rationals") {
    const auto normalized = normalize_gl2(BigInt(252), 3, 12);
    REQUIRE(normalized.square == Rational(784, 2187));
    REQUIRE(normalized.value == Catch::Approx(std::sqrt(784.0 / 2187.0)));

    const auto negative = normalize_gl2(BigInt(-16744), 7, 12);
    REQUIRE(negative.value < 0.0);
    REQUIRE(negative.square > 0);
}

TEST_CASE("normalization validates its inputs") {
    REQUIRE_THROWS_AS(normalize_gl2(BigInt(1), 3, 11), std::invalid_argument);
    REQUIRE_THROWS_AS(normalize_gl2(BigInt(1), 3, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(normalize_gl2(BigInt(1), 4, 12), std::invalid_argument);
}

TEST_CASE("Deligne bound checks exactly") {
    REQUIRE(deligne_bound_holds(BigInt(-24), 2, 12));
    REQUIRE(deligne_bound_holds(BigInt(90), 2, 12));   // 8100 <= 8192
    REQUIRE_FALSE(deligne_bound_holds(BigInt(91), 2, 12));  // 8281 > 8192
    for (const auto& [p, tau] : delta_qexpansion(1000)) REQUIRE(deligne_bound_holds(tau, p, 12));
}

TEST_CASE("the symmetric-square lift has trivial central character and exact trace") {
    const HeckeDatumQ d = sym_square_datum(Rational(784, 2187), 3);
    REQUIRE(d.p == 3);
    REQUIRE(d.a == RationalComplex(Rational(-1403, 2187)));
    REQUIRE(d.omega == RationalComplex(1));
    REQUIRE(certify_prime(d, 3).verdict == CertVerdict::RamanujanCertified);
}

TEST_CASE("a vanishing eigenvalue lifts to a double-root class") {
    const HeckeDatumQ d = sym_square_datum(Rational(0), 5);
    REQUIRE(d.a == RationalComplex(-1));
    const UnitaryClass3 c = satake_class(d);
    REQUIRE(detail::multiset_match3(c.alphas, {Complex(-1, 0), Complex(-1, 0), Complex(1, 0)},
                                    1e-10));
    REQUIRE(classify(c).verdict == Verdict::Tempered);
}

TEST_CASE("negative eigenvalue squares are rejected") {
    REQUIRE_THROWS_AS(sym_square_datum(Rational(-1, 4), 5), std::invalid_argument);
    REQUIRE_THROWS_AS(sym_square_datum(-0.25, 5), std::invalid_argument);
}

TEST_CASE("the Delta lift certifies every prime up to 100") {
    const auto lifted = lift_newform(delta_newform(100));
    REQUIRE(lifted.size() == 25);
    for (const auto& [p, d] : lifted) {
        const auto cert = certify_prime(d, 3, 0.0, CertifyOptions{false, kDefaultTol});
        REQUIRE(cert.verdict == CertVerdict::RamanujanCertified);
    }
}

TEST_CASE("gl2 corpora parse, lift and carry Deligne flags") {
    std::istringstream in(
        "# Delta, first four primes\n"
        "gl2 weight=12 level=1\n"
        "2 -24\n"
        "3 252\n"
        "5 4830\n"
        "7 -16744\n");
    const Gl3Corpus corpus = parse_corpus(in);
    REQUIRE(corpus.provenance == Gl3Corpus::Provenance::LiftedFromNewform);
    REQUIRE(corpus.level == 1);
    REQUIRE(corpus.ramified.empty());
    REQUIRE(corpus.entries.size() == 4);
    REQUIRE(corpus.exact());
    REQUIRE(corpus.entries.at(2).exact->a == RationalComplex(Rational(-23, 32)));
    for (const auto& [p, ok] : corpus.deligne_flags) REQUIRE(ok);
}

TEST_CASE("the level determines the ramified set") {
    std::istringstream in("gl2 weight=12 level=6\n5 4830\n");
    const Gl3Corpus corpus = parse_corpus(in);
    REQUIRE(corpus.level == 6);
    REQUIRE(corpus.ramified == std::set<std::int64_t>{2, 3});
}

TEST_CASE("gl3 exact tokens are preserved and mixed rows fall back to floating") {
    std::istringstream in(
        "gl3 level=1\n"
        "2 -23/32 0 1 0\n"
        "3 0.5 0.25 1 0\n");
    const Gl3Corpus corpus = parse_corpus(in);
    REQUIRE(corpus.provenance == Gl3Corpus::Provenance::File);
    REQUIRE_FALSE(corpus.exact());
    REQUIRE(corpus.entries.at(2).exact.has_value());
    REQUIRE(corpus.entries.at(2).exact->a.re == Rational(-23, 32));
    REQUIRE_FALSE(corpus.entries.at(3).exact.has_value());
    REQUIRE(corpus.entries.at(3).approx.a == Complex(0.5, 0.25));
    REQUIRE_THROWS_AS(corpus.exact_data(), Error);
}

TEST_CASE("synthetic rows reconstruct non-tempered data") {
    std::istringstream in(
        "synthetic\n"
        "# p t theta arg_u arg_w\n"
        "5 0.3 1.4 0.7 2.1\n");
    const Gl3Corpus corpus = parse_corpus(in);
    REQUIRE(corpus.provenance == Gl3Corpus::Provenance::Synthetic);
    const auto result = classify(satake_class(corpus.entries.at(5).approx));
    REQUIRE(result.verdict == Verdict::NonTempered);
    REQUIRE(result.shape->t == Catch::Approx(0.3).margin(1e-9));
    REQUIRE(result.shape->theta == Catch::Approx(1.4).margin(1e-9));
}

TEST_CASE("synthetic rows validate their shape") {
    std::istringstream bad_theta("synthetic\n5 0.3 1.0 0.7 2.1\n");
    REQUIRE_THROWS_AS(parse_corpus(bad_theta), ValidationError);
    std::istringstream bad_t("synthetic\n5 0 1.4 0.7 2.1\n");
    REQUIRE_THROWS_AS(parse_corpus(bad_t), ValidationError);
}

TEST_CASE("parser errors carry line numbers") {
    std::istringstream composite("gl3\n# a comment\n4 1 0 1 0\n");
    try {
        parse_corpus(composite);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        REQUIRE(e.line() == 3);
    }

    std::istringstream duplicate("gl3\n2 1 0 1 0\n2 1 0 1 0\n");
    REQUIRE_THROWS_AS(parse_corpus(duplicate), DuplicatePrimeError);

    std::istringstream bad_token("gl3\n2 one 0 1 0\n");
    REQUIRE_THROWS_AS(parse_corpus(bad_token), ParseError);

    std::istringstream bad_columns("gl3\n2 1 0 1\n");
    REQUIRE_THROWS_AS(parse_corpus(bad_columns), ParseError);

    std::istringstream unknown("gl4\n2 1 0 1 0\n");
    REQUIRE_THROWS_AS(parse_corpus(unknown), ParseError);

    std::istringstream empty("# nothing here\n\n");
    REQUIRE_THROWS_AS(parse_corpus(empty), ParseError);

    std::istringstream no_weight("gl2 level=1\n2 -24\n");
    REQUIRE_THROWS_AS(parse_corpus(no_weight), ParseError);

    std::istringstream fractional("gl2 weight=12\n2 -24/5\n");
    REQUIRE_THROWS_AS(parse_corpus(fractional), ParseError);

    std::istringstream bad_level("gl3 level=zero\n");
    REQUIRE_THROWS_AS(parse_corpus(bad_level), ParseError);
}

TEST_CASE("comments and blank lines are skipped everywhere") {
    std::istringstream in(
        "\n"
        "# leading comment\n"
        "  # indented comment\n"
        "gl3 level=1\n"
        "\n"
        "2 1 0 1 0\n"
        "# trailing comment\n");
    REQUIRE(parse_corpus(in).entries.size() == 1);
}

TEST_CASE("exact corpora serialize and reparse identically") {
    std::istringstream in("gl2 weight=12 level=1\n2 -24\n3 252\n");
    const Gl3Corpus corpus = parse_corpus(in);
    const std::string text = serialize(corpus);
    std::istringstream round(text);
    const Gl3Corpus reparsed = parse_corpus(round);
    REQUIRE(semantically_equal(corpus, reparsed));
    REQUIRE(reparsed.exact());
    REQUIRE(reparsed.provenance == Gl3Corpus::Provenance::File);
    // A second round trip is byte-stable.
    REQUIRE(serialize(reparsed) == text);
}

TEST_CASE("floating corpora round-trip through %.17g") {
    std::istringstream in("gl3 level=2\n3 0.1 -0.30000000000000004 0.96 0.28\n");
    const Gl3Corpus corpus = parse_corpus(in);
    REQUIRE_FALSE(corpus.exact());
    std::istringstream round(serialize(corpus));
    const Gl3Corpus reparsed = parse_corpus(round);
    REQUIRE(semantically_equal(corpus, reparsed));
}

TEST_CASE("missing corpus files raise input errors") {
    REQUIRE_THROWS_AS(parse_corpus(std::string("/nonexistent/corpus.txt")), Error);
}
