#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "chebwav/csv.hpp"
#include "chebwav/dwt.hpp"
#include "chebwav/filterbank.hpp"
#include "chebwav/filters.hpp"
#include "chebwav/signals.hpp"

using namespace chebwav;

TEST_CASE("number formatting") {
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.25) == "0.25");
    CHECK(format_number(-3.5e-7) == "-3.5e-07");
    // 12 significant digits
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");

    // shortest round-trip form re-parses to the identical double
    for (double x : {1.0 / 3.0, std::sqrt(2.0), -0.1, 1e-300, 12345.6789,
                     0.0009765625}) {
        const std::string s = format_exact(x);
        CHECK(std::stod(s) == x);
    }
    CHECK(format_exact(0.5) == "0.5");
}

TEST_CASE("signal csv reading skips comments and blanks") {
    std::istringstream in(
        "# header comment\n"
        "1.5\n"
        "\n"
        "  2.5  # trailing note\n"
        "-3e2\n");
    const std::vector<double> got = read_signal_csv(in);
    REQUIRE(got.size() == 3);
    CHECK(got[0] == 1.5);
    CHECK(got[1] == 2.5);
    CHECK(got[2] == -300.0);
}

TEST_CASE("signal csv write/read round trip") {
    GaussianSource g(77);
    const std::vector<double> x = g.sample(50);
    std::ostringstream out;
    write_signal_csv(out, x);
    std::istringstream in(out.str());
    const std::vector<double> back = read_signal_csv(in);
    REQUIRE(back.size() == x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(back[i] == doctest::Approx(x[i]).epsilon(1e-11));
}

TEST_CASE("malformed signal csv reports the 1-based line") {
    std::istringstream in("1.0\n2.0\nnot-a-number\n");
    try {
        read_signal_csv(in);
        FAIL("expected CsvError");
    } catch (const CsvError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("tree csv round trip preserves coefficients bit for bit") {
    GaussianSource g(2);
    const Signal x{g.sample(40), "x"};
    const FilterBank bank = build_bank(make_type2(3));
    TreeDocument doc;
    doc.tree = analyze(x, bank, 2, BoundaryMode::Periodic);
    doc.kind = 2;
    doc.order = 3;
    doc.upsample_k = 0;

    std::ostringstream out;
    write_tree_csv(out, doc);
    std::istringstream in(out.str());
    const TreeDocument back = read_tree_csv(in);

    CHECK(back.kind == 2);
    CHECK(back.order == 3);
    CHECK(back.upsample_k == 0);
    CHECK(back.tree.levels == 2);
    CHECK(back.tree.boundary_mode == BoundaryMode::Periodic);
    CHECK(back.tree.original_length == 40);
    CHECK(back.tree.approximation == doc.tree.approximation);  // exact
    CHECK(back.tree.details == doc.tree.details);

    // a second write is byte-identical
    std::ostringstream again;
    write_tree_csv(again, back);
    CHECK(again.str() == out.str());
}

TEST_CASE("tree csv zeropad metadata survives") {
    const Signal x{{1.0, 2.0, 3.0, 4.0, 5.0}, "x"};
    const FilterBank bank = build_bank(make_type1(3));
    TreeDocument doc;
    doc.tree = analyze(x, bank, 1, BoundaryMode::ZeroPad);
    doc.kind = 1;
    doc.order = 3;
    std::ostringstream out;
    write_tree_csv(out, doc);
    CHECK(out.str().find("# mode zeropad\n") != std::string::npos);
    std::istringstream in(out.str());
    CHECK(read_tree_csv(in).tree.boundary_mode == BoundaryMode::ZeroPad);
}

TEST_CASE("tree csv rejects malformed documents") {
    const auto expect_line = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            read_tree_csv(in);
            FAIL_CHECK("expected CsvError for: " << text);
        } catch (const CsvError& e) {
            CHECK(e.line == line);
        }
    };
    // row without a tag separator
    expect_line("# kind 1\n# order 3\n# levels 1\n# original_length 2\n1.0\n",
                5);
    // unknown tag
    expect_line("x,1.0\n", 1);
    // bad level tag
    expect_line("d0,1.0\n", 1);
    expect_line("dx,1.0\n", 1);
    // missing metadata
    expect_line("a,1.0\nd1,2.0\n", 2);
    // level count mismatch with detail rows
    expect_line(
        "# kind 1\n# order 3\n# levels 2\n# original_length 2\na,1\nd1,2\n", 6);
    // unknown mode
    expect_line(
        "# kind 1\n# order 3\n# levels 1\n# original_length 2\n# mode wild\n"
        "a,1\nd1,2\n",
        7);
}
