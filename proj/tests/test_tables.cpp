#include "kdisj/tables.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace kdisj;

TEST_CASE("ingest_csv reads the four-row fixture") {
    const auto ds = test::tiny4();
    CHECK(ds.n() == 4);
    CHECK(ds.k() == 2);
    CHECK(ds.individual_ids() == std::vector<std::string>{"i1", "i2", "i3", "i4"});
    CHECK(ds.questions()[0].name == "Q1");
    CHECK(ds.questions()[0].modalities == std::vector<std::string>{"A1", "A2"});
    CHECK(ds.questions()[1].modalities == std::vector<std::string>{"B1", "B2"});
    CHECK(ds.answer(0, 0) == 0);
    CHECK(ds.answer(3, 1) == 1);
}

TEST_CASE("ingest_csv minimal one-cell document") {
    const auto ds = ingest_csv("q\nx\n");
    CHECK(ds.n() == 1);
    CHECK(ds.k() == 1);
    CHECK(ds.questions()[0].modalities == std::vector<std::string>{"x"});
    CHECK(ds.individual_ids()[0] == "1"); // synthesized row number
}

TEST_CASE("ingest_csv error paths") {
    CHECK_THROWS_AS(ingest_csv("id,Q1,Q2\ni1,A1,B1\ni2,A1,B2\ni3,,B1\n", {true}), MissingAnswer);
    try {
        ingest_csv("id,Q1,Q2\ni1,A1,B1\ni2,A1,B2\ni3,,B1\n", {true});
    } catch (const MissingAnswer& e) {
        CHECK(e.row == 3);
        CHECK(e.question == "Q1");
    }
    CHECK_THROWS_AS(ingest_csv("id,Q\na,x\na,y\n", {true}), DuplicateId);
    CHECK_THROWS_AS(ingest_csv("id,Q\n", {true}), EmptyDataset);
    CHECK_THROWS_AS(ingest_csv("", {}), EmptyDataset);
    CHECK_THROWS_AS(ingest_csv("id\nrow\n", {true}), CsvError); // no question columns
    CHECK_THROWS_AS(ingest_csv("q\n\"unterminated\n", {}), CsvError);
    CHECK_THROWS_AS(ingest_csv("a,b\n1,2,3\n", {}), CsvError); // ragged row
}

TEST_CASE("ingest_csv handles quoted fields") {
    const auto ds = ingest_csv("id,Q\nr1,\"a,b\"\nr2,\"say \"\"hi\"\"\"\n", {true});
    CHECK(ds.questions()[0].modalities == std::vector<std::string>{"a,b", "say \"hi\""});
}

TEST_CASE("to_csv round-trips through ingest_csv") {
    const auto ds = test::tiny4();
    const auto again = ingest_csv(to_csv(ds), {true});
    CHECK(again.individual_ids() == ds.individual_ids());
    CHECK(again.answers() == ds.answers());
}

TEST_CASE("build_disjunctive on the fixture") {
    const auto d = build_disjunctive(test::tiny4());
    CHECK(d.m == 4);
    CHECK(d.block_offsets == std::vector<std::size_t>{0, 2});
    CHECK(d.column_margins == std::vector<long>{2, 2, 2, 2});
    const std::vector<std::uint8_t> expected = {1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 0, 1};
    CHECK(d.entries == expected);
}

TEST_CASE("build_disjunctive degenerate single cell") {
    const auto ds = ingest_csv("q\nx\n");
    const auto d = build_disjunctive(ds);
    CHECK(d.m == 1);
    CHECK(d.entries == std::vector<std::uint8_t>{1});
    CHECK(d.column_margins == std::vector<long>{1});
}

TEST_CASE("every row of a disjunctive table sums to K") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto d = build_disjunctive(test::random_dataset(rng));
        for (std::size_t i = 0; i < d.n; ++i) {
            std::size_t sum = 0;
            for (std::size_t j = 0; j < d.m; ++j) sum += d.at(i, j);
            REQUIRE(sum == d.k);
        }
    }
}

TEST_CASE("disjunctive table decodes back to the answers") {
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const auto ds = test::random_dataset(rng);
        CHECK(test::decode_answers(build_disjunctive(ds)) == ds.answers());
    }
}

TEST_CASE("correct_table fixture entries are all 0.5") {
    const auto d = build_disjunctive(test::tiny4());
    const auto res = correct_table(d, UnusedModalityPolicy::Fail);
    CHECK_FALSE(res.dropped_any);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(res.table.at(i, j) == (d.at(i, j) ? 0.5 : 0.0));
}

TEST_CASE("a unanimous question yields entries 1/sqrt(K*N)") {
    const auto ds = ingest_csv("Q1,Q2\na,same\nb,same\nc,same\n");
    const auto res = correct_table(build_disjunctive(ds), UnusedModalityPolicy::Fail);
    const double expected = 1.0 / std::sqrt(2.0 * 3.0);
    for (std::size_t i = 0; i < 3; ++i) CHECK(res.table.at(i, 3) == doctest::Approx(expected));
}

TEST_CASE("unused modality: Fail throws, Drop removes and reports") {
    // build by hand so Q2 carries a modality nobody picked
    std::vector<Question> questions = {{"Q1", {"a", "b"}}, {"Q2", {"u", "v", "unused"}}};
    CategoricalDataset ds({"r1", "r2"}, std::move(questions), {{0, 0}, {1, 1}});
    const auto d = build_disjunctive(ds);
    CHECK(d.column_margins == std::vector<long>{1, 1, 1, 1, 0});

    CHECK_THROWS_AS(correct_table(d, UnusedModalityPolicy::Fail, &ds), UnusedModality);
    try {
        correct_table(d, UnusedModalityPolicy::Fail, &ds);
    } catch (const UnusedModality& e) {
        CHECK(e.question == "Q2");
        CHECK(e.label == "unused");
    }

    const auto res = correct_table(d, UnusedModalityPolicy::Drop, &ds);
    CHECK(res.dropped_any);
    CHECK(res.kept_columns == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(res.table.m == 4);
    CHECK(res.table.block_offsets == std::vector<std::size_t>{0, 2});
    CHECK(modality_labels(ds, res.kept_columns) ==
          std::vector<std::string>{"a", "b", "u", "v"});
}

TEST_CASE("chi2 row distance on the fixture") {
    const auto d = build_disjunctive(test::tiny4());
    CHECK(chi2_row_distance(d, 0, 1) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(chi2_row_distance(d, 2, 2) == 0.0);
    CHECK(chi2_row_distance(d, 0, 3) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(chi2_row_distance(d, 0, 9), InvalidArgument);
}

TEST_CASE("chi2 column distance on the fixture") {
    const auto d = build_disjunctive(test::tiny4());
    CHECK(chi2_col_distance(d, 0, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(chi2_col_distance(d, 0, 0) == 0.0);
}

TEST_CASE("coincident modality columns are at chi2 distance zero") {
    // Q1 and Q2 answers perfectly aligned: columns a/u and b/v coincide
    const auto ds = ingest_csv("Q1,Q2\na,u\nb,v\na,u\n");
    const auto d = build_disjunctive(ds);
    CHECK(chi2_col_distance(d, 0, 2) == 0.0);
    CHECK(chi2_col_distance(d, 1, 3) == 0.0);
}

TEST_CASE("chi2 distances are symmetric") {
    Rng rng(13);
    const auto d = build_disjunctive(test::random_connected_dataset(rng, 20));
    for (std::size_t i = 0; i < d.n; ++i)
        for (std::size_t i2 = i; i2 < d.n; ++i2)
            CHECK(chi2_row_distance(d, i, i2) == chi2_row_distance(d, i2, i));
    for (std::size_t j = 0; j < d.m; ++j)
        for (std::size_t j2 = j; j2 < d.m; ++j2) {
            if (d.column_margins[j] == 0 || d.column_margins[j2] == 0) continue;
            CHECK(chi2_col_distance(d, j, j2) == chi2_col_distance(d, j2, j));
        }
}

TEST_CASE("K * chi2 equals squared Euclidean distance of corrected rows") {
    Rng rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        const auto ds = test::random_dataset(rng, 25);
        const auto d0 = build_disjunctive(ds);
        const auto res = correct_table(d0, UnusedModalityPolicy::Drop);
        const auto d = select_columns(d0, res.kept_columns);
        const auto& dc = res.table;
        for (std::size_t i = 0; i < d.n; ++i) {
            for (std::size_t i2 = 0; i2 < d.n; ++i2) {
                double euclid2 = 0.0;
                for (std::size_t j = 0; j < dc.m; ++j) {
                    const double diff = dc.at(i, j) - dc.at(i2, j);
                    euclid2 += diff * diff;
                }
                const double lhs = static_cast<double>(d.k) * chi2_row_distance(d, i, i2);
                REQUIRE(std::abs(lhs - euclid2) <= 1e-10);
            }
        }
    }
}

TEST_CASE("corrected table trace and column-sum identities") {
    Rng rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        const auto ds = test::random_dataset(rng);
        const auto res = correct_table(build_disjunctive(ds), UnusedModalityPolicy::Drop);
        const auto& dc = res.table;
        double trace = 0.0;
        for (double e : dc.entries) trace += e * e;
        REQUIRE(std::abs(trace - static_cast<double>(dc.m) / static_cast<double>(dc.k)) <= 1e-10);
        for (std::size_t j = 0; j < dc.m; ++j) {
            double col_sum = 0.0;
            for (std::size_t i = 0; i < dc.n; ++i) col_sum += dc.at(i, j);
            const double expected =
                std::sqrt(static_cast<double>(dc.column_margins[j]) / static_cast<double>(dc.k));
            REQUIRE(std::abs(col_sum - expected) <= 1e-10);
        }
    }
}

TEST_CASE("modality labels are qualified only on collisions") {
    const auto ds = ingest_csv("Q1,Q2\nyes,yes\nno,maybe\n");
    CHECK(modality_labels(ds) ==
          std::vector<std::string>{"Q1:yes", "no", "Q2:yes", "maybe"});
}
