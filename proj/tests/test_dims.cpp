// Counting layer: Bell-type numbers, closed dimension formulas, the
// recursion-driven dimension table, and the tower graph. A direct
// set-partition enumerator serves as the oracle for every counting sequence.
#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <map>
#include <vector>

#include "qpart/dims.hpp"

using qpart::DimTable;
using qpart::Int;
using qpart::Kind;
using qpart::Partition;

namespace {

// Count set partitions of [n]; with_min_block_size filters by smallest block,
// exact_blocks by number of blocks (0 = any).
long count_partitions_oracle(int n, size_t min_block_size, int exact_blocks) {
    long count = 0;
    std::vector<int> sizes;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            bool ok = true;
            for (int s : sizes)
                if (static_cast<size_t>(s) < min_block_size) ok = false;
            if (exact_blocks && static_cast<int>(sizes.size()) != exact_blocks) ok = false;
            if (ok) ++count;
            return;
        }
        for (size_t b = 0; b < sizes.size(); ++b) {
            ++sizes[b];
            rec(remaining - 1);
            --sizes[b];
        }
        sizes.push_back(1);
        rec(remaining - 1);
        sizes.pop_back();
    };
    rec(n);
    return count;
}

} // namespace

TEST_CASE("bell numbers against direct enumeration") {
    CHECK(qpart::bell(4) == 15);
    CHECK(qpart::bell(6) == 203);
    for (int n = 0; n <= 8; ++n) CHECK(qpart::bell(n) == count_partitions_oracle(n, 1, 0));
}

TEST_CASE("no-singleton partition counts against direct enumeration") {
    const std::vector<long> expected = {1, 0, 1, 1, 4};
    for (size_t t = 0; t < expected.size(); ++t)
        CHECK(qpart::b2(static_cast<int>(t)) == expected[t]);
    for (int t = 0; t <= 8; ++t) CHECK(qpart::b2(t) == count_partitions_oracle(t, 2, 0));
}

TEST_CASE("stirling numbers against direct enumeration") {
    CHECK(qpart::stirling2(3, 2) == 3);
    for (int n = 1; n <= 7; ++n) {
        CHECK(qpart::stirling2(n, 0) == 0);
        for (int i = 1; i <= n; ++i)
            CHECK(qpart::stirling2(n, i) == count_partitions_oracle(n, 1, i));
    }
    CHECK(qpart::stirling2(0, 0) == 1);
}

TEST_CASE("binomials satisfy the Pascal identity") {
    CHECK(qpart::binomial(5, 2) == 10);
    CHECK(qpart::binomial(4, 0) == 1);
    CHECK(qpart::binomial(3, 5) == 0);
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(qpart::binomial(n, k) == qpart::binomial(n - 1, k - 1) + qpart::binomial(n - 1, k));
}

TEST_CASE("algebra dimension formulas reproduce the frozen table") {
    const std::vector<long> whole = {1, 1, 4, 41, 715, 17722, 580317};
    const std::vector<long> half = {1, 2, 15, 203, 4140, 115975, 4213597};
    const std::vector<long> tilde = {2, 7, 67, 1080, 25287, 794545, 31858034};
    for (int k = 0; k <= 6; ++k) {
        CHECK(qpart::algebra_dim_formula(Kind::Whole, k) == whole[static_cast<size_t>(k)]);
        CHECK(qpart::algebra_dim_formula(Kind::Half, k) == half[static_cast<size_t>(k)]);
        CHECK(qpart::algebra_dim_formula(Kind::Tilde, k) == tilde[static_cast<size_t>(k)]);
    }
}

TEST_CASE("algebra dimension formulas match leader enumeration") {
    for (int k = 0; k <= 3; ++k) {
        for (Kind kind : {Kind::Whole, Kind::Half, Kind::Tilde}) {
            const qpart::Context ctx(kind, k);
            CHECK(qpart::algebra_dim_formula(kind, k) ==
                  static_cast<long>(qpart::leader_diagrams(ctx).size()));
        }
    }
}

TEST_CASE("standard module dimension formula") {
    CHECK(qpart::delta_dim_formula(2, Partition{1}) == 3);
    CHECK(qpart::delta_dim_formula(3, Partition{2, 1}) == 2);

    Int sq = 0;
    for (const Partition& nu : qpart::partitions_up_to(2)) {
        const Int d = qpart::delta_dim_formula(2, nu);
        sq += d * d;
    }
    CHECK(sq == 15);

    for (int k = 0; k <= 4; ++k)
        for (const Partition& nu : qpart::partitions_up_to(k)) {
            const qpart::ModuleContext mc(qpart::Context(Kind::Whole, k), nu);
            CHECK(qpart::delta_dim_formula(k, nu) ==
                  static_cast<long>(qpart::delta_basis(mc).size()));
        }
}

TEST_CASE("frozen simple dimension rows") {
    const std::vector<Partition> shapes = {{}, {1}, {2}, {1, 1}};
    const std::vector<long> whole2 = {1, 1, 1, 1};
    const std::vector<long> half2 = {2, 3, 1, 1};
    const std::vector<long> tilde1 = {1, 2, 1, 1};
    Int half_sq = 0, tilde_sq = 0;
    for (size_t i = 0; i < shapes.size(); ++i) {
        CHECK(qpart::simple_dim_formula(Kind::Whole, 2, shapes[i]) == whole2[i]);
        CHECK(qpart::simple_dim_formula(Kind::Half, 2, shapes[i]) == half2[i]);
        CHECK(qpart::simple_dim_formula(Kind::Tilde, 1, shapes[i]) == tilde1[i]);
        half_sq += Int(half2[i]) * half2[i];
        tilde_sq += Int(tilde1[i]) * tilde1[i];
    }
    CHECK(half_sq == 15);
    CHECK(tilde_sq == 7);
}

TEST_CASE("the four simple dimension evaluators agree") {
    for (Kind kind : {Kind::Whole, Kind::Half, Kind::Tilde}) {
        for (int k = 0; k <= 3; ++k) {
            const int shape_bound = kind == Kind::Tilde ? k + 1 : k;
            for (const Partition& shape : qpart::partitions_up_to(shape_bound)) {
                const Int a = qpart::simple_dim_formula(kind, k, shape);
                CHECK(a == qpart::simple_dim_tableaux(kind, k, shape));
                CHECK(a == qpart::simple_dim_recursive(kind, k, shape));
                CHECK(a == qpart::simple_dim_modules(kind, k, shape));
            }
        }
    }
}

TEST_CASE("oversized shapes have dimension zero everywhere") {
    CHECK(qpart::simple_dim_formula(Kind::Whole, 1, Partition{2}) == 0);
    CHECK(qpart::simple_dim_tableaux(Kind::Whole, 1, Partition{2}) == 0);
    CHECK(qpart::simple_dim_recursive(Kind::Whole, 1, Partition{2}) == 0);
    CHECK(qpart::simple_dim_formula(Kind::Tilde, 1, Partition{3}) == 0);
}

TEST_CASE("module counting rows at small sizes") {
    const auto whole2 = qpart::module_count_row(Kind::Whole, 2);
    CHECK(whole2.at(Partition{}) == 1);
    CHECK(whole2.at(Partition{1}) == 1);
    CHECK(whole2.at(Partition{2}) == 1);
    CHECK(whole2.at(Partition{1, 1}) == 1);

    const auto half2 = qpart::module_count_row(Kind::Half, 2);
    CHECK(half2.at(Partition{}) == 2);
    CHECK(half2.at(Partition{1}) == 3);

    const auto tilde1 = qpart::module_count_row(Kind::Tilde, 1);
    CHECK(tilde1.at(Partition{1}) == 2);
}

TEST_CASE("subset sums relate the half and whole dimension formulas") {
    // upward: half(k) = sum over released strands of whole(k-s)
    // downward: whole(k) recovered by inclusion-exclusion; together the two
    // transforms are mutually inverse on dimension vectors
    for (int k = 0; k <= 4; ++k) {
        for (const Partition& mu : qpart::partitions_up_to(k)) {
            Int up = 0, down = 0;
            for (int s = 0; s <= k; ++s) {
                up += qpart::binomial(k, s) * qpart::simple_dim_formula(Kind::Whole, k - s, mu);
                const Int term =
                    qpart::binomial(k, s) * qpart::simple_dim_formula(Kind::Half, k - s, mu);
                down += (s % 2 ? -term : term);
            }
            CHECK(up == qpart::simple_dim_formula(Kind::Half, k, mu));
            CHECK(down == qpart::simple_dim_formula(Kind::Whole, k, mu));
        }
    }
}

TEST_CASE("dimension table reproduces the small tower values") {
    const DimTable table(2);
    CHECK(table.at(Kind::Whole, 0, Partition{}) == 1);
    CHECK(table.at(Kind::Whole, 1, Partition{}) == 0);
    CHECK(table.at(Kind::Whole, 1, Partition{1}) == 1);
    CHECK(table.at(Kind::Half, 1, Partition{}) == 1);
    CHECK(table.at(Kind::Half, 1, Partition{1}) == 1);
    CHECK(table.at(Kind::Tilde, 1, Partition{}) == 1);
    CHECK(table.at(Kind::Tilde, 1, Partition{1}) == 2);
    CHECK(table.at(Kind::Tilde, 1, Partition{2}) == 1);
    CHECK(table.at(Kind::Tilde, 1, Partition{1, 1}) == 1);
    CHECK(table.at(Kind::Whole, 2, Partition{}) == 1);
    CHECK(table.at(Kind::Whole, 2, Partition{1}) == 1);
    CHECK(table.at(Kind::Whole, 2, Partition{2}) == 1);
    CHECK(table.at(Kind::Whole, 2, Partition{1, 1}) == 1);

    CHECK(table.rows().size() == 7);
    CHECK(table.row(Kind::Tilde, 1).display_k() == 2);
    CHECK_THROWS_AS(table.row(Kind::Whole, 3), qpart::IndexOutOfRange);
}

TEST_CASE("the tower recursions hold at every entry of the table") {
    const DimTable table(4);
    for (int k = 0; k <= 3; ++k) {
        for (const Partition& shape : qpart::partitions_up_to(k + 1)) {
            // adding a box: half from whole
            Int p1 = table.at(Kind::Whole, k, shape);
            for (const Partition& lam : qpart::partition_add_box(shape))
                p1 += table.at(Kind::Whole, k, lam);
            CHECK(table.at(Kind::Half, k, shape) == p1);

            // removing a box: extended from half
            Int p2 = table.at(Kind::Half, k, shape);
            for (const Partition& mu : qpart::partition_remove_box(shape))
                p2 += table.at(Kind::Half, k, mu);
            CHECK(table.at(Kind::Tilde, k, shape) == p2);

            // projection: next whole by subtraction
            CHECK(table.at(Kind::Whole, k + 1, shape) ==
                  table.at(Kind::Tilde, k, shape) - table.at(Kind::Whole, k, shape));

            // combined: the extended row splits into two whole rows
            CHECK(table.at(Kind::Tilde, k, shape) ==
                  table.at(Kind::Whole, k, shape) + table.at(Kind::Whole, k + 1, shape));
        }
    }
}

TEST_CASE("table entries equal the closed formulas") {
    const DimTable table(4);
    for (Kind kind : {Kind::Whole, Kind::Half, Kind::Tilde})
        for (int k = 0; k <= (kind == Kind::Whole ? 4 : 3); ++k)
            for (const Partition& shape : qpart::partitions_up_to(k + 1))
                CHECK(table.at(kind, k, shape) == qpart::simple_dim_formula(kind, k, shape));
}

TEST_CASE("dimension table JSON layout") {
    const auto j = DimTable(1).to_json();
    REQUIRE(j.contains("levels"));
    REQUIRE(j.at("levels").size() == 4);
    CHECK(j.at("levels")[0].at("kind") == "qp");
    CHECK(j.at("levels")[0].at("k") == 0);
    CHECK(j.at("levels")[0].at("dims").at("()") == 1);
    CHECK(j.at("levels")[2].at("kind") == "tilde");
    CHECK(j.at("levels")[2].at("k") == 1);
    CHECK(j.at("levels")[3].at("dims").at("(1)") == 1);
}

TEST_CASE("tower graph structure") {
    const auto g = qpart::BratteliGraph::build(2);
    REQUIRE(g.levels.size() == 7);
    CHECK(g.levels[0].kind == Kind::Whole);
    CHECK(g.levels[1].kind == Kind::Half);
    CHECK(g.levels[2].kind == Kind::Tilde);
    CHECK(g.levels[3].kind == Kind::Whole);

    // the top whole level carries every shape of size <= 2
    std::vector<Partition> shapes;
    for (const auto& [shape, dim] : g.levels[6].dims) shapes.push_back(shape);
    CHECK(shapes.size() == 4);

    // inclusion edges reproduce the two summation recursions
    for (size_t li = 0; li + 1 < g.levels.size(); ++li) {
        if (g.levels[li + 1].kind == Kind::Whole) continue;  // projection level
        for (const auto& [shape, dim] : g.levels[li + 1].dims) {
            Int total = 0;
            for (const auto& e : g.edges)
                if (e.from_level == li && e.to_level == li + 1 && e.to_shape == shape)
                    total += g.levels[li].dims.at(e.from_shape);
            CHECK(total == dim);
        }
    }

    // projection edges connect equal shapes only
    for (const auto& e : g.edges) {
        if (e.type == "projection-green-red") CHECK(e.from_shape == e.to_shape);
        CHECK((e.type == "inclusion-red-blue" || e.type == "inclusion-blue-green" ||
               e.type == "projection-green-red"));
    }
}

TEST_CASE("whole levels of the tower graph account for the algebra dimension") {
    const auto g = qpart::BratteliGraph::build(3);
    for (const auto& level : g.levels) {
        if (level.kind != Kind::Whole) continue;
        Int sq = 0;
        for (const auto& [shape, dim] : level.dims) sq += dim * dim;
        CHECK(sq == qpart::algebra_dim_formula(Kind::Whole, level.k));
    }
}

TEST_CASE("tower graph exports are deterministic and well-formed") {
    const auto g1 = qpart::BratteliGraph::build(2);
    const auto g2 = qpart::BratteliGraph::build(2);
    CHECK(g1.to_dot() == g2.to_dot());
    CHECK(g1.to_json() == g2.to_json());

    const std::string dot = g1.to_dot();
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("cluster") != std::string::npos);
    CHECK(dot.find("dashed") != std::string::npos);

    const auto j = g1.to_json();
    CHECK(j.contains("levels"));
    CHECK(j.contains("edges"));
}
