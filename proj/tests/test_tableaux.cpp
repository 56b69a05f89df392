// Partitions, standard Young tableaux, the Specht action via straightening,
// set-valued tableaux, and the diagram-tableau bijection.
//
// Two independent oracles anchor this file: a corner-removal recursion for
// counting standard tableaux, and a direct polytabloid expansion into
// tabloids (signed sums over the column group) against which the Garnir
// straightening is checked term by term.
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "qpart/diagram.hpp"
#include "qpart/tableaux.hpp"

using qpart::Int;
using qpart::Partition;
using qpart::SetValuedTableau;
using qpart::SvtConstraint;
using qpart::Tableau;

namespace {

// Oracle 1: number of standard tableaux by removing the cell holding the
// largest entry, which must sit at an outer corner.
long count_syt_oracle(Partition shape) {
    if (shape.empty()) return 1;
    long total = 0;
    for (size_t r = 0; r < shape.size(); ++r) {
        const bool corner = (r + 1 == shape.size()) || shape[r] > shape[r + 1];
        if (!corner) continue;
        Partition smaller = shape;
        smaller[r] -= 1;
        if (smaller[r] == 0) smaller.erase(smaller.begin() + static_cast<long>(r));
        total += count_syt_oracle(smaller);
    }
    return total;
}

// Oracle 2: polytabloid of an arbitrary bijective filling, expanded into
// tabloids (row-content lists). The column group is enumerated directly.
using Tabloid = std::vector<std::vector<int>>;

Tabloid tabloid_of(const std::vector<std::vector<int>>& rows) {
    Tabloid t = rows;
    for (auto& row : t) std::sort(row.begin(), row.end());
    return t;
}

int permutation_sign(const std::vector<int>& p) {
    int inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

std::map<Tabloid, Int> polytabloid_oracle(const Tableau& t) {
    const size_t ncols = t.shape.empty() ? 0 : static_cast<size_t>(t.shape[0]);
    // per column: the list of (row, value) cells
    std::vector<std::vector<std::pair<size_t, int>>> columns(ncols);
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (size_t c = 0; c < t.rows[r].size(); ++c) columns[c].push_back({r, t.rows[r][c]});

    std::map<Tabloid, Int> acc;
    std::vector<std::vector<int>> arrangement(ncols);  // per column: index permutation
    for (size_t c = 0; c < ncols; ++c) {
        arrangement[c].resize(columns[c].size());
        std::iota(arrangement[c].begin(), arrangement[c].end(), 0);
    }
    auto rec = [&](auto&& self, size_t c, int sign) -> void {
        if (c == ncols) {
            std::vector<std::vector<int>> rows = t.rows;
            for (size_t col = 0; col < ncols; ++col)
                for (size_t i = 0; i < columns[col].size(); ++i)
                    rows[columns[col][i].first][col] =
                        columns[col][static_cast<size_t>(arrangement[col][i])].second;
            acc[tabloid_of(rows)] += sign;
            return;
        }
        std::vector<int>& perm = arrangement[c];
        std::sort(perm.begin(), perm.end());
        do {
            self(self, c + 1, sign * permutation_sign(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(rec, 0, 1);
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second == 0 ? acc.erase(it) : std::next(it);
    return acc;
}

std::map<Tabloid, Int> expansion_as_tabloids(const std::map<Tableau, Int>& expansion) {
    std::map<Tabloid, Int> acc;
    for (const auto& [t, c] : expansion)
        for (const auto& [tab, s] : polytabloid_oracle(t)) {
            acc[tab] += c * s;
            if (acc[tab] == 0) acc.erase(tab);
        }
    return acc;
}

Tableau random_filling(const Partition& shape, std::mt19937& rng) {
    const int m = qpart::partition_size(shape);
    std::vector<int> values(static_cast<size_t>(m));
    std::iota(values.begin(), values.end(), 1);
    std::shuffle(values.begin(), values.end(), rng);
    std::vector<std::vector<int>> rows;
    size_t pos = 0;
    for (int len : shape) {
        rows.push_back(std::vector<int>(values.begin() + static_cast<long>(pos),
                                        values.begin() + static_cast<long>(pos) + len));
        pos += static_cast<size_t>(len);
    }
    return qpart::make_tableau(shape, std::move(rows));
}

std::vector<int> random_permutation(int m, std::mt19937& rng) {
    std::vector<int> p(static_cast<size_t>(m));
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix action_matrix_of(const std::vector<int>& sigma, const std::vector<Tableau>& basis) {
    std::map<Tableau, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    IntMatrix m(basis.size(), std::vector<Int>(basis.size(), 0));
    for (size_t j = 0; j < basis.size(); ++j)
        for (const auto& [t, c] : qpart::specht_act(sigma, basis[j])) m[index.at(t)][j] = c;
    return m;
}

IntMatrix int_mat_mul(const IntMatrix& a, const IntMatrix& b) {
    const size_t n = a.size();
    IntMatrix r(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < n; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < n; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

IntMatrix int_identity(size_t n) {
    IntMatrix r(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

std::vector<int> compose_perms(const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> r(t.size());
    for (size_t i = 0; i < t.size(); ++i) r[i] = s[static_cast<size_t>(t[i]) - 1];
    return r;
}

} // namespace

TEST_CASE("partition helpers") {
    CHECK(qpart::partitions_of(4).size() == 5);
    CHECK(qpart::partitions_of(0).size() == 1);
    CHECK(qpart::partitions_up_to(2).size() == 4);  // {}, (1), (2), (1,1)
    CHECK_THROWS_AS(qpart::validate_partition(Partition{1, 2}), qpart::ParseError);
    CHECK_THROWS_AS(qpart::validate_partition(Partition{2, 0}), qpart::ParseError);

    const Partition p{2, 1};
    const auto added = qpart::partition_add_box(p);
    CHECK(added == std::vector<Partition>{{3, 1}, {2, 2}, {2, 1, 1}});
    const auto removed = qpart::partition_remove_box(p);
    CHECK(removed == std::vector<Partition>{{1, 1}, {2}});
    CHECK(qpart::partition_to_string(Partition{}) == "()");
    CHECK(qpart::partition_to_string(Partition{3, 1}) == "(3,1)");
}

TEST_CASE("hook-length dimension equals two independent counts") {
    for (int m = 1; m <= 5; ++m) CHECK(qpart::hook_dim(Partition{m}) == 1);
    CHECK(qpart::hook_dim(Partition{2, 1}) == 2);
    CHECK(qpart::hook_dim(Partition{3, 2}) == 5);
    CHECK(qpart::hook_dim(Partition{}) == 1);

    for (int m = 0; m <= 6; ++m)
        for (const Partition& shape : qpart::partitions_of(m)) {
            const Int h = qpart::hook_dim(shape);
            CHECK(h == count_syt_oracle(shape));
            CHECK(h == static_cast<long>(qpart::syt_of_shape(shape).size()));
        }
}

TEST_CASE("standard tableaux enumeration is strict and duplicate-free") {
    for (const Partition& shape : qpart::partitions_of(5)) {
        const auto tabs = qpart::syt_of_shape(shape);
        std::set<Tableau> seen(tabs.begin(), tabs.end());
        CHECK(seen.size() == tabs.size());
        for (const Tableau& t : tabs) CHECK(qpart::is_standard_tableau(t));
    }
    // a non-standard filling is recognized
    CHECK_FALSE(qpart::is_standard_tableau(qpart::make_tableau({2, 1}, {{2, 3}, {1}})));
}

TEST_CASE("sum of squared dimensions is the factorial") {
    Int fact = 1;
    for (int m = 1; m <= 5; ++m) {
        fact *= m;
        Int total = 0;
        for (const Partition& shape : qpart::partitions_of(m)) {
            const Int f = qpart::hook_dim(shape);
            total += f * f;
        }
        CHECK(total == fact);
    }
}

TEST_CASE("straightening agrees with the polytabloid expansion oracle") {
    std::mt19937 rng(9001);
    for (int m = 1; m <= 5; ++m) {
        for (const Partition& shape : qpart::partitions_of(m)) {
            for (int trial = 0; trial < 12; ++trial) {
                const Tableau u = random_filling(shape, rng);
                const auto expansion = qpart::straighten(u);
                for (const auto& [t, c] : expansion) {
                    CHECK(qpart::is_standard_tableau(t));
                    CHECK(c != 0);
                }
                CHECK(expansion_as_tabloids(expansion) == polytabloid_oracle(u));
            }
        }
    }
}

TEST_CASE("straightening a standard tableau is the identity") {
    for (const Partition& shape : qpart::partitions_of(4))
        for (const Tableau& t : qpart::syt_of_shape(shape)) {
            const auto e = qpart::straighten(t);
            REQUIRE(e.size() == 1);
            CHECK(e.begin()->first == t);
            CHECK(e.begin()->second == 1);
        }
}

TEST_CASE("permutation action matches the oracle on relabeled polytabloids") {
    std::mt19937 rng(1337);
    for (int m = 2; m <= 5; ++m) {
        for (const Partition& shape : qpart::partitions_of(m)) {
            const auto basis = qpart::syt_of_shape(shape);
            for (int trial = 0; trial < 6; ++trial) {
                const std::vector<int> sigma = random_permutation(m, rng);
                const Tableau& t = basis[trial % basis.size()];
                // relabel t by sigma directly, then expand both sides
                std::vector<std::vector<int>> rows = t.rows;
                for (auto& row : rows)
                    for (int& v : row) v = sigma[static_cast<size_t>(v) - 1];
                const Tableau sigma_t = qpart::make_tableau(shape, rows);
                CHECK(expansion_as_tabloids(qpart::specht_act(sigma, t)) ==
                      polytabloid_oracle(sigma_t));
            }
        }
    }
}

TEST_CASE("identity and row swaps keep the leading coefficient") {
    const Tableau t = qpart::make_tableau({2, 1}, {{1, 2}, {3}});
    std::vector<int> id{1, 2, 3};
    const auto e = qpart::specht_act(id, t);
    REQUIRE(e.size() == 1);
    CHECK(e.at(t) == 1);

    // swapping two entries of the same row keeps the tabloid, hence the
    // coefficient of t itself stays 1
    for (int m = 2; m <= 4; ++m)
        for (const Partition& shape : qpart::partitions_of(m)) {
            if (shape[0] < 2) continue;
            for (const Tableau& tab : qpart::syt_of_shape(shape)) {
                std::vector<int> swap(static_cast<size_t>(m));
                std::iota(swap.begin(), swap.end(), 1);
                std::swap(swap[static_cast<size_t>(tab.rows[0][0]) - 1],
                          swap[static_cast<size_t>(tab.rows[0][1]) - 1]);
                const auto out = qpart::specht_act(swap, tab);
                CHECK(out.at(tab) == 1);
            }
        }
}

TEST_CASE("generator matrices satisfy the symmetric group relations") {
    for (int m = 2; m <= 5; ++m) {
        for (const Partition& shape : qpart::partitions_of(m)) {
            const auto basis = qpart::syt_of_shape(shape);
            std::vector<IntMatrix> gen;
            for (int i = 1; i < m; ++i) {
                std::vector<int> s(static_cast<size_t>(m));
                std::iota(s.begin(), s.end(), 1);
                std::swap(s[static_cast<size_t>(i) - 1], s[static_cast<size_t>(i)]);
                gen.push_back(action_matrix_of(s, basis));
            }
            const IntMatrix id = int_identity(basis.size());
            for (size_t i = 0; i < gen.size(); ++i) {
                CHECK(int_mat_mul(gen[i], gen[i]) == id);
                if (i + 1 < gen.size())
                    CHECK(int_mat_mul(int_mat_mul(gen[i], gen[i + 1]), gen[i]) ==
                          int_mat_mul(int_mat_mul(gen[i + 1], gen[i]), gen[i + 1]));
                for (size_t j = i + 2; j < gen.size(); ++j)
                    CHECK(int_mat_mul(gen[i], gen[j]) == int_mat_mul(gen[j], gen[i]));
            }
        }
    }
}

TEST_CASE("the action is a representation on random pairs") {
    std::mt19937 rng(2024);
    for (int m = 2; m <= 5; ++m) {
        for (const Partition& shape : qpart::partitions_of(m)) {
            const auto basis = qpart::syt_of_shape(shape);
            for (int trial = 0; trial < 5; ++trial) {
                const auto s = random_permutation(m, rng);
                const auto t = random_permutation(m, rng);
                CHECK(action_matrix_of(compose_perms(s, t), basis) ==
                      int_mat_mul(action_matrix_of(s, basis), action_matrix_of(t, basis)));
            }
        }
    }
}

TEST_CASE("character values of the two-dimensional representation") {
    const auto basis = qpart::syt_of_shape(Partition{2, 1});
    REQUIRE(basis.size() == 2);
    auto trace = [&](const std::vector<int>& sigma) -> Int {
        const IntMatrix m = action_matrix_of(sigma, basis);
        return m[0][0] + m[1][1];
    };
    CHECK(trace({1, 2, 3}) == 2);
    CHECK(trace({2, 1, 3}) == 0);  // transposition
    CHECK(trace({1, 3, 2}) == 0);
    CHECK(trace({2, 3, 1}) == -1); // three-cycle
}

TEST_CASE("set-valued tableau counts") {
    CHECK(qpart::enumerate_svt(3, Partition{2}, SvtConstraint::None).size() == 6);
    CHECK(qpart::enumerate_svt(2, Partition{1}, SvtConstraint::NoSingletonFirstRow).size() == 1);
    CHECK(qpart::enumerate_svt(2, Partition{}, SvtConstraint::NoSingletonFirstRow).size() == 1);
}

TEST_CASE("set-valued tableaux obey block ordering rules") {
    for (const SetValuedTableau& s : qpart::enumerate_svt(3, Partition{2}, SvtConstraint::None)) {
        // blocks partition the ground set
        std::set<int> covered;
        size_t count = 0;
        for (const auto& row : s.upper)
            for (const auto& b : row) {
                covered.insert(b.begin(), b.end());
                ++count;
            }
        for (const auto& b : s.first_row) covered.insert(b.begin(), b.end());
        CHECK(covered == std::set<int>{1, 2, 3});
        CHECK(count == 2);
        // trailing first-row blocks ascend by maximum
        for (size_t i = 0; i + 1 < s.first_row.size(); ++i)
            CHECK(s.first_row[i].back() < s.first_row[i + 1].back());
    }
}

TEST_CASE("worked correspondence between a module basis pair and a tableau") {
    const qpart::Diagram d(9, {{1, 3, -2},
                               {2, -1},
                               {4, 5, 9, -3},
                               {6, 7},
                               {8},
                               {-4},
                               {-5},
                               {-6},
                               {-7},
                               {-8},
                               {-9}});
    REQUIRE(qpart::is_km_standard(d, 3));
    const Tableau t = qpart::make_tableau({2, 1}, {{1, 3}, {2}});

    const SetValuedTableau s = qpart::tableau_of_diagram(d, t);
    CHECK(s.nu == Partition{2, 1});
    CHECK(s.upper ==
          std::vector<std::vector<std::vector<int>>>{{{2}, {4, 5, 9}}, {{1, 3}}});
    CHECK(s.first_row == std::vector<std::vector<int>>{{6, 7}, {8}});

    const auto [d2, t2] = qpart::diagram_of_tableau(s);
    CHECK(d2 == d);
    CHECK(t2 == t);
}

TEST_CASE("empty-shape tableaux park every block in the first row") {
    const qpart::Diagram d(3, {{1, 2}, {3}, {-1}, {-2}, {-3}});
    REQUIRE(qpart::is_km_standard(d, 0));
    const Tableau empty = qpart::make_tableau({}, {});
    const SetValuedTableau s = qpart::tableau_of_diagram(d, empty);
    CHECK(s.upper.empty());
    CHECK(s.first_row == std::vector<std::vector<int>>{{1, 2}, {3}});
}

TEST_CASE("the correspondence is a bijection onto unconstrained tableaux") {
    for (int k = 0; k <= 3; ++k) {
        for (int m = 0; m <= k; ++m) {
            const auto diagrams = qpart::km_standard_diagrams(k, m);
            for (const Partition& nu : qpart::partitions_of(m)) {
                std::set<SetValuedTableau> image;
                for (const qpart::Diagram& d : diagrams)
                    for (const Tableau& t : qpart::syt_of_shape(nu)) {
                        const SetValuedTableau s = qpart::tableau_of_diagram(d, t);
                        const auto [d2, t2] = qpart::diagram_of_tableau(s);
                        CHECK(d2 == d);
                        CHECK(t2 == t);
                        image.insert(s);
                    }
                const auto all = qpart::enumerate_svt(k, nu, SvtConstraint::None);
                CHECK(image.size() == all.size());
                CHECK(image == std::set<SetValuedTableau>(all.begin(), all.end()));
            }
        }
    }
}

TEST_CASE("tableau JSON shapes") {
    const Tableau t = qpart::make_tableau({2, 1}, {{1, 3}, {2}});
    CHECK(t.to_json() == nlohmann::ordered_json({{1, 3}, {2}}));
    const auto svt = qpart::enumerate_svt(2, Partition{1}, SvtConstraint::NoSingletonFirstRow);
    REQUIRE(svt.size() == 1);
    const auto j = svt[0].to_json();
    CHECK(j.contains("nu"));
    CHECK(j.contains("upper"));
    CHECK(j.contains("first_row"));
}
