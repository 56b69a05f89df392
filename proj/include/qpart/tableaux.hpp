#ifndef QPART_TABLEAUX_HPP
#define QPART_TABLEAUX_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpart/diagram.hpp"
#include "qpart/errors.hpp"
#include "qpart/rational.hpp"

namespace qpart {

// ---------------------------------------------------------------------------
// Partitions.
// ---------------------------------------------------------------------------

using Partition = std::vector<int>;  // weakly decreasing positive parts

inline void validate_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) throw ParseError("partition parts must be positive");
        if (i && p[i] > p[i - 1]) throw ParseError("partition parts must be weakly decreasing");
    }
}

inline int partition_size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

// All partitions of m, largest part first within each, listed [m], [m-1,1],
// ..., [1^m]; deterministic.
inline std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

// Partitions of m = 0..max_size in one deterministic listing.
inline std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int m = 0; m <= max_size; ++m)
        for (auto& p : partitions_of(m)) out.push_back(std::move(p));
    return out;
}

inline std::vector<Partition> partition_add_box(const Partition& p) {
    std::vector<Partition> out;
    for (size_t r = 0; r <= p.size(); ++r) {
        if (r < p.size()) {
            if (r > 0 && p[r] == p[r - 1]) continue;  // would break monotonicity
            Partition q = p;
            ++q[r];
            out.push_back(std::move(q));
        } else {
            Partition q = p;
            q.push_back(1);
            out.push_back(std::move(q));
        }
    }
    return out;
}

inline std::vector<Partition> partition_remove_box(const Partition& p) {
    std::vector<Partition> out;
    for (size_t r = 0; r < p.size(); ++r) {
        if (r + 1 < p.size() && p[r] == p[r + 1]) continue;
        Partition q = p;
        --q[r];
        if (q[r] == 0) q.erase(q.begin() + static_cast<long>(r));
        out.push_back(std::move(q));
    }
    return out;
}

inline std::string partition_to_string(const Partition& p) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
    out << ")";
    return out.str();
}

// ---------------------------------------------------------------------------
// Standard Young tableaux, French convention: rows[0] is the bottom (longest)
// row; entries increase along rows and up columns.
// ---------------------------------------------------------------------------

struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;  // rows[r][c], r counted from the bottom

    bool operator==(const Tableau& o) const { return shape == o.shape && rows == o.rows; }
    bool operator<(const Tableau& o) const {
        if (shape != o.shape) return shape < o.shape;
        return rows < o.rows;
    }

    std::string to_string() const {
        std::ostringstream out;
        out << "[";
        for (size_t r = 0; r < rows.size(); ++r) {
            out << (r ? "|" : "");
            for (size_t c = 0; c < rows[r].size(); ++c) out << (c ? "," : "") << rows[r][c];
        }
        out << "]";
        return out.str();
    }

    nlohmann::ordered_json to_json() const { return nlohmann::ordered_json(rows); }
};

inline Tableau make_tableau(const Partition& shape, std::vector<std::vector<int>> rows) {
    validate_partition(shape);
    if (rows.size() != shape.size()) throw ParseError("tableau rows do not match shape");
    for (size_t r = 0; r < rows.size(); ++r)
        if (static_cast<int>(rows[r].size()) != shape[r])
            throw ParseError("tableau row length does not match shape");
    std::vector<char> seen(static_cast<size_t>(partition_size(shape)) + 1, 0);
    for (const auto& row : rows)
        for (int v : row) {
            if (v < 1 || v > partition_size(shape) || seen[static_cast<size_t>(v)]++)
                throw ParseError("tableau entries must be a permutation of 1..m");
        }
    return Tableau{shape, std::move(rows)};
}

inline bool is_standard_tableau(const Tableau& t) {
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (size_t c = 0; c < t.rows[r].size(); ++c) {
            if (c + 1 < t.rows[r].size() && t.rows[r][c] >= t.rows[r][c + 1]) return false;
            if (r + 1 < t.rows.size() && c < t.rows[r + 1].size() &&
                t.rows[r][c] >= t.rows[r + 1][c])
                return false;
        }
    return true;
}

inline std::vector<Tableau> syt_of_shape(const Partition& shape) {
    validate_partition(shape);
    const int m = partition_size(shape);
    std::vector<std::vector<int>> rows(shape.size());
    for (size_t r = 0; r < shape.size(); ++r) rows[r].assign(static_cast<size_t>(shape[r]), 0);
    std::vector<Tableau> out;
    auto rec = [&](auto&& self, int next) -> void {
        if (next > m) {
            out.push_back(Tableau{shape, rows});
            return;
        }
        for (size_t r = 0; r < rows.size(); ++r) {
            size_t c = 0;
            while (c < rows[r].size() && rows[r][c] != 0) ++c;
            if (c == rows[r].size()) continue;
            if (r > 0 && rows[r - 1][c] == 0) continue;  // cell below must be filled
            rows[r][c] = next;
            self(self, next + 1);
            rows[r][c] = 0;
        }
    };
    rec(rec, 1);
    return out;
}

// Hook-length formula; exact division over big integers.
inline Int hook_dim(const Partition& shape) {
    validate_partition(shape);
    const int m = partition_size(shape);
    Int num = 1;
    for (int i = 2; i <= m; ++i) num *= i;
    Int den = 1;
    for (size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c) {
            int arm = shape[r] - c - 1;
            int leg = 0;
            for (size_t rr = r + 1; rr < shape.size(); ++rr)
                if (shape[rr] > c) ++leg;
            den *= (arm + leg + 1);
        }
    return num / den;
}

// ---------------------------------------------------------------------------
// Specht-module action. The basis is the standard polytabloids e_T; applying
// a permutation relabels the filling, and the result is rewritten in the
// standard basis by column sorting plus Garnir relations. All coefficients
// are integers.
// ---------------------------------------------------------------------------

namespace detail {

// Sign of the permutation turning sequence `from` into `to` (both are
// arrangements of the same distinct values).
inline int relabel_sign(const std::vector<int>& from, const std::vector<int>& to) {
    const size_t n = from.size();
    std::vector<int> perm(n);
    for (size_t i = 0; i < n; ++i) {
        size_t j = 0;
        while (from[j] != to[i]) ++j;
        perm[i] = static_cast<int>(j);
    }
    int sign = 1;
    std::vector<char> used(n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        size_t len = 0, j = i;
        while (!used[j]) {
            used[j] = 1;
            j = static_cast<size_t>(perm[j]);
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

// Sort each column increasing bottom-to-top; returns the sign of the sorting
// permutation, or 0 if a column repeats an entry (cannot happen for fillings
// by distinct values).
inline int column_sort(Tableau& t) {
    int sign = 1;
    const size_t ncols = t.rows.empty() ? 0 : t.rows[0].size();
    for (size_t c = 0; c < ncols; ++c) {
        std::vector<int> col;
        for (size_t r = 0; r < t.rows.size() && c < t.rows[r].size(); ++r)
            col.push_back(t.rows[r][c]);
        std::vector<int> sorted = col;
        std::sort(sorted.begin(), sorted.end());
        sign *= relabel_sign(col, sorted);
        for (size_t r = 0; r < col.size(); ++r) t.rows[r][c] = sorted[r];
    }
    return sign;
}

inline void straighten_rec(const Tableau& u, const Int& coeff, std::map<Tableau, Int>& acc) {
    Tableau t = u;
    int sign = column_sort(t);
    Int c = coeff * sign;
    // Find a row descent between adjacent columns.
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (size_t col = 0; col + 1 < t.rows[r].size(); ++col) {
            if (t.rows[r][col] <= t.rows[r][col + 1]) continue;
            // Garnir move at (r, col)-(r, col+1): A is column col from row r
            // up, B is column col+1 from the bottom through row r.
            std::vector<std::pair<size_t, size_t>> cells;  // (row, col) in fixed order
            std::vector<int> old_vals;
            for (size_t rr = r; rr < t.rows.size() && col < t.rows[rr].size(); ++rr) {
                cells.emplace_back(rr, col);
                old_vals.push_back(t.rows[rr][col]);
            }
            const size_t a_count = cells.size();
            for (size_t rr = 0; rr <= r; ++rr) {
                cells.emplace_back(rr, col + 1);
                old_vals.push_back(t.rows[rr][col + 1]);
            }
            std::vector<int> all = old_vals;
            std::sort(all.begin(), all.end());
            const size_t total = all.size();
            // Every split of the combined entries into a new A (sorted into
            // column col) and new B gives one term; the original split is
            // moved to the other side of the relation.
            for (unsigned mask = 0; mask < (1u << total); ++mask) {
                if (static_cast<size_t>(__builtin_popcount(mask)) != a_count) continue;
                std::vector<int> new_a, new_b;
                for (size_t i = 0; i < total; ++i)
                    ((mask >> i) & 1u ? new_a : new_b).push_back(all[i]);
                std::vector<int> new_vals = new_a;
                new_vals.insert(new_vals.end(), new_b.begin(), new_b.end());
                if (new_vals == old_vals) continue;  // the identity split
                Tableau next = t;
                for (size_t i = 0; i < total; ++i)
                    next.rows[cells[i].first][cells[i].second] = new_vals[i];
                const int s = relabel_sign(old_vals, new_vals);
                straighten_rec(next, -c * s, acc);
            }
            return;
        }
    // Column-sorted with no row descent: standard.
    auto [it, inserted] = acc.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

} // namespace detail

// Expand the polytabloid of an arbitrary filling in the standard basis.
inline std::map<Tableau, Int> straighten(const Tableau& u) {
    std::map<Tableau, Int> acc;
    detail::straighten_rec(u, Int(1), acc);
    return acc;
}

// Left action of sigma (images of 1..m) on the standard polytabloid e_T.
inline std::map<Tableau, Int> specht_act(const std::vector<int>& sigma, const Tableau& t) {
    const int m = partition_size(t.shape);
    if (static_cast<int>(sigma.size()) != m)
        throw SizeMismatch("permutation size does not match tableau size");
    Tableau u = t;
    for (auto& row : u.rows)
        for (int& v : row) v = sigma[static_cast<size_t>(v) - 1];
    return straighten(u);
}

// ---------------------------------------------------------------------------
// Set-valued tableaux of two-part shape (n - |nu|, nu): the cells of the
// upper shape nu each hold one block of a set partition of the ground set,
// and the remaining blocks trail at the end of the long first row, sorted by
// ascending maximum. The first row's length enters only symbolically.
// ---------------------------------------------------------------------------

struct SetValuedTableau {
    std::vector<int> ground;                            // sorted ground set
    Partition nu;                                       // upper shape
    std::vector<std::vector<std::vector<int>>> upper;   // per nu row, per cell
    std::vector<std::vector<int>> first_row;            // trailing blocks

    bool operator==(const SetValuedTableau& o) const {
        return ground == o.ground && nu == o.nu && upper == o.upper && first_row == o.first_row;
    }
    bool operator<(const SetValuedTableau& o) const {
        return std::tie(ground, nu, upper, first_row) <
               std::tie(o.ground, o.nu, o.upper, o.first_row);
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["nu"] = nu;
        j["upper"] = upper;
        j["first_row"] = first_row;
        return j;
    }
};

enum class SvtConstraint {
    None,
    NoSingletonFirstRow,       // every trailing block has size >= 2
    LastGroundSingletonAllowed // as above, except a final singleton {max(ground)}
};

namespace detail {

inline int block_max(const std::vector<int>& b) { return b.empty() ? 0 : b.back(); }

// Upper cells must ascend in maximum along rows and up columns.
inline bool upper_monotone(const std::vector<std::vector<std::vector<int>>>& upper) {
    for (size_t r = 0; r < upper.size(); ++r)
        for (size_t c = 0; c < upper[r].size(); ++c) {
            if (c + 1 < upper[r].size() &&
                block_max(upper[r][c]) >= block_max(upper[r][c + 1]))
                return false;
            if (r + 1 < upper.size() && c < upper[r + 1].size() &&
                block_max(upper[r][c]) >= block_max(upper[r + 1][c]))
                return false;
        }
    return true;
}

template <typename F>
void for_each_set_partition(const std::vector<int>& ground, F&& f) {
    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == ground.size()) {
            f(blocks);
            return;
        }
        const size_t existing = blocks.size();
        for (size_t bi = 0; bi < existing; ++bi) {
            blocks[bi].push_back(ground[idx]);
            self(self, idx + 1);
            blocks[bi].pop_back();
        }
        blocks.push_back({ground[idx]});
        self(self, idx + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
}

} // namespace detail

inline bool first_row_admissible(const std::vector<std::vector<int>>& trailing,
                                 SvtConstraint constraint, int ground_max) {
    for (size_t i = 0; i < trailing.size(); ++i) {
        if (trailing[i].size() >= 2) continue;
        if (constraint == SvtConstraint::None) continue;
        if (constraint == SvtConstraint::LastGroundSingletonAllowed &&
            i + 1 == trailing.size() && trailing[i][0] == ground_max)
            continue;
        return false;
    }
    return true;
}

// All set-valued tableaux over the ground set with the given upper shape and
// first-row constraint; deterministic order.
inline std::vector<SetValuedTableau> enumerate_svt(const std::vector<int>& ground,
                                                   const Partition& nu,
                                                   SvtConstraint constraint) {
    validate_partition(nu);
    const int m = static_cast<int>(nu.size() ? partition_size(nu) : 0);
    const int ground_max = ground.empty() ? 0 : *std::max_element(ground.begin(), ground.end());
    std::vector<SetValuedTableau> out;
    detail::for_each_set_partition(ground, [&](const std::vector<std::vector<int>>& blocks) {
        const int nb = static_cast<int>(blocks.size());
        if (nb < m) return;
        // Choose which blocks fill the upper cells, in every arrangement.
        std::vector<int> idx(static_cast<size_t>(nb));
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<int> chosen;
        auto arrange = [&](auto&& self, size_t pos) -> void {
            if (static_cast<int>(pos) == m) {
                std::vector<std::vector<std::vector<int>>> upper(nu.size());
                size_t t = 0;
                for (size_t r = 0; r < nu.size(); ++r)
                    for (int c = 0; c < nu[r]; ++c) upper[r].push_back(blocks[chosen[t++]]);
                if (!detail::upper_monotone(upper)) return;
                std::vector<std::vector<int>> trailing;
                std::vector<char> used(static_cast<size_t>(nb), 0);
                for (int i : chosen) used[static_cast<size_t>(i)] = 1;
                for (int i = 0; i < nb; ++i)
                    if (!used[static_cast<size_t>(i)]) trailing.push_back(blocks[static_cast<size_t>(i)]);
                std::sort(trailing.begin(), trailing.end(),
                          [](const auto& a, const auto& b) {
                              return detail::block_max(a) < detail::block_max(b);
                          });
                if (!first_row_admissible(trailing, constraint, ground_max)) return;
                out.push_back(SetValuedTableau{ground, nu, std::move(upper), std::move(trailing)});
                return;
            }
            for (int i = 0; i < nb; ++i) {
                if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
                chosen.push_back(i);
                self(self, pos + 1);
                chosen.pop_back();
            }
        };
        arrange(arrange, 0);
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<SetValuedTableau> enumerate_svt(int k, const Partition& nu,
                                                   SvtConstraint constraint) {
    std::vector<int> ground(static_cast<size_t>(k));
    std::iota(ground.begin(), ground.end(), 1);
    return enumerate_svt(ground, nu, constraint);
}

// ---------------------------------------------------------------------------
// The bijection between (standard module diagram, standard tableau) pairs and
// set-valued tableaux: entry j of the tableau is replaced by the top part of
// the propagating block holding -j, and the all-top blocks trail in the first
// row by ascending maximum.
// ---------------------------------------------------------------------------

inline SetValuedTableau tableau_of_diagram(const Diagram& d, const Tableau& t) {
    const int m = partition_size(t.shape);
    if (!is_km_standard(d, m))
        throw NotStandardDiagram("diagram " + d.to_string() + " is not standard with " +
                                 std::to_string(m) + " propagating blocks");
    if (!is_standard_tableau(t)) throw NotStandardDiagram("tableau is not standard");
    const int k = d.size();
    std::vector<std::vector<std::vector<int>>> upper(t.shape.size());
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (int entry : t.rows[r]) {
            std::vector<int> tops;
            for (int v : d.block_containing(-entry))
                if (v > 0) tops.push_back(v);
            upper[r].push_back(std::move(tops));
        }
    std::vector<std::vector<int>> trailing;
    for (const auto& b : d.blocks()) {
        if (b[0] < 0) continue;          // bottom singleton
        if (b.back() < 0) continue;      // propagating (sorted: bottoms last)
        trailing.push_back(b);
    }
    std::sort(trailing.begin(), trailing.end(), [](const auto& a, const auto& b) {
        return detail::block_max(a) < detail::block_max(b);
    });
    std::vector<int> ground(static_cast<size_t>(k));
    std::iota(ground.begin(), ground.end(), 1);
    return SetValuedTableau{std::move(ground), t.shape, std::move(upper), std::move(trailing)};
}

inline std::pair<Diagram, Tableau> diagram_of_tableau(const SetValuedTableau& s) {
    const int k = static_cast<int>(s.ground.size());
    const int m = partition_size(s.nu);
    // Rank upper cells by block maximum: the j-th smallest maximum gets -j.
    struct Cell {
        int mx;
        size_t r, c;
    };
    std::vector<Cell> cells;
    for (size_t r = 0; r < s.upper.size(); ++r)
        for (size_t c = 0; c < s.upper[r].size(); ++c) {
            if (s.upper[r][c].empty())
                throw NotStandardDiagram("upper cells must hold nonempty blocks");
            cells.push_back({detail::block_max(s.upper[r][c]), r, c});
        }
    if (static_cast<int>(cells.size()) != m)
        throw NotStandardDiagram("upper cells do not match the shape");
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.mx < b.mx; });
    std::vector<std::vector<int>> rows(s.nu.size());
    for (size_t r = 0; r < s.nu.size(); ++r) rows[r].assign(static_cast<size_t>(s.nu[r]), 0);
    std::vector<std::vector<int>> blocks;
    for (int j = 1; j <= m; ++j) {
        const Cell& cell = cells[static_cast<size_t>(j - 1)];
        rows[cell.r][cell.c] = j;
        std::vector<int> block = s.upper[cell.r][cell.c];
        block.push_back(-j);
        blocks.push_back(std::move(block));
    }
    for (const auto& b : s.first_row) blocks.push_back(b);
    for (int j = m + 1; j <= k; ++j) blocks.push_back({-j});
    Diagram d(k, std::move(blocks));
    Tableau t{s.nu, std::move(rows)};
    if (!is_km_standard(d, m) || !is_standard_tableau(t))
        throw NotStandardDiagram("set-valued tableau does not define a standard pair");
    return {std::move(d), std::move(t)};
}

} // namespace qpart

#endif // QPART_TABLEAUX_HPP
