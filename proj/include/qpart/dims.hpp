#ifndef QPART_DIMS_HPP
#define QPART_DIMS_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpart/diagram.hpp"
#include "qpart/errors.hpp"
#include "qpart/modules.hpp"
#include "qpart/rational.hpp"
#include "qpart/tableaux.hpp"

namespace qpart {

// --------------------------------------------------------------------------
// Exact counting basics.
// --------------------------------------------------------------------------

inline Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Stirling numbers of the second kind: set partitions of an n-set into
// exactly k blocks.
inline Int stirling2(int n, int k) {
    if (n < 0 || k < 0) return 0;
    if (n == 0 && k == 0) return 1;
    if (n == 0 || k == 0 || k > n) return 0;
    std::vector<std::vector<Int>> s(static_cast<size_t>(n + 1),
                                    std::vector<Int>(static_cast<size_t>(k + 1), 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                Int(j) * s[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] +
                s[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    return s[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

// Bell numbers: all set partitions of an n-set.
inline Int bell(int n) {
    if (n < 0) return 0;
    Int total = 0;
    for (int k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

// Set partitions of a t-set with every block of size at least 2, by the
// recurrence b2(t) = sum over j >= 2 of C(t-1, j-1) b2(t-j).
inline Int b2(int t) {
    if (t < 0) return 0;
    std::vector<Int> v(static_cast<size_t>(t + 1), 0);
    v[0] = 1;
    for (int i = 1; i <= t; ++i)
        for (int j = 2; j <= i; ++j)
            v[static_cast<size_t>(i)] += binomial(i - 1, j - 1) * v[static_cast<size_t>(i - j)];
    return v[static_cast<size_t>(t)];
}

// --------------------------------------------------------------------------
// Algebra dimensions.
// --------------------------------------------------------------------------

// Closed formulas for the three algebra dimensions. For the tilde kind the
// parameter is the context k (the algebra acts on k+1 strands).
inline Int algebra_dim_formula(Kind kind, int k) {
    if (k < 0) throw IndexOutOfRange("algebra dimension needs k >= 0");
    switch (kind) {
        case Kind::Whole: {
            Int total = 1;
            for (int j = 1; j <= 2 * k; ++j) {
                const Int term = bell(2 * k - j);
                total += (j % 2 == 1) ? term : -term;
            }
            return total;
        }
        case Kind::Half: return bell(2 * k);
        default: {
            Int total = 0;
            for (int s = 0; s <= 2 * k; ++s) {
                const Int term = binomial(2 * k, s) * bell(2 * k + 2 - s);
                total += (s % 2 == 0) ? term : -term;
            }
            return total;
        }
    }
}

// --------------------------------------------------------------------------
// Standard-module dimension (integer contexts).
// --------------------------------------------------------------------------

// dim of the standard module with m = |nu| propagating blocks:
// sum over i of S(k,i) C(i,m), times the number of standard tableaux.
inline Int delta_dim_formula(int k, const Partition& nu) {
    validate_partition(nu);
    const int m = partition_size(nu);
    Int total = 0;
    for (int i = m; i <= k; ++i) total += stirling2(k, i) * binomial(i, m);
    return total * hook_dim(nu);
}

// --------------------------------------------------------------------------
// Simple-module dimensions: four independent evaluators.
// --------------------------------------------------------------------------

// Evaluator 1: closed formulas. Shapes larger than the level give 0
// naturally because the Stirling factor vanishes.
inline Int simple_dim_formula(Kind kind, int k, const Partition& shape) {
    validate_partition(shape);
    const int m = partition_size(shape);
    switch (kind) {
        case Kind::Whole: {
            Int total = 0;
            for (int t = 0; t <= k; ++t)
                total += binomial(k, t) * stirling2(k - t, m) * b2(t);
            return total * hook_dim(shape);
        }
        case Kind::Half: {
            Int total = 0;
            for (int s = 0; s <= k; ++s)
                for (int t = 0; t <= k - s; ++t)
                    total += binomial(k, s) * binomial(k - s, t) * stirling2(k - s - t, m) * b2(t);
            return total * hook_dim(shape);
        }
        default:
            return simple_dim_formula(Kind::Whole, k, shape) +
                   simple_dim_formula(Kind::Whole, k + 1, shape);
    }
}

// Evaluator 2: set-valued tableau counts. Whole: ground [k], no first-row
// singletons. Half: an extra separated cell holds S together with k+1 and
// the tableau uses [k] minus S. Tilde: ground [k+1], the only first-row
// singleton allowed is {k+1} in the final cell.
inline Int simple_dim_tableaux(Kind kind, int k, const Partition& shape) {
    validate_partition(shape);
    switch (kind) {
        case Kind::Whole:
            return Int(enumerate_svt(k, shape, SvtConstraint::NoSingletonFirstRow).size());
        case Kind::Half: {
            Int total = 0;
            for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
                std::vector<int> ground;
                for (int i = 1; i <= k; ++i)
                    if (!(mask & (1UL << (i - 1)))) ground.push_back(i);
                total += Int(
                    enumerate_svt(ground, shape, SvtConstraint::NoSingletonFirstRow).size());
            }
            return total;
        }
        default:
            return Int(
                enumerate_svt(k + 1, shape, SvtConstraint::LastGroundSingletonAllowed).size());
    }
}

// Evaluator 4: sizes of the module bases built by the representation code.
// One pass over all diagrams of the relevant size, bucketed by propagating
// number. Whole: standard diagrams with no top singleton (the projected
// simple-module leaders). Half: plain standard diagrams of the integer
// algebra one level down, which carry the simple modules across the
// isomorphism with that algebra at parameter n-1. Tilde: sum of the two
// neighbouring integer levels.
namespace detail {

inline std::vector<long> standard_diagram_counts_by_m(int k, bool leaders_only) {
    std::vector<long> buckets(static_cast<size_t>(k + 1), 0);
    for_each_diagram(k, [&](Diagram&& d) {
        const int m = d.propagating_number();
        if (!is_km_standard(d, m)) return;
        if (leaders_only && d.has_top_singleton()) return;
        ++buckets[static_cast<size_t>(m)];
    });
    return buckets;
}

} // namespace detail

inline std::map<Partition, Int> module_count_row(Kind kind, int k) {
    std::map<Partition, Int> row;
    switch (kind) {
        case Kind::Whole: {
            const std::vector<long> buckets = detail::standard_diagram_counts_by_m(k, true);
            for (const Partition& shape : partitions_up_to(k))
                row[shape] = Int(buckets[static_cast<size_t>(partition_size(shape))]) *
                             hook_dim(shape);
            return row;
        }
        case Kind::Half: {
            const std::vector<long> buckets = detail::standard_diagram_counts_by_m(k, false);
            for (const Partition& shape : partitions_up_to(k))
                row[shape] = Int(buckets[static_cast<size_t>(partition_size(shape))]) *
                             hook_dim(shape);
            return row;
        }
        default: {
            std::map<Partition, Int> low = module_count_row(Kind::Whole, k);
            std::map<Partition, Int> high = module_count_row(Kind::Whole, k + 1);
            for (const auto& [shape, value] : high) {
                auto it = low.find(shape);
                row[shape] = value + (it == low.end() ? Int(0) : it->second);
            }
            return row;
        }
    }
}

inline Int simple_dim_modules(Kind kind, int k, const Partition& shape) {
    validate_partition(shape);
    const std::map<Partition, Int> row = module_count_row(kind, k);
    auto it = row.find(shape);
    return it == row.end() ? Int(0) : it->second;
}

// --------------------------------------------------------------------------
// Dimension table and recursion bootstrap (evaluator 3).
// --------------------------------------------------------------------------

struct DimRow {
    Kind kind = Kind::Whole;
    int k = 0; // context k; the tilde row at context k sits at level k+1
    std::map<Partition, Int> dims;

    int display_k() const { return kind == Kind::Tilde ? k + 1 : k; }
};

// Rows of the tower in order QP(0), QP(0+1/2), tildeQP(1), QP(1), ...,
// QP(k_max), built from the single seed dim QP(0, empty) = 1 using only the
// three recursions:
//   half(k, mu)      = QP(k, mu) + sum over one-box additions to mu
//   tilde(k+1, lam)  = half(k, lam) + sum over one-box removals from lam
//   QP(k+1, lam)     = tilde(k+1, lam) - QP(k, lam)
// Entries absent from a row are zero.
class DimTable {
public:
    explicit DimTable(int k_max) {
        if (k_max < 0) throw IndexOutOfRange("dimension table needs k_max >= 0");
        rows_.reserve(static_cast<size_t>(3 * k_max + 1));
        DimRow seed;
        seed.kind = Kind::Whole;
        seed.k = 0;
        seed.dims[Partition{}] = 1;
        rows_.push_back(std::move(seed));
        for (int k = 0; k < k_max; ++k) {
            const DimRow& whole = rows_.back();

            DimRow half;
            half.kind = Kind::Half;
            half.k = k;
            for (const Partition& mu : partitions_up_to(k)) {
                Int total = value_in(whole, mu);
                for (const Partition& lam : partition_add_box(mu)) total += value_in(whole, lam);
                half.dims[mu] = total;
            }
            rows_.push_back(std::move(half));
            const DimRow& half_ref = rows_.back();

            DimRow tilde;
            tilde.kind = Kind::Tilde;
            tilde.k = k;
            for (const Partition& lam : partitions_up_to(k + 1)) {
                Int total = value_in(half_ref, lam);
                for (const Partition& mu : partition_remove_box(lam)) total += value_in(half_ref, mu);
                tilde.dims[lam] = total;
            }
            rows_.push_back(std::move(tilde));
            const DimRow& tilde_ref = rows_.back();
            const DimRow& prev_whole = rows_[rows_.size() - 3];

            DimRow next;
            next.kind = Kind::Whole;
            next.k = k + 1;
            for (const Partition& lam : partitions_up_to(k + 1))
                next.dims[lam] = value_in(tilde_ref, lam) - value_in(prev_whole, lam);
            rows_.push_back(std::move(next));
        }
    }

    const std::vector<DimRow>& rows() const { return rows_; }

    const DimRow& row(Kind kind, int k) const {
        for (const DimRow& r : rows_)
            if (r.kind == kind && r.k == k) return r;
        throw IndexOutOfRange("dimension table has no row for " + kind_label(kind) + " at k=" +
                              std::to_string(k));
    }

    // Zero-extended lookup; k is the context k.
    Int at(Kind kind, int k, const Partition& shape) const { return value_in(row(kind, k), shape); }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json levels = nlohmann::ordered_json::array();
        for (const DimRow& r : rows_) {
            nlohmann::ordered_json dims;
            for (const auto& [shape, value] : r.dims)
                dims[partition_to_string(shape)] = int_to_json_number(value);
            nlohmann::ordered_json level;
            level["kind"] = kind_label(r.kind);
            level["k"] = r.display_k();
            level["dims"] = std::move(dims);
            levels.push_back(std::move(level));
        }
        nlohmann::ordered_json j;
        j["levels"] = std::move(levels);
        return j;
    }

    static Int value_in(const DimRow& row, const Partition& shape) {
        auto it = row.dims.find(shape);
        return it == row.dims.end() ? Int(0) : it->second;
    }

    // Exact integers that fit a JSON int64 stay numbers; larger ones become
    // decimal strings.
    static nlohmann::ordered_json int_to_json_number(const Int& v) {
        static const Int lo = Int(std::numeric_limits<long long>::min());
        static const Int hi = Int(std::numeric_limits<long long>::max());
        if (v >= lo && v <= hi) return nlohmann::ordered_json(v.convert_to<long long>());
        return nlohmann::ordered_json(v.str());
    }

private:
    std::vector<DimRow> rows_;
};

// Evaluator 3: read the value off the bootstrapped table.
inline Int simple_dim_recursive(Kind kind, int k, const Partition& shape) {
    validate_partition(shape);
    const int k_max = kind == Kind::Whole ? k : k + 1;
    return DimTable(k_max).at(kind, k, shape);
}

// --------------------------------------------------------------------------
// Tower graph.
// --------------------------------------------------------------------------

struct BratteliEdge {
    size_t from_level = 0;
    Partition from_shape;
    size_t to_level = 0;
    Partition to_shape;
    std::string type; // inclusion-red-blue, inclusion-blue-green, projection-green-red
};

// The tower of algebras with one row of shapes per level and typed edges:
// inclusion edges carry the two summation recursions, projection edges the
// subtraction.
struct BratteliGraph {
    std::vector<DimRow> levels;
    std::vector<BratteliEdge> edges;

    static BratteliGraph build(int k_max) {
        BratteliGraph g;
        g.levels = DimTable(k_max).rows();
        for (size_t li = 0; li + 1 < g.levels.size(); ++li) {
            const DimRow& a = g.levels[li];
            const DimRow& b = g.levels[li + 1];
            for (const auto& [upper, upper_dim] : a.dims)
                for (const auto& [lower, lower_dim] : b.dims) {
                    bool connect = false;
                    std::string type;
                    if (a.kind == Kind::Whole && b.kind == Kind::Half) {
                        connect = upper == lower || is_one_box_addition(lower, upper);
                        type = "inclusion-red-blue";
                    } else if (a.kind == Kind::Half && b.kind == Kind::Tilde) {
                        connect = upper == lower || is_one_box_addition(upper, lower);
                        type = "inclusion-blue-green";
                    } else {
                        connect = upper == lower;
                        type = "projection-green-red";
                    }
                    if (connect) g.edges.push_back({li, upper, li + 1, lower, type});
                }
        }
        return g;
    }

    static bool is_one_box_addition(const Partition& smaller, const Partition& larger) {
        for (const Partition& grown : partition_add_box(smaller))
            if (grown == larger) return true;
        return false;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        nlohmann::ordered_json lv = nlohmann::ordered_json::array();
        for (const DimRow& r : levels) {
            nlohmann::ordered_json dims;
            for (const auto& [shape, value] : r.dims)
                dims[partition_to_string(shape)] = DimTable::int_to_json_number(value);
            nlohmann::ordered_json level;
            level["kind"] = kind_label(r.kind);
            level["k"] = r.display_k();
            level["dims"] = std::move(dims);
            lv.push_back(std::move(level));
        }
        j["levels"] = std::move(lv);
        nlohmann::ordered_json ed = nlohmann::ordered_json::array();
        for (const BratteliEdge& e : edges) {
            nlohmann::ordered_json one;
            one["from_level"] = e.from_level;
            one["from_shape"] = partition_to_string(e.from_shape);
            one["to_level"] = e.to_level;
            one["to_shape"] = partition_to_string(e.to_shape);
            one["type"] = e.type;
            ed.push_back(std::move(one));
        }
        j["edges"] = std::move(ed);
        return j;
    }

    std::string to_dot() const {
        std::ostringstream out;
        out << "digraph tower {\n  rankdir=TB;\n  node [shape=box];\n";
        std::map<std::pair<size_t, Partition>, std::string> names;
        for (size_t li = 0; li < levels.size(); ++li) {
            const DimRow& r = levels[li];
            const std::string color = r.kind == Kind::Whole   ? "red"
                                      : r.kind == Kind::Half  ? "blue"
                                                              : "darkgreen";
            std::string label = kind_label(r.kind);
            if (r.kind == Kind::Half)
                label += "(" + std::to_string(r.k) + "+1/2)";
            else
                label += "(" + std::to_string(r.display_k()) + ")";
            out << "  subgraph cluster_" << li << " {\n    rank=same;\n    label=\"" << label
                << "\";\n    color=" << color << ";\n";
            long node_id = 0;
            for (const auto& [shape, value] : r.dims) {
                std::string name = "n" + std::to_string(li) + "_" + std::to_string(node_id++);
                names[{li, shape}] = name;
                out << "    " << name << " [label=\"" << partition_to_string(shape) << " : "
                    << value.str() << "\", color=" << color << "];\n";
            }
            out << "  }\n";
        }
        for (const BratteliEdge& e : edges) {
            out << "  " << names.at({e.from_level, e.from_shape}) << " -> "
                << names.at({e.to_level, e.to_shape});
            if (e.type == "projection-green-red") out << " [style=dashed]";
            out << ";\n";
        }
        out << "}\n";
        return out.str();
    }
};

} // namespace qpart

#endif // QPART_DIMS_HPP
