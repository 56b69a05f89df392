#ifndef QPART_SCHUR_WEYL_HPP
#define QPART_SCHUR_WEYL_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpart/algebra.hpp"
#include "qpart/diagram.hpp"
#include "qpart/errors.hpp"
#include "qpart/exact_matrix.hpp"
#include "qpart/rational.hpp"

namespace qpart {

namespace detail {

inline long ipow_checked(long base, int exp, long limit) {
    long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > limit / base)
            throw Error("tensor space size " + std::to_string(base) + "^" + std::to_string(exp) +
                        " exceeds guard " + std::to_string(limit));
        r *= base;
    }
    return r;
}

} // namespace detail

// Basis of V_n^{tensor k} indexed by tuples (i_1..i_k) in [n]^k, listed
// lexicographically: index = sum over t of (i_t - 1) * n^(k-t).
class TensorSpace {
public:
    TensorSpace(long n, int k) : n_(n), k_(k) {
        if (n < 1) throw SizeMismatch("tensor space needs n >= 1");
        if (k < 0) throw SizeMismatch("tensor space needs k >= 0");
        dim_ = detail::ipow_checked(n, k, 1L << 40);
    }

    long n() const { return n_; }
    int k() const { return k_; }
    long size() const { return dim_; }

    long encode(const std::vector<int>& tuple) const {
        if (static_cast<int>(tuple.size()) != k_) throw SizeMismatch("tuple length != k");
        long idx = 0;
        for (int t = 0; t < k_; ++t) {
            if (tuple[static_cast<size_t>(t)] < 1 || tuple[static_cast<size_t>(t)] > n_)
                throw IndexOutOfRange("tuple letter outside [n]");
            idx = idx * n_ + (tuple[static_cast<size_t>(t)] - 1);
        }
        return idx;
    }

    std::vector<int> decode(long idx) const {
        if (idx < 0 || idx >= dim_) throw IndexOutOfRange("tensor index outside space");
        std::vector<int> tuple(static_cast<size_t>(k_));
        for (int t = k_ - 1; t >= 0; --t) {
            tuple[static_cast<size_t>(t)] = static_cast<int>(idx % n_) + 1;
            idx /= n_;
        }
        return tuple;
    }

private:
    long n_;
    int k_;
    long dim_;
};

// 0/1 matrix of a diagram acting on V_n^{tensor k}: the entry at
// (top labels; bottom labels) is 1 exactly when the combined labeling is
// constant on every block. Nonzeros enumerate label assignments per block.
inline ExactMatrix diagram_matrix(const Diagram& d, long n) {
    const int k = d.size();
    TensorSpace space(n, k);
    ExactMatrix m(space.size(), space.size());
    const auto& blocks = d.blocks();
    const size_t nb = blocks.size();
    std::vector<long> label(nb, 1);
    while (true) {
        std::vector<int> top(static_cast<size_t>(k)), bot(static_cast<size_t>(k));
        for (size_t b = 0; b < nb; ++b)
            for (int v : blocks[b]) {
                if (v > 0)
                    top[static_cast<size_t>(v - 1)] = static_cast<int>(label[b]);
                else
                    bot[static_cast<size_t>(-v - 1)] = static_cast<int>(label[b]);
            }
        m.set(space.encode(top), space.encode(bot), Rational(1));
        size_t pos = nb;
        while (pos > 0) {
            --pos;
            if (label[pos] < n) {
                ++label[pos];
                break;
            }
            label[pos] = 1;
            if (pos == 0) return m;
        }
        if (nb == 0) break;
    }
    return m;
}

// Permutation of the letters [n], given as a 1-based image vector.
inline std::vector<int> letter_transposition(long n, int a, int b) {
    std::vector<int> sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::swap(sigma[static_cast<size_t>(a - 1)], sigma[static_cast<size_t>(b - 1)]);
    return sigma;
}

inline std::vector<int> letter_cycle(long n, int m) {
    std::vector<int> sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    for (int i = 1; i < m; ++i) sigma[static_cast<size_t>(i - 1)] = i + 1;
    if (m >= 1) sigma[static_cast<size_t>(m - 1)] = 1;
    return sigma;
}

// Generators of the symmetric group on [n], or of the subgroup fixing the
// letter n when fix_last is set: an adjacent transposition plus a long cycle.
inline std::vector<std::vector<int>> letter_group_generators(long n, bool fix_last) {
    const long m = fix_last ? n - 1 : n;
    std::vector<std::vector<int>> gens;
    if (m >= 2) gens.push_back(letter_transposition(n, 1, 2));
    if (m >= 3) gens.push_back(letter_cycle(n, static_cast<int>(m)));
    return gens;
}

// Index map of the diagonal letter action on tuple indices: column idx maps
// to row perm_index_map[idx].
inline std::vector<long> perm_index_map(const std::vector<int>& sigma, long n, int k) {
    TensorSpace space(n, k);
    std::vector<long> map(static_cast<size_t>(space.size()));
    for (long idx = 0; idx < space.size(); ++idx) {
        std::vector<int> tuple = space.decode(idx);
        for (int& letter : tuple) letter = sigma[static_cast<size_t>(letter - 1)];
        map[static_cast<size_t>(idx)] = space.encode(tuple);
    }
    return map;
}

// Permutation matrix of the diagonal action sigma.(v_{i_1} ... v_{i_k}) =
// v_{sigma(i_1)} ... v_{sigma(i_k)}.
inline ExactMatrix perm_matrix(const std::vector<int>& sigma, long n, int k) {
    std::vector<long> map = perm_index_map(sigma, n, k);
    ExactMatrix m(static_cast<long>(map.size()), static_cast<long>(map.size()));
    for (long idx = 0; idx < static_cast<long>(map.size()); ++idx)
        m.set(map[static_cast<size_t>(idx)], idx, Rational(1));
    return m;
}

// Idempotent projecting V_n^{tensor k} onto the k-th tensor power of the
// (n-1)-dimensional irreducible complement of the all-ones vector. With
// last_strand_identity the matrix acts on k+1 strands, leaving the last
// strand untouched.
inline ExactMatrix standard_projector(long n, int k, bool last_strand_identity = false) {
    if (n < 2) throw SizeMismatch("standard projector needs n >= 2");
    const int strands = last_strand_identity ? k + 1 : k;
    TensorSpace space(n, strands);
    ExactMatrix p(space.size(), space.size());
    const Rational diag(n - 1, n);
    const Rational off(-1, n);
    for (long row = 0; row < space.size(); ++row) {
        const std::vector<int> ri = space.decode(row);
        for (long col = 0; col < space.size(); ++col) {
            const std::vector<int> ci = space.decode(col);
            if (last_strand_identity && ri[static_cast<size_t>(k)] != ci[static_cast<size_t>(k)])
                continue;
            Rational entry(1);
            for (int t = 0; t < k; ++t)
                entry *= (ri[static_cast<size_t>(t)] == ci[static_cast<size_t>(t)]) ? diag : off;
            p.set(row, col, entry);
        }
    }
    return p;
}

// Matrix of an algebra element with coefficients evaluated at x = n.
inline ExactMatrix element_matrix(const AlgebraElement& a, long n) {
    TensorSpace space(n, a.context().strands());
    ExactMatrix m(space.size(), space.size());
    for (const auto& [d, coeff] : a.terms()) {
        const Rational c = coeff.eval(Rational(n));
        if (c == 0) continue;
        m += diagram_matrix(d, n).scaled(c);
    }
    return m;
}

// Restriction of a (k+1)-strand operator to the subspace with the last
// strand pinned to the letter n. Requires the operator to preserve that
// subspace, which holds whenever every diagram joins strand k+1 top to
// bottom.
inline ExactMatrix compress_last_strand(const ExactMatrix& m, long n) {
    if (m.rows() != m.cols() || m.rows() % n != 0)
        throw SizeMismatch("compress_last_strand needs a square matrix of size divisible by n");
    const long reduced = m.rows() / n;
    ExactMatrix out(reduced, reduced);
    for (long i = 0; i < reduced; ++i) {
        const long full_row = i * n + (n - 1);
        for (const auto& [col, v] : m.row(full_row))
            if (col % n == n - 1) out.set(i, col / n, v);
    }
    for (long i = 0; i < m.rows(); ++i) {
        if (i % n == n - 1) continue;
        for (const auto& [col, v] : m.row(i))
            if (col % n == n - 1)
                throw Error("operator does not preserve the pinned last strand");
    }
    return out;
}

// Dimension of {X : XP = PX = X and Xg = gX for every generator g}. The
// generators must be permutation matrices; commuting with them forces X to
// be constant on orbits of index pairs, so X is expanded over orbit
// indicator matrices and the projector constraints are stacked and solved
// by exact elimination.
inline long commutant_dim(const std::vector<ExactMatrix>& generators, const ExactMatrix& p) {
    if (p.rows() != p.cols()) throw SizeMismatch("projector must be square");
    const long n = p.rows();
    std::vector<std::vector<long>> perms;
    for (const auto& g : generators) {
        if (g.rows() != n || g.cols() != n)
            throw SizeMismatch("generator size does not match projector");
        std::vector<long> map(static_cast<size_t>(n), -1);
        std::vector<char> hit(static_cast<size_t>(n), 0);
        for (long i = 0; i < n; ++i)
            for (const auto& [j, v] : g.row(i)) {
                if (v != 1 || map[static_cast<size_t>(j)] != -1)
                    throw Error("commutant_dim requires permutation generator matrices");
                map[static_cast<size_t>(j)] = i;
            }
        for (long j = 0; j < n; ++j) {
            if (map[static_cast<size_t>(j)] == -1)
                throw Error("commutant_dim requires permutation generator matrices");
            if (hit[static_cast<size_t>(map[static_cast<size_t>(j)])]++)
                throw Error("commutant_dim requires permutation generator matrices");
        }
        perms.push_back(std::move(map));
    }

    // Orbits of index pairs under the diagonal action of the generated group.
    const long pairs = n * n;
    std::vector<long> parent(static_cast<size_t>(pairs));
    std::iota(parent.begin(), parent.end(), 0L);
    std::function<long(long)> find = [&](long a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    };
    auto unite = [&](long a, long b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    };
    for (const auto& perm : perms)
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                unite(i * n + j, perm[static_cast<size_t>(i)] * n + perm[static_cast<size_t>(j)]);

    std::unordered_map<long, long> orbit_of_root;
    for (long pr = 0; pr < pairs; ++pr) {
        long root = find(pr);
        if (root == pr) {
            long next = static_cast<long>(orbit_of_root.size());
            orbit_of_root.emplace(root, next);
        }
    }
    const long orbits = static_cast<long>(orbit_of_root.size());

    // Stack the constraints X(P - I) = 0 and (P - I)X = 0 in orbit
    // coordinates. Row keys are entry positions; columns are orbits.
    ExactMatrix pmi = p;
    pmi -= ExactMatrix::identity(n);
    const ExactMatrix pmi_t = pmi.transpose();
    std::unordered_map<long, std::map<long, Rational>> constraint;
    for (long pr = 0; pr < pairs; ++pr) {
        const long o = orbit_of_root.at(find(pr));
        const long i = pr / n;
        const long j = pr % n;
        for (const auto& [l, v] : pmi.row(j)) {
            auto& cell = constraint[i * n + l][o];
            cell += v;
        }
        for (const auto& [l, v] : pmi_t.row(i)) {
            auto& cell = constraint[pairs + l * n + j][o];
            cell += v;
        }
    }
    ExactMatrix c(static_cast<long>(constraint.size()), orbits);
    long row = 0;
    for (auto& [key, entries] : constraint) {
        for (const auto& [o, v] : entries)
            if (v != 0) c.set(row, o, v);
        ++row;
    }
    return orbits - matrix_rank(c);
}

struct CentralizerReport {
    Kind kind = Kind::Whole;
    int k_display = 0;
    long n = 0;
    long algebra_dim = 0;
    long image_rank = 0;
    long commutant_dimension = 0;
    bool images_commute = false;
    bool theorem_range = false;
    bool pass = false;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["kind"] = centralizer_kind_string(kind);
        j["k"] = k_display;
        j["n"] = n;
        j["algebra_dim"] = algebra_dim;
        j["image_rank"] = image_rank;
        j["commutant_dim"] = commutant_dimension;
        j["theorem_range"] = theorem_range;
        j["pass"] = pass;
        return j;
    }

    static std::string centralizer_kind_string(Kind kind) { return kind_label(kind); }
};

// Matrices of the projected basis elements at x = n. Half contexts are
// realized on k strands by pinning the extra strand to the letter n.
inline std::vector<ExactMatrix> basis_image_matrices(const Context& ctx, long n,
                                                     long size_guard = 100000) {
    detail::ipow_checked(n, ctx.strands(), size_guard);
    QpBasis basis(ctx);
    std::vector<ExactMatrix> images;
    images.reserve(basis.elements().size());
    for (const auto& elem : basis.elements()) {
        ExactMatrix m = element_matrix(elem.expansion, n);
        if (ctx.kind == Kind::Half) m = compress_last_strand(m, n);
        images.push_back(std::move(m));
    }
    return images;
}

// Brute-force check of one centralizer statement: the projected diagram
// basis at x = n must span an algebra of the predicted dimension that
// commutes with the letter action, and the abstract commutant must have the
// same dimension.
inline CentralizerReport verify_centralizer(const Context& ctx, long n,
                                            long commutant_guard = 10000,
                                            long span_guard = 100000) {
    CentralizerReport report;
    report.kind = ctx.kind;
    report.k_display = ctx.kind == Kind::Tilde ? ctx.k + 1 : ctx.k;
    report.n = n;

    const int acting_strands = ctx.kind == Kind::Half ? ctx.k : ctx.strands();
    const long space_dim = detail::ipow_checked(n, acting_strands, span_guard);
    const bool fix_last_letter = ctx.kind == Kind::Half;

    switch (ctx.kind) {
    case Kind::Whole: report.theorem_range = n >= 2L * ctx.k; break;
    case Kind::Half: report.theorem_range = n >= 2L * ctx.k + 1; break;
    case Kind::Tilde: report.theorem_range = n >= 2L * ctx.k + 2; break;
    }

    const std::vector<ExactMatrix> images = basis_image_matrices(ctx, n, span_guard);
    report.algebra_dim = static_cast<long>(images.size());

    std::vector<ExactMatrix> gen_matrices;
    for (const auto& sigma : letter_group_generators(n, fix_last_letter))
        gen_matrices.push_back(perm_matrix(sigma, n, acting_strands));

    report.images_commute = true;
    for (const auto& m : images)
        for (const auto& g : gen_matrices)
            if (m * g != g * m) report.images_commute = false;

    report.image_rank = span_rank(images);

    if (space_dim > commutant_guard)
        throw Error("commutant space size " + std::to_string(space_dim) + " exceeds guard " +
                    std::to_string(commutant_guard));
    const ExactMatrix projector =
        standard_projector(n, ctx.k, ctx.kind == Kind::Tilde);
    report.commutant_dimension = commutant_dim(gen_matrices, projector);

    report.pass = report.images_commute && report.image_rank == report.algebra_dim &&
                  report.commutant_dimension == report.algebra_dim;
    return report;
}

} // namespace qpart

#endif // QPART_SCHUR_WEYL_HPP
