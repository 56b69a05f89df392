#ifndef QPART_MODULES_HPP
#define QPART_MODULES_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qpart/algebra.hpp"
#include "qpart/diagram.hpp"
#include "qpart/errors.hpp"
#include "qpart/laurent.hpp"
#include "qpart/tableaux.hpp"

namespace qpart {

// ---------------------------------------------------------------------------
// Standard modules. A basis vector is a pair (standard module diagram,
// standard tableau); the algebra acts by composing on top, factoring the
// result into standard diagram times permutation, and letting the
// permutation act on the tableau.
// ---------------------------------------------------------------------------

struct BasisPair {
    Diagram d;
    Tableau t;

    bool operator==(const BasisPair& o) const { return d == o.d && t == o.t; }
    bool operator<(const BasisPair& o) const {
        if (d != o.d) return d < o.d;
        return t < o.t;
    }
};

struct ModuleContext {
    Context alg;   // Whole(k) or Half(k)
    Partition nu;  // shape of the tableau factor; m = |nu|

    ModuleContext(Context a, Partition n) : alg(a), nu(std::move(n)) {
        validate_partition(nu);
        if (alg.kind == Kind::Tilde)
            throw Error("standard modules are built for whole and half contexts only");
        if (partition_size(nu) > alg.k)
            throw NuTooLarge("partition " + partition_to_string(nu) + " too large for " +
                             alg.to_string());
    }

    int m() const { return partition_size(nu); }

    // Number of propagating blocks a vector's diagram must keep under the
    // action for the result to survive.
    int target_propagating() const { return alg.kind == Kind::Half ? m() + 1 : m(); }
};

class ModuleVector {
public:
    explicit ModuleVector(ModuleContext ctx) : ctx_(std::move(ctx)) {}

    const ModuleContext& context() const { return ctx_; }
    const std::map<BasisPair, Laurent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Laurent coeff(const BasisPair& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Laurent::zero() : it->second;
    }

    void add_term(const BasisPair& p, const Laurent& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ModuleVector& operator+=(const ModuleVector& o) {
        for (const auto& [p, c] : o.terms_) add_term(p, c);
        return *this;
    }

    ModuleVector& operator-=(const ModuleVector& o) {
        for (const auto& [p, c] : o.terms_) add_term(p, -c);
        return *this;
    }

    ModuleVector scaled(const Laurent& c) const {
        ModuleVector r(ctx_);
        if (c.is_zero()) return r;
        for (const auto& [p, k] : terms_) {
            Laurent prod = k * c;
            if (!prod.is_zero()) r.terms_.emplace(p, std::move(prod));
        }
        return r;
    }

    bool operator==(const ModuleVector& o) const { return terms_ == o.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            if (!first) out << " + ";
            first = false;
            out << "(" << c.to_string() << ")*" << p.d.to_string() << "(x)" << p.t.to_string();
        }
        return out.str();
    }

private:
    ModuleContext ctx_;
    std::map<BasisPair, Laurent> terms_;
};

inline std::vector<BasisPair> delta_basis(const ModuleContext& ctx) {
    const int m = ctx.m();
    std::vector<Diagram> diagrams = ctx.alg.kind == Kind::Half
                                        ? half_km_standard_diagrams(ctx.alg.k, m)
                                        : km_standard_diagrams(ctx.alg.k, m);
    std::vector<Tableau> tableaux = syt_of_shape(ctx.nu);
    std::vector<BasisPair> out;
    out.reserve(diagrams.size() * tableaux.size());
    for (const auto& d : diagrams)
        for (const auto& t : tableaux) out.push_back(BasisPair{d, t});
    return out;
}

// Action of a single diagram on a single basis pair.
inline ModuleVector act_diagram(const Diagram& a, const BasisPair& v, const ModuleContext& ctx) {
    ModuleVector r(ctx);
    ComposeResult comp = compose(a, v.d);
    if (comp.d.propagating_number() != ctx.target_propagating()) return r;
    FactorResult factored = ctx.alg.kind == Kind::Half ? half_factor_standard(comp.d)
                                                       : factor_standard(comp.d);
    const Laurent power = Laurent::xpow(comp.power);
    for (const auto& [tab, c] : specht_act(factored.sigma, v.t))
        r.add_term(BasisPair{factored.standard, tab}, power.scaled(Rational(c)));
    return r;
}

inline ModuleVector act(const AlgebraElement& a, const ModuleVector& v) {
    ModuleVector r(v.context());
    for (const auto& [d, c] : a.terms())
        for (const auto& [p, k] : v.terms()) r += act_diagram(d, p, v.context()).scaled(c * k);
    return r;
}

inline ModuleVector unit_vector(const ModuleContext& ctx, const BasisPair& p) {
    ModuleVector v(ctx);
    v.add_term(p, Laurent::constant(Rational(1)));
    return v;
}

// ---------------------------------------------------------------------------
// Matrices of the action on an indexed basis, with exact Laurent entries.
// ---------------------------------------------------------------------------

using LaurentMatrix = std::vector<std::vector<Laurent>>;

inline LaurentMatrix laurent_matrix_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
    const size_t n = a.size(), mid = b.size(), m = mid ? b[0].size() : 0;
    LaurentMatrix r(n, std::vector<Laurent>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < mid; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) {
                if (b[l][j].is_zero()) continue;
                r[i][j] += a[i][l] * b[l][j];
            }
        }
    return r;
}

// Matrix of `a` acting on the standard module with the given basis listing;
// column j is the expansion of a * basis[j].
inline LaurentMatrix action_matrix(const AlgebraElement& a, const ModuleContext& ctx,
                                   const std::vector<BasisPair>& basis) {
    std::map<BasisPair, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    LaurentMatrix mat(basis.size(), std::vector<Laurent>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) {
        ModuleVector out = act(a, unit_vector(ctx, basis[j]));
        for (const auto& [p, c] : out.terms()) {
            auto it = index.find(p);
            if (it == index.end())
                throw NotInSpan("action left the standard basis at " + p.d.to_string());
            mat[it->second][j] = c;
        }
    }
    return mat;
}

// ---------------------------------------------------------------------------
// Simple modules of the projected algebra: spanned by the projector applied
// to pairs whose diagram has no singleton on top. The pair itself is the
// leading term; every other term's diagram has a top singleton.
// ---------------------------------------------------------------------------

class QpSimpleBasis {
public:
    QpSimpleBasis(int k, const Partition& nu)
        : mctx_(Context(Kind::Whole, k), nu), pi_(pi_projector(mctx_.alg)) {
        const int m = mctx_.m();
        std::vector<Tableau> tableaux = syt_of_shape(nu);
        for (const auto& d : km_standard_diagrams(k, m)) {
            if (d.has_top_singleton()) continue;
            for (const auto& t : tableaux) {
                BasisPair p{d, t};
                vectors_.push_back(act(pi_, unit_vector(mctx_, p)));
                leaders_.push_back(p);
            }
        }
        for (size_t i = 0; i < leaders_.size(); ++i) index_[leaders_[i]] = i;
    }

    const ModuleContext& module_context() const { return mctx_; }
    const std::vector<BasisPair>& leaders() const { return leaders_; }
    const std::vector<ModuleVector>& vectors() const { return vectors_; }
    size_t size() const { return leaders_.size(); }

    // Coordinates of a vector known to lie in the span: the coefficients of
    // leader pairs are read off, their spanning vectors subtracted, and the
    // residue must vanish.
    std::vector<Laurent> coordinates(const ModuleVector& v) const {
        std::vector<Laurent> coords(leaders_.size());
        ModuleVector residue = v;
        for (const auto& [p, c] : v.terms()) {
            if (p.d.has_top_singleton()) continue;
            auto it = index_.find(p);
            if (it == index_.end())
                throw NotInSpan("leading pair " + p.d.to_string() + " " + p.t.to_string() +
                                " is not a basis leader");
            coords[it->second] = c;
            residue -= vectors_[it->second].scaled(c);
        }
        if (!residue.is_zero())
            throw NotInSpan("vector is not in the simple-module span; residue: " +
                            residue.to_string());
        return coords;
    }

    // Matrix of a projected-algebra element given by its raw expansion.
    LaurentMatrix action_matrix(const AlgebraElement& a) const {
        LaurentMatrix mat(size(), std::vector<Laurent>(size()));
        for (size_t j = 0; j < size(); ++j) {
            std::vector<Laurent> col = coordinates(act(a, vectors_[j]));
            for (size_t i = 0; i < size(); ++i) mat[i][j] = col[i];
        }
        return mat;
    }

private:
    ModuleContext mctx_;
    AlgebraElement pi_;
    std::vector<BasisPair> leaders_;
    std::vector<ModuleVector> vectors_;
    std::map<BasisPair, size_t> index_;
};

} // namespace qpart

#endif // QPART_MODULES_HPP
