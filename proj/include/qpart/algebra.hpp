#ifndef QPART_ALGEBRA_HPP
#define QPART_ALGEBRA_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpart/diagram.hpp"
#include "qpart/errors.hpp"
#include "qpart/laurent.hpp"

namespace qpart {

// ---------------------------------------------------------------------------
// Formal Laurent-coefficient combinations of diagrams of one context.
// ---------------------------------------------------------------------------

class AlgebraElement {
public:
    explicit AlgebraElement(Context ctx) : ctx_(ctx) {}

    AlgebraElement(Context ctx, const Diagram& d) : ctx_(ctx) {
        check_diagram(d);
        terms_[d] = Laurent::constant(Rational(1));
    }

    const Context& context() const { return ctx_; }
    const std::map<Diagram, Laurent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Laurent coeff(const Diagram& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? Laurent::zero() : it->second;
    }

    void add_term(const Diagram& d, const Laurent& c) {
        if (c.is_zero()) return;
        check_diagram(d);
        auto [it, inserted] = terms_.try_emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        check_context(o);
        for (const auto& [d, c] : o.terms_) add_term(d, c);
        return *this;
    }

    AlgebraElement& operator-=(const AlgebraElement& o) {
        check_context(o);
        for (const auto& [d, c] : o.terms_) add_term(d, -c);
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

    AlgebraElement scaled(const Laurent& c) const {
        AlgebraElement r(ctx_);
        if (c.is_zero()) return r;
        for (const auto& [d, k] : terms_) {
            Laurent prod = k * c;
            if (!prod.is_zero()) r.terms_.emplace(d, std::move(prod));
        }
        return r;
    }

    bool operator==(const AlgebraElement& o) const {
        return ctx_ == o.ctx_ && terms_ == o.terms_;
    }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [d, c] : terms_) {
            if (!first) out << " + ";
            first = false;
            out << "(" << c.to_string() << ")*" << d.to_string();
        }
        return out.str();
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["context"] = ctx_.to_string();
        j["terms"] = nlohmann::ordered_json::array();
        for (const auto& [d, c] : terms_) {
            nlohmann::ordered_json term;
            term["diagram"] = d.to_json();
            term["coeff"] = c.to_json();
            j["terms"].push_back(std::move(term));
        }
        return j;
    }

private:
    void check_diagram(const Diagram& d) const {
        if (!ctx_.admits(d))
            throw SizeMismatch("diagram " + d.to_string() + " does not belong to " +
                               ctx_.to_string());
    }
    void check_context(const AlgebraElement& o) const {
        if (!(ctx_ == o.ctx_))
            throw SizeMismatch("context mismatch: " + ctx_.to_string() + " vs " +
                               o.ctx_.to_string());
    }

    Context ctx_;
    std::map<Diagram, Laurent> terms_;
};

// Bilinear extension of the diagram product with its powers of x.
inline AlgebraElement pa_mul(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.context() == b.context()))
        throw SizeMismatch("context mismatch: " + a.context().to_string() + " vs " +
                           b.context().to_string());
    AlgebraElement r(a.context());
    for (const auto& [d1, c1] : a.terms())
        for (const auto& [d2, c2] : b.terms()) {
            ComposeResult comp = compose(d1, d2);
            Laurent c = (c1 * c2) * Laurent::xpow(comp.power);
            r.add_term(comp.d, c);
        }
    return r;
}

inline AlgebraElement pa_mul(const AlgebraElement& a, const AlgebraElement& b,
                             const AlgebraElement& c) {
    return pa_mul(pa_mul(a, b), c);
}

// ---------------------------------------------------------------------------
// The unit projector: product over the active strands i of (1 - p_i/x),
// expanded as sum over subsets J of (-x)^{-|J|} p_J. For Half/Tilde contexts
// the extra strand k+1 is left alone.
// ---------------------------------------------------------------------------

inline AlgebraElement pi_projector(const Context& ctx) {
    const int K = ctx.strands();
    const int k = ctx.active();
    AlgebraElement r(ctx);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<std::vector<int>> blocks;
        int bits = 0;
        for (int i = 1; i <= K; ++i) {
            if (i <= k && ((mask >> (i - 1)) & 1u)) {
                blocks.push_back({i});
                blocks.push_back({-i});
                ++bits;
            } else {
                blocks.push_back({i, -i});
            }
        }
        r.add_term(Diagram(K, std::move(blocks)),
                   Laurent::monomial(Rational((bits % 2) ? -1 : 1), -bits));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Conjugation by the projector: pi * d * pi, computed by multiplying out.
// Zero whenever d has a singleton within the active strands.
// ---------------------------------------------------------------------------

inline AlgebraElement conjugate_by_projector(const Diagram& d, const Context& ctx) {
    AlgebraElement pi = pi_projector(ctx);
    return pa_mul(pi, AlgebraElement(ctx, d), pi);
}

// Closed form of the same conjugation for a diagram with no singleton within
// the active strands. Each block B independently either keeps a sub-block S
// of size >= 2 and splits the rest of its active vertices into singletons
// (coefficient (-x)^{-(|B|-|S|)}), or - when B lies entirely within the
// active strands - dissolves into singletons with combined coefficient
// (|B|-1) * (-x)^{-(|B|-1)}. Vertices on the inactive strand are never split.
inline AlgebraElement bar_closed_form(const Diagram& d, const Context& ctx) {
    if (!ctx.admits(d))
        throw SizeMismatch("diagram " + d.to_string() + " does not belong to " +
                           ctx.to_string());
    if (d.has_singleton_within(ctx.active()))
        throw HasSingletons("closed-form conjugation needs no singletons among strands 1..(" +
                            std::to_string(ctx.active()) + ") in " + d.to_string());
    struct Option {
        std::vector<std::vector<int>> parts;  // the block's replacement
        Laurent coeff;
    };
    std::vector<std::vector<Option>> options;
    for (const auto& b : d.blocks()) {
        std::vector<int> active, fixed;
        for (int v : b) (std::abs(v) <= ctx.active() ? active : fixed).push_back(v);
        std::vector<Option> opts;
        const size_t a = active.size();
        for (unsigned mask = 0; mask < (1u << a); ++mask) {
            // mask marks the active vertices split off as singletons
            std::vector<int> remnant = fixed;
            std::vector<std::vector<int>> parts;
            int split = 0;
            for (size_t i = 0; i < a; ++i) {
                if ((mask >> i) & 1u) {
                    parts.push_back({active[i]});
                    ++split;
                } else {
                    remnant.push_back(active[i]);
                }
            }
            if (fixed.empty()) {
                // Fully active block: remnants of size < 2 all collapse into
                // the single all-singleton pattern, handled below.
                if (remnant.size() < 2 && split > 0) continue;
            }
            if (!remnant.empty()) parts.push_back(std::move(remnant));
            opts.push_back({std::move(parts),
                            Laurent::monomial(Rational((split % 2) ? -1 : 1), -split)});
        }
        if (fixed.empty() && b.size() >= 2) {
            std::vector<std::vector<int>> parts;
            for (int v : b) parts.push_back({v});
            const int e = static_cast<int>(b.size()) - 1;
            opts.push_back({std::move(parts),
                            Laurent::monomial(Rational((e % 2) ? -1 : 1) * Rational(e), -e)});
        }
        options.push_back(std::move(opts));
    }
    AlgebraElement r(ctx);
    std::vector<std::vector<int>> blocks;
    Laurent one = Laurent::constant(Rational(1));
    auto rec = [&](auto&& self, size_t idx, const Laurent& coeff) -> void {
        if (idx == options.size()) {
            r.add_term(Diagram(d.size(), blocks), coeff);
            return;
        }
        for (const auto& opt : options[idx]) {
            const size_t before = blocks.size();
            for (const auto& part : opt.parts) blocks.push_back(part);
            self(self, idx + 1, coeff * opt.coeff);
            blocks.resize(before);
        }
    };
    rec(rec, 0, one);
    return r;
}

// ---------------------------------------------------------------------------
// Basis of the projected algebra: one conjugated element per leader diagram.
// ---------------------------------------------------------------------------

struct BarBasisElement {
    Diagram leader;
    AlgebraElement expansion;  // pi * leader * pi
};

class QpBasis {
public:
    explicit QpBasis(const Context& ctx) : ctx_(ctx) {
        for (const Diagram& d : leader_diagrams(ctx))
            elements_.push_back(BarBasisElement{d, bar_closed_form(d, ctx)});
        for (size_t i = 0; i < elements_.size(); ++i) index_[elements_[i].leader] = i;
    }

    const Context& context() const { return ctx_; }
    const std::vector<BarBasisElement>& elements() const { return elements_; }
    size_t size() const { return elements_.size(); }

    const BarBasisElement& at(size_t i) const { return elements_[i]; }

    bool is_leader(const Diagram& d) const { return index_.count(d) > 0; }

    size_t index_of(const Diagram& d) const {
        auto it = index_.find(d);
        if (it == index_.end())
            throw IndexOutOfRange("diagram " + d.to_string() + " is not a basis leader");
        return it->second;
    }

    // The unit of the projected algebra (conjugate of the identity diagram).
    const AlgebraElement& unit() const {
        return at(index_of(identity_diagram(ctx_.strands()))).expansion;
    }

private:
    Context ctx_;
    std::vector<BarBasisElement> elements_;
    std::map<Diagram, size_t> index_;
};

// An element written in leader coordinates.
using QpElement = std::map<Diagram, Laurent>;

// Rewrite a raw combination in the conjugated basis. Every leader appears
// in its own expansion with coefficient one and in no other expansion (all
// other expansion terms carry an active singleton), so one pass suffices;
// a nonzero residue means the element is outside the span.
inline QpElement to_bar_basis(const AlgebraElement& raw, const QpBasis& basis) {
    QpElement coords;
    AlgebraElement residue = raw;
    for (const auto& [d, c] : raw.terms()) {
        if (!basis.context().is_basis_leader(d)) continue;
        coords[d] = c;
        residue -= basis.at(basis.index_of(d)).expansion.scaled(c);
    }
    if (!residue.is_zero())
        throw NotInSpan("combination is not in the conjugated-basis span; residue: " +
                        residue.to_string());
    return coords;
}

inline AlgebraElement from_bar_basis(const QpElement& coords, const QpBasis& basis) {
    AlgebraElement r(basis.context());
    for (const auto& [d, c] : coords)
        r += basis.at(basis.index_of(d)).expansion.scaled(c);
    return r;
}

// Product of two conjugated-basis elements, re-expressed in the basis. The
// projector is idempotent, so multiplying the stored expansions already
// yields pi * d1 * pi * d2 * pi.
inline QpElement qp_mul(const BarBasisElement& a, const BarBasisElement& b,
                        const QpBasis& basis) {
    return to_bar_basis(pa_mul(a.expansion, b.expansion), basis);
}

inline QpElement qp_mul(const QpElement& a, const QpElement& b, const QpBasis& basis) {
    return to_bar_basis(pa_mul(from_bar_basis(a, basis), from_bar_basis(b, basis)), basis);
}

// Dimension of the projected algebra by direct enumeration of leaders.
inline long algebra_dim_enumerated(const Context& ctx) {
    long count = 0;
    for_each_diagram(ctx.strands(), [&](Diagram&& d) {
        if (ctx.is_basis_leader(d)) ++count;
    });
    return count;
}

} // namespace qpart

#endif // QPART_ALGEBRA_HPP
