#ifndef QPART_LAURENT_HPP
#define QPART_LAURENT_HPP

#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qpart/rational.hpp"

namespace qpart {

// Laurent polynomial in one variable x over Rational. Negative exponents are
// legal throughout (the algebras assume x != 0). Zero coefficients are never
// stored, so map equality is polynomial equality and the zero polynomial is
// the empty map.
class Laurent {
public:
    Laurent() = default;

    static Laurent zero() { return Laurent(); }

    static Laurent constant(const Rational& c) { return monomial(c, 0); }

    static Laurent monomial(const Rational& c, long exp) {
        Laurent p;
        if (c != 0) p.terms_[exp] = c;
        return p;
    }

    // x^exp
    static Laurent xpow(long exp) { return monomial(Rational(1), exp); }

    const std::map<long, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    Rational coeff(long exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    Laurent operator-() const {
        Laurent r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    Laurent scaled(const Rational& c) const {
        Laurent r;
        if (c == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }

    // Exact evaluation at x = v. Throws EvalAtZero when v = 0 and a negative
    // exponent is present; plain 0^e = 0 contributions are fine.
    Rational eval(const Rational& v) const {
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            if (e == 0) {
                acc += c;
            } else if (v == 0) {
                if (e < 0) throw EvalAtZero("negative exponent evaluated at x = 0");
                // positive power of zero contributes nothing
            } else {
                Rational p(1);
                const Rational base = e > 0 ? v : Rational(1) / v;
                for (long i = 0; i < (e > 0 ? e : -e); ++i) p *= base;
                acc += c * p;
            }
        }
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        // print highest exponent first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Rational c = it->second;
            if (!first) {
                out << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            const long e = it->first;
            const bool unit_coeff = (c == 1 || c == -1) && e != 0;
            if (c == -1 && e != 0) out << "-";
            if (!unit_coeff) out << rat_to_pretty(c);
            if (e != 0) {
                if (!unit_coeff) out << "*";
                out << "x";
                if (e != 1) out << "^" << e;
            }
        }
        return out.str();
    }

    // {"<exponent>": "num/den", ...}, ascending exponent order.
    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (const auto& [e, c] : terms_) j[std::to_string(e)] = rat_to_string(c);
        return j;
    }

    static Laurent from_json(const nlohmann::json& j) {
        Laurent p;
        if (!j.is_object()) throw ParseError("Laurent polynomial JSON must be an object");
        for (auto it = j.begin(); it != j.end(); ++it) {
            long e = 0;
            try {
                e = std::stol(it.key());
            } catch (const std::exception&) {
                throw ParseError("bad exponent key '" + it.key() + "'");
            }
            p.add_term(e, rat_parse(it.value().get<std::string>()));
        }
        return p;
    }

private:
    void add_term(long e, const Rational& c) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        } else if (c == 0) {
            terms_.erase(it);
        }
    }

    std::map<long, Rational> terms_;
};

} // namespace qpart

#endif // QPART_LAURENT_HPP
