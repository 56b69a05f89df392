// qpart: command-line front end for the diagram-algebra library. Every verb
// is a thin wrapper over library calls; output is deterministic (canonical
// diagram order, ordered JSON keys) so identical invocations are
// byte-identical.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qpart/algebra.hpp"
#include "qpart/diagram.hpp"
#include "qpart/dims.hpp"
#include "qpart/errors.hpp"
#include "qpart/laurent.hpp"
#include "qpart/modules.hpp"
#include "qpart/schur_weyl.hpp"
#include "qpart/tableaux.hpp"

namespace {

using json = nlohmann::ordered_json;

// Cap on tensor-space and basis sizes, overridable via QPART_MAX_DIM.
long max_dim_cap() {
    const char* env = std::getenv("QPART_MAX_DIM");
    if (!env) return 100000;
    const std::string text(env);
    try {
        size_t pos = 0;
        const long v = std::stol(text, &pos);
        if (pos != text.size() || v <= 0) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw qpart::ParseError("QPART_MAX_DIM must be a positive integer, got '" + text + "'");
    }
}

qpart::Kind parse_kind(const std::string& s) {
    if (s == "qp") return qpart::Kind::Whole;
    if (s == "qp-half") return qpart::Kind::Half;
    if (s == "tilde") return qpart::Kind::Tilde;
    throw qpart::ParseError("unknown kind '" + s + "'");
}

// For kind tilde the --k option carries the level, one above the context k.
qpart::Context make_context(const std::string& kind_str, int k) {
    const qpart::Kind kind = parse_kind(kind_str);
    if (kind == qpart::Kind::Tilde) {
        if (k < 1) throw qpart::ParseError("--k is the level for kind tilde and must be >= 1");
        return qpart::Context(kind, k - 1);
    }
    if (k < 0) throw qpart::ParseError("--k must be >= 0");
    return qpart::Context(kind, k);
}

int display_k(const qpart::Context& ctx) {
    return ctx.kind == qpart::Kind::Tilde ? ctx.k + 1 : ctx.k;
}

json parse_json_text(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw qpart::ParseError(std::string("bad ") + what + " JSON: " + e.what());
    }
}

// Accepts either a bare block list [[1,-1],...] on k strands or a full
// diagram object {"k":..., "blocks": ...} that must agree with k.
qpart::Diagram parse_diagram_arg(const std::string& text, int k) {
    const json j = parse_json_text(text, "diagram");
    if (j.is_array()) {
        try {
            return qpart::Diagram(k, j.get<std::vector<std::vector<int>>>());
        } catch (const nlohmann::json::exception& e) {
            throw qpart::ParseError(std::string("bad diagram JSON: ") + e.what());
        }
    }
    const qpart::Diagram d = qpart::Diagram::from_json(j);
    if (d.size() != k)
        throw qpart::ParseError("diagram is on " + std::to_string(d.size()) +
                                " strands, expected " + std::to_string(k));
    return d;
}

qpart::Partition parse_partition_arg(const std::string& text) {
    const json j = parse_json_text(text, "partition");
    if (!j.is_array()) throw qpart::ParseError("partition must be a JSON array");
    qpart::Partition p;
    try {
        p = j.get<qpart::Partition>();
    } catch (const nlohmann::json::exception& e) {
        throw qpart::ParseError(std::string("bad partition JSON: ") + e.what());
    }
    qpart::validate_partition(p);
    return p;
}

std::vector<std::vector<int>> parse_rows_arg(const std::string& text) {
    const json j = parse_json_text(text, "tableau rows");
    try {
        return j.get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw qpart::ParseError(std::string("bad tableau rows JSON: ") + e.what());
    }
}

void warn_degenerate_point(long n, int k) {
    if (n >= 0 && n <= 2L * k - 2)
        std::cerr << "warning: x = " << n << " lies in the degenerate range 0.." << (2 * k - 2)
                  << " where the projected algebra at k = " << k << " need not be semisimple\n";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void emit_rows(const std::vector<std::pair<std::string, std::string>>& rows) {
    size_t width = 0;
    for (const auto& [left, right] : rows) width = std::max(width, left.size());
    for (const auto& [left, right] : rows)
        std::cout << std::left << std::setw(static_cast<int>(width) + 2) << left << right << "\n";
}

void require_cap(const char* what, size_t size, long cap) {
    if (static_cast<long>(size) > cap)
        throw qpart::Error(std::string(what) + " size " + std::to_string(size) +
                           " exceeds QPART_MAX_DIM = " + std::to_string(cap));
}

json element_terms_json(const qpart::AlgebraElement& elem) {
    json terms = json::array();
    for (const auto& [d, c] : elem.terms()) {
        json term;
        term["diagram"] = d.to_json();
        term["coeff"] = c.to_json();
        terms.push_back(std::move(term));
    }
    return terms;
}

json evaluated_terms_json(const qpart::AlgebraElement& elem, long n) {
    json terms = json::array();
    for (const auto& [d, c] : elem.terms()) {
        const qpart::Rational value = c.eval(qpart::Rational(n));
        if (value == 0) continue;
        json term;
        term["diagram"] = d.to_json();
        term["value"] = qpart::rat_to_string(value);
        terms.push_back(std::move(term));
    }
    return terms;
}

json dims_json(const std::map<qpart::Partition, qpart::Int>& dims) {
    json out = json::object();
    for (const auto& [shape, value] : dims)
        out[qpart::partition_to_string(shape)] = qpart::DimTable::int_to_json_number(value);
    return out;
}

std::string report_line(const qpart::CentralizerReport& report) {
    std::ostringstream out;
    out << "kind=" << qpart::kind_label(report.kind) << " k=" << report.k_display
        << " n=" << report.n << " algebra_dim=" << report.algebra_dim
        << " image_rank=" << report.image_rank << " commutant_dim=" << report.commutant_dimension
        << " theorem_range=" << (report.theorem_range ? "yes" : "no") << " "
        << (report.pass ? "PASS" : "FAIL");
    return out.str();
}

long theorem_min_n(const qpart::Context& ctx) {
    switch (ctx.kind) {
    case qpart::Kind::Whole: return 2L * ctx.k;
    case qpart::Kind::Half: return 2L * ctx.k + 1;
    case qpart::Kind::Tilde: return 2L * ctx.k + 2;
    }
    return 0;
}

bool power_fits(long base, int exp, long limit) {
    long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return false;
        r *= base;
    }
    return r <= limit;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partition-type diagram algebras: products, bases, modules, verification"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- multiply ----------------------------------------------------------
    auto* mul = app.add_subcommand("multiply", "compose two diagrams on k strands");
    int mul_k = 0;
    std::string mul_left, mul_right, mul_format = "json";
    mul->add_option("--k", mul_k, "number of strands")->required();
    mul->add_option("--left", mul_left, "left diagram JSON")->required();
    mul->add_option("--right", mul_right, "right diagram JSON")->required();
    mul->add_option("--format", mul_format)->check(CLI::IsMember({"json", "text"}));
    mul->callback([&]() {
        const qpart::Diagram d1 = parse_diagram_arg(mul_left, mul_k);
        const qpart::Diagram d2 = parse_diagram_arg(mul_right, mul_k);
        const qpart::ComposeResult res = qpart::compose(d1, d2);
        if (mul_format == "text") {
            emit_rows({{"power", std::to_string(res.power)}, {"diagram", res.d.to_string()}});
            return;
        }
        json out;
        out["power"] = res.power;
        out["diagram"] = res.d.to_json();
        emit(out);
    });

    // ---- conjugate ---------------------------------------------------------
    auto* conj = app.add_subcommand("conjugate",
                                    "expand the projector conjugate of a basis-leader diagram");
    std::string conj_kind = "qp", conj_diagram, conj_format = "json";
    int conj_k = 0;
    long conj_eval = 0;
    conj->add_option("--kind", conj_kind)->check(CLI::IsMember({"qp", "qp-half", "tilde"}));
    conj->add_option("--k", conj_k, "context size (level for tilde)")->required();
    conj->add_option("--diagram", conj_diagram, "diagram JSON")->required();
    auto* conj_eval_opt = conj->add_option("--eval-at", conj_eval, "evaluate coefficients at x = n");
    conj->add_option("--format", conj_format)->check(CLI::IsMember({"json", "text"}));
    conj->callback([&]() {
        const qpart::Context ctx = make_context(conj_kind, conj_k);
        const qpart::Diagram d = parse_diagram_arg(conj_diagram, ctx.strands());
        const qpart::AlgebraElement elem = qpart::bar_closed_form(d, ctx);
        const bool evaluated = conj_eval_opt->count() > 0;
        if (evaluated) warn_degenerate_point(conj_eval, ctx.active());
        if (conj_format == "text") {
            std::vector<std::pair<std::string, std::string>> rows{{"context", ctx.to_string()}};
            for (const auto& [term, coeff] : elem.terms()) {
                if (evaluated) {
                    const qpart::Rational value = coeff.eval(qpart::Rational(conj_eval));
                    if (value == 0) continue;
                    rows.emplace_back(qpart::rat_to_pretty(value), term.to_string());
                } else {
                    rows.emplace_back(coeff.to_string(), term.to_string());
                }
            }
            emit_rows(rows);
            return;
        }
        json out;
        out["context"] = ctx.to_string();
        if (evaluated) {
            out["x"] = conj_eval;
            out["terms"] = evaluated_terms_json(elem, conj_eval);
        } else {
            out["terms"] = element_terms_json(elem);
        }
        emit(out);
    });

    // ---- basis -------------------------------------------------------------
    auto* bas = app.add_subcommand("basis", "projected basis: leaders and their expansions");
    std::string bas_kind = "qp", bas_format = "json";
    int bas_k = 0;
    bas->add_option("--kind", bas_kind)->check(CLI::IsMember({"qp", "qp-half", "tilde"}));
    bas->add_option("--k", bas_k, "context size (level for tilde)")->required();
    bas->add_option("--format", bas_format)->check(CLI::IsMember({"json", "text"}));
    bas->callback([&]() {
        const qpart::Context ctx = make_context(bas_kind, bas_k);
        const long cap = max_dim_cap();
        const qpart::Int predicted = qpart::algebra_dim_formula(ctx.kind, ctx.k);
        if (predicted > cap)
            throw qpart::Error("basis size " + predicted.str() + " exceeds QPART_MAX_DIM = " +
                               std::to_string(cap));
        const qpart::QpBasis basis(ctx);
        if (bas_format == "text") {
            std::vector<std::pair<std::string, std::string>> rows{
                {"context", ctx.to_string()}, {"size", std::to_string(basis.size())}};
            for (const auto& elem : basis.elements())
                rows.emplace_back(std::to_string(elem.expansion.terms().size()) + " terms",
                                  elem.leader.to_string());
            emit_rows(rows);
            return;
        }
        json elements = json::array();
        for (const auto& elem : basis.elements()) {
            json e;
            e["leader"] = elem.leader.to_json();
            e["expansion"] = element_terms_json(elem.expansion);
            elements.push_back(std::move(e));
        }
        json out;
        out["kind"] = qpart::kind_label(ctx.kind);
        out["k"] = display_k(ctx);
        out["size"] = basis.size();
        out["elements"] = std::move(elements);
        emit(out);
    });

    // ---- dim ---------------------------------------------------------------
    auto* dim = app.add_subcommand("dim", "algebra dimension from the closed formula");
    std::string dim_kind = "qp", dim_format = "json";
    int dim_k = 0;
    dim->add_option("--kind", dim_kind)->check(CLI::IsMember({"qp", "qp-half", "tilde"}));
    dim->add_option("--k", dim_k, "context size (level for tilde)")->required();
    dim->add_option("--format", dim_format)->check(CLI::IsMember({"json", "text"}));
    dim->callback([&]() {
        const qpart::Context ctx = make_context(dim_kind, dim_k);
        const qpart::Int value = qpart::algebra_dim_formula(ctx.kind, ctx.k);
        if (dim_format == "text") {
            std::cout << value.str() << "\n";
            return;
        }
        std::cout << qpart::DimTable::int_to_json_number(value).dump() << "\n";
    });

    // ---- simple-dims -------------------------------------------------------
    auto* sd = app.add_subcommand("simple-dims", "simple module dimensions at one level");
    std::string sd_kind = "qp", sd_format = "json";
    int sd_k = 0;
    sd->add_option("--kind", sd_kind)->check(CLI::IsMember({"qp", "qp-half", "tilde"}));
    sd->add_option("--k", sd_k, "context size (level for tilde)")->required();
    sd->add_option("--format", sd_format)->check(CLI::IsMember({"json", "text"}));
    sd->callback([&]() {
        const qpart::Context ctx = make_context(sd_kind, sd_k);
        const int table_k = ctx.kind == qpart::Kind::Whole ? ctx.k : ctx.k + 1;
        const qpart::DimTable table(table_k);
        const qpart::DimRow& row = table.row(ctx.kind, ctx.k);
        if (sd_format == "text") {
            std::vector<std::pair<std::string, std::string>> rows;
            for (const auto& [shape, value] : row.dims)
                rows.emplace_back(qpart::partition_to_string(shape), value.str());
            emit_rows(rows);
            return;
        }
        json out;
        out["kind"] = qpart::kind_label(row.kind);
        out["k"] = row.display_k();
        out["dims"] = dims_json(row.dims);
        emit(out);
    });

    // ---- delta -------------------------------------------------------------
    auto* del = app.add_subcommand("delta", "standard module basis");
    std::string del_kind = "qp", del_nu = "[]", del_format = "json";
    int del_k = 0;
    del->add_option("--kind", del_kind)->check(CLI::IsMember({"qp", "qp-half"}));
    del->add_option("--k", del_k, "context size")->required();
    del->add_option("--nu", del_nu, "tableau shape as a JSON array");
    del->add_option("--format", del_format)->check(CLI::IsMember({"json", "text"}));
    del->callback([&]() {
        const qpart::Context ctx = make_context(del_kind, del_k);
        const qpart::Partition nu = parse_partition_arg(del_nu);
        const qpart::ModuleContext mctx(ctx, nu);
        const std::vector<qpart::BasisPair> basis = qpart::delta_basis(mctx);
        require_cap("standard module basis", basis.size(), max_dim_cap());
        if (del_format == "text") {
            std::vector<std::pair<std::string, std::string>> rows{
                {"context", ctx.to_string()},
                {"nu", qpart::partition_to_string(nu)},
                {"size", std::to_string(basis.size())}};
            for (const auto& p : basis) rows.emplace_back(p.d.to_string(), p.t.to_string());
            emit_rows(rows);
            return;
        }
        json pairs = json::array();
        for (const auto& p : basis) {
            json e;
            e["diagram"] = p.d.to_json();
            e["tableau"] = p.t.to_json();
            pairs.push_back(std::move(e));
        }
        json out;
        out["kind"] = qpart::kind_label(ctx.kind);
        out["k"] = ctx.k;
        out["nu"] = nu;
        out["size"] = basis.size();
        out["basis"] = std::move(pairs);
        emit(out);
    });

    // ---- module-matrix -----------------------------------------------------
    auto* mm = app.add_subcommand("module-matrix",
                                  "matrix of a diagram on a standard or simple module");
    std::string mm_kind = "qp", mm_nu = "[]", mm_module = "delta", mm_diagram, mm_format = "json";
    int mm_k = 0;
    long mm_eval = 0;
    mm->add_option("--kind", mm_kind)->check(CLI::IsMember({"qp", "qp-half"}));
    mm->add_option("--k", mm_k, "context size")->required();
    mm->add_option("--nu", mm_nu, "tableau shape as a JSON array");
    mm->add_option("--module", mm_module)->check(CLI::IsMember({"delta", "simple"}));
    mm->add_option("--diagram", mm_diagram, "acting diagram JSON")->required();
    auto* mm_eval_opt = mm->add_option("--eval-at", mm_eval, "evaluate entries at x = n");
    mm->add_option("--format", mm_format)->check(CLI::IsMember({"json", "text"}));
    mm->callback([&]() {
        const qpart::Context ctx = make_context(mm_kind, mm_k);
        const qpart::Partition nu = parse_partition_arg(mm_nu);
        const qpart::Diagram d = parse_diagram_arg(mm_diagram, ctx.strands());
        const bool evaluated = mm_eval_opt->count() > 0;
        if (evaluated) warn_degenerate_point(mm_eval, ctx.active());

        qpart::LaurentMatrix mat;
        size_t size = 0;
        if (mm_module == "delta") {
            const qpart::ModuleContext mctx(ctx, nu);
            const std::vector<qpart::BasisPair> basis = qpart::delta_basis(mctx);
            require_cap("standard module basis", basis.size(), max_dim_cap());
            mat = qpart::action_matrix(qpart::AlgebraElement(ctx, d), mctx, basis);
            size = basis.size();
        } else {
            if (ctx.kind != qpart::Kind::Whole)
                throw qpart::Error("simple module matrices are built for kind qp only");
            const qpart::QpSimpleBasis basis(ctx.k, nu);
            require_cap("simple module basis", basis.size(), max_dim_cap());
            mat = basis.action_matrix(qpart::bar_closed_form(d, ctx));
            size = basis.size();
        }

        if (mm_format == "text") {
            std::vector<std::string> cells;
            size_t width = 0;
            for (const auto& row : mat)
                for (const auto& entry : row) {
                    cells.push_back(evaluated
                                        ? qpart::rat_to_pretty(entry.eval(qpart::Rational(mm_eval)))
                                        : entry.to_string());
                    width = std::max(width, cells.back().size());
                }
            size_t idx = 0;
            for (size_t i = 0; i < mat.size(); ++i) {
                for (size_t j = 0; j < mat.size(); ++j)
                    std::cout << (j ? "  " : "") << std::left
                              << std::setw(static_cast<int>(width)) << cells[idx++];
                std::cout << "\n";
            }
            return;
        }
        json rows = json::array();
        for (const auto& row : mat) {
            json r = json::array();
            for (const auto& entry : row) {
                if (evaluated)
                    r.push_back(qpart::rat_to_string(entry.eval(qpart::Rational(mm_eval))));
                else
                    r.push_back(entry.to_json());
            }
            rows.push_back(std::move(r));
        }
        json out;
        out["kind"] = qpart::kind_label(ctx.kind);
        out["k"] = ctx.k;
        out["nu"] = nu;
        out["module"] = mm_module;
        out["diagram"] = d.to_json();
        if (evaluated) out["x"] = mm_eval;
        out["size"] = size;
        out["matrix"] = std::move(rows);
        emit(out);
    });

    // ---- verify-centralizer ------------------------------------------------
    auto* ver = app.add_subcommand("verify-centralizer",
                                   "brute-force centralizer check on tensor space");
    std::string ver_kind = "qp", ver_format = "json";
    int ver_k = 0;
    long ver_n = 0;
    bool ver_sweep = false;
    ver->add_option("--kind", ver_kind)->check(CLI::IsMember({"qp", "qp-half", "tilde"}));
    ver->add_option("--k", ver_k, "context size (level for tilde); upper bound with --sweep")
        ->required();
    ver->add_option("--n", ver_n, "number of letters; upper bound with --sweep")->required();
    ver->add_flag("--sweep", ver_sweep, "run every case up to the bounds");
    ver->add_option("--format", ver_format)->check(CLI::IsMember({"json", "text"}));
    ver->callback([&]() {
        const long cap = max_dim_cap();
        const long commutant_cap = std::min(cap, 10000L);
        if (!ver_sweep) {
            const qpart::Context ctx = make_context(ver_kind, ver_k);
            const qpart::CentralizerReport report =
                qpart::verify_centralizer(ctx, ver_n, commutant_cap, cap);
            if (ver_format == "text")
                std::cout << report_line(report) << "\n";
            else
                emit(report.to_json());
            exit_code = report.pass ? 0 : 1;
            return;
        }
        json cases = json::array();
        std::vector<std::string> lines;
        bool all_pass = true;
        for (int kk = 1; kk <= ver_k; ++kk) {
            const qpart::Context ctx = make_context(ver_kind, kk);
            const int acting = ctx.kind == qpart::Kind::Half ? ctx.k : ctx.strands();
            for (long n = std::max(theorem_min_n(ctx), 2L); n <= ver_n; ++n) {
                if (!power_fits(n, acting, commutant_cap)) continue;
                const qpart::CentralizerReport report =
                    qpart::verify_centralizer(ctx, n, commutant_cap, cap);
                all_pass = all_pass && report.pass;
                cases.push_back(report.to_json());
                lines.push_back(report_line(report));
            }
        }
        if (ver_format == "text") {
            for (const auto& line : lines) std::cout << line << "\n";
            std::cout << (all_pass ? "all passed" : "FAILURES PRESENT") << "\n";
        } else {
            json out;
            out["cases"] = std::move(cases);
            out["all_pass"] = all_pass;
            emit(out);
        }
        exit_code = all_pass ? 0 : 1;
    });

    // ---- bratteli ----------------------------------------------------------
    auto* bra = app.add_subcommand("bratteli", "tower graph of simple module dimensions");
    std::string bra_format = "json";
    int bra_k = 0;
    bra->add_option("--k", bra_k, "top level of the tower")->required();
    bra->add_option("--format", bra_format)->check(CLI::IsMember({"json", "text", "dot"}));
    bra->callback([&]() {
        if (bra_k < 0) throw qpart::ParseError("--k must be >= 0");
        const qpart::BratteliGraph g = qpart::BratteliGraph::build(bra_k);
        if (bra_format == "dot") {
            std::cout << g.to_dot();
            return;
        }
        if (bra_format == "text") {
            std::vector<std::pair<std::string, std::string>> rows;
            for (const auto& level : g.levels) {
                std::ostringstream line;
                bool first = true;
                for (const auto& [shape, value] : level.dims) {
                    line << (first ? "" : " ") << qpart::partition_to_string(shape) << "="
                         << value.str();
                    first = false;
                }
                rows.emplace_back(qpart::kind_label(level.kind) + "(" +
                                      std::to_string(level.display_k()) + ")",
                                  line.str());
            }
            rows.emplace_back("edges", std::to_string(g.edges.size()));
            emit_rows(rows);
            return;
        }
        emit(g.to_json());
    });

    // ---- straighten --------------------------------------------------------
    auto* str = app.add_subcommand("straighten",
                                   "expand a tableau filling over standard tableaux");
    std::string str_shape, str_rows, str_format = "json";
    str->add_option("--shape", str_shape, "partition as a JSON array")->required();
    str->add_option("--rows", str_rows, "row fillings as a JSON array of arrays")->required();
    str->add_option("--format", str_format)->check(CLI::IsMember({"json", "text"}));
    str->callback([&]() {
        const qpart::Partition shape = parse_partition_arg(str_shape);
        const qpart::Tableau t = qpart::make_tableau(shape, parse_rows_arg(str_rows));
        const std::map<qpart::Tableau, qpart::Int> expansion = qpart::straighten(t);
        if (str_format == "text") {
            std::vector<std::pair<std::string, std::string>> rows;
            for (const auto& [u, coeff] : expansion) rows.emplace_back(coeff.str(), u.to_string());
            emit_rows(rows);
            return;
        }
        json terms = json::array();
        for (const auto& [u, coeff] : expansion) {
            json term;
            term["tableau"] = u.to_json();
            term["coeff"] = qpart::DimTable::int_to_json_number(coeff);
            terms.push_back(std::move(term));
        }
        json out;
        out["shape"] = shape;
        out["terms"] = std::move(terms);
        emit(out);
    });

    try {
        max_dim_cap();  // reject a malformed QPART_MAX_DIM before any work
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const qpart::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qpart::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
