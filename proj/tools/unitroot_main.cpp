// Command-line front end: polynomial ingestion, the coefficient-matrix
// pipelines, congruence verifiers and JSON/text reporting.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed (including
// non-ordinary input), 2 malformed input or usage error.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "unitroot/doublecover.hpp"
#include "unitroot/ghostcalc.hpp"
#include "unitroot/jsonio.hpp"
#include "unitroot/stienstra.hpp"

using namespace unitroot;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string poly_expr;
    std::string poly_file;
    std::string vars_csv;
    std::uint32_t prime = 0;
    std::uint32_t precision = 3;
    std::uint32_t max_s = 3;
    std::uint64_t max_n = 0;
    std::uint32_t terms = 5;
    std::uint32_t guard_digits = 0;
    std::string side = "right";
    std::string format = "text";
    std::string frobpoly;
    int threads = 1;
    bool no_truncation = false;
};

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct PolyInput {
    ZPoly poly;
    std::vector<std::string> variables;
};

PolyInput load_poly(const Options& opt) {
    const bool have_expr = !opt.poly_expr.empty();
    const bool have_file = !opt.poly_file.empty();
    if (have_expr == have_file)
        throw DomainError("exactly one of --poly and --poly-file is required");
    if (have_file) {
        std::ifstream in(opt.poly_file);
        if (!in) throw DomainError("cannot open polynomial file: " + opt.poly_file);
        json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw ParseError(std::string("invalid polynomial JSON: ") + e.what(), 0);
        }
        std::vector<std::string> vars;
        ZPoly f = poly_from_json(j, vars);
        return {std::move(f), std::move(vars)};
    }
    std::vector<std::string> vars = split_csv(opt.vars_csv);
    if (vars.empty()) throw DomainError("--vars is required with --poly");
    ZPoly f = parse_poly(opt.poly_expr, vars);
    return {std::move(f), std::move(vars)};
}

void require_prime(const Options& opt) {
    if (opt.prime == 0) throw DomainError("--prime is required");
    if (!is_prime_u32(opt.prime))
        throw DomainError(std::to_string(opt.prime) + " is not prime");
}

json residue_json(const Residue& r) {
    return json{{"value", std::to_string(r.value())}, {"digits", r.digits().to_string()}};
}

void emit(const Options& opt, const json& doc, const std::string& text) {
    if (opt.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

std::string report_text(const Report& r) {
    std::string out;
    for (const auto& c : r.checks) {
        out += c.pass ? "[PASS] " : "[FAIL] ";
        out += c.name;
        if (!c.detail.empty()) out += "  (" + c.detail + ")";
        out += "\n";
    }
    return out;
}

std::string matrix_text(const ModMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += "  [";
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) out += ", ";
            out += std::to_string(m.at(i, j));
        }
        out += "]\n";
    }
    return out;
}

int cmd_interior_points(const Options& opt) {
    PolyInput in = load_poly(opt);
    const LatticePolytope newt = newton_polytope(in.poly);
    const auto J = interior_points(newt);
    json doc{{"J", labels_to_json(J)}, {"h", J.size()}};
    std::string text = "J = [";
    for (std::size_t i = 0; i < J.size(); ++i) {
        if (i) text += ", ";
        text += ev_to_string(J[i]);
    }
    text += "]\nh = " + std::to_string(J.size()) + "\n";
    if (J.empty()) {
        doc["warning"] = "no interior points";
        text += "warning: no interior points\n";
    }
    emit(opt, doc, text);
    return kExitOk;
}

int cmd_limit(const Options& opt) {
    require_prime(opt);
    if (opt.precision < 1) throw DomainError("--precision must be >= 1");
    PolyInput in = load_poly(opt);
    StienstraContext ctx(in.poly, opt.prime);
    const LimitSide side = opt.side == "left" ? LimitSide::Left : LimitSide::Right;
    if (opt.side != "left" && opt.side != "right")
        throw DomainError("--side must be left or right");
    const bool truncate = !opt.no_truncation;

    LimitMatrix lim = limit_alpha(ctx, opt.precision, side, truncate);
    bool guard_ok = true;
    if (opt.guard_digits > 0) {
        const LimitMatrix wide =
            limit_alpha(ctx, opt.precision + opt.guard_digits, side, truncate);
        guard_ok = truncated(wide.matrix, opt.precision) == lim.matrix;
    }

    const ModRing& ring = lim.matrix.ring();
    const Residue tr = ring.residue(lim.matrix.trace());
    const Residue dt = ring.residue(lim.matrix.det());
    const auto charpoly = lim.matrix.charpoly();

    json cp = json::array();
    for (std::size_t d = 0; d < charpoly.size(); ++d)
        cp.push_back(json{{"degree", d},
                          {"value", std::to_string(charpoly[d])},
                          {"digits", Residue(charpoly[d], ring.p, ring.k).digits().to_string()}});
    json doc{{"prime", opt.prime},
             {"precision", opt.precision},
             {"side", opt.side},
             {"h", ctx.h()},
             {"matrix", matrix_to_json(lim.matrix)},
             {"trace", residue_json(tr)},
             {"det", residue_json(dt)},
             {"charpoly", std::move(cp)}};
    if (opt.guard_digits > 0) doc["guard_check"] = guard_ok ? "ok" : "mismatch";

    std::string text = "limit matrix mod " + std::to_string(opt.prime) + "^" +
                       std::to_string(opt.precision) + " (" + opt.side + " quotients)\n";
    text += matrix_text(lim.matrix);
    text += "trace = " + tr.digits().to_string() + "\n";
    text += "det   = " + dt.digits().to_string() + "\n";
    text += "charpoly coefficients (ascending degree):\n";
    for (std::size_t d = 0; d < charpoly.size(); ++d)
        text += "  T^" + std::to_string(d) + ": " +
                Residue(charpoly[d], ring.p, ring.k).digits().to_string() + "\n";
    if (opt.guard_digits > 0)
        text += std::string("guard-digit cross-check: ") + (guard_ok ? "ok" : "MISMATCH") +
                "\n";
    emit(opt, doc, text);
    return guard_ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Options& opt) {
    require_prime(opt);
    PolyInput in = load_poly(opt);
    StienstraContext ctx(in.poly, opt.prime);
    const bool truncate = !opt.no_truncation;
    Report report = check_theorem1_i(ctx, opt.max_s, truncate);
    report.merge(check_theorem1_ii(ctx, opt.max_s, truncate));
    report.merge(check_det_power_identity(ctx, opt.max_s, truncate));
    emit(opt, report_to_json(report), report_text(report));
    return report.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_ghost_verify(const Options& opt) {
    require_prime(opt);
    PolyInput in = load_poly(opt);
    const std::uint64_t n_max = opt.max_n ? opt.max_n : pow_u64_checked(opt.prime, 2) - 1;
    Report report = check_ghost_lemma(in.poly, opt.prime, n_max);

    GhostSession session(in.poly, opt.prime);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const bool ok = session.reassemble(n) == power(in.poly, n);
        report.add("splittings of I-family reassemble Lambda^" + std::to_string(n), ok);
    }
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const auto digits = base_p_digits(n, opt.prime);
        std::vector<std::vector<std::uint32_t>> tuples{{}};
        for (std::size_t i = 0; i < digits.size(); ++i) {
            std::vector<std::vector<std::uint32_t>> next;
            for (const auto& t : tuples)
                for (std::uint32_t mi = 0; mi <= i; ++mi) {
                    auto copy = t;
                    copy.push_back(mi);
                    next.push_back(std::move(copy));
                }
            tuples = std::move(next);
        }
        ZPoly sum(in.poly.ring(), in.poly.nvars());
        ZPoly sum_indecomposable(in.poly.ring(), in.poly.nvars());
        for (const auto& m : tuples) {
            const ZPoly r = r_m_product(in.poly, n, m, opt.prime);
            sum = sum + r;
            if (is_indecomposable(m)) sum_indecomposable = sum_indecomposable + r;
        }
        report.add("sum over tuples m of R_m(n) equals Lambda^n, n=" + std::to_string(n),
                   sum == power(in.poly, n));
        report.add("indecomposable-tuple sum equals I_n, n=" + std::to_string(n),
                   sum_indecomposable == session.i_poly(n));
    }

    bool have_interior = true;
    try {
        StienstraContext ctx(in.poly, opt.prime);
        for (std::uint32_t s = 1; pow_u64_checked(opt.prime, s) - 1 <= n_max; ++s) {
            const std::uint32_t prec = std::max<std::uint32_t>(s - 1, 1);
            const ModMatrix g = gamma(ctx, s, prec);
            bool divisible = true;
            if (s >= 2) {
                const std::uint64_t mod = pow_u64_checked(opt.prime, s - 1);
                for (std::size_t i = 0; i < g.size() && divisible; ++i)
                    for (std::size_t j = 0; j < g.size(); ++j)
                        if (g.at(i, j) % mod != 0) {
                            divisible = false;
                            break;
                        }
            }
            report.add("gamma_" + std::to_string(s) + " == 0 mod p^" + std::to_string(s - 1),
                       divisible);
        }
    } catch (const DomainError&) {
        have_interior = false;
    }

    json doc = report_to_json(report);
    std::string text = report_text(report);
    if (!have_interior) {
        doc["note"] = "gamma checks skipped: no interior points";
        text += "note: gamma checks skipped (no interior points)\n";
    }
    emit(opt, doc, text);
    return report.all_pass() ? kExitOk : kExitCheckFailed;
}

// Finds the cover variable w of Lambda = w^2 - G: the unique variable whose
// square appears as a bare monomial with coefficient 1 while every other
// term avoids it.
int detect_cover_variable(const ZPoly& lambda) {
    std::vector<int> candidates;
    for (int idx = 0; idx < lambda.nvars(); ++idx) {
        bool valid = true;
        int squares = 0;
        for (const auto& [e, c] : lambda.terms()) {
            if (e[idx] == 2) {
                bool pure = c == 1;
                for (int i = 0; i < lambda.nvars() && pure; ++i)
                    if (i != idx && e[i] != 0) pure = false;
                if (!pure) {
                    valid = false;
                    break;
                }
                ++squares;
            } else if (e[idx] != 0) {
                valid = false;
                break;
            }
        }
        if (valid && squares == 1) candidates.push_back(idx);
    }
    if (candidates.size() != 1)
        throw DomainError("polynomial is not of the form w^2 - G for a unique variable w");
    return candidates[0];
}

int cmd_double_cover(const Options& opt) {
    require_prime(opt);
    PolyInput in = load_poly(opt);
    const int w = detect_cover_variable(in.poly);
    ZPoly g(ZRing{}, in.poly.nvars() - 1);
    for (const auto& [e, c] : in.poly.terms()) {
        if (e[w] == 2) continue;
        ExponentVector rest;
        for (int i = 0; i < in.poly.nvars(); ++i)
            if (i != w) rest.push_back(e[i]);
        g.add_term(std::move(rest), -c);
    }
    DoubleCoverInput dc = make_double_cover(g);
    const bool truncate = !opt.no_truncation;

    LimitMatrix lim = limit_via_delta(dc, opt.prime, opt.precision, truncate);
    const ModRing& ring = lim.matrix.ring();
    const Residue tr = ring.residue(lim.matrix.trace());
    const Residue dt = ring.residue(lim.matrix.det());

    Report report;
    if (opt.prime != 2) report.merge(b_ratio_check(opt.prime, opt.max_s));
    std::optional<FrobeniusPolyInput> frob;
    if (!opt.frobpoly.empty()) {
        frob = FrobeniusPolyInput::parse(opt.frobpoly, opt.prime);
        report.merge(corollary_check(lim, *frob));
        if (opt.max_n > 0) {
            const std::uint64_t step = pow_u64_checked(opt.prime, dc.labels.size());
            for (std::uint64_t n = step; n <= opt.max_n; n += step)
                report.merge(asd_check(dc, *frob, n));
        }
    }

    json doc{{"prime", opt.prime},
             {"precision", opt.precision},
             {"h", dc.labels.size()},
             {"limit_matrix", matrix_to_json(lim.matrix)},
             {"trace", residue_json(tr)},
             {"det", residue_json(dt)}};
    doc.update(report_to_json(report));
    std::string text = "double cover with h = " + std::to_string(dc.labels.size()) +
                       ", limit via delta quotients mod " + std::to_string(opt.prime) + "^" +
                       std::to_string(opt.precision) + "\n";
    text += matrix_text(lim.matrix);
    text += "trace = " + tr.digits().to_string() + "\n";
    text += "det   = " + dt.digits().to_string() + "\n";
    text += report_text(report);
    emit(opt, doc, text);
    return report.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_log_coeffs(const Options& opt) {
    require_prime(opt);
    PolyInput in = load_poly(opt);
    StienstraContext ctx(in.poly, opt.prime);
    const auto mats = formal_group_log_coeffs(ctx, opt.terms);
    json list = json::array();
    std::string text;
    for (std::size_t m = 0; m < mats.size(); ++m) {
        list.push_back(json{{"m", m + 1}, {"matrix", matrix_to_json(mats[m])}});
        text += "m = " + std::to_string(m + 1) + ":\n";
        for (std::size_t i = 0; i < mats[m].size(); ++i) {
            text += "  [";
            for (std::size_t j = 0; j < mats[m].size(); ++j) {
                if (j) text += ", ";
                text += mats[m].at(i, j).str();
            }
            text += "]\n";
        }
    }
    emit(opt, json{{"log_coefficients", std::move(list)}}, text);
    return kExitOk;
}

void add_common(CLI::App* cmd, Options& opt, bool needs_prime) {
    cmd->add_option("--poly", opt.poly_expr, "polynomial expression");
    cmd->add_option("--poly-file", opt.poly_file, "canonical polynomial JSON file");
    cmd->add_option("--vars", opt.vars_csv, "comma-separated variable names for --poly");
    if (needs_prime) cmd->add_option("--prime", opt.prime, "the prime p");
    cmd->add_option("--format", opt.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--threads", opt.threads,
                    "thread-count override (computation is deterministic; currently "
                    "single-threaded)")
        ->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coefficient matrices of powers of a Laurent polynomial, their p-adic "
                 "congruences, and unit-root Frobenius eigenvalue extraction"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* c_int = app.add_subcommand(
        "interior-points", "interior lattice points J of the Newton polytope");
    add_common(c_int, opt, false);

    CLI::App* c_limit =
        app.add_subcommand("limit", "p-adic limit of consecutive alpha quotients");
    add_common(c_limit, opt, true);
    c_limit->add_option("--precision", opt.precision, "precision k (work mod p^k)");
    c_limit->add_option("--side", opt.side, "left | right quotients")
        ->check(CLI::IsMember({"left", "right"}));
    c_limit->add_option("--guard-digits", opt.guard_digits,
                        "recompute at precision k+g and cross-check the truncation");
    c_limit->add_flag("--no-truncation", opt.no_truncation,
                      "disable target-directed truncation in the powering");

    CLI::App* c_verify = app.add_subcommand("verify", "congruences of the alpha family");
    add_common(c_verify, opt, true);
    c_verify->add_option("--max-s", opt.max_s, "check alpha_s congruences up to s");
    c_verify->add_flag("--no-truncation", opt.no_truncation,
                       "disable target-directed truncation in the powering");

    CLI::App* c_ghost =
        app.add_subcommand("ghost-verify", "ghost-term and I-polynomial identities");
    add_common(c_ghost, opt, true);
    c_ghost->add_option("--max-n", opt.max_n, "verify indices up to n (default p^2-1)");

    CLI::App* c_dc = app.add_subcommand(
        "double-cover", "delta matrices, ASD congruence and the annihilation identity");
    add_common(c_dc, opt, true);
    c_dc->add_option("--precision", opt.precision, "precision k for the limit matrix");
    c_dc->add_option("--frobpoly", opt.frobpoly,
                     "reciprocal Frobenius polynomial, constant first: \"1,a1,...,ak\"");
    c_dc->add_option("--max-n", opt.max_n, "run the ASD congruence for indices up to n");
    c_dc->add_option("--max-s", opt.max_s, "central-binomial ratio checks up to s");
    c_dc->add_flag("--no-truncation", opt.no_truncation,
                   "disable target-directed truncation in the powering");

    CLI::App* c_log =
        app.add_subcommand("log-coeffs", "formal-group logarithm coefficient matrices");
    add_common(c_log, opt, true);
    c_log->add_option("--terms", opt.terms, "number of logarithm coefficients");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (c_int->parsed()) return cmd_interior_points(opt);
        if (c_limit->parsed()) return cmd_limit(opt);
        if (c_verify->parsed()) return cmd_verify(opt);
        if (c_ghost->parsed()) return cmd_ghost_verify(opt);
        if (c_dc->parsed()) return cmd_double_cover(opt);
        if (c_log->parsed()) return cmd_log_coeffs(opt);
        std::cerr << "no subcommand\n";
        return kExitInputError;
    } catch (const NonUnitDeterminantError& e) {
        std::cerr << "non-ordinary at p: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
