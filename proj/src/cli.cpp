#include "geospec/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "geospec/acceptance.hpp"
#include "geospec/beta_symmetric.hpp"
#include "geospec/dimension.hpp"
#include "geospec/interval_construction.hpp"
#include "geospec/io.hpp"
#include "geospec/limsup.hpp"
#include "geospec/spectrum_integer.hpp"
#include "geospec/spectrum_quadratic.hpp"

namespace geospec {

namespace {

using nlohmann::json;

mpfr_prec_t env_precision() {
    const char* p = std::getenv("GEOSPEC_PRECISION");
    if (!p) return 0;
    char* end = nullptr;
    long v = std::strtol(p, &end, 10);
    if (end == p || v <= 0) return 0;
    return static_cast<mpfr_prec_t>(v);
}

Sign parse_sign(const std::string& s) {
    if (s == "plus") return Sign::plus;
    if (s == "minus") return Sign::minus;
    throw std::invalid_argument("sign must be plus or minus, got '" + s + "'");
}

json certified_json(const CertifiedValue& v) {
    if (v.is_exact()) return json{{"exact", v.exact->to_string()}};
    return json{{"mid", v.mid()},
                {"rad", v.rad()},
                {"bits", static_cast<long>(mpfr_get_prec(v.bounds.lo()))}};
}

std::string certified_text(const CertifiedValue& v) {
    if (v.is_exact()) return v.exact->to_string();
    std::ostringstream os;
    os << "mid=" << v.mid() << " rad=" << v.rad() << " bits=" << mpfr_get_prec(v.bounds.lo());
    return os.str();
}

json interval_json(const Interval& x) {
    return json{{"mid", x.mid_double()},
                {"rad", x.rad_double()},
                {"bits", static_cast<long>(mpfr_get_prec(x.lo()))}};
}

// ---- spectrum ----------------------------------------------------------

int cmd_spectrum_integer(long base, int count, bool as_json, bool as_csv, std::ostream& out) {
    SpectrumTable t = enumerate_spectrum(base, count, make_rat(1, 1000000000000L));
    if (as_json) {
        json rows = json::array();
        for (const auto& r : t.rows)
            rows.push_back(json{{"k", r.k},
                                {"word", word_to_string(r.word)},
                                {"point", rat_to_string(r.point)},
                                {"identity_ok", r.identity_ok}});
        json j{{"command", "spectrum-integer"},
               {"base", t.base},
               {"rows", rows},
               {"limit", json{{"lo", rat_to_string(t.limit.lo)}, {"hi", rat_to_string(t.limit.hi)}}},
               {"all_ok", t.all_ok}};
        out << j.dump(2) << "\n";
    } else if (as_csv) {
        out << "k,word,point,identity_ok\n";
        for (const auto& r : t.rows)
            out << r.k << "," << word_to_string(r.word) << "," << rat_to_string(r.point) << ","
                << (r.identity_ok ? "ok" : "FAIL") << "\n";
        out << "limit," << rat_to_string(t.limit.lo) << "," << rat_to_string(t.limit.hi) << ",\n";
    } else {
        out << "discrete spectrum, base " << t.base << "\n";
        for (const auto& r : t.rows)
            out << "  k=" << r.k << "  point " << rat_to_string(r.point) << "  word "
                << word_to_string(r.word) << "  identity " << (r.identity_ok ? "ok" : "FAIL")
                << "\n";
        out << "  limit in [" << rat_to_string(t.limit.lo) << ", " << rat_to_string(t.limit.hi)
            << "]\n";
    }
    return t.all_ok ? 0 : 1;
}

int cmd_spectrum_quadratic(long b, Sign sign, int count, bool as_json, std::ostream& out) {
    PqTable t = pq_spectrum(static_cast<int>(b), sign, count);
    if (as_json) {
        json rows = json::array();
        for (const auto& r : t.rows)
            rows.push_back(json{{"n", r.n},
                                {"p", r.p.get_str()},
                                {"q", r.q.get_str()},
                                {"value", rat_to_string(r.value)},
                                {"z_ok", r.z_ok},
                                {"cf_ok", r.cf_ok},
                                {"witness", r.witness.word.to_string()}});
        json j{{"command", "spectrum-quadratic"},
               {"b", b},
               {"sign", sign_name(sign)},
               {"rows", rows},
               {"limit", t.limit.to_string()},
               {"all_ok", t.all_ok}};
        out << j.dump(2) << "\n";
    } else {
        out << "discrete spectrum, " << t.unit.describe() << "\n";
        for (const auto& r : t.rows)
            out << "  n=" << r.n << "  value " << rat_to_string(r.value) << "  witness "
                << r.witness.word.to_string() << "\n";
        out << "  limit " << t.limit.to_string() << "\n";
    }
    return t.all_ok ? 0 : 1;
}

// ---- limsup --------------------------------------------------------------

int cmd_limsup(const std::string& alpha_spec, const std::string& xi_text, long iters,
               mpfr_prec_t precision, bool as_json, std::ostream& out) {
    Alpha alpha = parse_alpha_spec(alpha_spec);
    RealInput xi = parse_real_input(xi_text);
    LimsupProbe probe = limsup_estimate(xi, alpha, iters, precision);
    if (as_json) {
        json trace = json::array();
        for (const auto& s : probe.trace) trace.push_back(json{{"n", s.n}, {"value", s.value}});
        json j{{"command", "limsup"},
               {"alpha", alpha.describe()},
               {"xi", xi.describe()},
               {"steps", probe.steps},
               {"best", certified_json(probe.best)},
               {"argmax", probe.argmax},
               {"last_improvement", probe.last_improvement},
               {"attain_count", probe.attain_count},
               {"certified", probe.certified},
               {"precision_used", static_cast<long>(probe.precision_used)},
               {"trace", trace}};
        out << j.dump(2) << "\n";
    } else {
        out << "alpha: " << alpha.describe() << "\n";
        out << "xi:    " << xi.describe() << "\n";
        out << "steps " << probe.steps << ", running max " << certified_text(probe.best)
            << " at n=" << probe.argmax << "\n";
        out << "last improvement n=" << probe.last_improvement;
        if (probe.attain_count > 0) out << ", attained " << probe.attain_count << " times";
        out << ", certified " << (probe.certified ? "yes" : "NO") << ", precision "
            << probe.precision_used << "\n";
    }
    return probe.certified ? 0 : 1;
}

// ---- words -----------------------------------------------------------------

int cmd_words_christoffel(long p, long q, bool upper, std::ostream& out) {
    FiniteWord w = upper ? christoffel_upper(p, q) : christoffel_lower(p, q);
    out << word_to_string(w) << "\n";
    if (q >= 2) {
        FiniteWord v = central_word(p, q);
        out << "central palindrome: " << (v.empty() ? "(empty)" : word_to_string(v)) << "\n";
    }
    return 0;
}

int cmd_words_balanced(const std::string& text, std::ostream& out) {
    FiniteWord w = parse_word(text);
    if (is_balanced(w)) {
        out << "balanced\n";
        return 0;
    }
    auto hit = find_mirror_factor(w);
    if (hit)
        out << "unbalanced; F-factor at " << hit->start << ": " << word_to_string(hit->factor)
            << "\n";
    else
        out << "unbalanced; no F-factor\n";
    return 0;
}

int cmd_words_forbidden(const std::string& text, std::ostream& out) {
    FiniteWord w = parse_word(text);
    auto hits = mirror_scan(w);
    if (hits.empty()) {
        out << "no F-factor\n";
        return 0;
    }
    for (const auto& h : hits)
        out << "at " << h.start << " len " << h.length << ": " << word_to_string(h.factor)
            << "  (v=" << (h.v.empty() ? "empty" : word_to_string(h.v)) << ", shape "
            << (h.one_zero ? "1~v10v0" : "0v01~v1") << ")\n";
    return 0;
}

int cmd_words_phi(const std::string& text, std::ostream& out) {
    PhiResult r = phi_periodic(parse_word(text));
    out << "recoded period: " << word_to_string(r.period) << "\n";
    out << "block 1 0^" << r.base_exponent << " -> 0, 1 0^" << (r.base_exponent + 1)
        << " -> 1; complemented first: " << (r.swapped ? "yes" : "no") << "; origin block "
        << r.origin_block << "\n";
    return 0;
}

int cmd_words_iota(const std::string& text, bool window, std::ostream& out) {
    FiniteWord w = parse_word(text);
    if (window) {
        out << "iota >= " << iota_window(w) << " (finite window, lower bound)\n";
        return 0;
    }
    IotaResult r = iota_periodic(w);
    if (!r.finite) {
        out << "iota infinite\n";
        return 0;
    }
    if (r.degenerate) {
        out << "iota 0 (constant word, no gap)\n";
        return 0;
    }
    out << "iota = " << r.value << " (attained at";
    for (long c : r.attaining) out << " " << c;
    out << " mod " << w.size() << ")\n";
    return 0;
}

// ---- betasym ---------------------------------------------------------------

int cmd_betasym_expand(long b, Sign sign, const std::string& x_text, long max_steps,
                       std::ostream& out) {
    QuadUnit unit(b, sign);
    Surd x = parse_surd(x_text);
    SymBetaExpansion e = sym_beta_encode(x, unit, static_cast<size_t>(max_steps));
    out << unit.describe() << ", x = " << x.to_string() << "\n";
    out << "digits: " << e.digits.to_string() << "\n";
    out << "reconstructs exactly: " << (sym_beta_reconstruct(e.digits, unit) == x ? "yes" : "NO")
        << "\n";
    return 0;
}

int cmd_betasym_boundary(long b, Sign sign, long digits, std::ostream& out) {
    QuadUnit unit(b, sign);
    BoundaryExpansions be = boundary_expansions(unit);
    out << unit.describe() << "\n";
    out << "digits of +1/2: " << be.upper.to_string() << "\n";
    out << "digits of -1/2: " << be.lower.to_string() << "\n";
    if (digits > 0) {
        out << "first " << digits << ": " << word_to_string(be.upper.prefix(digits)) << "  |  "
            << word_to_string(be.lower.prefix(digits)) << "\n";
    }
    return 0;
}

int cmd_betasym_admissible(long b, Sign sign, const std::string& digit_text, long preperiod,
                           std::ostream& out) {
    QuadUnit unit(b, sign);
    std::vector<long> ds = parse_digit_list(digit_text);
    if (preperiod < 0 || preperiod >= static_cast<long>(ds.size()))
        throw std::invalid_argument("preperiod must leave a nonempty period");
    EPWord w;
    for (long i = 0; i < static_cast<long>(ds.size()); ++i) {
        Letter l = static_cast<Letter>(ds[static_cast<size_t>(i)]);
        (i < preperiod ? w.preperiod : w.period).push_back(l);
    }
    bool ok = is_admissible(w, unit);
    out << (ok ? "admissible" : "not admissible") << "\n";
    return 0;
}

// ---- interval ---------------------------------------------------------------

int cmd_interval(long b, Sign sign, const std::string& eta_text, long window, bool as_json,
                 std::ostream& out) {
    KappaCase kc = kappa_and_keys(b, sign);
    const char* key_names[] = {"k1", "k2", "k3", "k4", "k5"};
    Surd eta = eta_text.empty() ? kc.kappa : parse_surd(eta_text);
    if (eta < kc.kappa || eta > Surd(make_rat(1, 2)))
        throw std::invalid_argument("interval: eta must lie in [kappa, 1/2], kappa = " +
                                    kc.kappa.to_string());
    BuiltWord built = build_biword(eta, kc);
    if (as_json) {
        json j{{"command", "interval"},
               {"b", b},
               {"sign", sign_name(sign)},
               {"kappa", kc.kappa.to_string()},
               {"key", key_names[static_cast<int>(kc.key)]},
               {"split", kc.split == SplitRule::alternating ? "alternating" : "plain"},
               {"bound_lhs", kc.sides.lhs.to_string()},
               {"bound_rhs", kc.sides.rhs.to_string()},
               {"bound_holds", kc.sides.holds},
               {"eta", eta.to_string()},
               {"digits", word_to_string(built.word.word.window(-window, window))},
               {"shift_sup", built.sup.value.to_string()},
               {"sup_attained", built.sup.attained}};
        out << j.dump(2) << "\n";
    } else {
        out << kc.unit.describe() << ": interval [kappa, 1/2], kappa = " << kc.kappa.to_string()
            << "\n";
        out << "certifying bound " << key_names[static_cast<int>(kc.key)] << " ("
            << (kc.split == SplitRule::alternating ? "alternating" : "plain")
            << " split): lhs = " << kc.sides.lhs.to_string()
            << ", rhs = " << kc.sides.rhs.to_string() << ", holds "
            << (kc.sides.holds ? "yes" : "no (certified by the exact all-shift supremum)") << "\n";
        out << "eta = " << eta.to_string() << "\n";
        out << "digits [" << -window << ".." << window
            << "]: " << word_to_string(built.word.word.window(-window, window)) << "\n";
        out << "value g = eta exactly; supremum over all shifts = "
            << built.sup.value.to_string() << (built.sup.attained ? " (attained)" : " (limit)")
            << "\n";
    }
    return 0;
}

// ---- dim ----------------------------------------------------------------------

int cmd_dim(const std::string& case_spec, const std::string& t_text, long search_limit,
            mpfr_prec_t precision, bool as_json, std::ostream& out) {
    Rat t = parse_rat(t_text);
    if (precision == 0) precision = 128;
    Alpha a = parse_alpha_spec(case_spec);
    if (a.kind == Alpha::Kind::integer) {
        IntegerDimBound r = dimension_bound_integer(a.a, t, search_limit, precision);
        long threshold = dimension_level_threshold(a.a, t);
        if (as_json) {
            json j{{"command", "dim"},
                   {"case", case_spec},
                   {"t", rat_to_string(t)},
                   {"level", r.level},
                   {"blocks", r.block_count.get_str()},
                   {"bound", interval_json(r.bound)},
                   {"below_one", r.below_one},
                   {"threshold_level", threshold}};
            out << j.dump(2) << "\n";
        } else {
            out << "base " << r.a << ", t = " << rat_to_string(t) << "\n";
            out << "best level " << r.level << ": " << r.block_count.get_str()
                << " blocks, bound " << r.bound.mid_double() << " (below one: exact "
                << (r.below_one ? "yes" : "no") << ")\n";
            out << "every level >= " << threshold << " is certified below one\n";
        }
        return 0;
    }
    if (a.kind == Alpha::Kind::quadratic) {
        QuadDimBound r = dimension_bound_quadratic(a.quad->b(), a.quad->kind(), t, precision);
        Surd t0 = quadratic_zero_threshold(a.quad->b(), a.quad->kind());
        if (as_json) {
            json j{{"command", "dim"},
                   {"case", case_spec},
                   {"t", rat_to_string(t)},
                   {"m", r.m.get_str()},
                   {"bound", interval_json(r.bound)},
                   {"below_one", r.below_one},
                   {"t0", t0.to_string()}};
            out << j.dump(2) << "\n";
        } else {
            out << a.quad->describe() << ", t = " << rat_to_string(t) << "\n";
            out << "m = " << r.m.get_str() << ", bound " << r.bound.mid_double()
                << " (below one: exact " << (r.below_one ? "yes" : "no") << ")\n";
            out << "degenerate threshold t0 = " << t0.to_string() << " < 1/4\n";
        }
        return 0;
    }
    throw std::invalid_argument("dim: case must be int:A or quad:B:plus|minus");
}

// ---- verify --------------------------------------------------------------------

int cmd_verify(const std::string& which, bool list_only, std::ostream& out) {
    if (list_only) {
        for (const auto& n : acceptance_names()) out << n << "\n";
        return 0;
    }
    std::vector<CriterionResult> results;
    if (which == "all")
        results = run_all_acceptance();
    else
        results.push_back(run_acceptance(which));
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.passed;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (r.passed ? "PASS" : "FAIL") << " " << r.name << " (" << r.seconds << "s) "
             << r.detail;
        out << line.str() << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact spectra of limsup distances ||xi alpha^n|| to the nearest integer"};
    app.name("geospec");
    app.require_subcommand(1);

    mpfr_prec_t default_prec = env_precision();

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "discrete spectrum tables");
    spectrum->require_subcommand(1);
    long si_base = 2;
    int si_count = 8;
    bool si_json = false, si_csv = false;
    auto* spectrum_int = spectrum->add_subcommand("integer", "integer base table");
    spectrum_int->add_option("--base", si_base, "integer base a >= 2")->required();
    spectrum_int->add_option("--count", si_count, "points k = 0..count");
    spectrum_int->add_flag("--json", si_json, "JSON output");
    spectrum_int->add_flag("--csv", si_csv, "CSV output");

    long sq_b = 4;
    std::string sq_sign = "plus";
    int sq_count = 8;
    bool sq_json = false;
    auto* spectrum_quad = spectrum->add_subcommand("quadratic", "quadratic unit table");
    spectrum_quad->add_option("--b", sq_b, "trace b of x^2 - bx +- 1")->required();
    spectrum_quad->add_option("--sign", sq_sign, "plus or minus")->required();
    spectrum_quad->add_option("--count", sq_count, "rows n = 0..count");
    spectrum_quad->add_flag("--json", sq_json, "JSON output");

    // limsup
    std::string ls_alpha, ls_xi;
    long ls_iters = 10000;
    long ls_prec = 0;
    bool ls_json = false;
    auto* limsup = app.add_subcommand("limsup", "running max of ||xi alpha^n||");
    limsup->add_option("--alpha", ls_alpha, "int:A | quad:B:plus|minus | poly:c0,c1,...,1")
        ->required();
    limsup->add_option("--xi", ls_xi, "rational p/q, surd (p+q*sqrt(D))/r, or decimal")
        ->required();
    limsup->add_option("--iters", ls_iters, "orbit length");
    limsup->add_option("--precision", ls_prec, "working precision bits (0 = auto)");
    limsup->add_flag("--json", ls_json, "JSON output");

    // words
    auto* words = app.add_subcommand("words", "balanced-word and Christoffel tools");
    words->require_subcommand(1);
    long wc_p = 1, wc_q = 2;
    bool wc_upper = false;
    auto* words_chr = words->add_subcommand("christoffel", "Christoffel word of slope p/q");
    words_chr->add_option("--p", wc_p, "ones count")->required();
    words_chr->add_option("--q", wc_q, "length")->required();
    words_chr->add_flag("--upper", wc_upper, "upper word 1v0 instead of lower 0v1");

    std::string wb_word;
    auto* words_bal = words->add_subcommand("balanced-check", "balance and forbidden-factor check");
    words_bal->add_option("word", wb_word, "binary word")->required();

    std::string wf_word;
    auto* words_forb = words->add_subcommand("forbidden-scan", "scan for 0v01~v1 shapes");
    words_forb->add_option("word", wf_word, "binary word")->required();

    std::string wp_word;
    auto* words_phi = words->add_subcommand("phi", "block recoding of a periodic word");
    words_phi->add_option("--word", wp_word, "one period")->required();

    std::string wi_word;
    bool wi_window = false;
    auto* words_iota = words->add_subcommand("iota", "symmetric extension at gaps");
    words_iota->add_option("--word", wi_word, "one period (or a finite window)")->required();
    words_iota->add_flag("--window", wi_window, "treat the word as a finite window");

    // betasym
    auto* betasym = app.add_subcommand("betasym", "symmetric beta expansions");
    betasym->require_subcommand(1);
    long be_b = 4, bb_b = 4, ba_b = 4;
    std::string be_sign = "plus", bb_sign = "plus", ba_sign = "plus";
    std::string be_x;
    long be_steps = 4096;
    auto* beta_exp = betasym->add_subcommand("expand", "digit expansion of x");
    beta_exp->add_option("--b", be_b, "trace")->required();
    beta_exp->add_option("--sign", be_sign, "plus or minus")->required();
    beta_exp->add_option("--x", be_x, "rational or surd in the unit's field")->required();
    beta_exp->add_option("--max-steps", be_steps, "period search budget");

    long bb_digits = 30;
    auto* beta_bnd = betasym->add_subcommand("boundary", "expansions of +-1/2");
    beta_bnd->add_option("--b", bb_b, "trace")->required();
    beta_bnd->add_option("--sign", bb_sign, "plus or minus")->required();
    beta_bnd->add_option("--digits", bb_digits, "how many digits to print");

    std::string ba_digits;
    long ba_pre = 0;
    auto* beta_adm = betasym->add_subcommand("admissible", "lexicographic sandwich check");
    beta_adm->add_option("--b", ba_b, "trace")->required();
    beta_adm->add_option("--sign", ba_sign, "plus or minus")->required();
    beta_adm->add_option("--digits", ba_digits, "comma-separated digits")->required();
    beta_adm->add_option("--preperiod", ba_pre, "length of the preperiodic prefix");

    // interval
    long iv_b = 4;
    std::string iv_sign = "plus", iv_eta;
    long iv_window = 12;
    bool iv_json = false;
    auto* interval = app.add_subcommand("interval", "split-word interval construction");
    interval->add_option("--b", iv_b, "trace")->required();
    interval->add_option("--sign", iv_sign, "plus or minus")->required();
    interval->add_option("--eta", iv_eta, "target value in [kappa, 1/2] (default kappa)");
    interval->add_option("--window", iv_window, "digit positions to print on each side");
    interval->add_flag("--json", iv_json, "JSON output");

    // dim
    std::string dm_case, dm_t;
    long dm_search = 64;
    long dm_prec = 0;
    bool dm_json = false;
    auto* dim = app.add_subcommand("dim", "dimension bounds for sub-threshold level sets");
    dim->add_option("--case", dm_case, "int:A or quad:B:plus|minus")->required();
    dim->add_option("--t", dm_t, "threshold in (0, 1/2), rational or decimal")->required();
    dim->add_option("--search-limit", dm_search, "integer case: max refinement level");
    dim->add_option("--precision", dm_prec, "enclosure precision bits");
    dim->add_flag("--json", dm_json, "JSON output");

    // verify
    std::string vf_which = "all";
    bool vf_list = false;
    auto* verify = app.add_subcommand("verify", "run acceptance suites");
    verify->add_option("suite", vf_which, "suite name, or 'all'");
    verify->add_flag("--list", vf_list, "list suite names");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("geospec");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (spectrum_int->parsed())
            return cmd_spectrum_integer(si_base, si_count, si_json, si_csv, out);
        if (spectrum_quad->parsed())
            return cmd_spectrum_quadratic(sq_b, parse_sign(sq_sign), sq_count, sq_json, out);
        if (limsup->parsed()) {
            mpfr_prec_t prec = ls_prec > 0 ? static_cast<mpfr_prec_t>(ls_prec) : default_prec;
            return cmd_limsup(ls_alpha, ls_xi, ls_iters, prec, ls_json, out);
        }
        if (words_chr->parsed()) return cmd_words_christoffel(wc_p, wc_q, wc_upper, out);
        if (words_bal->parsed()) return cmd_words_balanced(wb_word, out);
        if (words_forb->parsed()) return cmd_words_forbidden(wf_word, out);
        if (words_phi->parsed()) return cmd_words_phi(wp_word, out);
        if (words_iota->parsed()) return cmd_words_iota(wi_word, wi_window, out);
        if (beta_exp->parsed())
            return cmd_betasym_expand(be_b, parse_sign(be_sign), be_x, be_steps, out);
        if (beta_bnd->parsed())
            return cmd_betasym_boundary(bb_b, parse_sign(bb_sign), bb_digits, out);
        if (beta_adm->parsed())
            return cmd_betasym_admissible(ba_b, parse_sign(ba_sign), ba_digits, ba_pre, out);
        if (interval->parsed())
            return cmd_interval(iv_b, parse_sign(iv_sign), iv_eta, iv_window, iv_json, out);
        if (dim->parsed()) {
            mpfr_prec_t prec = dm_prec > 0 ? static_cast<mpfr_prec_t>(dm_prec) : default_prec;
            return cmd_dim(dm_case, dm_t, dm_search, prec, dm_json, out);
        }
        if (verify->parsed()) return cmd_verify(vf_which, vf_list, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace geospec
