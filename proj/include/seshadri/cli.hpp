#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end. Every number crossing this boundary is exact
 *        (integer, "p/q", or "sqrt(p/q)"); --approx adds 12-significant-digit
 *        decimals labeled as approximations, and --json switches to a
 *        structured report whose parse/re-serialize round-trip is the
 *        identity.
 *
 * Exit status: 0 on success, 1 on usage or precondition errors, 2 when a
 * verification subcommand finds a failure.
 */

#include "seshadri/bounds.hpp"
#include "seshadri/exactnum.hpp"
#include "seshadri/numlat.hpp"
#include "seshadri/oracle.hpp"
#include "seshadri/ratcurves.hpp"
#include "seshadri/seshadri.hpp"
#include "seshadri/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace seshadri::cli {

namespace detail {

using Float50 = boost::multiprecision::cpp_bin_float_50;

inline std::string approx12(const Rat& q) {
    const Float50 v = Float50(q.num()) / Float50(q.den());
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

inline std::string approx12(const RootVal& r) {
    const Float50 v = sqrt(Float50(r.radicand().num()) / Float50(r.radicand().den()));
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

/// One output document, rendered either as "key = value" text lines or as a
/// JSON object. Exact values carry optional approximations.
class Report {
public:
    Report(bool json, bool approx) : json_(json), approx_(approx) {}

    void field(const std::string& key, long long v) { j_[key] = v; line(key, std::to_string(v)); }
    void field(const std::string& key, bool v) { j_[key] = v; line(key, v ? "true" : "false"); }
    void field(const std::string& key, const std::string& v) { j_[key] = v; line(key, v); }
    void field(const std::string& key, DivClass d) {
        j_[key] = {d.a, d.b};
        line(key, seshadri::to_string(d));
    }
    void field(const std::string& key, const Rat& v) {
        j_[key] = seshadri::to_string(v);
        if (approx_) j_[key + "_approx"] = approx12(v);
        line(key, seshadri::to_string(v) + (approx_ ? " (approx " + approx12(v) + ")" : ""));
    }
    void field(const std::string& key, const RootVal& v) {
        j_[key] = seshadri::to_string(v);
        if (approx_) j_[key + "_approx"] = approx12(v);
        line(key, seshadri::to_string(v) + (approx_ ? " (approx " + approx12(v) + ")" : ""));
    }
    void field(const std::string& key, const CurveCertificate& c) {
        j_[key] = cert_json(c);
        line(key, seshadri::to_string(c));
    }
    void text_line(const std::string& s) { text_ << s << "\n"; }  // text-only extras
    nlohmann::json& json() { return j_; }

    void render(std::ostream& out) const {
        if (json_)
            out << j_.dump(2) << "\n";
        else
            out << text_.str();
    }

private:
    static nlohmann::json cert_json(const CurveCertificate& c) {
        struct V {
            nlohmann::json operator()(const FibreCurve& f) const {
                return {{"kind", "fibre-curve"}, {"t", f.t}};
            }
            nlohmann::json operator()(const SectionC0& s) const {
                return {{"kind", "section-c0"}, {"s", s.s}};
            }
            nlohmann::json operator()(const ScrollDivisor& d) const {
                return {{"kind", "divisor"}, {"class", {d.cls.a, d.cls.b}}, {"points", d.points}};
            }
            nlohmann::json operator()(const TheoremTag& t) const {
                return {{"kind", "theorem"}, {"name", t.name}};
            }
        };
        return std::visit(V{}, c);
    }

    void line(const std::string& key, const std::string& value) {
        text_ << key << " = " << value << "\n";
    }

    bool json_;
    bool approx_;
    nlohmann::json j_;
    std::ostringstream text_;
};

}  // namespace detail

/// Parse and execute one invocation (argv without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact multi-point Seshadri constants on ruled surfaces", "ruled"};
    app.require_subcommand(1);
    bool json_mode = false, approx_mode = false;
    app.add_flag("--json", json_mode, "structured (JSON) output");
    app.add_flag("--approx", approx_mode, "also print 12-significant-digit decimal approximations");

    long long e = 0, genus = 0, a1 = 0, b1 = 0, a2 = 0, b2 = 0, a = 0, b = 0;
    long long r = 0, t = 0, s = 0, Lsq = 0, qa = 0, qt = 0;
    long long max_a = -1, max_b = -1, max_mult = -1;
    bool k3 = false;
    std::string verify_target;

    CLI::App* intersect_cmd = app.add_subcommand("intersect", "intersection number of two classes");
    intersect_cmd->fallthrough();
    intersect_cmd->add_option("e", e, "surface invariant e")->required();
    intersect_cmd->add_option("a1", a1, "C0-coefficient of the first class")->required();
    intersect_cmd->add_option("b1", b1, "f-coefficient of the first class")->required();
    intersect_cmd->add_option("a2", a2, "C0-coefficient of the second class")->required();
    intersect_cmd->add_option("b2", b2, "f-coefficient of the second class")->required();
    intersect_cmd->add_option("--genus", genus, "base curve genus (default 0)");

    CLI::App* ample_cmd = app.add_subcommand("ample", "ampleness test for a class");
    ample_cmd->fallthrough();
    ample_cmd->add_option("e", e, "surface invariant e")->required();
    ample_cmd->add_option("a", a, "C0-coefficient")->required();
    ample_cmd->add_option("b", b, "f-coefficient")->required();
    ample_cmd->add_option("--genus", genus, "base curve genus (default 0)");

    CLI::App* h0_cmd = app.add_subcommand("h0", "dimension of the space of global sections");
    h0_cmd->fallthrough();
    h0_cmd->add_option("e", e, "surface invariant e")->required();
    h0_cmd->add_option("a", a, "C0-coefficient")->required();
    h0_cmd->add_option("b", b, "f-coefficient")->required();

    CLI::App* genus_cmd = app.add_subcommand("genus", "arithmetic genus of a class");
    genus_cmd->fallthrough();
    genus_cmd->add_option("e", e, "surface invariant e")->required();
    genus_cmd->add_option("a", a, "C0-coefficient")->required();
    genus_cmd->add_option("b", b, "f-coefficient")->required();

    CLI::App* classify_cmd = app.add_subcommand("classify", "smooth-rational-curve case of a class");
    classify_cmd->fallthrough();
    classify_cmd->add_option("e", e, "surface invariant e")->required();
    classify_cmd->add_option("a", a, "C0-coefficient")->required();
    classify_cmd->add_option("b", b, "f-coefficient")->required();

    CLI::App* ses_cmd = app.add_subcommand("seshadri", "exact Seshadri constants");
    ses_cmd->fallthrough();
    ses_cmd->require_subcommand(1);
    CLI::App* exact_cmd = ses_cmd->add_subcommand(
        "exact", "value at r <= e points with t on one fibre, s on the section");
    exact_cmd->fallthrough();
    exact_cmd->add_option("e", e, "surface invariant e")->required();
    exact_cmd->add_option("a", a, "C0-coefficient of L")->required();
    exact_cmd->add_option("b", b, "f-coefficient of L")->required();
    exact_cmd->add_option("r", r, "number of points")->required();
    exact_cmd->add_option("t", t, "largest number of the points on one fibre")->required();
    exact_cmd->add_option("s", s, "number of the points on the section C0")->required();
    exact_cmd->add_option("--genus", genus, "base curve genus (default 0)");
    CLI::App* scroll_cmd = ses_cmd->add_subcommand("scroll", "exact value for the scroll family");
    scroll_cmd->fallthrough();
    scroll_cmd->add_option("r", r, "number of points (>= 3)")->required();
    CLI::App* anyq_cmd =
        ses_cmd->add_subcommand("anyq", "construction realizing the prescribed value a/t");
    anyq_cmd->fallthrough();
    anyq_cmd->add_option("a", qa, "numerator (>= 1)")->required();
    anyq_cmd->add_option("t", qt, "denominator (>= 1)")->required();

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "lower/upper bound report for (L^2, r)");
    bounds_cmd->fallthrough();
    bounds_cmd->add_option("Lsq", Lsq, "self-intersection L^2")->required();
    bounds_cmd->add_option("r", r, "number of points")->required();
    bounds_cmd->add_flag("--k3", k3, "also evaluate the K3 guarantee gate");

    CLI::App* guarantee_cmd =
        app.add_subcommand("guarantee", "guaranteed lower bound for many points");
    guarantee_cmd->fallthrough();
    guarantee_cmd->add_option("e", e, "surface invariant e")->required();
    guarantee_cmd->add_option("a", a, "C0-coefficient of L")->required();
    guarantee_cmd->add_option("b", b, "f-coefficient of L")->required();
    guarantee_cmd->add_option("r", r, "number of points")->required();

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force searches and scans");
    oracle_cmd->fallthrough();
    oracle_cmd->require_subcommand(1);
    CLI::App* search_cmd =
        oracle_cmd->add_subcommand("search", "certified upper bound at r very general points");
    search_cmd->fallthrough();
    search_cmd->add_option("e", e, "surface invariant e")->required();
    search_cmd->add_option("a", a, "C0-coefficient of L")->required();
    search_cmd->add_option("b", b, "f-coefficient of L")->required();
    search_cmd->add_option("r", r, "number of points")->required();
    search_cmd->add_option("--max-a", max_a, "cap on the C0-coefficient of searched classes");
    search_cmd->add_option("--max-b", max_b, "cap on the f-coefficient of searched classes");
    search_cmd->add_option("--max-mult", max_mult, "cap on the multiplicity sum");
    CLI::App* thm31_cmd = oracle_cmd->add_subcommand(
        "verify-thm31", "class-by-class check of the special-configuration value");
    thm31_cmd->fallthrough();
    thm31_cmd->add_option("e", e, "surface invariant e")->required();
    thm31_cmd->add_option("a", a, "C0-coefficient of L")->required();
    thm31_cmd->add_option("b", b, "f-coefficient of L")->required();
    thm31_cmd->add_option("r", r, "number of points")->required();
    thm31_cmd->add_option("t", t, "largest number of the points on one fibre")->required();
    thm31_cmd->add_option("s", s, "number of the points on the section C0")->required();
    thm31_cmd->add_option("--max-a", max_a, "class cap (default 12)");
    thm31_cmd->add_option("--max-b", max_b, "class cap (default 12e+12)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "batch reproduction suites");
    verify_cmd->fallthrough();
    verify_cmd->add_option("target", verify_target, "suite to run (\"paper\")")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ruled");
    for (const auto& s_ : args) argv.push_back(s_.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help, out, err);
    } catch (const CLI::CallForAllHelp& help) {
        return app.exit(help, out, err);
    } catch (const CLI::ParseError& pe) {
        err << "usage error: " << pe.what() << "\n";
        return 1;
    }

    detail::Report rep(json_mode, approx_mode);
    try {
        if (*intersect_cmd) {
            const RuledSurface S(e, genus);
            const DivClass d1{a1, b1}, d2{a2, b2};
            rep.field("command", std::string("intersect"));
            rep.field("e", e);
            rep.field("genus", genus);
            rep.field("d1", d1);
            rep.field("d2", d2);
            rep.field("product", intersect(S, d1, d2));
        } else if (*ample_cmd) {
            const RuledSurface S(e, genus);
            const DivClass d{a, b};
            rep.field("command", std::string("ample"));
            rep.field("e", e);
            rep.field("genus", genus);
            rep.field("class", d);
            rep.field("ample", is_ample(S, d));
        } else if (*h0_cmd) {
            const RuledSurface S(e);
            const DivClass d{a, b};
            rep.field("command", std::string("h0"));
            rep.field("e", e);
            rep.field("class", d);
            rep.field("h0", h0(S, d));
        } else if (*genus_cmd) {
            const RuledSurface S(e);
            const DivClass d{a, b};
            rep.field("command", std::string("genus"));
            rep.field("e", e);
            rep.field("class", d);
            rep.field("genus", arithmetic_genus(S, d));
        } else if (*classify_cmd) {
            const RuledSurface S(e);
            const DivClass d{a, b};
            const RationalCurveCase c = classify_smooth_rational(S, d);
            rep.field("command", std::string("classify"));
            rep.field("e", e);
            rep.field("class", d);
            rep.field("label", case_label(c));
            rep.field("rational", c.is_rational_case());
            rep.field("genus", c.genus);
        } else if (*exact_cmd) {
            const RuledSurface S(e, genus);
            const DivClass L{a, b};
            const PointConfigSummary cfg(r, t, s);
            const SeshadriResult res = seshadri_special(S, L, cfg);
            rep.field("command", std::string("seshadri-exact"));
            rep.field("e", e);
            rep.field("genus", genus);
            rep.field("L", L);
            rep.field("r", r);
            rep.field("t", t);
            rep.field("s", s);
            rep.field("epsilon", res.value);
            rep.field("certificate", res.certificate);
        } else if (*scroll_cmd) {
            const ScrollInstance inst = scroll_example(r);
            const SearchParams p = SearchParams::defaults(inst.surface, inst.L, r);
            const SeshadriResult res = scroll_exact_value(r, p);
            rep.field("command", std::string("seshadri-scroll"));
            rep.field("r", r);
            rep.field("e", inst.surface.invariant_e);
            rep.field("L", inst.L);
            rep.field("epsilon", res.value);
            rep.field("certificate", res.certificate);
        } else if (*anyq_cmd) {
            const AnyQConstruction c = construct_any_q(qa, qt);
            rep.field("command", std::string("seshadri-anyq"));
            rep.field("a", qa);
            rep.field("t", qt);
            rep.field("e", c.surface.invariant_e);
            rep.field("L", c.L);
            rep.field("r", c.r);
            rep.field("epsilon", c.epsilon);
        } else if (*bounds_cmd) {
            const BoundReport br = bound_report(Lsq, r);
            rep.field("command", std::string("bounds"));
            rep.field("Lsq", Lsq);
            rep.field("r", r);
            rep.field("general", br.general_bound);
            rep.field("fibration", br.fibration_bound);
            rep.field("max", br.max_bound);
            rep.field("general_vs_fibration", std::string(ordering_symbol(br.general_vs_fibration)));
            rep.field("general_vs_max", std::string(ordering_symbol(br.general_vs_max)));
            rep.field("fibration_vs_max", std::string(ordering_symbol(br.fibration_vs_max)));
            if (Lsq == 1 && r == 2) {
                rep.field("note", "known submaximal instance: 1/2 " +
                                      std::string(ordering_symbol(
                                          cmp_rat_root(Rat(1, 2), br.general_bound))) +
                                      " " + seshadri::to_string(br.general_bound));
            } else if (r >= 3 && Lsq == r - 1) {
                const Rat known(r - 1, r);
                rep.field("note", "known submaximal instance: " + seshadri::to_string(known) + " " +
                                      std::string(ordering_symbol(
                                          cmp_rat_root(known, br.general_bound))) +
                                      " " + seshadri::to_string(br.general_bound));
            }
            if (k3) {
                const auto gate = k3_lower_bound(Lsq, r);
                rep.field("k3_guaranteed", gate.has_value());
                if (gate) rep.field("k3_bound", *gate);
            }
        } else if (*guarantee_cmd) {
            const RuledSurface S(e);
            const DivClass L{a, b};
            const auto bound = guaranteed_bound_rational_ruled(S, L, r);
            rep.field("command", std::string("guarantee"));
            rep.field("e", e);
            rep.field("L", L);
            rep.field("r", r);
            rep.field("Lsq", intersect(S, L, L));
            rep.field("guaranteed", bound.has_value());
            if (bound)
                rep.field("bound", *bound);
            else
                rep.text_line("(requires r >= L^2 + 5 = " +
                              std::to_string(intersect(S, L, L) + 5) + ")");
        } else if (*search_cmd) {
            const RuledSurface S(e);
            const DivClass L{a, b};
            const SearchParams defs = SearchParams::defaults(S, L, r);
            const SearchParams p(max_a > 0 ? max_a : defs.max_a, max_b > 0 ? max_b : defs.max_b,
                                 max_mult > 0 ? max_mult : defs.max_total_mult);
            const UpperBoundCert cert = upper_bound_very_general(S, L, r, p);
            rep.field("command", std::string("oracle-search"));
            rep.field("e", e);
            rep.field("L", L);
            rep.field("r", r);
            rep.field("max_a", p.max_a);
            rep.field("max_b", p.max_b);
            rep.field("max_total_mult", p.max_total_mult);
            rep.field("class", cert.cls);
            rep.json()["mults"] = cert.mults.entries();
            std::string ms;
            for (long long m : cert.mults) ms += (ms.empty() ? "" : ",") + std::to_string(m);
            rep.text_line("mults = (" + ms + ")");
            rep.field("value", cert.value);
        } else if (*thm31_cmd) {
            const RuledSurface S(e);
            const DivClass L{a, b};
            const PointConfigSummary cfg(r, t, s);
            const SearchParams p(max_a > 0 ? max_a : 12, max_b > 0 ? max_b : 12 * e + 12, 1);
            const TheoremScanReport scan = verify_theorem_r_le_e(S, L, cfg, p);
            rep.field("command", std::string("oracle-verify-thm31"));
            rep.field("e", e);
            rep.field("L", L);
            rep.field("r", r);
            rep.field("t", t);
            rep.field("s", s);
            rep.field("max_a", scan.max_a);
            rep.field("max_b", scan.max_b);
            rep.field("epsilon", scan.expected.value);
            rep.field("certificate", scan.expected.certificate);
            rep.field("classes_checked", scan.classes_checked);
            {
                auto& v = rep.json()["violators"] = nlohmann::json::array();
                for (DivClass d : scan.violators) v.push_back({d.a, d.b});
                rep.text_line("violators = " + std::to_string(scan.violators.size()));
                for (DivClass d : scan.violators) rep.text_line("  violator " + seshadri::to_string(d));
            }
            if (scan.worst_class) rep.field("worst_class", *scan.worst_class);
            if (scan.worst_ratio) rep.field("worst_ratio", *scan.worst_ratio);
            rep.field("passed", scan.passed());
            rep.render(out);
            return scan.passed() ? 0 : 2;
        } else if (*verify_cmd) {
            if (verify_target != "paper") {
                err << "usage error: unknown verify target \"" << verify_target
                    << "\" (expected \"paper\")\n";
                return 1;
            }
            const std::vector<verify::CriterionResult> results = verify::run_all();
            bool all = true;
            auto criteria = nlohmann::json::array();
            for (const auto& c : results) {
                all = all && c.passed;
                criteria.push_back({{"id", c.id},
                                    {"name", c.name},
                                    {"passed", c.passed},
                                    {"detail", c.detail},
                                    {"seconds", c.seconds}});
                std::ostringstream os;
                os << (c.passed ? "PASS" : "FAIL") << " " << std::setw(2) << c.id << " " << c.name
                   << " - " << c.detail << " (" << std::fixed << std::setprecision(2) << c.seconds
                   << "s)";
                rep.text_line(os.str());
            }
            rep.json()["command"] = "verify-paper";
            rep.json()["criteria"] = criteria;
            rep.json()["passed"] = all;
            rep.text_line(all ? "all criteria passed" : "criteria FAILED");
            rep.render(out);
            return all ? 0 : 2;
        }
    } catch (const std::domain_error& ex) {
        err << "precondition violated: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << "\n";
        return 1;
    }
    rep.render(out);
    return 0;
}

}  // namespace seshadri::cli
