// kleinian: exact invariants of the octahedral/cuboctahedral Kleinian groups
// over Q(i, sqrt2) — word evaluation, verification suites, trace fields, cusp
// moduli, trace integrality, mod-2 homology.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kleinian/catalog.hpp"
#include "kleinian/errors.hpp"
#include "kleinian/invariants.hpp"
#include "kleinian/report.hpp"
#include "kleinian/suites.hpp"

namespace {

using namespace kleinian;

struct GlobalOpts {
    bool json = false;
    bool no_timestamp = false;
    std::string output;
};

std::string join_argv(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

int emit(const GlobalOpts& opts, Report&& report) {
    if (!opts.no_timestamp) report.timestamp = current_timestamp_rfc3339();
    std::string text = opts.json ? report.to_json() : report.to_text();
    std::cout << text;
    if (opts.json) std::cout << "\n";
    if (!opts.output.empty()) {
        std::ofstream out(opts.output);
        if (!out) {
            std::cerr << "cannot write to " << opts.output << "\n";
            return 2;
        }
        out << text;
        if (opts.json) out << "\n";
    }
    return report.exit_code();
}

Check computation(std::string id, std::string details, std::string result_json,
                  CheckStatus status = CheckStatus::Pass) {
    return {std::move(id), status, std::move(details), std::move(result_json)};
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

// --generators "a,b" splits on commas at depth zero, so Conj(c^2, f) survives.
std::vector<std::string> split_generators(const std::string& list) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : list) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

catalog::GroupSpec resolve_group(const std::string& family, int n, const std::string& generators,
                                 const std::string& ns_name) {
    if (!generators.empty()) {
        catalog::NamespaceId ns = catalog::parse_namespace(ns_name.empty() ? "links" : ns_name);
        catalog::GroupSpec spec;
        spec.name = "<" + generators + ">";
        for (const auto& w : split_generators(generators))
            spec.generators.emplace_back(w, evaluate_word(w, catalog::namespace_of(ns)));
        return spec;
    }
    if (family.empty()) throw DomainError("either --family or --generators is required");
    return catalog::family_generators(catalog::parse_family(family), n);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of octahedral/cuboctahedral Kleinian groups over Q(i,sqrt2)"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    GlobalOpts opts;
    app.add_flag("--json", opts.json, "emit the report as JSON");
    app.add_flag("--no-timestamp", opts.no_timestamp, "omit the timestamp field");
    app.add_option("--output", opts.output, "also write the report to a file");

    // verify
    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite, "all|section2..section6|geometry")->capture_default_str();

    // modulus
    std::string mod_family, mod_cusp = "knotted";
    int mod_n = 1;
    auto* modulus = app.add_subcommand("modulus", "cusp modulus of a family member");
    modulus->add_option("--family", mod_family, "links|mutant|onecusped")->required();
    modulus->add_option("--n", mod_n, "family index")->required();
    modulus->add_option("--cusp", mod_cusp, "knotted|other (links family)")->capture_default_str();

    // tracefield
    std::string tf_family, tf_generators, tf_ns;
    int tf_n = 1, tf_radius = 2;
    bool tf_invariant = false;
    auto* tracefield = app.add_subcommand("tracefield", "trace field of a group");
    tracefield->add_option("--family", tf_family, "links|mutant|onecusped");
    tracefield->add_option("--n", tf_n, "family index");
    tracefield->add_option("--generators", tf_generators, "comma-separated generator words");
    tracefield->add_option("--namespace", tf_ns, "namespace for --generators");
    tracefield->add_flag("--invariant", tf_invariant,
                         "lower bound for the invariant trace field instead");
    tracefield->add_option("--radius", tf_radius, "word radius for --invariant")
        ->capture_default_str();

    // equivalent
    std::string eq_z, eq_w;
    auto* equivalent = app.add_subcommand("equivalent", "PGL2(Q) equivalence of two moduli");
    equivalent->add_option("--z", eq_z, "element in canonical form, or inf")->required();
    equivalent->add_option("--w", eq_w, "element in canonical form, or inf")->required();

    // homology
    int hom_n = 1;
    auto* homology = app.add_subcommand("homology", "mod-2 homology dimension of a one-cusped member");
    homology->add_option("--n", hom_n, "family index (>= 1)")->required();

    // minpoly
    std::string mp_word, mp_ns = "links";
    bool mp_trace = false;
    auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial of a word's trace");
    minpoly->add_option("--word", mp_word, "word over the namespace generators")->required();
    minpoly->add_option("--namespace", mp_ns, "links|onecusped")->capture_default_str();
    minpoly->add_flag("--trace", mp_trace, "include the trace element in the report");

    // integral
    std::string in_family, in_generators, in_ns;
    int in_n = 0, in_radius = 3;
    auto* integral = app.add_subcommand("integral", "trace integrality certificate or witness");
    integral->add_option("--family", in_family, "links|mutant|onecusped");
    integral->add_option("--n", in_n, "family index");
    integral->add_option("--generators", in_generators, "comma-separated generator words");
    integral->add_option("--namespace", in_ns, "namespace for --generators");
    integral->add_option("--radius", in_radius, "word search radius")->capture_default_str();

    // eval
    std::string ev_word, ev_ns = "links";
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a word to an exact matrix");
    eval_cmd->add_option("--word", ev_word, "word over the namespace generators")->required();
    eval_cmd->add_option("--namespace", ev_ns, "links|onecusped")->capture_default_str();

    // selftest
    int st_samples = 1000;
    auto* selftest = app.add_subcommand("selftest", "randomized exact property suites");
    selftest->add_option("--samples", st_samples, "samples per property")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report report;
    report.command = join_argv(argc, argv);

    try {
        if (*verify) {
            if (suite == "all") {
                report.checks = suites::all_checks();
            } else if (suite == "geometry") {
                report.checks = suites::geometry_checks();
            } else {
                report.checks = suites::section_checks(catalog::parse_suite(suite));
            }
        } else if (*modulus) {
            catalog::Family fam = catalog::parse_family(mod_family);
            if (fam == catalog::Family::Mutant)
                throw DomainError(
                    "no catalog cusp words exist for the mutant family; it is distinguished by "
                    "trace integrality (see `integral`), not by cusp moduli");
            Matrix alpha = Matrix::identity(), beta = Matrix::identity();
            FieldElement normal_form;
            std::string cusp_label;
            if (fam == catalog::Family::Links) {
                if (mod_n < 1) throw DomainError("links cusp words require n >= 1");
                const Namespace& ns = catalog::links_namespace();
                if (mod_cusp == "knotted") {
                    alpha = ns.lookup("p1");
                    beta = catalog::links_lambda1(mod_n);
                } else if (mod_cusp == "other") {
                    alpha = ns.lookup("p2");
                    beta = catalog::links_lambda2(mod_n);
                } else {
                    throw DomainError("--cusp must be knotted or other");
                }
                cusp_label = mod_cusp;
                normal_form = FieldElement(0, 1, 0, Rational(2 * mod_n));
            } else {
                if (mod_n < 1) throw DomainError("onecusped family requires n >= 1");
                alpha = catalog::onecusped_namespace().lookup("mu");
                beta = catalog::onecusped_lambda(mod_n);
                cusp_label = "single";
                normal_form = FieldElement(1, 4, 0, Rational(4 * mod_n));
            }
            invariants::ModulusClass cls = invariants::cusp_modulus(alpha, beta);
            bool equiv = invariants::moduli_equivalent(cls.representative, ProjPoint(normal_form));
            std::string id = "modulus." + mod_family + ".n" + std::to_string(mod_n) + "." + cusp_label;
            report.checks.push_back(computation(
                id,
                "representative " + cls.representative.str() + (equiv ? " ~ " : " !~ ") +
                    normal_form.str(),
                "{\"representative\": " + quote(cls.representative.str()) +
                    ", \"normal_form\": " + quote(normal_form.str()) +
                    ", \"equivalent\": " + (equiv ? "true" : "false") + "}",
                equiv ? CheckStatus::Pass : CheckStatus::Fail));
        } else if (*tracefield) {
            catalog::GroupSpec spec = resolve_group(tf_family, tf_n, tf_generators, tf_ns);
            Subfield fld = tf_invariant ? invariants::invariant_trace_field_lower(spec, tf_radius)
                                        : invariants::trace_field(spec);
            std::string id = std::string(tf_invariant ? "invariant_trace_field." : "trace_field.") +
                             spec.name;
            report.checks.push_back(computation(
                id,
                (tf_invariant ? "invariant trace field lower bound " : "trace field ") +
                    subfield_str(fld),
                quote(subfield_str(fld))));
        } else if (*equivalent) {
            ProjPoint z = ProjPoint::parse(eq_z), w = ProjPoint::parse(eq_w);
            bool eq = invariants::moduli_equivalent(z, w);
            report.checks.push_back(computation(
                "moduli_equivalent", z.str() + (eq ? " ~ " : " !~ ") + w.str(),
                eq ? "true" : "false"));
        } else if (*homology) {
            invariants::Presentation2 pres = invariants::homology_presentation(hom_n);
            int rank = invariants::gf2_rank(pres.relations);
            int dim = static_cast<int>(pres.generators.size()) - rank;
            report.checks.push_back(computation(
                "homology.n" + std::to_string(hom_n),
                "mod-2 homology dimension " + std::to_string(dim) + " (relation rank " +
                    std::to_string(rank) + ")",
                std::to_string(dim)));
        } else if (*minpoly) {
            const Namespace& ns = catalog::namespace_of(catalog::parse_namespace(mp_ns));
            FieldElement t = evaluate_word(mp_word, ns).trace();
            IntPolynomial p = minimal_polynomial(t);
            std::string coeffs = "[";
            for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
                if (k) coeffs += ", ";
                coeffs += quote(p.coeffs[k].str());
            }
            coeffs += "]";
            std::string result = "{\"word\": " + quote(mp_word) + ", \"minpoly\": " + coeffs +
                                 ", \"algebraic_integer\": " +
                                 (p.is_monic() ? "true" : "false");
            if (mp_trace) result += ", \"trace\": " + quote(t.str());
            result += "}";
            std::string details = "minimal polynomial of trace: " + p.str();
            if (mp_trace) details += "; trace " + t.str();
            report.checks.push_back(computation("minpoly", details, result));
        } else if (*integral) {
            catalog::GroupSpec spec = resolve_group(in_family, in_n, in_generators, in_ns);
            invariants::IntegralityResult res = invariants::integral_traces(spec, in_radius);
            std::string id = "integral." + spec.name;
            switch (res.kind) {
                case invariants::IntegralityResult::Kind::Certificate:
                    report.checks.push_back(computation(
                        id, "integral entries certify integral traces",
                        "{\"kind\": \"certificate\"}"));
                    break;
                case invariants::IntegralityResult::Kind::Witness:
                    report.checks.push_back(computation(
                        id,
                        "nonintegral trace witness " + res.word + " with minimal polynomial " +
                            res.minpoly.str(),
                        "{\"kind\": \"witness\", \"witness\": " + res.witness_json() + "}"));
                    break;
                case invariants::IntegralityResult::Kind::Inconclusive:
                    report.checks.push_back(computation(
                        id,
                        "no certificate applies and no witness up to radius " +
                            std::to_string(res.radius),
                        "{\"kind\": \"inconclusive\", \"radius\": " + std::to_string(res.radius) +
                            "}",
                        CheckStatus::Inconclusive));
                    break;
            }
        } else if (*eval_cmd) {
            const Namespace& ns = catalog::namespace_of(catalog::parse_namespace(ev_ns));
            Matrix m = evaluate_word(ev_word, ns);
            report.checks.push_back(computation("eval", ev_word + " = " + m.str(), m.json()));
        } else if (*selftest) {
            report.checks = suites::property_checks(st_samples);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownName& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    return emit(opts, std::move(report));
}
