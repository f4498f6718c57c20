// Command-line front end: exact computations and the verification suites.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or malformed input,
// 3 internal invariant breach.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "winf/verify.hpp"

namespace {

using namespace winf;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

struct Settings {
    std::string format = "json";
    int threads = 1;
    int max_n = -1;
    int hurwitz_max_n = 8;
    int operator_max_n = 6;
    int g_max = 2;

    int operator_bound() const { return max_n >= 0 ? max_n : operator_max_n; }
    int hurwitz_bound() const { return max_n >= 0 ? max_n : hurwitz_max_n; }
};

/// Leftover command-line words. Only variadic subcommands accept them.
std::vector<std::string> trailing(const CLI::App& app, bool accepted) {
    std::vector<std::string> out = app.remaining(false);
    if(!accepted && !out.empty()) {
        throw CLI::ExtrasError(out);
    }
    for(const auto& a : out) {
        if(a.size() > 1 && a[0] == '-' && !std::isdigit(static_cast<unsigned char>(a[1]))) {
            throw winf::invalid_input("unknown option '" + a + "'");
        }
    }
    return out;
}

std::vector<Partition> parse_all(const std::vector<std::string>& items) {
    std::vector<Partition> out;
    for(const auto& s : items) {
        out.push_back(parse_partition(s));
    }
    return out;
}

// "[2,1]" or "c*[2,1]" with c a rational.
std::pair<Rational, Partition> parse_term(const std::string& s) {
    const auto star = s.find('*');
    if(star == std::string::npos) {
        return {Rational(1), parse_partition(s)};
    }
    return {parse_rational(s.substr(0, star)), parse_partition(s.substr(star + 1))};
}

// "[2,1]" or "name=[2,1]".
Insertion parse_insertion(const std::string& s, std::size_t index) {
    const auto eq = s.find('=');
    if(eq == std::string::npos) {
        return {"u" + std::to_string(index + 1), parse_partition(s)};
    }
    return {s.substr(0, eq), parse_partition(s.substr(eq + 1))};
}

void require(bool ok, const std::string& msg) {
    if(!ok) {
        throw invalid_input(msg);
    }
}

class Runner {
public:
    explicit Runner(Settings& s) : s_(s) {}

    int emit(const Document& d) const {
        std::cout << render(d, parse_format(s_.format));
        return 0;
    }

    void check_operator_bound(int n) const {
        require(n >= 0, "N must be nonnegative");
        require(n <= s_.operator_bound(),
                "N = " + std::to_string(n) + " exceeds the operator bound " + std::to_string(s_.operator_bound()) +
                    " (raise it with --max-n)");
    }

private:
    Settings& s_;
};

} // namespace

int main(int argc, char** argv) {
    Settings st;
    CLI::App app{"Exact shifted Hurwitz numbers, cut-and-join operators and their generating functions"};
    app.require_subcommand(1);
    app.fallthrough();
    app.allow_extras();
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.set_config("--config", "", "key=value file with default settings")->envname("WINF_CONFIG");
    app.add_option("--format", st.format, "Output format")
        ->check(CLI::IsMember({"json", "tsv", "pretty"}))
        ->capture_default_str();
    app.add_option("--threads", st.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--max-n", st.max_n, "Bound on n (hurwitz) or N (operators, generating functions)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--hurwitz-max-n", st.hurwitz_max_n, "Default bound on the covering degree")->capture_default_str();
    app.add_option("--operator-max-n", st.operator_max_n, "Default bound on the operator degree N")->capture_default_str();
    app.add_option("--g-max", st.g_max, "Largest accepted target genus")->capture_default_str();
    Runner run(st);
    int exit_code = 0;

    // char λ μ
    std::string c_lambda, c_mu;
    auto* c_char = app.add_subcommand("char", "Irreducible character chi_lambda(mu)");
    c_char->add_option("lambda", c_lambda)->required();
    c_char->add_option("mu", c_mu)->required();
    c_char->callback([&] {
        trailing(app, false);
        const auto l = parse_partition(c_lambda);
        const auto m = parse_partition(c_mu);
        exit_code = run.emit(character_doc(l, m, character(l, m)));
    });

    // phi λ Δ
    std::string p_lambda, p_delta;
    auto* c_phi = app.add_subcommand("phi", "Normalized shifted character phi_lambda(Delta)");
    c_phi->add_option("lambda", p_lambda)->required();
    c_phi->add_option("delta", p_delta)->required();
    c_phi->callback([&] {
        trailing(app, false);
        const auto l = parse_partition(p_lambda);
        const auto d = parse_partition(p_delta);
        exit_code = run.emit(phi_doc(l, d, phi(l, d)));
    });

    // hurwitz [--connected] g n Δ...
    int h_g = 0, h_n = 0;
    bool h_connected = false;
    std::vector<std::string> h_ram;
    auto* c_hur = app.add_subcommand("hurwitz", "Shifted Hurwitz number U (or CU with --connected)");
    c_hur->add_flag("--connected", h_connected, "Connected number");
    c_hur->add_option("g", h_g, "Target genus")->required();
    c_hur->add_option("n", h_n, "Covering degree")->required();
    c_hur->footer("Remaining arguments are branch profiles: [2,1] [3] ...");
    c_hur->callback([&] {
        h_ram = trailing(app, true);
        require(h_g >= 0 && h_n >= 0, "g and n must be nonnegative");
        require(h_g <= st.g_max, "g = " + std::to_string(h_g) + " exceeds --g-max " + std::to_string(st.g_max));
        require(h_n <= st.hurwitz_bound(),
                "n = " + std::to_string(h_n) + " exceeds the bound " + std::to_string(st.hurwitz_bound()) +
                    " (raise it with --max-n)");
        const HurwitzQuery q{h_g, h_n, parse_all(h_ram)};
        const auto v = h_connected ? connected_CU(q) : disconnected_U(q);
        exit_code = run.emit(hurwitz_doc(q, v, h_connected));
    });

    // classprod Δ1 Δ2
    std::string cp_a, cp_b;
    int cp_ambient = -1;
    auto* c_cp = app.add_subcommand("classprod", "Structure constants of A_D1 A_D2 by enumeration");
    c_cp->add_option("d1", cp_a)->required();
    c_cp->add_option("d2", cp_b)->required();
    c_cp->add_option("--ambient", cp_ambient, "Ambient degree n of B_n (default |D1|+|D2|)");
    c_cp->callback([&] {
        trailing(app, false);
        const auto a = parse_partition(cp_a);
        const auto b = parse_partition(cp_b);
        exit_code = run.emit(classprod_doc(a, b, structure_constants(a, b, cp_ambient, st.threads)));
    });

    // cutjoin build|apply|compose|eigen
    auto* c_cj = app.add_subcommand("cutjoin", "Cut-and-join operators as block matrices");
    c_cj->require_subcommand(1);
    std::string cj_delta, cj_delta2, cj_lambda, cj_input;
    std::vector<std::string> cj_terms;
    bool cj_normalized = false, cj_normal_ordered = false;
    auto bound = [&] {
        const int n = st.operator_bound();
        run.check_operator_bound(n);
        return n;
    };
    auto* cj_build = c_cj->add_subcommand("build", "Matrix of W(D,z)");
    cj_build->add_option("delta", cj_delta)->required();
    cj_build->add_flag("--normalized", cj_normalized, "Normalized operator");
    cj_build->add_flag("--normal-ordered", cj_normal_ordered, "Assemble from the normal-ordered sum");
    cj_build->callback([&] {
        trailing(app, false);
        const auto d = parse_partition(cj_delta);
        const int n = bound();
        BlockOperator w = cj_normal_ordered ? build_w_normal_ordered(d, n) : build_w_action(d, n, st.threads);
        exit_code = run.emit(operator_doc(cj_normalized ? normalize(w) : w));
    });
    auto* cj_apply = c_cj->add_subcommand("apply", "W(D,z) applied to a series");
    cj_apply->add_option("delta", cj_delta)->required();
    cj_apply->footer("Remaining arguments are monomials [2,1] or c*[2,1].");
    cj_apply->add_option("--input", cj_input, "Series JSON file");
    cj_apply->add_flag("--normalized", cj_normalized, "Normalized operator");
    cj_apply->callback([&] {
        cj_terms = trailing(app, true);
        const auto d = parse_partition(cj_delta);
        TruncatedSeries s(bound());
        if(!cj_input.empty()) {
            std::ifstream in(cj_input);
            require(in.good(), "cannot read " + cj_input);
            Json j;
            try {
                in >> j;
            } catch(const nlohmann::json::exception& e) {
                throw invalid_input(std::string("malformed JSON: ") + e.what());
            }
            s = series_from_json(j);
            run.check_operator_bound(s.bound());
        }
        for(const auto& t : cj_terms) {
            auto [c, p] = parse_term(t);
            s.add(p, LaurentScalar(c));
        }
        BlockOperator w = build_w_action(d, s.bound(), st.threads);
        exit_code = run.emit(series_doc(apply(cj_normalized ? normalize(w) : w, s)));
    });
    auto* cj_compose = c_cj->add_subcommand("compose", "W(D1,z) W(D2,z) (D2 acts first)");
    cj_compose->add_option("d1", cj_delta)->required();
    cj_compose->add_option("d2", cj_delta2)->required();
    cj_compose->add_flag("--normalized", cj_normalized, "Compose normalized operators");
    cj_compose->callback([&] {
        trailing(app, false);
        const int n = bound();
        BlockOperator a = build_w_action(parse_partition(cj_delta), n, st.threads);
        BlockOperator b = build_w_action(parse_partition(cj_delta2), n, st.threads);
        if(cj_normalized) {
            a = normalize(a);
            b = normalize(b);
        }
        exit_code = run.emit(operator_doc(compose(a, b)));
    });
    auto* cj_eigen = c_cj->add_subcommand("eigen", "Check W(D,z) S_lambda = eigenvalue S_lambda");
    cj_eigen->add_option("delta", cj_delta)->required();
    cj_eigen->add_option("lambda", cj_lambda)->required();
    cj_eigen->callback([&] {
        trailing(app, false);
        const auto d = parse_partition(cj_delta);
        const auto l = parse_partition(cj_lambda);
        const int n = std::max(bound(), l.size());
        run.check_operator_bound(n);
        const auto r = eigencheck(d, l, n);
        Document doc;
        doc.json = {{"delta", to_string(d)}, {"lambda", to_string(l)}, {"N", n}, {"holds", r.holds}, {"eigenvalue", to_string(r.eigenvalue)}};
        doc.table = {"eigen", {"delta", "lambda", "N", "holds", "eigenvalue"},
                     {{to_string(d), to_string(l), std::to_string(n), r.holds ? "true" : "false", to_string(r.eigenvalue)}}};
        run.emit(doc);
        exit_code = r.holds ? 0 : kExitFail;
    });

    // schur λ [--genus-expanded N]
    std::string sc_lambda;
    int sc_genus = -1;
    auto* c_schur = app.add_subcommand("schur", "Schur function in power sums, or its genus expansion");
    c_schur->add_option("lambda", sc_lambda)->required();
    c_schur->add_option("--genus-expanded", sc_genus, "Genus-expanded S_lambda{p,z} truncated at degree N");
    c_schur->callback([&] {
        trailing(app, false);
        const auto l = parse_partition(sc_lambda);
        if(sc_genus < 0) {
            exit_code = run.emit(series_doc(schur_poly(l)));
            return;
        }
        run.check_operator_bound(sc_genus);
        exit_code = run.emit(series_doc(genus_schur(l, sc_genus)));
    });

    // genfun
    int gf_g = 0, gf_umax = 3;
    std::vector<std::string> gf_ins;
    bool gf_two = false;
    std::string gf_path = "direct";
    auto* c_gf = app.add_subcommand("genfun", "Truncated generating function Phi_g, N = --max-n");
    c_gf->add_option("--g", gf_g, "Target genus")->capture_default_str();
    c_gf->add_option("--insert", gf_ins, "Insertion [2,1] or name=[2,1] (repeatable)")->allow_extra_args(false);
    c_gf->add_option("--u-max", gf_umax, "Largest total u-order")->check(CLI::NonNegativeNumber)->capture_default_str();
    c_gf->add_flag("--two-family", gf_two, "Add the family p^(1)");
    c_gf->add_option("--path", gf_path, "direct: defining sum; exp: operator exponential of the base")
        ->check(CLI::IsMember({"direct", "exp"}))
        ->capture_default_str();
    c_gf->callback([&] {
        trailing(app, false);
        require(gf_g >= 0 && gf_g <= st.g_max, "g must lie in [0, " + std::to_string(st.g_max) + "]");
        const int n = bound();
        InsertionSpec spec;
        for(std::size_t i = 0; i < gf_ins.size(); ++i) {
            spec.push_back(parse_insertion(gf_ins[i], i));
        }
        validate(spec);
        MultiSeries out = gf_path == "direct"
                              ? phi_direct(gf_g, spec, n, gf_umax, gf_two)
                              : phi_exp_action(gf_g, spec, phi_direct(gf_g, {}, n, 0, gf_two), n, gf_umax);
        exit_code = run.emit(multiseries_doc(out));
    });

    // verify [suite]
    std::string v_suite = "all";
    auto* c_ver = app.add_subcommand("verify", "Run verification suites");
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    c_ver->add_option("suite", v_suite, "Suite name")->check(CLI::IsMember(choices))->capture_default_str();
    c_ver->callback([&] {
        trailing(app, false);
        VerifyOptions opt;
        opt.operator_bound = st.operator_bound();
        opt.threads = st.threads;
        const auto r = run_suite(v_suite, opt);
        run.emit(report_doc(v_suite, r));
        exit_code = r.passed() ? 0 : kExitFail;
    });

    try {
        app.parse(argc, argv);
    } catch(const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch(const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch(const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch(const invalid_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch(const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    } catch(const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return exit_code;
}
