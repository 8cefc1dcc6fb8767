#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "apolar/apolarity.hpp"
#include "apolar/cell_complex.hpp"
#include "apolar/errors.hpp"
#include "apolar/generators.hpp"
#include "apolar/locus.hpp"
#include "apolar/perazzo.hpp"
#include "apolar/text.hpp"

using nlohmann::ordered_json;
using namespace apolar;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kGuard = 2, kInvariant = 3 };

struct PolyArgs {
    std::string poly;
    std::size_t nvars = 0;
    std::size_t uvars = 0;
    std::string convention = "dual";

    void attach(CLI::App* sub) {
        sub->add_option("--poly", poly, "Homogeneous polynomial, e.g. \"x1^2 + x1*x2\"")->required();
        sub->add_option("--nvars", nvars, "Number of x-variables")->required();
        sub->add_option("--uvars", uvars, "Number of u-variables following the x-block");
    }
    void attach_convention(CLI::App* sub) {
        sub->add_option("--convention", convention, "Pairing convention")
            ->check(CLI::IsMember({"dual", "diff"}));
    }
    GradedPolynomial parse() const { return parse_polynomial(poly, nvars, uvars); }
    VariableNames names() const { return {nvars, uvars, false}; }
    PairingConvention conv() const { return parse_convention(convention); }
};

ordered_json envelope() { return ordered_json{{"schema_version", 1}}; }

ordered_json merged(ordered_json body) {
    auto out = envelope();
    for (auto& [k, v] : body.items()) out[k] = v;
    return out;
}

ordered_json monomial_list(const std::vector<ExponentVector>& mons, const VariableNames& names) {
    auto arr = ordered_json::array();
    for (const auto& m : mons) arr.push_back(format_monomial(m, names));
    return arr;
}

ordered_json map_check_json(const MapCheck& c) {
    ordered_json j{{"map", c.map}, {"n", c.n}, {"d", c.d}, {"skipped", c.skipped}};
    if (c.skipped) {
        j["reason"] = c.skip_reason;
    } else {
        j["rows"] = c.rows;
        j["cols"] = c.cols;
        j["rank"] = c.rank;
        j["kernel_dim"] = c.kernel_dim;
    }
    j["formula"] = c.formula;
    j["matches_formula"] = c.skipped ? ordered_json(nullptr) : ordered_json(c.matches_formula);
    j["surjective"] = c.skipped ? ordered_json(nullptr) : ordered_json(c.surjective);
    j["dropped_variables"] = c.dropped_variables;
    return j;
}

std::string support_csv_field(const std::vector<ExponentVector>& mons, const VariableNames& names) {
    std::string out;
    for (std::size_t i = 0; i < mons.size(); ++i) out += (i ? ";" : "") + format_monomial(mons[i], names);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Apolarity, annihilators and Hilbert vectors of homogeneous forms"};
    app.require_subcommand(1);
    app.fallthrough();
    Limits limits;
    bool pretty = false;
    app.add_option("--max-matrix-dim", limits.max_matrix_dim, "Guard on catalecticant and map matrix dimensions")
        ->capture_default_str();
    app.add_option("--max-class-monomials", limits.max_class_monomials,
                   "Guard on the subset search for equal-image classes")
        ->capture_default_str();
    app.add_flag("--pretty", pretty, "Indent JSON output");

    PolyArgs hilbert_args;
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert vector of Q/Ann(f)");
    hilbert_args.attach(hilbert);
    hilbert_args.attach_convention(hilbert);

    PolyArgs ann_args;
    std::size_t ann_degree = 0;
    auto* ann = app.add_subcommand("ann", "Canonical basis of Ann(f) in one degree");
    ann_args.attach(ann);
    ann_args.attach_convention(ann);
    ann->add_option("--degree", ann_degree, "Degree j")->required();

    PolyArgs gen_args;
    std::optional<std::size_t> max_difference_degree;
    auto* gens = app.add_subcommand("generators", "Structured generators of Ann(f), coefficient-1 forms only");
    gen_args.attach(gens);
    gens->add_option("--max-difference-degree", max_difference_degree, "Highest degree searched for differences");

    PolyArgs cw_args;
    std::string cw_export;
    auto* cw = app.add_subcommand("cw", "Cell complex of the support of f");
    cw_args.attach(cw);
    cw->add_option("--export", cw_export, "Face poset export")->check(CLI::IsMember({"dot", "json"}));

    auto* locus = app.add_subcommand("locus", "Standard locus supports and the phi/psi maps");
    locus->require_subcommand(1);
    std::size_t le_n = 0, le_d = 0;
    std::string le_format = "json";
    auto* locus_enum = locus->add_subcommand("enumerate", "Supports satisfying st.A, st.B and st.C");
    locus_enum->add_option("--nvars", le_n, "Number of variables")->required();
    locus_enum->add_option("--degree", le_d, "Degree")->required();
    locus_enum->add_option("--guard", limits.max_locus_tau, "Largest tau(n,d) enumerated")->capture_default_str();
    locus_enum->add_option("--format", le_format, "Catalog format")->check(CLI::IsMember({"json", "csv"}));

    std::string st_support;
    std::size_t st_n = 0;
    auto* locus_st = locus->add_subcommand("stcheck", "st.A/B/C verdicts and linear-algebra standardness");
    locus_st->add_option("--support", st_support, "Comma-separated monomials")->required();
    locus_st->add_option("--nvars", st_n, "Number of variables")->required();

    std::size_t lm_n = 0, lm_d = 0;
    auto* locus_maps = locus->add_subcommand("maps", "Kernel dimensions of phi and psi");
    locus_maps->add_option("--n", lm_n, "Number of u-variables")->required();
    locus_maps->add_option("--d", lm_d, "Degree")->required();

    auto* perazzo = app.add_subcommand("perazzo", "Perazzo polynomials");
    perazzo->require_subcommand(1);
    std::size_t pz_n = 0, pz_d = 0;
    std::string pz_choice;
    std::vector<CLI::App*> perazzo_subs;
    for (const char* name : {"build", "hilbert", "census"}) {
        auto* sub = perazzo->add_subcommand(name);
        sub->add_option("--n", pz_n, "Number of u-variables")->required();
        sub->add_option("--d", pz_d, "Socle degree")->required();
        sub->add_option("--choice", pz_choice, "Comma-separated u-monomials of degree d-1 (full basis if omitted)");
        perazzo_subs.push_back(sub);
    }
    perazzo_subs[0]->description("Print the polynomial");
    perazzo_subs[1]->description("Hilbert vector");
    perazzo_subs[2]->description("Degree-2 annihilator census");

    ConjectureOptions conj;
    auto* conjecture = app.add_subcommand("conjecture", "Sample random standard forms against the full Perazzo vector");
    conjecture->add_option("--n", conj.n, "Number of u-variables")->required();
    conjecture->add_option("--d", conj.d, "Socle degree")->required();
    conjecture->add_option("--trials", conj.trials, "Number of trials")->required();
    conjecture->add_option("--seed", conj.seed, "64-bit seed")->required();
    conjecture->add_option("--jobs", conj.jobs, "Worker threads")->capture_default_str();
    conjecture->add_option("--p", conj.inclusion_probability, "Monomial inclusion probability")->capture_default_str();
    conjecture->add_option("--retries", conj.max_retries, "Draws per trial before it is aborted")->capture_default_str();
    conjecture->add_flag("--timing", conj.timing, "Include runtime_ms (output is then not reproducible)");

    std::string l41_support;
    std::size_t l41_n = 0, l41_trials = 20;
    std::uint64_t l41_seed = 1;
    auto* lemma41 = app.add_subcommand("lemma41", "Coefficient-1 form against random coefficients on one support");
    lemma41->add_option("--support", l41_support, "Comma-separated monomials")->required();
    lemma41->add_option("--nvars", l41_n, "Number of variables")->required();
    lemma41->add_option("--trials", l41_trials, "Number of draws")->capture_default_str();
    lemma41->add_option("--seed", l41_seed, "64-bit seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    auto emit = [&](const ordered_json& j) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; };

    try {
        if (hilbert->parsed()) {
            const auto f = hilbert_args.parse();
            const auto conv = hilbert_args.conv();
            const auto h = hilbert_vector(f, conv, limits);
            emit(merged({{"hilbert", h.entries},
                         {"standard", is_standard(f, conv, limits)},
                         {"socle_degree", f.degree()},
                         {"convention", std::string(to_string(conv))},
                         {"symmetric", h.is_symmetric()}}));
        } else if (ann->parsed()) {
            const auto f = ann_args.parse();
            const auto conv = ann_args.conv();
            const auto basis = ann_basis(f, ann_degree, conv, limits);
            auto arr = ordered_json::array();
            for (const auto& b : basis) arr.push_back(format_polynomial(b, ann_args.names().as_dual()));
            emit(merged({{"degree", ann_degree},
                         {"convention", std::string(to_string(conv))},
                         {"dimension", basis.size()},
                         {"basis", std::move(arr)}}));
        } else if (gens->parsed()) {
            const auto f = gen_args.parse();
            const auto dual = gen_args.names().as_dual();
            const auto g = extract_generators(f, {max_difference_degree, limits});
            auto powers = ordered_json::array();
            for (const auto& p : g.powers)
                powers.push_back(format_monomial(
                    ExponentVector::unit(g.num_vars, p.var, static_cast<ExponentVector::value_type>(p.exponent)), dual));
            auto nonfaces = ordered_json::array();
            for (const auto& [deg, monos] : g.nonfaces)
                nonfaces.push_back({{"degree", deg}, {"monomials", monomial_list(monos, dual)}});
            auto diffs = ordered_json::array();
            for (const auto& [deg, pairs] : g.differences) {
                auto items = ordered_json::array();
                for (const auto& [p1, p2] : pairs)
                    items.push_back({{"P1", format_polynomial(p1, dual)},
                                     {"P2", format_polynomial(p2, dual)},
                                     {"operator", format_polynomial(p1 - p2, dual)}});
                diffs.push_back({{"degree", deg}, {"generators", std::move(items)}});
            }
            emit(merged({{"socle_degree", g.socle_degree},
                         {"powers", std::move(powers)},
                         {"nonfaces", std::move(nonfaces)},
                         {"differences", std::move(diffs)},
                         {"verified", verify_generators(f, g, limits)}}));
        } else if (cw->parsed()) {
            const auto f = cw_args.parse();
            const auto c = zeta_of(f);
            const auto names = cw_args.names();
            if (cw_export == "dot") {
                std::cout << face_poset_dot(c, names);
            } else if (cw_export == "json") {
                emit(merged(ordered_json::parse(face_poset_json(c, names))));
            } else {
                auto skeleton = ordered_json::array();
                for (std::size_t k = 0; k < f.degree(); ++k) skeleton.push_back(skeleton_count(c, k));
                auto nonfaces = ordered_json::array();
                for (std::size_t j = 1; j <= f.degree(); ++j) {
                    const auto nf = minimal_nonfaces(c, j);
                    if (!nf.empty()) nonfaces.push_back({{"degree", j}, {"monomials", monomial_list(nf, names.as_dual())}});
                }
                emit(merged({{"s_counts", s_counts(c, f.degree())},
                             {"skeleton_counts", std::move(skeleton)},
                             {"minimal_nonfaces", std::move(nonfaces)}}));
            }
        } else if (locus_enum->parsed()) {
            const auto names = VariableNames::plain(le_n);
            const auto comps = enumerate_admissible_supports(le_n, le_d, limits);
            if (le_format == "csv") {
                std::cout << "index,size,dim_support,dim_paper,support,derived_set\n";
                for (std::size_t i = 0; i < comps.size(); ++i)
                    std::cout << i + 1 << ',' << comps[i].support.size() << ',' << comps[i].dim_support << ','
                              << comps[i].dim_paper << ',' << support_csv_field(comps[i].support.monomials(), names)
                              << ',' << support_csv_field(comps[i].derived, names) << "\n";
            } else {
                auto arr = ordered_json::array();
                for (const auto& c : comps)
                    arr.push_back({{"support", monomial_list(c.support.monomials(), names)},
                                   {"derived_set", monomial_list(c.derived, names)},
                                   {"dim_support", c.dim_support},
                                   {"dim_paper", c.dim_paper}});
                emit(merged({{"n", le_n}, {"d", le_d}, {"count", comps.size()}, {"components", std::move(arr)}}));
            }
        } else if (locus_st->parsed()) {
            const auto names = VariableNames::plain(st_n);
            const SupportSet s(st_n, parse_support(st_support, st_n));
            const auto st = st_conditions(s);
            const auto w = derived_set(s);
            emit(merged({{"support", monomial_list(s.monomials(), names)},
                         {"stA", st.stA},
                         {"stB", st.stB},
                         {"stC", st.stC},
                         {"gcd_condition", gcd_condition(s)},
                         {"standard", is_standard(GradedPolynomial::ones(st_n, s.monomials()),
                                                  PairingConvention::DualBasis, limits)},
                         {"derived_set", monomial_list(w, names)},
                         {"dim_support", s.size() - 1},
                         {"dim_paper", w.size() - 1}}));
        } else if (locus_maps->parsed()) {
            ordered_json body{{"phi", map_check_json(check_phi(lm_n, lm_d, limits))}};
            body["psi"] = lm_d >= 3 ? map_check_json(check_psi(lm_n, lm_d, limits)) : ordered_json(nullptr);
            emit(merged(std::move(body)));
        } else if (perazzo->parsed()) {
            PerazzoSpec spec{pz_n, pz_d, std::nullopt};
            if (!pz_choice.empty()) spec.m_choice = parse_support(pz_choice, 0, pz_n);
            const auto f = build_perazzo(spec);
            const VariableNames names{spec.num_x(), pz_n, false};
            if (perazzo_subs[0]->parsed()) {
                emit(merged({{"n", pz_n},
                             {"d", pz_d},
                             {"num_x", spec.num_x()},
                             {"polynomial", format_polynomial(f, names)}}));
            } else if (perazzo_subs[1]->parsed()) {
                const auto h = hilbert_vector(f, PairingConvention::DualBasis, limits);
                emit(merged({{"hilbert", h.entries}, {"standard", is_standard(f, PairingConvention::DualBasis, limits)}, {"symmetric", h.is_symmetric()}}));
            } else {
                const auto c = degree2_census(f, limits);
                auto binomials = ordered_json::array();
                for (const auto& [a, b] : c.binomials)
                    binomials.push_back(format_monomial(a, names.as_dual()) + " - " + format_monomial(b, names.as_dual()));
                emit(merged({{"monomial_count", c.monomial_count},
                             {"binomial_count", c.binomial_count},
                             {"other_count", c.other_count},
                             {"total_dim", c.total_dim},
                             {"h2", h2_of(f, limits)},
                             {"monomials", monomial_list(c.monomials, names.as_dual())},
                             {"binomials", std::move(binomials)}}));
            }
        } else if (conjecture->parsed()) {
            conj.limits = limits;
            emit(merged(to_json(conjecture_sample_check(conj))));
        } else if (lemma41->parsed()) {
            const SupportSet s(l41_n, parse_support(l41_support, l41_n));
            emit(merged(to_json(lemma41_check(s, l41_trials, l41_seed, limits))));
        }
    } catch (const GuardViolation& e) {
        std::cerr << "guard violation: " << e.what() << "\n";
        return kGuard;
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return kInvariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInvariant;
    }
    return kOk;
}
