#include "apolar/perazzo.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "apolar/text.hpp"

namespace apolar {

std::size_t PerazzoSpec::num_x() const {
    return m_choice ? m_choice->size() : static_cast<std::size_t>(tau(n, d - 1));
}

void PerazzoSpec::validate() const {
    if (n < 2) throw std::invalid_argument("PerazzoSpec: n must be at least 2");
    if (d < 2) throw std::invalid_argument("PerazzoSpec: d must be at least 2");
    if (!m_choice) return;
    if (m_choice->empty()) throw std::invalid_argument("PerazzoSpec: empty monomial choice");
    if (m_choice->size() > tau(n, d - 1))
        throw std::invalid_argument("PerazzoSpec: more monomials than tau(n,d-1)");
    std::set<ExponentVector> seen;
    for (const auto& m : *m_choice) {
        if (m.size() != n || m.degree() != d - 1)
            throw std::invalid_argument("PerazzoSpec: chosen monomials must have degree d-1 in n variables");
        if (!seen.insert(m).second) throw std::invalid_argument("PerazzoSpec: repeated monomial in choice");
    }
}

GradedPolynomial build_perazzo(const PerazzoSpec& spec) {
    spec.validate();
    const auto mons = spec.m_choice ? *spec.m_choice : enumerate_T(spec.n, spec.d - 1);
    const std::size_t p = mons.size();
    GradedPolynomial f(p + spec.n, spec.d);
    for (std::size_t i = 0; i < p; ++i) {
        std::vector<ExponentVector::value_type> e(p + spec.n, 0);
        e[i] = 1;
        for (std::size_t k = 0; k < spec.n; ++k) e[p + k] = mons[i][k];
        f.add_term(ExponentVector(std::move(e)), 1);
    }
    return f;
}

VariableSplit VariableSplit::prefix(std::size_t num_vars, std::size_t num_x) {
    if (num_x > num_vars) throw std::invalid_argument("VariableSplit: x-block larger than variable count");
    VariableSplit s;
    s.in_x.assign(num_vars, false);
    std::fill(s.in_x.begin(), s.in_x.begin() + static_cast<std::ptrdiff_t>(num_x), true);
    return s;
}

std::optional<std::pair<std::size_t, std::size_t>> is_bihomogeneous(const GradedPolynomial& f,
                                                                    const VariableSplit& split) {
    if (split.in_x.size() != f.num_vars()) throw std::invalid_argument("is_bihomogeneous: split does not cover variables");
    std::optional<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [m, c] : f.terms()) {
        std::size_t dx = 0;
        for (std::size_t k = 0; k < m.size(); ++k)
            if (split.in_x[k]) dx += m[k];
        const std::pair<std::size_t, std::size_t> bideg{dx, m.degree() - dx};
        if (out && *out != bideg) return std::nullopt;
        out = bideg;
    }
    return out;
}

HilbertVector full_perazzo_hilbert(std::size_t n, std::size_t d, const Limits& limits) {
    return hilbert_vector(build_perazzo(PerazzoSpec::full(n, d)), PairingConvention::DualBasis, limits);
}

Degree2Census degree2_census(const GradedPolynomial& f, const Limits& limits) {
    const std::size_t n = f.num_vars();
    Degree2Census out;
    out.total_dim = ann_dimension(f, 2, PairingConvention::DualBasis, limits);
    if (f.degree() < 2) {
        for (const auto& m : enumerate_T(n, 2)) out.monomials.push_back(m);
        out.monomial_count = out.monomials.size();
        return out;
    }
    const auto cat = catalecticant_matrix(f, 2, PairingConvention::DualBasis, limits);
    const auto sources = enumerate_T(n, 2);

    std::map<RationalVector, std::vector<std::size_t>> by_column;
    for (std::size_t c = 0; c < cat.cols(); ++c) {
        RationalVector col(cat.rows());
        bool zero = true;
        for (std::size_t r = 0; r < cat.rows(); ++r) {
            col[r] = cat(r, c);
            zero = zero && col[r] == 0;
        }
        if (zero)
            out.monomials.push_back(sources[c]);
        else
            by_column[std::move(col)].push_back(c);
    }
    // Equal columns give X^a - X^b in the kernel; consecutive differences
    // within a group are independent of each other and of the monomials.
    std::vector<std::vector<std::size_t>> groups;
    for (auto& [col, idx] : by_column)
        if (idx.size() > 1) groups.push_back(idx);
    std::sort(groups.begin(), groups.end());
    for (const auto& idx : groups)
        for (std::size_t a = 0; a + 1 < idx.size(); ++a) out.binomials.emplace_back(sources[idx[a]], sources[idx[a + 1]]);

    out.monomial_count = out.monomials.size();
    out.binomial_count = out.binomials.size();
    if (out.monomial_count + out.binomial_count > out.total_dim)
        throw InvariantError("degree2_census: classified more kernel elements than dim Ann(f)_2");
    out.other_count = out.total_dim - out.monomial_count - out.binomial_count;
    return out;
}

std::size_t h2_of(const GradedPolynomial& f, const Limits& limits) {
    return tau(f.num_vars(), 2) - ann_dimension(f, 2, PairingConvention::DualBasis, limits);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

bool draw_bernoulli(std::mt19937_64& rng, double p) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return u < p;
}

long draw_coefficient(std::mt19937_64& rng) {
    constexpr std::uint64_t range = 18;
    constexpr std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t r = rng();
    while (r >= limit) r = rng();
    const long v = static_cast<long>(r % range);
    return v < 9 ? v - 9 : v - 8;
}

namespace {

struct TrialOutcome {
    bool aborted = true;
    std::size_t attempts = 0;
    std::optional<GradedPolynomial> f;
    HilbertVector hilbert;
    HilbertOrder order = HilbertOrder::Incomparable;
    bool ones_standard = false;
    std::size_t ones_ann2 = 0;
};

TrialOutcome run_trial(const ConjectureOptions& opt, const std::vector<ExponentVector>& basis, std::size_t num_vars,
                       const HilbertVector& h_fp, std::size_t index) {
    std::mt19937_64 rng(trial_seed(opt.seed, index));
    TrialOutcome out;
    while (out.attempts < opt.max_retries) {
        ++out.attempts;
        std::vector<ExponentVector> support;
        for (const auto& m : basis)
            if (draw_bernoulli(rng, opt.inclusion_probability)) support.push_back(m);
        if (support.empty()) continue;
        GradedPolynomial f(num_vars, opt.d);
        for (const auto& m : support) f.add_term(m, draw_coefficient(rng));
        if (!is_standard(f, PairingConvention::DualBasis, opt.limits)) continue;

        out.aborted = false;
        out.hilbert = hilbert_vector(f, PairingConvention::DualBasis, opt.limits);
        out.order = compare_hilbert(out.hilbert, h_fp);
        const auto ones = GradedPolynomial::ones(num_vars, support);
        out.ones_standard = is_standard(ones, PairingConvention::DualBasis, opt.limits);
        if (out.ones_standard) out.ones_ann2 = ann_dimension(ones, 2, PairingConvention::DualBasis, opt.limits);
        out.f = std::move(f);
        return out;
    }
    return out;
}

}  // namespace

ConjectureReport conjecture_sample_check(const ConjectureOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    if (options.n < 2 || options.d < 2) throw std::invalid_argument("conjecture_sample_check: requires n, d >= 2");
    if (options.jobs == 0) throw std::invalid_argument("conjecture_sample_check: jobs must be positive");
    if (!(options.inclusion_probability > 0.0 && options.inclusion_probability <= 1.0))
        throw std::invalid_argument("conjecture_sample_check: inclusion probability must lie in (0, 1]");

    ConjectureReport report;
    report.options = options;
    report.codimension = options.n + tau(options.n, options.d - 1);
    const auto fp = build_perazzo(PerazzoSpec::full(options.n, options.d));
    report.h_fp = hilbert_vector(fp, PairingConvention::DualBasis, options.limits);
    report.ann2_fp = ann_dimension(fp, 2, PairingConvention::DualBasis, options.limits);

    const std::size_t num_vars = report.codimension;
    const auto basis_size = tau(num_vars, options.d);
    if (basis_size > options.limits.max_matrix_dim)
        throw GuardViolation("conjecture_sample_check: tau(N,d) = " + std::to_string(basis_size) +
                             " exceeds the guard " + std::to_string(options.limits.max_matrix_dim));
    const auto basis = enumerate_T(num_vars, options.d);

    std::vector<TrialOutcome> outcomes(options.trials);
    const std::size_t jobs = std::min(options.jobs, std::max<std::size_t>(options.trials, 1));
    std::vector<std::exception_ptr> errors(jobs);
    auto worker = [&](std::size_t job) {
        try {
            for (std::size_t t = job; t < options.trials; t += jobs)
                outcomes[t] = run_trial(options, basis, num_vars, report.h_fp, t);
        } catch (...) {
            errors[job] = std::current_exception();
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(worker, j);
        for (auto& th : threads) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::map<std::vector<std::size_t>, std::size_t> histogram;
    for (std::size_t t = 0; t < outcomes.size(); ++t) {
        auto& o = outcomes[t];
        if (o.aborted) {
            ++report.aborted;
            continue;
        }
        ++histogram[o.hilbert.entries];
        switch (o.order) {
        case HilbertOrder::LessEq:
            ++report.less_eq;
            report.violators.push_back({t, o.attempts, std::move(*o.f), o.hilbert});
            break;
        case HilbertOrder::GreaterEq: ++report.greater_eq; break;
        case HilbertOrder::Equal: ++report.equal; break;
        case HilbertOrder::Incomparable: ++report.incomparable; break;
        }
        if (o.ones_standard) {
            ++report.ones_standard;
            report.ones_max_ann2 = std::max(report.ones_max_ann2, o.ones_ann2);
            if (o.ones_ann2 > report.ann2_fp) ++report.ones_exceeding_fp;
        }
    }
    for (auto& [h, count] : histogram) report.histogram.emplace_back(HilbertVector{h}, count);
    if (options.timing)
        report.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::ordered_json to_json(const HilbertVector& h) { return h.entries; }

nlohmann::ordered_json to_json(const ConjectureReport& r) {
    using nlohmann::ordered_json;
    const auto& o = r.options;
    const auto names = VariableNames::plain(r.codimension);
    ordered_json j;
    j["spec"] = {{"n", o.n},
                 {"d", o.d},
                 {"codimension", r.codimension},
                 {"inclusion_probability", o.inclusion_probability},
                 {"max_retries", o.max_retries}};
    j["seed"] = o.seed;
    j["trials"] = o.trials;
    j["H_FP"] = to_json(r.h_fp);
    j["tallies"] = {{"LESS_EQ", r.less_eq},
                    {"GREATER_EQ", r.greater_eq},
                    {"EQUAL", r.equal},
                    {"INCOMPARABLE", r.incomparable},
                    {"ABORTED", r.aborted}};
    ordered_json violators = ordered_json::array();
    for (const auto& v : r.violators)
        violators.push_back({{"trial_index", v.trial},
                             {"attempts", v.attempts},
                             {"polynomial", format_polynomial(v.f, names)},
                             {"hilbert", to_json(v.hilbert)}});
    j["violators"] = std::move(violators);
    ordered_json hist = ordered_json::array();
    for (const auto& [h, count] : r.histogram) hist.push_back({{"hilbert", to_json(h)}, {"count", count}});
    j["hilbert_histogram"] = std::move(hist);
    j["coefficient_one"] = {{"standard", r.ones_standard},
                            {"ann2_full_perazzo", r.ann2_fp},
                            {"max_ann2", r.ones_max_ann2},
                            {"exceeding_full_perazzo", r.ones_exceeding_fp}};
    if (r.runtime_ms) j["runtime_ms"] = *r.runtime_ms;
    return j;
}

Lemma41Report lemma41_check(const SupportSet& support, std::size_t trials, std::uint64_t seed, const Limits& limits) {
    const std::size_t n = support.num_vars();
    const auto ones = GradedPolynomial::ones(n, support.monomials());
    Lemma41Report report{support, seed, hilbert_vector(ones, PairingConvention::DualBasis, limits),
                         is_standard(ones, PairingConvention::DualBasis, limits), {}, 0};
    for (std::size_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(trial_seed(seed, t));
        GradedPolynomial f(n, support.degree());
        for (const auto& m : support.monomials()) f.add_term(m, draw_coefficient(rng));
        auto h = hilbert_vector(f, PairingConvention::DualBasis, limits);
        const auto order = compare_hilbert(report.h_ones, h);
        const bool holds = order == HilbertOrder::LessEq || order == HilbertOrder::Equal;
        if (!holds) ++report.counterexamples;
        report.trials.push_back({t, std::move(f), std::move(h), order, holds});
    }
    return report;
}

nlohmann::ordered_json to_json(const Lemma41Report& r) {
    using nlohmann::ordered_json;
    const auto names = VariableNames::plain(r.support.num_vars());
    ordered_json support = ordered_json::array();
    for (const auto& m : r.support.monomials()) support.push_back(format_monomial(m, names));
    ordered_json trials = ordered_json::array();
    for (const auto& t : r.trials)
        trials.push_back({{"trial_index", t.trial},
                          {"polynomial", format_polynomial(t.f, names)},
                          {"hilbert", to_json(t.hilbert)},
                          {"order", std::string(to_string(t.order))},
                          {"holds", t.holds}});
    ordered_json j;
    j["support"] = std::move(support);
    j["seed"] = r.seed;
    j["H_ones"] = to_json(r.h_ones);
    j["ones_standard"] = r.ones_standard;
    j["trials"] = std::move(trials);
    j["counterexamples"] = r.counterexamples;
    return j;
}

}  // namespace apolar
