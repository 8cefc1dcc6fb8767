#include "apolar/cell_complex.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace apolar {

namespace {

// All divisors of m, including 1 and m itself.
std::vector<ExponentVector> divisors(const ExponentVector& m) {
    std::vector<ExponentVector> out{ExponentVector(m.size())};
    for (std::size_t k = 0; k < m.size(); ++k) {
        const std::size_t existing = out.size();
        for (std::size_t i = 0; i < existing; ++i)
            for (std::uint32_t e = 1; e <= m[k]; ++e) {
                ExponentVector d = out[i];
                d.increment(k, e);
                out.push_back(std::move(d));
            }
    }
    return out;
}

// Edges m -> m * x_k inside the complex.
std::vector<std::pair<ExponentVector, ExponentVector>> covering_edges(const CellComplex& c) {
    std::vector<std::pair<ExponentVector, ExponentVector>> edges;
    for (const auto& m : c.cells())
        for (std::size_t k = 0; k < c.num_vars(); ++k) {
            ExponentVector up = m;
            up.increment(k);
            if (c.contains(up)) edges.emplace_back(m, std::move(up));
        }
    return edges;
}

}  // namespace

std::size_t CellComplex::top_degree() const {
    std::size_t top = 0;
    for (const auto& m : cells_) top = std::max(top, m.degree());
    return top;
}

std::vector<ExponentVector> CellComplex::cells_of_dimension(std::size_t k) const {
    std::vector<ExponentVector> out;
    for (const auto& m : cells_)
        if (m.degree() == k + 1) out.push_back(m);
    return out;
}

void CellComplex::glue_monomial(const ExponentVector& m) {
    if (m.size() != num_vars_) throw std::invalid_argument("glue_monomial: variable count mismatch");
    for (auto& d : divisors(m))
        if (d.degree() >= 1) cells_.insert(std::move(d));
}

bool CellComplex::is_divisor_closed() const {
    for (const auto& m : cells_)
        for (std::size_t k = 0; k < num_vars_; ++k) {
            if (m[k] == 0 || m.degree() == 1) continue;
            ExponentVector down = m;
            down.decrement(k);
            if (!cells_.contains(down)) return false;
        }
    return true;
}

CellComplex zeta_of_support(const std::vector<ExponentVector>& support, std::size_t num_vars) {
    if (support.empty()) throw std::invalid_argument("zeta_of_support: empty support");
    const std::size_t d = support.front().degree();
    if (d == 0) throw std::invalid_argument("zeta_of_support: support of degree 0");
    CellComplex c(num_vars);
    for (const auto& m : support) {
        if (m.degree() != d) throw std::invalid_argument("zeta_of_support: inhomogeneous support");
        c.glue_monomial(m);
    }
    return c;
}

CellComplex zeta_of(const GradedPolynomial& f) { return zeta_of_support(f.support(), f.num_vars()); }

std::size_t skeleton_count(const CellComplex& c, std::size_t k) {
    std::size_t count = 0;
    for (const auto& m : c.cells())
        if (m.degree() <= k + 1) ++count;
    return count;
}

std::vector<std::size_t> s_counts(const CellComplex& c, std::size_t d) {
    std::vector<std::size_t> s(d + 1, 0);
    s[0] = 1;
    for (const auto& m : c.cells())
        if (m.degree() <= d) ++s[m.degree()];
    return s;
}

bool is_subcomplex(const ExponentVector& g, const ExponentVector& h) { return g.divides(h); }

std::vector<ExponentVector> minimal_nonfaces(const CellComplex& c, std::size_t j) {
    if (j == 0) throw std::invalid_argument("minimal_nonfaces: degree must be at least 1");
    std::vector<ExponentVector> out;
    for (const auto& m : enumerate_T(c.num_vars(), j)) {
        if (c.contains(m)) continue;
        bool minimal = true;
        // divisor closure makes the maximal proper divisors sufficient
        for (std::size_t k = 0; k < m.size() && minimal && j > 1; ++k) {
            if (m[k] == 0) continue;
            ExponentVector down = m;
            down.decrement(k);
            minimal = c.contains(down);
        }
        if (minimal) out.push_back(m);
    }
    return out;
}

std::string face_poset_json(const CellComplex& c, const VariableNames& names) {
    nlohmann::ordered_json j;
    j["num_vars"] = c.num_vars();
    auto dims = nlohmann::ordered_json::array();
    for (std::size_t d = 1; d <= c.top_degree(); ++d) {
        nlohmann::ordered_json entry;
        entry["dimension"] = d - 1;
        auto cells = nlohmann::ordered_json::array();
        for (const auto& m : c.cells_of_dimension(d - 1)) cells.push_back(format_monomial(m, names));
        entry["cells"] = std::move(cells);
        dims.push_back(std::move(entry));
    }
    j["cells_by_dimension"] = std::move(dims);
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [lo, hi] : covering_edges(c))
        edges.push_back({format_monomial(lo, names), format_monomial(hi, names)});
    j["edges"] = std::move(edges);
    return j.dump();
}

std::string face_poset_dot(const CellComplex& c, const VariableNames& names) {
    std::ostringstream out;
    out << "digraph zeta {\n  rankdir=BT;\n";
    for (const auto& m : c.cells())
        out << "  \"" << format_monomial(m, names) << "\" [label=\"" << format_monomial(m, names)
            << "\\ndim " << m.degree() - 1 << "\"];\n";
    for (const auto& [lo, hi] : covering_edges(c))
        out << "  \"" << format_monomial(lo, names) << "\" -> \"" << format_monomial(hi, names) << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace apolar
