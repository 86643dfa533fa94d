#include "hodgecalc/io.hpp"

#include <sstream>

namespace hodgecalc {

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = std::move(rows);
    return j;
}

Json to_json(const Subspace& s) {
    Json j;
    j["ambient_dim"] = s.ambient_dim();
    j["basis"] = to_json(s.basis());
    return j;
}

Json to_json(const FlagFiltration& f) {
    Json steps = Json::array();
    for (const auto& [idx, sub] : f.steps()) {
        Json st;
        st["index"] = rational_str(idx);
        st["basis"] = to_json(sub.basis());
        steps.push_back(std::move(st));
    }
    Json j;
    j["ambient_dim"] = f.ambient_dim();
    j["increasing"] = f.increasing();
    j["steps"] = std::move(steps);
    return j;
}

Json to_json(const WeightFiltration& w) {
    Json j;
    j["center"] = w.center;
    j["filtration"] = to_json(w.filtration);
    return j;
}

Json to_json(const SplitMHS& h) {
    Json pieces = Json::object();
    for (const auto& [pq, s] : h.pieces())
        pieces[std::to_string(pq.first) + "," + std::to_string(pq.second)] =
            to_json(s.basis());
    Json j;
    j["dim"] = h.dim();
    j["pieces"] = std::move(pieces);
    j["conj"] = to_json(h.conj_matrix());
    return j;
}

Json to_json(const DiskQuiver& q) {
    Json j;
    j["psi_dim"] = q.psi_dim;
    j["phi_dim"] = q.phi_dim;
    j["c"] = to_json(q.c);
    j["v"] = to_json(q.v);
    return j;
}

Json to_json(const PolarizedInput& in) {
    Json j;
    j["dim"] = in.dim;
    j["F"] = to_json(in.F);
    j["W"] = to_json(in.W);
    Json ns = Json::array();
    for (const auto& N : in.N_list) ns.push_back(to_json(N));
    j["N_list"] = std::move(ns);
    j["m_list"] = in.m_list;
    j["S"] = to_json(in.S);
    j["w"] = in.w;
    return j;
}

Json to_json(const ExtendedStructure& ext) {
    Json j;
    j["dim"] = ext.dim;
    j["l"] = ext.l;
    j["weight"] = ext.weight;
    j["s_action"] = to_json(ext.s_action);
    Json ns = Json::array();
    for (const auto& N : ext.N_tilde) ns.push_back(to_json(N));
    j["N_tilde"] = std::move(ns);
    j["total_nilpotent"] = to_json(ext.total_nilpotent);
    j["F"] = to_json(ext.F);
    j["W_shifted"] = to_json(ext.W_shifted);
    j["W"] = to_json(ext.W);
    j["S_tilde"] = to_json(ext.S_tilde);
    return j;
}

Json to_json(const NilpotentOrbit& orbit) {
    Json j;
    j["lattice_dim"] = orbit.lattice_dim;
    j["Q"] = to_json(orbit.Q);
    Json ns = Json::array();
    for (const auto& N : orbit.N_list) ns.push_back(to_json(N));
    j["N_list"] = std::move(ns);
    Json pieces = Json::object();
    for (const auto& [pq, s] : orbit.bigrading)
        pieces[std::to_string(pq.first) + "," + std::to_string(pq.second)] =
            to_json(s.basis());
    j["bigrading"] = std::move(pieces);
    j["omega"] = orbit.omega.str();
    return j;
}

Json to_json(const SectionFamily& fam) {
    Json gens = Json::array();
    for (const auto& g : fam.generators) {
        Json comps = Json::array();
        for (const auto& e : g) {
            Json c;
            c["expo"] = e.expo;
            c["coeff"] = e.coeff.str();
            comps.push_back(std::move(c));
        }
        gens.push_back(std::move(comps));
    }
    Json j;
    j["num_coords"] = fam.num_coords;
    j["rank"] = fam.rank;
    j["generators"] = std::move(gens);
    return j;
}

namespace {
std::string monomial_str(const std::vector<long>& expo) {
    std::string s;
    for (size_t j = 0; j < expo.size(); ++j) {
        if (expo[j] == 0) continue;
        if (!s.empty()) s += "*";
        s += "s" + std::to_string(j + 1);
        if (expo[j] != 1) s += "^" + std::to_string(expo[j]);
    }
    return s.empty() ? "1" : s;
}

std::string z_monomial_str(const std::vector<unsigned>& expo) {
    std::string s;
    for (size_t j = 0; j < expo.size(); ++j) {
        if (expo[j] == 0) continue;
        if (!s.empty()) s += "*";
        s += "z" + std::to_string(j + 1);
        if (expo[j] != 1) s += "^" + std::to_string(expo[j]);
    }
    return s.empty() ? "1" : s;
}
} // namespace

Json to_json(const Presentation& pres) {
    Json rels = Json::array();
    for (const auto& rel : pres.relations) {
        Json cols = Json::array();
        for (const auto& coeffs : rel.coeffs) {
            Json terms = Json::object();
            for (const auto& [expo, c] : coeffs) terms[monomial_str(expo)] = c.str();
            cols.push_back(std::move(terms));
        }
        rels.push_back(std::move(cols));
    }
    Json j;
    j["relations"] = std::move(rels);
    j["degree_bound"] = pres.degree_bound;
    j["degree_bound_reached"] = pres.degree_bound_reached;
    return j;
}

Json to_json(const ClosurePolynomial& poly) {
    Json terms = Json::array();
    for (const auto& t : poly.terms) {
        Json term;
        term["z"] = z_monomial_str(t.z_expo);
        term["s"] = monomial_str(t.s_expo);
        Json lin = Json::array();
        for (const auto& c : t.h_linear) lin.push_back(c.str());
        term["h_coefficients"] = std::move(lin);
        terms.push_back(std::move(term));
    }
    Json j;
    j["terms"] = std::move(terms);
    j["note"] = "z_j and s_j are independent symbols; s_j = e^{2*pi*i*z_j} is recorded, "
                "not substituted";
    return j;
}

Json to_json(const FiberClassification& cls) {
    Json strata = Json::array();
    for (const auto& rep : cls.strata) {
        Json st;
        st["vanishing"] = rep.vanishing;
        st["fiber_dim"] = rep.fiber_dimension;
        st["bounded_lattice_rank"] = rep.bounded_lattice_rank;
        st["torus_rank"] = rep.torus_rank;
        st["vector_dim"] = rep.vector_dim;
        st["odd_bounded_rank"] = rep.odd_bounded_rank;
        strata.push_back(std::move(st));
    }
    Json j;
    j["strata"] = std::move(strata);
    j["ok"] = cls.ok;
    return j;
}

Scalar scalar_from_json(const Json& j) {
    if (!j.is_string()) throw parse_error("scalar: expected a string literal");
    return Scalar::parse(j.get<std::string>());
}

Matrix matrix_from_json(const Json& j) {
    if (j.is_array()) {
        // bare array-of-arrays form
        size_t rows = j.size();
        size_t cols = rows ? j[0].size() : 0;
        Matrix m(rows, cols);
        for (size_t i = 0; i < rows; ++i) {
            if (j[i].size() != cols) throw parse_error("matrix: ragged rows");
            for (size_t c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(j[i][c]);
        }
        return m;
    }
    size_t rows = j.at("rows").get<size_t>();
    size_t cols = j.at("cols").get<size_t>();
    Matrix m(rows, cols);
    const Json& entries = j.at("entries");
    if (entries.size() != rows) throw parse_error("matrix: row count mismatch");
    for (size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw parse_error("matrix: column count mismatch");
        for (size_t c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(entries[i][c]);
    }
    return m;
}

Subspace subspace_from_json(const Json& j) {
    size_t ambient = j.at("ambient_dim").get<size_t>();
    Matrix basis = matrix_from_json(j.at("basis"));
    if (basis.rows() == 0) return Subspace::zero(ambient);
    if (basis.cols() != ambient) throw parse_error("subspace: ambient mismatch");
    return Subspace::span(basis);
}

FlagFiltration flag_from_json(const Json& j) {
    size_t ambient = j.at("ambient_dim").get<size_t>();
    bool increasing = j.at("increasing").get<bool>();
    std::vector<std::pair<Rational, Subspace>> steps;
    for (const auto& st : j.at("steps")) {
        Rational idx = parse_rational(st.at("index").get<std::string>());
        Matrix basis = matrix_from_json(st.at("basis"));
        Subspace sub = basis.rows() == 0 ? Subspace::zero(ambient) : Subspace::span(basis);
        steps.emplace_back(idx, sub);
    }
    return FlagFiltration::from_steps(ambient, increasing, std::move(steps));
}

namespace {
std::pair<long, long> parse_pq(const std::string& key) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw parse_error("bigrading key must be \"p,q\"");
    return {std::stol(key.substr(0, comma)), std::stol(key.substr(comma + 1))};
}
} // namespace

SplitMHS mhs_from_json(const Json& j) {
    size_t dim = j.at("dim").get<size_t>();
    std::map<std::pair<long, long>, Subspace> pieces;
    for (const auto& [key, val] : j.at("pieces").items()) {
        Matrix basis = matrix_from_json(val);
        pieces[parse_pq(key)] =
            basis.rows() == 0 ? Subspace::zero(dim) : Subspace::span(basis);
    }
    return SplitMHS::make(dim, std::move(pieces), matrix_from_json(j.at("conj")));
}

DiskQuiver quiver_from_json(const Json& j) {
    const Json& src = j.contains("results") && j.at("results").contains("quiver")
                          ? j.at("results").at("quiver")
                          : j;
    return DiskQuiver::make(src.at("psi_dim").get<size_t>(), src.at("phi_dim").get<size_t>(),
                            matrix_from_json(src.at("c")), matrix_from_json(src.at("v")));
}

PolarizedInput polarized_from_json(const Json& j) {
    std::vector<Matrix> ns;
    for (const auto& nj : j.at("N_list")) ns.push_back(matrix_from_json(nj));
    std::vector<long> ms;
    if (j.contains("m_list")) ms = j.at("m_list").get<std::vector<long>>();
    return PolarizedInput::make(j.at("dim").get<size_t>(), flag_from_json(j.at("F")),
                                flag_from_json(j.at("W")), std::move(ns), std::move(ms),
                                matrix_from_json(j.at("S")), j.at("w").get<long>());
}

NilpotentOrbit orbit_from_json(const Json& j) {
    size_t dim = j.at("lattice_dim").get<size_t>();
    std::vector<Matrix> ns;
    for (const auto& nj : j.at("N_list")) ns.push_back(matrix_from_json(nj));
    std::map<std::pair<long, long>, Subspace> pieces;
    if (j.contains("bigrading"))
        for (const auto& [key, val] : j.at("bigrading").items()) {
            Matrix basis = matrix_from_json(val);
            pieces[parse_pq(key)] =
                basis.rows() == 0 ? Subspace::zero(dim) : Subspace::span(basis);
        }
    Scalar omega = j.contains("omega") ? Scalar::parse(j.at("omega").get<std::string>())
                                       : Scalar::i();
    return NilpotentOrbit::make(dim, matrix_from_json(j.at("Q")), std::move(ns),
                                std::move(pieces), omega);
}

SectionFamily sections_from_json(const Json& j) {
    size_t num_coords = j.at("num_coords").get<size_t>();
    size_t rank = j.at("rank").get<size_t>();
    std::vector<std::vector<LaurentEntry>> gens;
    for (const auto& gj : j.at("generators")) {
        std::vector<LaurentEntry> g;
        for (const auto& cj : gj) {
            LaurentEntry e;
            e.expo = cj.at("expo").get<std::vector<long>>();
            e.coeff = Scalar::parse(cj.at("coeff").get<std::string>());
            g.push_back(std::move(e));
        }
        gens.push_back(std::move(g));
    }
    return SectionFamily::make(num_coords, rank, std::move(gens));
}

bool Report::all_pass() const {
    for (const auto& v : verdicts)
        if (!v.pass) return false;
    return true;
}

Json Report::to_json() const {
    Json j;
    j["command"] = command;
    j["inputs_digest"] = inputs_digest;
    j["results"] = results;
    Json vs = Json::array();
    for (const auto& v : verdicts) {
        Json vj;
        vj["check"] = v.name;
        vj["pass"] = v.pass;
        if (!v.pass) vj["witness"] = v.witness;
        vs.push_back(std::move(vj));
    }
    j["verdicts"] = std::move(vs);
    j["pass"] = all_pass();
    return j;
}

std::string digest(const std::string& data) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace hodgecalc
