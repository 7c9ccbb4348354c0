#include "sympl/json_io.hpp"

namespace sympl {

json to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Mat mat_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix JSON: expected an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j.at(i).size()) != cols)
            throw std::invalid_argument("matrix JSON: ragged rows");
        for (int c = 0; c < cols; ++c) m.at(i, c) = parse_rat(j.at(i).at(c).get<std::string>());
    }
    return m;
}

json to_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
}

std::vector<Rat> vec_from_json(const json& j) {
    std::vector<Rat> v;
    for (const auto& e : j) v.push_back(parse_rat(e.get<std::string>()));
    return v;
}

json to_json(const Subspace& s) {
    json basis = json::array();
    for (int c = 0; c < s.basis().cols(); ++c) basis.push_back(to_json(s.basis().col(c)));
    return json{{"ambient_dim", s.ambient_dim()}, {"basis", basis}};
}

json to_json(const LinRel& r) {
    json basis = json::array();
    for (int c = 0; c < r.graph.cols(); ++c) basis.push_back(to_json(r.graph.col(c)));
    return json{{"source_dim", r.src_dim}, {"target_dim", r.tgt_dim}, {"graph_basis", basis}};
}

json to_json(const PolyBivector& pi) {
    json entries = json::array();
    for (const auto& [ij, p] : pi.entries()) {
        json terms = json::array();
        for (const auto& [e, c] : p.terms()) {
            json exps = json::array();
            for (auto v : e) exps.push_back(v);
            terms.push_back(json{{"coef", rat_str(c)}, {"exps", exps}});
        }
        entries.push_back(json{{"i", ij.first + 1}, {"j", ij.second + 1}, {"poly", terms}});
    }
    return json{{"dim", pi.dim()}, {"entries", entries}};
}

PolyBivector bivector_from_json(const json& j) {
    if (!j.contains("dim")) throw std::invalid_argument("bivector JSON: missing 'dim'");
    int n = j.at("dim").get<int>();
    if (n < 1) throw std::invalid_argument("bivector JSON: dim must be positive");
    PolyBivector pi(n);
    for (const auto& e : j.value("entries", json::array())) {
        int i = e.at("i").get<int>() - 1;
        int k = e.at("j").get<int>() - 1;
        if (!(0 <= i && i < k && k < n))
            throw std::invalid_argument("bivector JSON: entry needs 1 <= i < j <= dim");
        Polynomial p(n);
        for (const auto& t : e.at("poly")) {
            Polynomial::Exps exps;
            for (const auto& v : t.at("exps")) exps.push_back(v.get<uint32_t>());
            if (static_cast<int>(exps.size()) != n)
                throw std::invalid_argument("bivector JSON: exponent tuple arity != dim");
            p.add_term(exps, parse_rat(t.at("coef").get<std::string>()));
        }
        pi.set_entry(i, k, p);
    }
    return pi;
}

json to_json(const DiscretizedBoundaryField& f) {
    json x = json::array(), eta = json::array();
    for (const auto& row : f.x) x.push_back(to_json(row));
    for (const auto& row : f.eta) eta.push_back(to_json(row));
    return json{{"bivector", to_json(f.pi)}, {"N", f.N}, {"X", x}, {"eta", eta}};
}

DiscretizedBoundaryField field_from_json(const json& j) {
    PolyBivector pi = bivector_from_json(j.at("bivector"));
    int n = j.at("N").get<int>();
    std::vector<std::vector<Rat>> x, eta;
    for (const auto& row : j.at("X")) x.push_back(vec_from_json(row));
    for (const auto& row : j.at("eta")) eta.push_back(vec_from_json(row));
    return DiscretizedBoundaryField(std::move(pi), n, std::move(x), std::move(eta));
}

json to_json(const GroupoidReport& r) {
    json axioms = json::array(), corollaries = json::array(), invariants = json::array();
    for (const auto& c : r.checks) {
        json e{{"id", c.id}, {"pass", c.pass}};
        if (c.lhs_dim >= 0) e["lhs_dim"] = c.lhs_dim;
        if (c.rhs_dim >= 0) e["rhs_dim"] = c.rhs_dim;
        if (!c.detail.empty()) e["detail"] = c.detail;
        if (c.id.rfind("A.", 0) == 0)
            axioms.push_back(e);
        else if (c.id.rfind("C.", 0) == 0)
            corollaries.push_back(e);
        else
            invariants.push_back(e);
    }
    return json{{"axioms", axioms}, {"corollaries", corollaries}, {"invariants", invariants},
                {"all_pass", r.all_pass()}};
}

json to_json(const InducedPoisson& p) {
    json j{{"solvable", p.solvable}, {"unique", p.unique}, {"t_consistent", p.t_consistent},
           {"freedom", p.freedom}};
    if (p.solvable) j["matrix"] = to_json(p.pi);
    if (!p.detail.empty()) j["detail"] = p.detail;
    return j;
}

} // namespace sympl
