#include "tqft/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tqft {

namespace {

bool looks_like_json(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return c == '{' || c == '[';
    return false;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

// "cyclic:7" / "D4" / "S3" style shorthand
FiniteGroup group_from_shorthand(const std::string& s) {
    auto num_suffix = [](const std::string& t, size_t from) {
        return std::stoi(t.substr(from));
    };
    if (s == "trivial") return FiniteGroup::trivial();
    if (s == "Q8" || s == "quaternion8") return FiniteGroup::quaternion8();
    if (auto c = s.find(':'); c != std::string::npos) {
        std::string head = s.substr(0, c), rest = s.substr(c + 1);
        if (head == "product") {
            auto comma = rest.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("product spec needs two factors: " + s);
            return FiniteGroup::product(group_from_shorthand(rest.substr(0, comma)),
                                        group_from_shorthand(rest.substr(comma + 1)));
        }
        return FiniteGroup::preset(head, {num_suffix(rest, 0)});
    }
    if (s.size() >= 2 && (s[0] == 'Z' || s[0] == 'S' || s[0] == 'D') &&
        std::isdigit(static_cast<unsigned char>(s[1]))) {
        int n = num_suffix(s, 1);
        if (s[0] == 'Z') return FiniteGroup::cyclic(n);
        if (s[0] == 'S') return FiniteGroup::symmetric(n);
        return FiniteGroup::dihedral(n);
    }
    throw std::invalid_argument("unrecognized group spec: " + s);
}

Cplx complex_from_json(const Json& j) {
    if (j.is_number()) return Cplx(j.get<double>(), 0);
    if (j.is_array() && j.size() == 2) return Cplx(j[0].get<double>(), j[1].get<double>());
    throw std::invalid_argument("complex entries must be numbers or [re, im] pairs");
}

} // namespace

FiniteGroup group_from_json(const Json& j) {
    if (j.contains("preset")) {
        std::vector<int> params;
        if (j.contains("params"))
            for (const auto& p : j["params"]) params.push_back(p.get<int>());
        return FiniteGroup::preset(j["preset"].get<std::string>(), params);
    }
    if (!j.contains("cayley")) throw std::invalid_argument("group JSON needs \"preset\" or \"cayley\"");
    auto cayley = j["cayley"].get<std::vector<std::vector<int>>>();
    if (j.contains("order") && j["order"].get<size_t>() != cayley.size())
        throw std::invalid_argument("group JSON: declared order does not match the table");
    std::string name = j.value("name", "custom");
    return FiniteGroup::from_cayley(name, std::move(cayley));
}

FiniteGroup load_group_spec(const std::string& spec) {
    if (looks_like_json(spec)) return group_from_json(Json::parse(spec));
    if (spec.find(".json") != std::string::npos || spec.find('/') != std::string::npos)
        return group_from_json(read_json_file(spec));
    return group_from_shorthand(spec);
}

FrobeniusAlgebra algebra_from_json(const Json& j) {
    if (j.contains("class_functions_of")) {
        const Json& g = j["class_functions_of"];
        return class_function_algebra(g.is_string() ? load_group_spec(g.get<std::string>())
                                                    : group_from_json(g));
    }
    if (j.contains("semisimple")) {
        std::vector<Cplx> traces;
        for (const auto& v : j["semisimple"]) traces.push_back(complex_from_json(v));
        return semisimple_algebra(traces);
    }
    if (j.contains("group_algebra_of")) {
        const Json& g = j["group_algebra_of"];
        return group_algebra(g.is_string() ? load_group_spec(g.get<std::string>())
                                           : group_from_json(g));
    }
    if (!j.contains("mu") || !j.contains("unit") || !j.contains("trace"))
        throw std::invalid_argument("algebra JSON needs mu/unit/trace (or a constructor key)");
    const Json& jm = j["mu"];
    size_t n = j["unit"].size();
    if (jm.size() != n) throw std::invalid_argument("algebra JSON: mu has wrong outer dimension");
    std::vector<Cplx> mu(n * n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t jj = 0; jj < n; ++jj)
            for (size_t k = 0; k < n; ++k) mu[(i * n + jj) * n + k] = complex_from_json(jm[i][jj][k]);
    Eigen::VectorXcd unit(n), trace(n);
    for (size_t i = 0; i < n; ++i) {
        unit[i] = complex_from_json(j["unit"][i]);
        trace[i] = complex_from_json(j["trace"][i]);
    }
    return build_algebra(mu, unit, trace);
}

FrobeniusAlgebra load_algebra_spec(const std::string& spec) {
    if (looks_like_json(spec)) return algebra_from_json(Json::parse(spec));
    return algebra_from_json(read_json_file(spec));
}

Triangulation triangulation_from_json(const Json& j) {
    Triangulation t;
    t.n_vertices = 0; // raw slot form: vertex data absent
    int max_edge = -1;
    for (const auto& tri : j.at("triangles")) {
        if (tri.size() != 3) throw std::invalid_argument("triangulation: each triangle needs 3 edges");
        Triangulation::Tri tr;
        for (int i = 0; i < 3; ++i) {
            tr.edge[i] = tri[i].get<int>();
            tr.forward[i] = true;
            tr.vert[i] = 0;
            max_edge = std::max(max_edge, tr.edge[i]);
        }
        t.tris.push_back(tr);
    }
    t.edges.assign(max_edge + 1, {});
    for (const auto& p : j.value("pairings", Json::array()))
        t.pairings.emplace_back(p[0].get<int>(), p[1].get<int>());
    for (const auto& c : j.value("boundary", Json::array())) {
        std::vector<Slot> circle;
        for (const auto& s : c) circle.push_back(s.get<int>());
        t.boundary_circles.push_back(std::move(circle));
    }
    t.validate();
    return t;
}

Triangulation load_surface_spec(const std::string& spec) {
    if (spec.rfind("genus:", 0) == 0) return standard_surface(std::stoi(spec.substr(6)));
    if (spec == "cylinder") return cylinder_triangulation();
    if (looks_like_json(spec)) return triangulation_from_json(Json::parse(spec));
    return triangulation_from_json(read_json_file(spec));
}

Json triangulation_to_json(const Triangulation& t) {
    Json j;
    j["triangles"] = Json::array();
    for (const auto& tr : t.tris) j["triangles"].push_back({tr.edge[0], tr.edge[1], tr.edge[2]});
    j["pairings"] = Json::array();
    for (auto [a, b] : t.pairings) j["pairings"].push_back({a, b});
    j["boundary"] = t.boundary_circles;
    if (t.has_vertex_data()) {
        j["vertices"] = t.n_vertices;
        j["euler_characteristic"] = t.euler_characteristic();
    }
    return j;
}

Json complex_to_json(const Cplx& z) { return Json::array({z.real(), z.imag()}); }

Json rational_to_json(const Rational& r) {
    return Json{{"value", to_string(r)}, {"decimal", to_double(r)}};
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json output_envelope(const std::string& subcommand) {
    return Json{{"schema", "tqft/1"}, {"command", subcommand}};
}

} // namespace tqft
