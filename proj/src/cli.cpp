#include "tqft/cli.hpp"

#include "tqft/character.hpp"
#include "tqft/cobordism.hpp"
#include "tqft/dijkgraaf_witten.hpp"
#include "tqft/errors.hpp"
#include "tqft/frobenius.hpp"
#include "tqft/json_io.hpp"
#include "tqft/lattice.hpp"
#include "tqft/modular.hpp"
#include "tqft/open_closed.hpp"
#include "tqft/selftest.hpp"
#include "tqft/yang_mills.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

namespace tqft {

namespace {

struct Options {
    std::string group_spec, algebra_spec, surface_spec, word_file, format = "table";
    std::string emit = "s,t,c,dims", method = "brute", spectrum = "su2", only;
    std::string traces, ks, signs, boundary, action = "classes";
    int genus = 1, level = 1, nmax = 0, shuffle = 0, n_points = 0;
    double area = 0;
    std::uint64_t seed = kDefaultSeed;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_group(const Options& o, std::ostream& out) {
    FiniteGroup G = load_group_spec(o.group_spec);
    Json j = output_envelope("group");
    j["name"] = G.name();
    j["order"] = G.order();
    if (o.action == "classes" || o.action.empty()) {
        Json cls = Json::array();
        for (const auto& c : G.classes())
            cls.push_back(Json{{"representative", c.representative}, {"size", c.size()},
                               {"members", c.members}});
        j["classes"] = cls;
        std::vector<int> sizes;
        for (const auto& c : G.classes()) sizes.push_back(c.size());
        j["class_sizes"] = sizes;
    } else if (o.action == "table") {
        j["cayley"] = G.cayley();
    } else if (o.action == "constants") {
        ClassTensor N = class_structure_constants(G);
        Json t = Json::array();
        for (int a = 0; a < N.r; ++a) {
            Json plane = Json::array();
            for (int b = 0; b < N.r; ++b) {
                Json row = Json::array();
                for (int c = 0; c < N.r; ++c) row.push_back(N(a, b, c));
                plane.push_back(row);
            }
            t.push_back(plane);
        }
        j["class_structure_constants"] = t;
    } else {
        throw std::invalid_argument("group: unknown action (classes|table|constants)");
    }
    print_json(out, j);
    return 0;
}

int cmd_chartable(const Options& o, std::ostream& out) {
    FiniteGroup G = load_group_spec(o.group_spec);
    CharacterTable t = character_table(G, o.seed);
    Json j = output_envelope("chartable");
    j["group"] = G.name();
    j["dims"] = t.dims;
    Json cls = Json::array();
    for (const auto& c : t.classes) cls.push_back(Json{{"representative", c.representative}, {"size", c.size()}});
    j["classes"] = cls;
    j["chi"] = matrix_to_json(t.chi);
    auto rep = verify_orthogonality(t);
    j["orthogonality_defect"] = std::max(rep.row_defect, rep.col_defect);
    print_json(out, j);
    return 0;
}

int cmd_frob(const Options& o, std::ostream& out) {
    FrobeniusAlgebra A = load_algebra_spec(o.algebra_spec);
    Json j = output_envelope("frob");
    j["dim"] = A.dim();
    j["commutative"] = A.commutative();
    HandleElement h = handle_element(A);
    j["semisimple"] = h.invertible;
    Json omega = Json::array();
    for (int i = 0; i < A.dim(); ++i) omega.push_back(complex_to_json(h.coordinates[i]));
    j["handle_element"] = omega;
    Cplx z = genus_invariant(A, o.genus);
    j["genus"] = o.genus;
    j["genus_invariant"] = complex_to_json(z);
    print_json(out, j);
    return 0;
}

int cmd_cob(const Options& o, std::ostream& out) {
    std::ifstream in(o.word_file);
    if (!in) throw std::invalid_argument("cannot open word file: " + o.word_file);
    CobordismWord w = CobordismWord::parse(in);
    FrobeniusAlgebra A = load_algebra_spec(o.algebra_spec);
    auto [nin, nout] = typecheck(w);
    Eigen::MatrixXcd m = evaluate(w, A);
    Json j = output_envelope("cob");
    j["in_circles"] = nin;
    j["out_circles"] = nout;
    j["matrix"] = matrix_to_json(m);
    print_json(out, j);
    return 0;
}

int cmd_openclosed(const Options& o, std::ostream& out) {
    auto trace_parts = split(o.traces, ',');
    auto k_parts = split(o.ks, ',');
    auto sign_parts = split(o.signs, ',');
    if (trace_parts.empty() || trace_parts.size() != k_parts.size())
        throw std::invalid_argument("openclosed: --traces and --k must list one entry per point");
    Eigen::VectorXcd traces(trace_parts.size());
    std::vector<int> k, signs;
    for (size_t i = 0; i < trace_parts.size(); ++i) {
        traces[i] = std::stod(trace_parts[i]);
        k.push_back(std::stoi(k_parts[i]));
        signs.push_back(i < sign_parts.size() && (sign_parts[i] == "-" || sign_parts[i] == "-1") ? -1 : 1);
    }
    OpenAlgebra A = build_open_algebra(make_closed_algebra(traces, signs), k);
    CardyReport rep = cardy_check(A);
    Json j = output_envelope("openclosed");
    j["n_points"] = A.closed.n();
    j["k"] = k;
    j["k_theory"] = classify_branes(A.closed);
    j["cardy_defect"] = rep.defect;
    j["cardy_pass"] = rep.defect < 1e-9;
    print_json(out, j);
    return 0;
}

int cmd_dw(const Options& o, std::ostream& out) {
    FiniteGroup G = load_group_spec(o.group_spec);
    Json j = output_envelope("dw");
    j["group"] = G.name();
    j["genus"] = o.genus;
    if (!o.boundary.empty()) {
        SurfaceSignature sig;
        sig.genus = o.genus;
        for (const auto& b : split(o.boundary, ',')) sig.boundary_classes.push_back(std::stoi(b));
        Rational v = npoint_function(G, sig);
        j["boundary_classes"] = sig.boundary_classes;
        j["npoint"] = rational_to_json(v);
        print_json(out, j);
        return 0;
    }
    if (o.method == "character") {
        CharacterTable t = character_table(G, o.seed);
        j["value"] = mednykh_formula(G, o.genus, t);
        j["method"] = "character";
        print_json(out, j);
        return 0;
    }
    HomCountMethod m = o.method == "brute" ? HomCountMethod::Brute : HomCountMethod::Convolution;
    if (o.genus == 0) {
        Rational v = dw_invariant(G, 0);
        j["value"] = to_string(v);
        j["decimal"] = to_double(v);
    } else {
        BigInt homs = count_homs_surface_group(G, o.genus, m);
        j["hom_count"] = homs.str();
        j["value"] = homs.str() + "/" + std::to_string(G.order());
        j["decimal"] = to_double(Rational(homs, G.order()));
    }
    j["method"] = o.method;
    print_json(out, j);
    return 0;
}

int cmd_lattice(const Options& o, std::ostream& out) {
    FiniteGroup G = load_group_spec(o.group_spec);
    Triangulation t = load_surface_spec(o.surface_spec);
    LatticeTensorData data = group_algebra_tensors(G);
    Json j = output_envelope("lattice");
    j["group"] = G.name();
    j["surface"] = triangulation_to_json(t);
    if (o.shuffle > 0) {
        Rational before = t.boundary_circles.empty() ? partition_function(t, data) : Rational(0);
        t = random_pachner_mix(t, o.shuffle, o.seed);
        j["shuffled_moves"] = o.shuffle;
        j["seed"] = o.seed;
        if (t.boundary_circles.empty()) {
            Rational after = partition_function(t, data);
            j["pachner_invariant"] = (before == after);
            j["value"] = rational_to_json(after);
            print_json(out, j);
            return before == after ? 0 : 1;
        }
    }
    if (t.boundary_circles.empty()) {
        j["value"] = rational_to_json(partition_function(t, data));
    } else {
        ContractionResult res = contract(t, data);
        Json entries = Json::array();
        for (const auto& [key, val] : res.entries)
            entries.push_back(Json{{"coloring", key}, {"value", to_string(val)},
                                   {"decimal", to_double(val)}});
        j["boundary_tensor"] = entries;
    }
    print_json(out, j);
    return 0;
}

// CSV form: one block per emitted item, labels in the first column.
void emit_modular_csv(std::ostream& out, const ModularData& md, const std::string& emit) {
    auto csv_complex = [](const Cplx& z) {
        std::ostringstream os;
        os.precision(15);
        os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
        return os.str();
    };
    for (const auto& what : split(emit, ',')) {
        if (what == "dims") {
            out << "qdim";
            for (int i = 0; i < md.rank(); ++i) out << "," << md.qdims[i];
            out << "\n";
        } else if (what == "t") {
            out << "theta";
            for (int i = 0; i < md.rank(); ++i) out << "," << csv_complex(md.T[i]);
            out << "\n";
        } else if (what == "c") {
            out << "dual";
            for (int i = 0; i < md.rank(); ++i) out << "," << md.C[i];
            out << "\n";
        } else if (what == "s") {
            for (int i = 0; i < md.rank(); ++i) {
                out << "S[" << i << "]";
                for (int k = 0; k < md.rank(); ++k) out << "," << csv_complex(md.S(i, k));
                out << "\n";
            }
        } else if (what == "fusion") {
            FusionTensor N = verlinde_fusion(md);
            for (int i = 0; i < N.rank; ++i)
                for (int jj = 0; jj < N.rank; ++jj) {
                    out << "N[" << i << "][" << jj << "]";
                    for (int k = 0; k < N.rank; ++k) out << "," << N(i, jj, k);
                    out << "\n";
                }
        } else {
            throw std::invalid_argument("csv emit: unknown item " + what);
        }
    }
}

int cmd_double(const Options& o, std::ostream& out) {
    FiniteGroup G = load_group_spec(o.group_spec);
    ModularData md = drinfeld_double_data(G, o.seed);
    if (o.format == "csv") {
        emit_modular_csv(out, md, o.emit);
        return 0;
    }
    Json j = output_envelope("double");
    j["group"] = G.name();
    j["rank"] = md.rank();
    j["labels"] = md.labels;
    for (const auto& what : split(o.emit, ',')) {
        if (what == "s") j["S"] = matrix_to_json(md.S);
        else if (what == "t") {
            Json tt = Json::array();
            for (int i = 0; i < md.rank(); ++i) tt.push_back(complex_to_json(md.T[i]));
            j["T"] = tt;
        } else if (what == "c") j["C"] = md.C;
        else if (what == "dims") {
            std::vector<double> q(md.qdims.data(), md.qdims.data() + md.rank());
            j["qdims"] = q;
        } else if (what == "fusion") {
            FusionTensor N = verlinde_fusion(md);
            Json f = Json::array();
            for (int i = 0; i < N.rank; ++i) {
                Json plane = Json::array();
                for (int jj = 0; jj < N.rank; ++jj) {
                    Json row = Json::array();
                    for (int kk = 0; kk < N.rank; ++kk) row.push_back(N(i, jj, kk));
                    plane.push_back(row);
                }
                f.push_back(plane);
            }
            j["fusion"] = f;
        } else {
            throw std::invalid_argument("double: unknown emit item " + what);
        }
    }
    if (o.genus >= 0) {
        j["genus"] = o.genus;
        j["verlinde_dim"] = verlinde_dim(md, o.genus);
        if (o.genus >= 1) j["orbit_count"] = burnside_orbit_oracle(G, o.genus).str();
    }
    j["relations_max_defect"] = modular_relations_check(md).max_defect();
    print_json(out, j);
    return 0;
}

int cmd_su2k(const Options& o, std::ostream& out) {
    ModularData md = su2_level_k_data(o.level);
    if (o.format == "csv") {
        emit_modular_csv(out, md, "dims,t,s,fusion");
        return 0;
    }
    Json j = output_envelope("su2k");
    j["level"] = o.level;
    j["rank"] = md.rank();
    j["S"] = matrix_to_json(md.S);
    Json tt = Json::array();
    for (int i = 0; i < md.rank(); ++i) tt.push_back(complex_to_json(md.T[i]));
    j["T"] = tt;
    std::vector<double> q(md.qdims.data(), md.qdims.data() + md.rank());
    j["qdims"] = q;
    FusionTensor N = verlinde_fusion(md);
    Json f = Json::array();
    for (int i = 0; i < N.rank; ++i) {
        Json plane = Json::array();
        for (int jj = 0; jj < N.rank; ++jj) {
            Json row = Json::array();
            for (int kk = 0; kk < N.rank; ++kk) row.push_back(N(i, jj, kk));
            plane.push_back(row);
        }
        f.push_back(plane);
    }
    j["fusion"] = f;
    if (o.genus >= 0) {
        j["genus"] = o.genus;
        j["verlinde_dim"] = verlinde_dim(md, o.genus);
    }
    j["relations_max_defect"] = modular_relations_check(md).max_defect();
    print_json(out, j);
    return 0;
}

int cmd_ym(const Options& o, std::ostream& out) {
    Json j = output_envelope("ym");
    Spectrum s;
    if (o.spectrum == "su2") {
        int nmax = o.nmax > 0 ? o.nmax : su2_nmax_for_tail(o.genus, o.area, 0.25, 1e-8);
        s = su2_spectrum(nmax);
        j["nmax"] = nmax;
    } else {
        FiniteGroup G = load_group_spec(o.spectrum);
        s = finite_group_spectrum(character_table(G, o.seed));
        j["group"] = G.name();
    }
    PartitionValue z = ym_partition_function(s, o.genus, o.area);
    j["genus"] = o.genus;
    j["area"] = o.area;
    j["value"] = z.value;
    j["tail_bound"] = z.tail_bound;
    print_json(out, j);
    return 0;
}

int cmd_selftest(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.format == "json") {
        out << selftest_payload_json(o.seed, o.only) << "\n";
        // pass/fail still decides the exit code
        auto results = run_selftest(o.seed, o.only);
        for (const auto& r : results)
            if (!r.pass) return 1;
        return 0;
    }
    auto results = run_selftest(o.seed, o.only);
    bool all = true;
    for (const auto& r : results) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << " " << std::left
            << std::setw(30) << r.name << std::right << " (" << std::fixed << std::setprecision(1)
            << r.millis << " ms)  " << r.detail << "\n";
        out.unsetf(std::ios::fixed);
        all = all && r.pass;
    }
    if (!all) err << "selftest: at least one criterion failed\n";
    return all ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite-group TQFT toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_group = [&](CLI::App* c) { c->add_option("--group,--preset", o.group_spec, "group spec"); };
    auto add_common = [&](CLI::App* c) {
        c->add_option("--seed", o.seed, "PRNG seed");
        c->add_option("--format", o.format, "output format (json|table)");
    };

    CLI::App* g = app.add_subcommand("group", "group structure");
    add_group(g);
    g->add_option("action", o.action, "classes|table|constants");
    add_common(g);

    CLI::App* ct = app.add_subcommand("chartable", "character table");
    add_group(ct);
    add_common(ct);

    CLI::App* fr = app.add_subcommand("frob", "Frobenius algebra data");
    fr->add_option("--algebra", o.algebra_spec, "algebra spec")->required();
    fr->add_option("--genus", o.genus, "genus for eps(omega^g)");
    add_common(fr);

    CLI::App* cb = app.add_subcommand("cob", "evaluate a cobordism word");
    std::string cob_action = "eval";
    cb->add_option("action", cob_action, "eval");
    cb->add_option("--word", o.word_file, "word file")->required();
    cb->add_option("--algebra", o.algebra_spec, "algebra spec")->required();
    add_common(cb);

    CLI::App* oc = app.add_subcommand("openclosed", "Cardy check for a brane config");
    oc->add_option("--traces", o.traces, "closed traces, comma separated")->required();
    oc->add_option("--k", o.ks, "block sizes, comma separated")->required();
    oc->add_option("--signs", o.signs, "sqrt sign choices (+/-)");
    add_common(oc);

    CLI::App* dw = app.add_subcommand("dw", "Dijkgraaf-Witten counts");
    add_group(dw);
    dw->add_option("--genus", o.genus, "genus");
    dw->add_option("--boundary", o.boundary, "boundary class indices, comma separated");
    dw->add_option("--method", o.method, "brute|convolution|character");
    add_common(dw);

    CLI::App* lat = app.add_subcommand("lattice", "triangulation state sum");
    add_group(lat);
    lat->add_option("--surface", o.surface_spec, "genus:N | cylinder | JSON file")->required();
    lat->add_option("--shuffle", o.shuffle, "random Pachner moves before evaluating");
    add_common(lat);

    CLI::App* db = app.add_subcommand("double", "Drinfeld double modular data");
    add_group(db);
    db->add_option("--emit", o.emit, "s,t,c,dims,fusion");
    db->add_option("--genus", o.genus, "Verlinde dimension genus");
    add_common(db);

    CLI::App* sk = app.add_subcommand("su2k", "SU(2) level k modular data");
    sk->add_option("--level", o.level, "level k")->required();
    sk->add_option("--genus", o.genus, "Verlinde dimension genus");
    add_common(sk);

    CLI::App* ym = app.add_subcommand("ym", "2d Yang-Mills heat-kernel sums");
    ym->add_option("--spectrum", o.spectrum, "su2 or a group spec");
    ym->add_option("--genus", o.genus, "genus");
    ym->add_option("--area", o.area, "total area t");
    ym->add_option("--nmax", o.nmax, "su2 truncation (0 = auto by tail bound)");
    add_common(ym);

    CLI::App* st = app.add_subcommand("selftest", "run the acceptance criteria");
    st->add_option("--only", o.only, "criterion filter (substring or id)");
    add_common(st);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (o.format != "table" && o.format != "json" && o.format != "csv") {
            err << "error: unknown format " << o.format << " (table|json|csv)\n";
            return 2;
        }
        if (g->parsed()) return cmd_group(o, out);
        if (ct->parsed()) return cmd_chartable(o, out);
        if (fr->parsed()) return cmd_frob(o, out);
        if (cb->parsed()) return cmd_cob(o, out);
        if (oc->parsed()) return cmd_openclosed(o, out);
        if (dw->parsed()) return cmd_dw(o, out);
        if (lat->parsed()) return cmd_lattice(o, out);
        if (db->parsed()) return cmd_double(o, out);
        if (sk->parsed()) return cmd_su2k(o, out);
        if (ym->parsed()) return cmd_ym(o, out);
        if (st->parsed()) return cmd_selftest(o, out, err);
        err << "no subcommand\n";
        return 2;
    } catch (const invariant_error& e) {
        err << "invariant violation [" << e.invariant() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace tqft
