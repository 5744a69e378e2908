#include "jacideal/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jacideal/errors.hpp"
#include "jacideal/parse.hpp"
#include "jacideal/polyspace.hpp"
#include "jacideal/reconstruct.hpp"
#include "jacideal/structure.hpp"
#include "jacideal/syzygy.hpp"
#include "jacideal/witness.hpp"

namespace jacideal {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw precondition_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

HomPoly load_poly(const std::string& path) { return parse_poly(read_file(path)); }

ordered_json matrix_json(const RatMatrix& M) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < M.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < M.cols(); ++j) row.push_back(rat_str(M(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json unipoly_json(const UniPoly& p) {
    ordered_json coeffs = ordered_json::array();
    for (const Rat& c : p.coeffs()) coeffs.push_back(rat_str(c));
    return coeffs;
}

ordered_json point_json(const std::vector<Rat>& p) {
    ordered_json out = ordered_json::array();
    for (const Rat& x : p) out.push_back(rat_str(x));
    return out;
}

ordered_json eigen_json(const EigenReport& rep) {
    ordered_json j;
    j["char_poly"] = unipoly_json(rep.char_poly);
    j["min_poly"] = unipoly_json(rep.min_poly);
    j["is_scalar"] = rep.is_scalar;
    j["diagonalizable_over_closure"] = rep.is_diagonalizable_over_closure;
    ordered_json ev = ordered_json::array();
    for (const auto& [value, mult] : rep.rational_eigenvalues)
        ev.push_back(ordered_json{{"value", rat_str(value)}, {"multiplicity", mult}});
    j["rational_eigenvalues"] = std::move(ev);
    j["splits_over_Q"] = rep.splits_over_Q;
    return j;
}

ordered_json relation_json(const RelationStructure& rs) {
    ordered_json j;
    j["C"] = matrix_json(rs.C);
    j["eigen"] = eigen_json(rs.report);
    if (rs.jordan) {
        j["jordan"] = ordered_json{{"P", matrix_json(rs.jordan->P)},
                                   {"J", matrix_json(rs.jordan->J)}};
    }
    return j;
}

void classification_json(const Classification& cls, ordered_json& outcome,
                         ordered_json& certificates) {
    outcome["result"] = outcome_name(cls.outcome);
    if (cls.scalar) outcome["scalar"] = rat_str(*cls.scalar);
    if (cls.st_splitting) {
        const auto& st = *cls.st_splitting;
        ordered_json sj;
        sj["coordinate_change"] = matrix_json(st.A);
        sj["groups"] = st.groups;
        ordered_json pn = ordered_json::array(), po = ordered_json::array();
        for (const HomPoly& p : st.parts_new) pn.push_back(print_poly(p));
        for (const HomPoly& p : st.parts_original) po.push_back(print_poly(p));
        sj["parts_new_coordinates"] = std::move(pn);
        sj["parts_original_coordinates"] = std::move(po);
        outcome["st_splitting"] = std::move(sj);
    }
    if (cls.witness_point) {
        const auto& wp = *cls.witness_point;
        outcome["witness_point"] = point_json(wp.point);
        outcome["multiplicity_g"] = wp.multiplicity_g;
        outcome["multiplicity_f"] = wp.multiplicity_f;
    }
    if (cls.relation) certificates["relation"] = relation_json(*cls.relation);
}

std::vector<Rat> parse_point(const std::string& text) {
    std::vector<Rat> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        // Trim spaces.
        std::size_t a = piece.find_first_not_of(" \t");
        std::size_t b = piece.find_last_not_of(" \t");
        if (a == std::string::npos) throw precondition_error("empty coordinate in point");
        piece = piece.substr(a, b - a + 1);
        try {
            Rat r(piece);
            r.canonicalize();
            out.push_back(std::move(r));
        } catch (const std::invalid_argument&) {
            throw precondition_error("bad rational coordinate: " + piece);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

struct CliState {
    ordered_json inputs;
    ordered_json outcome;
    ordered_json certificates = ordered_json::object();
    std::string command;
};

} // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();

    ordered_json doc;
    doc["schema_version"] = "1";
    CliState st;
    int code = 0;

    CLI::App app{"exact computations with Jacobian ideals of homogeneous polynomials"};
    app.require_subcommand(1);

    // grad FILE
    std::string grad_file;
    auto* grad = app.add_subcommand("grad", "gradient of a polynomial");
    grad->add_option("file", grad_file)->required();
    grad->callback([&] {
        st.command = "grad";
        HomPoly f = load_poly(grad_file);
        st.inputs["f"] = print_poly(f);
        ordered_json parts = ordered_json::array();
        for (const HomPoly& fi : gradient(f)) parts.push_back(print_poly(fi));
        st.outcome["gradient"] = std::move(parts);
    });

    // hess FILE [--det]
    std::string hess_file;
    bool hess_det_flag = false;
    auto* hess_cmd = app.add_subcommand("hess", "Hessian matrix");
    hess_cmd->add_option("file", hess_file)->required();
    hess_cmd->add_flag("--det", hess_det_flag, "also print the determinant");
    hess_cmd->callback([&] {
        st.command = "hess";
        HomPoly f = load_poly(hess_file);
        if (f.degree() < 2) throw precondition_error("hess: degree must be at least 2");
        st.inputs["f"] = print_poly(f);
        PolyMatrix H = hessian(f);
        ordered_json rows = ordered_json::array();
        for (int i = 0; i < H.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (int j = 0; j < H.cols(); ++j) row.push_back(print_poly(H.at(i, j)));
            rows.push_back(std::move(row));
        }
        st.outcome["hessian"] = std::move(rows);
        if (hess_det_flag) st.outcome["det"] = print_poly(H.determinant());
    });

    // jac FILE --m M
    std::string jac_file;
    int jac_m = 0;
    auto* jac = app.add_subcommand("jac", "graded piece of the Jacobian ideal");
    jac->add_option("file", jac_file)->required();
    jac->add_option("--m", jac_m, "degree of the graded piece")->required();
    jac->callback([&] {
        st.command = "jac";
        HomPoly f = load_poly(jac_file);
        st.inputs["f"] = print_poly(f);
        st.inputs["m"] = jac_m;
        PolySpace sp = jacobian_component(f, jac_m);
        st.outcome["dimension"] = sp.dimension();
        st.outcome["ambient_dim"] = sp.ambient_dim();
        ordered_json basis = ordered_json::array();
        for (const HomPoly& b : sp.basis()) basis.push_back(print_poly(b));
        st.outcome["basis"] = std::move(basis);
    });

    // span-eq FILE1 FILE2 [--degree {d-1|d}]
    std::string se_f1, se_f2, se_degree = "d-1";
    auto* spaneq = app.add_subcommand("span-eq", "compare graded Jacobian pieces");
    spaneq->add_option("file_f", se_f1)->required();
    spaneq->add_option("file_g", se_f2)->required();
    spaneq->add_option("--degree", se_degree, "which piece: d-1 (default) or d")
        ->check(CLI::IsMember({"d-1", "d"}));
    spaneq->callback([&] {
        st.command = "span-eq";
        HomPoly f = load_poly(se_f1), g = load_poly(se_f2);
        if (f.n() != g.n() || f.degree() != g.degree())
            throw precondition_error("span-eq: polynomials must share n and degree");
        st.inputs["f"] = print_poly(f);
        st.inputs["g"] = print_poly(g);
        st.inputs["degree"] = se_degree;
        int m = se_degree == "d" ? f.degree() : f.degree() - 1;
        bool eq = span_equal(jacobian_component(f, m), jacobian_component(g, m));
        st.outcome["equal"] = eq;
        st.outcome["compared_degree"] = m;
    });

    // relate FILE_F FILE_G
    std::string rel_f, rel_g;
    auto* relate = app.add_subcommand("relate", "relation matrix grad f = C grad g");
    relate->add_option("file_f", rel_f)->required();
    relate->add_option("file_g", rel_g)->required();
    relate->callback([&] {
        st.command = "relate";
        HomPoly f = load_poly(rel_f), g = load_poly(rel_g);
        if (f.n() != g.n() || f.degree() != g.degree())
            throw precondition_error("relate: polynomials must share n and degree");
        st.inputs["f"] = print_poly(f);
        st.inputs["g"] = print_poly(g);
        RelationStructure rs = relation_matrix(f, g);
        st.outcome["C"] = matrix_json(rs.C);
        st.certificates["relation"] = relation_json(rs);
    });

    // classify FILE_F FILE_G
    std::string cls_f, cls_g;
    auto* classify = app.add_subcommand("classify", "dichotomy for a pair sharing its Jacobian ideal");
    classify->add_option("file_f", cls_f)->required();
    classify->add_option("file_g", cls_g)->required();
    classify->callback([&] {
        st.command = "classify";
        HomPoly f = load_poly(cls_f), g = load_poly(cls_g);
        st.inputs["f"] = print_poly(f);
        st.inputs["g"] = print_poly(g);
        Classification cls = classify_pair(f, g);
        classification_json(cls, st.outcome, st.certificates);
    });

    // mdr0 FILE
    std::string mdr_file;
    auto* mdr = app.add_subcommand("mdr0", "minimal degree of a syzygy");
    mdr->add_option("file", mdr_file)->required();
    mdr->callback([&] {
        st.command = "mdr0";
        HomPoly f = load_poly(mdr_file);
        st.inputs["f"] = print_poly(f);
        st.outcome["mdr0"] = mdr0(f);
    });

    // syzygies FILE --m M
    std::string syz_file;
    int syz_m = 0;
    auto* syz = app.add_subcommand("syzygies", "degree-m relations among the partials");
    syz->add_option("file", syz_file)->required();
    syz->add_option("--m", syz_m, "syzygy degree")->required();
    syz->callback([&] {
        st.command = "syzygies";
        HomPoly f = load_poly(syz_file);
        if (syz_m < 0) throw precondition_error("syzygies: m must be nonnegative");
        st.inputs["f"] = print_poly(f);
        st.inputs["m"] = syz_m;
        SyzygySpace sp = syzygies(f, syz_m);
        st.outcome["dimension"] = sp.dimension();
        ordered_json basis = ordered_json::array();
        for (const auto& tuple : sp.basis) {
            ordered_json t = ordered_json::array();
            for (const HomPoly& a : tuple) t.push_back(print_poly(a));
            basis.push_back(std::move(t));
        }
        st.outcome["basis"] = std::move(basis);
    });

    // reconstruct FILE... [--stacked]
    std::vector<std::string> rec_files;
    bool rec_stacked = false;
    auto* rec = app.add_subcommand("reconstruct", "recover f from a basis of E(f)");
    rec->add_option("files", rec_files, "basis element files (or one stacked file)")->required();
    rec->add_flag("--stacked", rec_stacked,
                  "single file with newline-separated basis expressions");
    rec->callback([&] {
        st.command = "reconstruct";
        std::vector<HomPoly> basis;
        if (rec_stacked) {
            if (rec_files.size() != 1)
                throw precondition_error("reconstruct --stacked: exactly one file expected");
            std::istringstream in(read_file(rec_files.front()));
            std::string line;
            while (std::getline(in, line)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                basis.push_back(parse_poly(line));
            }
        } else {
            for (const std::string& path : rec_files) basis.push_back(load_poly(path));
        }
        if (basis.empty()) throw precondition_error("reconstruct: no basis elements given");
        int nmax = 0;
        for (const HomPoly& b : basis) nmax = std::max(nmax, b.n());
        for (HomPoly& b : basis) b = b.embed(nmax);
        ordered_json echo = ordered_json::array();
        for (const HomPoly& b : basis) echo.push_back(print_poly(b));
        st.inputs["basis"] = std::move(echo);

        PolySpace E = PolySpace::span(basis);
        if (E.dimension() != nmax + 1)
            throw precondition_error("reconstruct: basis must span a space of dimension n+1");
        SymmetricBasisSolution sym = symmetric_basis(E);
        st.outcome["nullity"] = sym.nullity;
        auto recon = reconstruct(E);
        st.outcome["found"] = recon.has_value();
        if (recon) {
            st.outcome["unique"] = recon->unique;
            st.outcome["f"] = print_poly(recon->f);
        }
    });

    // eprime-pipeline FILE_F FILE_G
    std::string ep_f, ep_g;
    auto* ep = app.add_subcommand("eprime-pipeline", "from E' equality to classification");
    ep->add_option("file_f", ep_f)->required();
    ep->add_option("file_g", ep_g)->required();
    ep->callback([&] {
        st.command = "eprime-pipeline";
        HomPoly f = load_poly(ep_f), g = load_poly(ep_g);
        st.inputs["f"] = print_poly(f);
        st.inputs["g"] = print_poly(g);
        Classification cls = eprime_pipeline(f, g);
        classification_json(cls, st.outcome, st.certificates);
    });

    // mult FILE --point "a,b,c"
    std::string mult_file, mult_point;
    auto* mult = app.add_subcommand("mult", "multiplicity of V(f) at a projective point");
    mult->add_option("file", mult_file)->required();
    mult->add_option("--point", mult_point, "comma-separated rational coordinates")->required();
    mult->callback([&] {
        st.command = "mult";
        HomPoly f = load_poly(mult_file);
        auto p = parse_point(mult_point);
        if (static_cast<int>(p.size()) != f.var_count())
            throw precondition_error("mult: point arity does not match the polynomial");
        st.inputs["f"] = print_poly(f);
        st.inputs["point"] = point_json(p);
        st.outcome["multiplicity"] = multiplicity_at(f, p);
    });

    // witness --family {jordan|case1|case2} --n N --d D [--A r --B r | --H FILE]
    std::string wit_family, wit_A = "0", wit_B = "0", wit_H;
    int wit_n = 2, wit_d = 3;
    auto* wit = app.add_subcommand("witness", "generate an explicit witness pair");
    wit->add_option("--family", wit_family, "jordan, case1 or case2")
        ->required()
        ->check(CLI::IsMember({"jordan", "case1", "case2"}));
    wit->add_option("--n", wit_n, "projective dimension (jordan family)");
    wit->add_option("--d", wit_d, "degree")->required();
    wit->add_option("--A", wit_A, "case1 parameter A (rational)");
    wit->add_option("--B", wit_B, "case1 parameter B (rational)");
    wit->add_option("--H", wit_H, "case2 parameter: file with H(x,z)");
    wit->callback([&] {
        st.command = "witness";
        st.inputs["family"] = wit_family;
        st.inputs["d"] = wit_d;
        WitnessPair wp = [&]() {
            if (wit_family == "jordan") {
                st.inputs["n"] = wit_n;
                if (wit_n > 9)
                    throw precondition_error("witness: the expression grammar covers x0..x9");
                return jordan_witness(wit_n, wit_d);
            }
            if (wit_family == "case1") {
                auto pa = parse_point(wit_A), pb = parse_point(wit_B);
                if (pa.size() != 1 || pb.size() != 1)
                    throw precondition_error("witness case1: --A and --B take one rational each");
                st.inputs["A"] = rat_str(pa.front());
                st.inputs["B"] = rat_str(pb.front());
                return case1_family(wit_d, pa.front(), pb.front());
            }
            if (wit_H.empty())
                throw precondition_error("witness case2: --H FILE is required");
            HomPoly H = load_poly(wit_H).embed(2);
            st.inputs["H"] = print_poly(H);
            return case2_family(wit_d, H);
        }();
        st.outcome["f"] = print_poly(wp.f);
        st.outcome["g"] = print_poly(wp.g);
        st.outcome["J"] = matrix_json(wp.J);
        st.outcome["family"] = witness_family_name(wp.family);
        st.outcome["st_status"] = wp.st_status;
    });

    // probe --n N --d D --samples K --seed S --bound B
    int pr_n = 2, pr_d = 3;
    long long pr_samples = 100, pr_bound = 10;
    unsigned long long pr_seed = 0;
    auto* probe = app.add_subcommand("probe", "genericity statistics on random polynomials");
    probe->add_option("--n", pr_n)->required();
    probe->add_option("--d", pr_d)->required();
    probe->add_option("--samples", pr_samples)->required();
    probe->add_option("--seed", pr_seed)->required();
    probe->add_option("--bound", pr_bound)->required();
    probe->callback([&] {
        st.command = "probe";
        st.inputs = ordered_json{{"n", pr_n},       {"d", pr_d},
                                 {"samples", pr_samples}, {"seed", pr_seed},
                                 {"bound", pr_bound}};
        ProbeStats stats = genericity_probe(pr_n, pr_d, pr_samples, pr_seed, pr_bound);
        st.outcome["samples"] = stats.samples;
        st.outcome["zero_count"] = stats.zero_count;
        st.outcome["cone_count"] = stats.cone_count;
        st.outcome["nullity1_count"] = stats.nullity1_count;
        st.outcome["hessian_power_count"] = stats.hessian_power_count;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
        doc["command"] = st.command;
        doc["inputs"] = st.inputs;
        doc["outcome"] = st.outcome;
        doc["certificates"] = st.certificates;
    } catch (const CLI::CallForHelp&) {
        out << app.help() << std::flush;
        return 0;
    } catch (const CLI::ParseError& e) {
        doc["command"] = st.command.empty() ? "(none)" : st.command;
        doc["inputs"] = st.inputs;
        doc["outcome"] = ordered_json{{"status", "error"}, {"error", e.what()}};
        doc["certificates"] = ordered_json::object();
        code = 2;
    } catch (const precondition_error& e) {
        doc["command"] = st.command.empty() ? "(none)" : st.command;
        doc["inputs"] = st.inputs;
        doc["outcome"] = ordered_json{{"status", "error"}, {"error", e.what()}};
        doc["certificates"] = ordered_json::object();
        code = 2;
    } catch (const std::exception& e) {
        doc["command"] = st.command.empty() ? "(none)" : st.command;
        doc["inputs"] = st.inputs;
        doc["outcome"] = ordered_json{{"status", "internal_error"}, {"error", e.what()}};
        doc["certificates"] = ordered_json::object();
        code = 1;
    }

    auto t1 = std::chrono::steady_clock::now();
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    out << doc.dump(2) << "\n";
    out << "timing_ms: " << ms << "\n";
    return code;
}

} // namespace jacideal
