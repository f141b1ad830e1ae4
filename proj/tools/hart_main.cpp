#include "hart/algebra.hpp"
#include "hart/atilde.hpp"
#include "hart/classify.hpp"
#include "hart/constructions.hpp"
#include "hart/errors.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace hart;
using ojson = nlohmann::ordered_json;

namespace {

struct Options {
    std::vector<std::string> files;
    int n = 1;
    int depth = 10;
    int maxdeg = -1;
    int length_cap = 64;
    std::size_t budget = 10000000;
    bool json = false;
    bool dot = false;
    int jobs = 1;
    std::string vertex;
    std::string subgroup = "ker-omega";
    std::string cut;
    std::string extend_restricted;
};

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AlgebraPtr load(const std::string& path, const Options& o) { return Algebra::create(load_algebra(path), o.length_cap); }

ojson matrix_json(const Matrix& m) {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(std::stol(m(i, j).str()));
        rows.push_back(row);
    }
    return rows;
}

void print_matrix(std::ostream& out, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
        out << "\n";
    }
}

std::string dims_str(const std::vector<std::size_t>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

std::string quiver_dot(const AlgebraPresentation& p) {
    std::ostringstream out;
    out << "digraph \"" << p.name << "\" {\n";
    for (const auto& v : p.quiver.vertices) out << "  \"" << v << "\";\n";
    for (const auto& a : p.quiver.arrows)
        out << "  \"" << p.quiver.vertices[a.source] << "\" -> \"" << p.quiver.vertices[a.target] << "\" [label=\"" << a.name << "\"];\n";
    out << "}\n";
    return out.str();
}

void emit_presentation(const AlgebraPresentation& p, const Options& o) {
    if (o.dot)
        std::cout << quiver_dot(p);
    else
        std::cout << print_algebra(p);
}

int cmd_check(const Options& o) {
    auto alg = load(o.files.at(0), o);
    if (o.dot) {
        std::cout << quiver_dot(alg->presentation());
        return 0;
    }
    if (o.json) {
        ojson j;
        j["algebra"] = alg->name();
        j["vertices"] = alg->quiver().vertices;
        j["arrows"] = alg->num_arrows();
        j["relations"] = alg->presentation().relations.size();
        j["dimension"] = alg->total_dim();
        j["cartan"] = matrix_json(alg->cartan());
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "algebra " << alg->name() << "\n"
              << "vertices: " << alg->num_vertices() << "\n"
              << "arrows: " << alg->num_arrows() << "\n"
              << "relations: " << alg->presentation().relations.size() << "\n"
              << "dimension: " << alg->total_dim() << "\n"
              << "cartan:\n";
    print_matrix(std::cout, alg->cartan());
    return 0;
}

std::string verdict_text(const Verdict& v) {
    std::ostringstream out;
    out << "algebra " << v.algebra << " n=" << v.n << " depth=" << v.depth << "\n";
    out << "overall: " << overall_name(v.overall) << "\n";
    if (v.global_dimension) out << "global dimension: " << *v.global_dimension << "\n";
    for (const auto& t : v.trajectories) {
        const auto& q = t.steps.front().module.algebra()->quiver();
        out << "vertex " << q.vertices[t.vertex] << ": " << outcome_name(t.outcome) << " ell=" << t.ell << "\n  ";
        for (const auto& s : t.steps) out << " " << dims_str(s.module.dims());
        out << "\n";
    }
    if (v.witness)
        out << "witness: vertex " << v.witness->vertex << " step " << v.witness->step << " degree " << v.witness->degree
            << " dim " << v.witness->dim << "\n";
    if (v.overall == Overall::NRepresentationFinite)
        out << "injectives distinct: " << (v.injectives_distinct ? "yes" : "no") << "\n";
    return out.str();
}

int cmd_classify(const Options& o) {
    const std::size_t count = o.files.size();
    std::vector<std::string> outputs(count);
    std::vector<int> codes(count, 0);
    std::vector<std::exception_ptr> errors(count);
    auto run = [&](std::size_t i, int inner_jobs) {
        try {
            auto v = classify(load(o.files[i], o), o.n, o.depth, inner_jobs);
            outputs[i] = o.json ? verdict_json(v) + "\n" : verdict_text(v);
            codes[i] = verdict_exit_code(v);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (count == 1) {
        run(0, o.jobs);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < std::max(1, std::min<int>(o.jobs, static_cast<int>(count))); ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) run(i, 1);
            });
        for (auto& th : pool) th.join();
    }
    int code = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        std::cout << outputs[i];
        code = std::max(code, codes[i]);
    }
    return code;
}

int cmd_family(const Options& o, bool injective) {
    auto alg = load(o.files.at(0), o);
    auto fam = injective ? preinjectives(alg, o.n, o.depth) : preprojectives(alg, o.n, o.depth);
    std::optional<GradedDims> graded;
    if (!injective && o.maxdeg >= 0) graded = preprojective_algebra_dims(alg, o.n, o.maxdeg);
    const auto& q = alg->quiver();
    if (o.json) {
        ojson j;
        j["algebra"] = alg->name();
        j["n"] = o.n;
        j["family"] = injective ? "preinjective" : "preprojective";
        ojson mods = ojson::array();
        for (const auto& m : fam) mods.push_back({{"vertex", q.vertices[m.vertex]}, {"step", m.step}, {"dims", m.module.dims()}});
        j["modules"] = mods;
        if (graded) {
            ojson deg = ojson::array();
            for (const auto& m : graded->degrees) deg.push_back(matrix_json(m));
            j["graded_dims"] = deg;
            j["new_arrows"] = graded->new_arrows;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << (injective ? "preinjective" : "preprojective") << " modules of " << alg->name() << " n=" << o.n << "\n";
    for (const auto& m : fam) std::cout << "vertex " << q.vertices[m.vertex] << " step " << m.step << " " << dims_str(m.module.dims()) << "\n";
    if (graded) {
        for (std::size_t d = 0; d < graded->degrees.size(); ++d) {
            std::cout << "degree " << d << ":\n";
            print_matrix(std::cout, graded->degrees[d]);
        }
        std::cout << "new arrows:\n";
        for (const auto& row : graded->new_arrows) {
            for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_tensor(const Options& o) {
    if (o.files.size() != 2) throw std::invalid_argument("tensor needs two input files");
    auto a = load(o.files[0], o), b = load(o.files[1], o);
    auto t = tensor_product(a->presentation(), b->presentation());
    Algebra::create(t, o.length_cap);
    emit_presentation(t, o);
    return 0;
}

int cmd_apr_tilt(const Options& o) {
    auto alg = load(o.files.at(0), o);
    int v = alg->quiver().vertex_index(o.vertex);
    if (v < 0) throw UnknownVertex("no vertex named '" + o.vertex + "'");
    global_dimension(alg, o.n);
    auto d = n_apr_tilt(alg, o.n, v);
    emit_presentation(d.presentation, o);
    return 0;
}

int cmd_atilde(const Options& o) {
    const int n = o.n;
    OrbitQuiverWithCut q;
    std::string name = "atilde_n" + std::to_string(n);
    if (!o.extend_restricted.empty()) {
        q = restricted_cut_extend(parse_restricted_cut(read_text(o.extend_restricted)), o.budget);
        name += "_ext";
    } else {
        SubgroupBasis b = SubgroupBasis::parse(n, o.subgroup);
        name += o.subgroup == "ker-omega" ? "_kerw" : "_b" + std::to_string(b.index());
        if (o.cut.rfind("omega:", 0) == 0) {
            long k = std::stol(o.cut.substr(6));
            q = cut_from_omega(b, k);
            name += "_omega" + std::to_string(k);
        } else if (!o.cut.empty()) {
            q = cut_from_json(b, read_text(o.cut));
            name += "_cut";
        } else {
            throw std::invalid_argument("atilde needs --cut or --extend-restricted");
        }
    }
    CutValidation valid = validate_cut(q, o.budget);
    BoundingReport bound = is_bounding(q);
    if (o.dot) {
        std::cout << orbit_quiver_dot(q);
        return valid.valid && bound.bounding ? 0 : 1;
    }
    std::optional<AlgebraPresentation> p;
    if (valid.valid && bound.bounding) p = degree_zero_algebra(q, name);
    if (o.json) {
        ojson j;
        j["n"] = n;
        j["cosets"] = q.num_vertices();
        j["cut"] = ojson::parse(cut_json(q));
        j["valid_cut"] = valid.valid;
        j["homogeneous"] = valid.homogeneous;
        if (valid.witness) j["witness"] = {{"vertex", valid.witness->vertex}, {"order", valid.witness->order}, {"degree", valid.witness->degree}};
        j["bounding"] = bound.bounding;
        if (bound.bounding) j["longest_path"] = bound.longest_path;
        if (p) j["presentation"] = print_algebra(*p);
        std::cout << j.dump(2) << "\n";
        return p ? 0 : 1;
    }
    std::cerr << "cosets: " << q.num_vertices() << ", valid cut: " << (valid.valid ? "yes" : "no")
              << ", bounding: " << (bound.bounding ? "yes (longest path " + std::to_string(bound.longest_path) + ")" : "no") << "\n";
    if (!valid.valid) throw InvalidRestrictedCut("not a cut: some small cycle has degree " + std::to_string(valid.witness->degree));
    if (!p) throw NotBounding("the degree-0 subquiver has a cycle");
    std::cout << print_algebra(*p);
    return 0;
}

int exit_code_for(const Error& e) {
    const std::string& k = e.kind();
    if (k == "AboveCap") return 3;
    if (k == "StoppedEarly") return 2;
    if (k == "DimensionTooLarge" || k == "CapExceeded") return 4;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Higher Auslander-Reiten computations for finite dimensional algebras"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool many_files, bool files_required = true) {
        auto* f = sub->add_option("files", o.files, "input algebra files");
        if (files_required) f->required();
        if (!many_files) f->expected(1);
        sub->add_option("--n", o.n, "homological degree n")->check(CLI::PositiveNumber);
        sub->add_option("--depth", o.depth, "number of ν⁻¹ steps")->check(CLI::PositiveNumber);
        sub->add_option("--length-cap", o.length_cap, "maximal path length for admissibility")->check(CLI::PositiveNumber);
        sub->add_option("--budget", o.budget, "enumeration budget");
        sub->add_flag("--json", o.json, "JSON output");
        sub->add_flag("--dot", o.dot, "DOT output");
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    auto* check = app.add_subcommand("check", "parse, certify admissibility, print dimension and Cartan matrix");
    add_common(check, false);
    auto* cls = app.add_subcommand("classify", "n-representation finite / infinite verdict");
    add_common(cls, true);
    auto* preproj = app.add_subcommand("preproj", "n-preprojective modules");
    add_common(preproj, false);
    preproj->add_option("--maxdeg", o.maxdeg, "graded dimensions of the preprojective algebra up to this degree");
    auto* preinj = app.add_subcommand("preinj", "n-preinjective modules");
    add_common(preinj, false);
    auto* tensor = app.add_subcommand("tensor", "tensor product of two presentations");
    add_common(tensor, true);
    auto* apr = app.add_subcommand("apr-tilt", "n-APR tilt at a simple projective");
    add_common(apr, false);
    apr->add_option("--vertex", o.vertex, "vertex name")->required();
    auto* atilde = app.add_subcommand("atilde", "degree-0 algebra of an orbit algebra of type Ã");
    add_common(atilde, false, false);
    atilde->add_option("--subgroup", o.subgroup, "ker-omega or generators \"g1;g2;...\" in α-coordinates");
    atilde->add_option("--cut", o.cut, "omega:k or a JSON file of [coset, arrow] pairs");
    atilde->add_option("--extend-restricted", o.extend_restricted, "JSON restricted cut to extend");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*check) return cmd_check(o);
        if (*cls) return cmd_classify(o);
        if (*preproj) return cmd_family(o, false);
        if (*preinj) return cmd_family(o, true);
        if (*tensor) return cmd_tensor(o);
        if (*apr) return cmd_apr_tilt(o);
        if (*atilde) return cmd_atilde(o);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
