#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "rootoidlab/classify.hpp"
#include "rootoidlab/io.hpp"

using namespace rootoidlab;
using nlohmann::json;

namespace {

long long env_budget() {
    const char* v = std::getenv("ROOTOIDLAB_BUDGET");
    if (!v) return 200000;
    try {
        return std::stoll(v);
    } catch (...) {
        throw std::runtime_error("ROOTOIDLAB_BUDGET is not an integer");
    }
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

json report_to_json(const PropertyReport& r, const Protorootoid& P, const RootoidVerdict& verdict) {
    const Groupoid& G = P.groupoid();
    json j;
    j["connected"] = r.connected;
    j["simply_connected"] = r.simply_connected;
    j["complemented"] = r.complemented;
    j["complete"] = r.complete;
    j["interval_finite"] = r.interval_finite;
    j["cocycle_finite"] = r.cocycle_finite;
    j["atomically_generated"] = r.atomically_generated;
    j["simply_generated"] = r.simply_generated;
    j["principal"] = r.principal;
    j["preprincipal"] = r.preprincipal;
    j["abridged"] = r.abridged;
    j["saturated"] = r.saturated;
    j["pseudoprincipal"] = r.pseudoprincipal;
    j["regular"] = r.regular;
    j["faithful"] = r.faithful;
    j["rootoid"] = r.rootoid;
    json atoms = json::array(), simples = json::array();
    for (int g : r.atomic_morphisms) atoms.push_back(G.morphism(g).name);
    for (int g : r.simple_morphisms) simples.push_back(G.morphism(g).name);
    j["atomic_morphisms"] = atoms;
    j["simple_morphisms"] = simples;
    j["witnesses"] = r.witnesses;
    if (!verdict.ok) j["rootoid_witness"] = verdict.witness;
    return j;
}

std::string verdict_line(const PropertyReport& r, const Protorootoid& P, const RootoidVerdict& verdict) {
    const Groupoid& G = P.groupoid();
    std::ostringstream out;
    if (verdict.ok) {
        if (r.principal) out << "principal ";
        else if (r.preprincipal) out << "preprincipal ";
        out << "rootoid";
        if (r.complete) out << "; complete";
        if (r.simply_generated && !r.simple_morphisms.empty()) {
            out << "; simple generators: ";
            bool first = true;
            for (int g : r.simple_morphisms) {
                if (!first) out << ",";
                out << G.morphism(g).name;
                first = false;
            }
        }
    } else {
        out << "not a rootoid: " << verdict.witness;
    }
    return out.str();
}

int cmd_build(const std::string& in, const std::string& out) {
    Protorootoid P = elaborate(load_json(in), env_budget());
    write_text(out, dump_canonical(protorootoid_to_json(P)));
    return 0;
}

int cmd_classify(const std::string& in, bool exhaustive, bool abridge_first, bool as_json) {
    Protorootoid P = elaborate(load_json(in), env_budget());
    if (abridge_first) P = abridge(P);
    PropertyReport r = classify(P);
    RootoidVerdict verdict = is_rootoid(P, exhaustive);
    if (as_json) {
        std::cout << dump_canonical(report_to_json(r, P, verdict));
    } else {
        auto flag = [&](const char* name, bool v) {
            std::cout << name << ": " << (v ? "yes" : "no");
            auto it = r.witnesses.find(name);
            if (!v && it != r.witnesses.end()) std::cout << "  [" << it->second << "]";
            std::cout << "\n";
        };
        std::cout << "objects: " << P.groupoid().num_objects()
                  << ", morphisms: " << P.groupoid().num_morphisms() << "\n";
        flag("faithful", r.faithful);
        flag("connected", r.connected);
        flag("simply_connected", r.simply_connected);
        flag("complemented", r.complemented);
        flag("complete", r.complete);
        flag("interval_finite", r.interval_finite);
        flag("cocycle_finite", r.cocycle_finite);
        flag("atomically_generated", r.atomically_generated);
        flag("simply_generated", r.simply_generated);
        flag("principal", r.principal);
        flag("preprincipal", r.preprincipal);
        flag("abridged", r.abridged);
        flag("saturated", r.saturated);
        flag("pseudoprincipal", r.pseudoprincipal);
        flag("regular", r.regular);
        flag("rootoid", r.rootoid);
        std::cout << "verdict: " << verdict_line(r, P, verdict) << "\n";
    }
    return verdict.ok ? 0 : 1;
}

int cmd_export(const std::string& in, const std::string& what, const std::string& object,
               const std::string& out) {
    json j = load_json(in);
    std::string kind = j.value("kind", "");
    if (kind == "coxeter") {
        auto [M, cutoff] = coxeter_matrix_from_json(j);
        if (cutoff) {
            if (what != "root-table")
                throw ParseError("cutoff enumerations support only 'root-table' export");
            auto B = build_coxeter(M, cutoff, env_budget());
            write_text(out, export_root_table_tsv(B));
            return 0;
        }
    }
    Protorootoid P = elaborate(j, env_budget());
    if (what == "root-table") {
        write_text(out, export_root_table_tsv(P));
        return 0;
    }
    if (what == "weak-order" || what == "hasse") {
        int obj = object.empty() ? 0 : P.groupoid().object_index(object);
        if (obj < 0) throw std::runtime_error("unknown object '" + object + "'");
        write_text(out, export_weak_order_dot(P, obj));
        return 0;
    }
    throw std::runtime_error("unknown export '" + what + "'");
}

int cmd_check_morphism(const std::string& src_path, const std::string& tgt_path,
                       const std::string& mor_path, bool as_json) {
    Protorootoid src = elaborate(load_json(src_path), env_budget());
    Protorootoid tgt = elaborate(load_json(tgt_path), env_budget());
    PrdMorphism f = prd_morphism_from_json(src, tgt, load_json(mor_path));
    MorphismGrade grade = grade_morphism(src, tgt, f);
    if (as_json) {
        json j;
        j["in_prd"] = grade.in_prd;
        j["in_rd"] = grade.in_rd;
        j["in_Rd"] = grade.in_Rd;
        j["in_RdE"] = grade.in_RdE;
        j["witnesses"] = grade.witnesses;
        std::cout << dump_canonical(j);
    } else {
        auto line = [&](const char* name, bool v) {
            std::cout << name << ": " << (v ? "yes" : "no");
            auto it = grade.witnesses.find(name);
            if (it != grade.witnesses.end()) std::cout << "  [" << it->second << "]";
            std::cout << "\n";
        };
        line("in_prd", grade.in_prd);
        line("in_rd", grade.in_rd);
        line("in_Rd", grade.in_Rd);
        line("in_RdE", grade.in_RdE);
    }
    return grade.in_Rd ? 0 : 1;
}

int cmd_cover(const std::string& in, const std::string& out) {
    Protorootoid P = elaborate(load_json(in), env_budget());
    auto cv = cover(P);
    write_text(out, dump_canonical(protorootoid_to_json(cv.prd)));
    return 0;
}

int cmd_abridge(const std::string& in, const std::string& out) {
    Protorootoid P = elaborate(load_json(in), env_budget());
    write_text(out, dump_canonical(protorootoid_to_json(abridge(P))));
    return 0;
}

std::vector<std::vector<int>> parse_matrix(const std::string& text) {
    std::vector<std::vector<int>> m;
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<int> r;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            if (cell == "inf") r.push_back(0);
            else r.push_back(std::stoi(cell));
        }
        m.push_back(std::move(r));
    }
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact protorootoid and rootoid workbench"};
    app.require_subcommand(1);

    std::string in, out = "-", object, what = "weak-order";
    bool exhaustive = false, abridge_first = false, as_json = false;
    std::string src_path, tgt_path, mor_path;

    auto* build = app.add_subcommand("build", "elaborate a structure file to a protorootoid file");
    build->add_option("input", in)->required();
    build->add_option("-o,--out", out);

    auto* cls = app.add_subcommand("classify", "run the full classification and the rootoid verdict");
    cls->add_option("input", in)->required();
    cls->add_flag("--exhaustive-jop", exhaustive, "cross-validate the join orthogonality on all subsets");
    cls->add_flag("--abridge-first", abridge_first, "abridge before classifying");
    cls->add_flag("--json", as_json, "machine-readable report");

    auto* exp = app.add_subcommand("export", "emit a weak-order Hasse diagram (DOT) or the cocycle table (TSV)");
    exp->add_option("input", in)->required();
    exp->add_option("--what", what)->check(CLI::IsMember({"weak-order", "hasse", "root-table"}));
    exp->add_option("--object", object);
    exp->add_option("-o,--out", out);

    auto* chk = app.add_subcommand("check-morphism", "grade a morphism between two rootoids");
    chk->add_option("source", src_path)->required();
    chk->add_option("target", tgt_path)->required();
    chk->add_option("morphism", mor_path)->required();
    chk->add_flag("--json", as_json);

    auto* cov = app.add_subcommand("cover", "universal covering protorootoid");
    cov->add_option("input", in)->required();
    cov->add_option("-o,--out", out);

    auto* abr = app.add_subcommand("abridge", "restrict the rings to the subrings generated by the cocycle");
    abr->add_option("input", in)->required();
    abr->add_option("-o,--out", out);

    std::string type, gens_text, matrix_text;
    int cutoff = -1;
    auto* cox = app.add_subcommand("coxeter", "write a coxeter structure file");
    cox->add_option("--type", type, "named type: A1, A2, A3, B2, B3, G2, H2, H3, Atilde1");
    cox->add_option("--generators", gens_text, "comma-separated generator labels");
    cox->add_option("--matrix", matrix_text, "rows 'a,b;c,d' with inf or 0 for infinity");
    cox->add_option("--cutoff", cutoff, "ball enumeration radius");
    cox->add_option("-o,--out", out);

    int dim = 0;
    std::vector<std::string> normal_texts;
    auto* arr = app.add_subcommand("arrangement", "write an arrangement structure file");
    arr->add_option("--dim", dim)->required();
    arr->add_option("--normal", normal_texts, "integer vector 'a,b,...' (repeatable)")->required();
    arr->add_option("-o,--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(in, out);
        if (cls->parsed()) return cmd_classify(in, exhaustive, abridge_first, as_json);
        if (exp->parsed()) return cmd_export(in, what, object, out);
        if (chk->parsed()) return cmd_check_morphism(src_path, tgt_path, mor_path, as_json);
        if (cov->parsed()) return cmd_cover(in, out);
        if (abr->parsed()) return cmd_abridge(in, out);
        if (cox->parsed()) {
            CoxeterMatrix M;
            if (!type.empty()) {
                M = CoxeterMatrix::named(type);
            } else {
                std::stringstream gens(gens_text);
                std::string g;
                while (std::getline(gens, g, ',')) M.generators.push_back(g);
                M.m = parse_matrix(matrix_text);
                M.validate();
            }
            std::optional<int> c;
            if (cutoff >= 0) c = cutoff;
            write_text(out, dump_canonical(coxeter_matrix_to_json(M, c)));
            return 0;
        }
        if (arr->parsed()) {
            RationalArrangement A;
            A.dim = dim;
            for (const auto& t : normal_texts) {
                std::vector<long long> v;
                std::stringstream cells(t);
                std::string cell;
                while (std::getline(cells, cell, ',')) v.push_back(std::stoll(cell));
                A.normals.push_back(std::move(v));
            }
            A.validate();
            write_text(out, dump_canonical(arrangement_to_json(A)));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
