// ttk: permutation-module chain complex toolkit for finite p-groups.
// Subcommands mirror the library: subgroup tables, character data,
// Borel-Smith bases, orbit complexes, twisted cohomology, spectrum probes.
// Exit codes: 0 ok, 2 invalid input, 3 mathematical-guard failure.

#include "ttk/borel_smith.hpp"
#include "ttk/chartable.hpp"
#include "ttk/context.hpp"
#include "ttk/error.hpp"
#include "ttk/group.hpp"
#include "ttk/io.hpp"
#include "ttk/orbit.hpp"
#include "ttk/spectrum.hpp"
#include "ttk/twisted.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace ttk;

namespace {

struct Common {
    std::string group;
    std::string out;
    std::string format = "csv";
    std::vector<std::string> user_complexes;
    int max_shift = 6;
    int max_twist = 3;
    int truncate = 8;
};

void emit(const Common& c, const std::string& text) {
    if (c.out.empty())
        std::cout << text;
    else
        write_file(c.out, text);
}

GroupPtr the_group(const Common& c) {
    if (c.group.empty()) throw invalid_input("UnknownName", "--group is required");
    return group_from_source(c.group);
}

TTContext make_context(const Common& c) {
    GroupPtr G = the_group(c);
    std::vector<OrbitComplex> users;
    for (const auto& path : c.user_complexes)
        users.push_back(complex_from_json(G, read_file(path)));
    return TTContext::make(G, users);
}

std::vector<Twist> twists_up_to(int len, int trivial, int bound) {
    std::vector<Twist> out;
    Twist cur(len, 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == len) {
            out.push_back(cur);
            return;
        }
        int cap = (idx == trivial) ? 0 : left;
        for (int v = 0; v <= cap; ++v) {
            cur[idx] = v;
            rec(idx + 1, left - v);
        }
        cur[idx] = 0;
    };
    rec(0, bound);
    std::sort(out.begin(), out.end(), [](const Twist& a, const Twist& b) {
        int sa = 0, sb = 0;
        for (int x : a) sa += x;
        for (int x : b) sb += x;
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
}

std::string twist_name(const Twist& q) {
    std::ostringstream os;
    os << "q";
    for (size_t i = 0; i < q.size(); ++i) os << (i ? "." : "") << q[i];
    return os.str();
}

Twist parse_twist(const TwistedRing& ring, const std::string& text) {
    Twist q;
    std::istringstream is(text);
    std::string cell;
    while (std::getline(is, cell, ',')) q.push_back(std::stoi(cell));
    if ((int)q.size() != ring.twist_len())
        throw invalid_input("ShapeMismatch", "twist length does not match the basis size " +
                                                 std::to_string(ring.twist_len()));
    return q;
}

TwistedElement element_from_json(const TwistedRing& ring, const std::string& text) {
    json j = json::parse(text);
    TwistedElement f;
    f.q = j.at("q").get<std::vector<int>>();
    f.s = j.at("s").get<int>();
    f.coeffs = j.at("coeffs").get<std::vector<int>>();
    if ((int)f.q.size() != ring.twist_len())
        throw invalid_input("ShapeMismatch", "twist length does not match the basis");
    if ((int)f.coeffs.size() != ring.hom_dimension(f.q, f.s))
        throw invalid_input("ShapeMismatch", "coefficient length does not match the component");
    for (int& c : f.coeffs) c = (c % ring.prime() + ring.prime()) % ring.prime();
    return f;
}

std::string element_to_json(const TwistedElement& f) {
    json j;
    j["q"] = f.q;
    j["s"] = f.s;
    j["coeffs"] = f.coeffs;
    return j.dump(2) + "\n";
}

std::string class_to_json(const CohomologyClass& c) {
    json j;
    j["degree"] = c.degree;
    j["cocycle"] = c.vec;
    return j.dump(2) + "\n";
}

std::string subgroups_report(const Common& c, const SubgroupClassTable& tab) {
    if (c.format == "json") {
        json j = json::array();
        for (int i = 0; i < tab.num_classes(); ++i) {
            json e;
            e["label"] = class_label(tab, i);
            e["order"] = tab.classes[i].rep.order();
            e["class_size"] = tab.classes[i].members.size();
            e["normalizer_order"] = tab.classes[i].normalizer_of_rep.order();
            e["weyl_order"] = tab.weyl[i].W->order;
            e["representative"] = tab.classes[i].rep.elems;
            json up = json::array();
            for (int k = 0; k < tab.num_classes(); ++k)
                if (k != i && tab.leq[i][k]) up.push_back(class_label(tab, k));
            e["contained_in"] = up;
            j.push_back(e);
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "label,order,class_size,normalizer_order,weyl_order\n";
    for (int i = 0; i < tab.num_classes(); ++i)
        os << class_label(tab, i) << "," << tab.classes[i].rep.order() << ","
           << tab.classes[i].members.size() << "," << tab.classes[i].normalizer_of_rep.order() << ","
           << tab.weyl[i].W->order << "\n";
    return os.str();
}

OrbitComplex load_complex(const GroupPtr& G, const std::string& path) {
    return complex_from_json(G, read_file(path));
}

int dispatch(CLI::App& app, const Common& c) {
    auto* sub = app.get_subcommands().at(0);
    const std::string name = sub->get_name();

    if (name == "subgroups") {
        GroupPtr G = the_group(c);
        emit(c, subgroups_report(c, enumerate_subgroups(G)));
        return 0;
    }
    if (name == "chartable") {
        GroupPtr G = the_group(c);
        std::string check = sub->get_option("--check-file")->as<std::string>();
        CharacterTable t = dixon_character_table(*G);
        if (!check.empty()) {
            CharacterTable t2 = parse_character_csv(*G, read_file(check));
            if (t2.values != t.values)
                throw math_guard("Inconsistent", "ingested character table disagrees with Dixon");
        }
        emit(c, character_csv(t));
        return 0;
    }
    if (name == "bsbasis") {
        TTContext ctx = make_context(c);
        std::vector<std::string> names;
        for (size_t i = 0; i < ctx.basis.size(); ++i)
            names.push_back((int)i == ctx.trivial_index ? "trivial" : "f" + std::to_string(i));
        BasisReport rep = verify_basis(ctx.subs, ctx.basis);
        if (!rep.all_borel_smith || !rep.independent || !rep.lattice_equal)
            throw math_guard("BasisMismatch", "canonical basis failed lattice verification");
        emit(c, superclass_csv(ctx.subs, names, ctx.basis));
        return 0;
    }
    if (name == "bscheck") {
        GroupPtr G = the_group(c);
        SubgroupClassTable tab = enumerate_subgroups(G);
        auto funcs = parse_superclass_csv(
            tab, read_file(sub->get_option("file")->as<std::string>()));
        auto sets = bs_condition_sets(tab);
        std::ostringstream os;
        os << "name,effective,borel_smith,witness\n";
        for (auto& [nm, f] : funcs) {
            BsResult r = is_borel_smith(tab, sets, f);
            os << nm << "," << (is_effective(tab, f) ? 1 : 0) << "," << (r.ok ? 1 : 0) << ",";
            if (!r.ok) os << r.witness->condition << " " << r.witness->detail;
            os << "\n";
        }
        emit(c, os.str());
        return 0;
    }
    if (name == "indist") {
        TTContext ctx = make_context(c);
        auto pairs = indistinguishable_pairs(ctx.subs, ctx.basis);
        if (c.format == "json") {
            json j = json::array();
            for (auto& [a, b] : pairs)
                j.push_back({{"h", class_label(ctx.subs, a)}, {"k", class_label(ctx.subs, b)}});
            emit(c, j.dump(2) + "\n");
        } else {
            std::ostringstream os;
            os << "h,k\n";
            for (auto& [a, b] : pairs)
                os << class_label(ctx.subs, a) << "," << class_label(ctx.subs, b) << "\n";
            emit(c, os.str());
        }
        return 0;
    }
    if (name == "complex") {
        auto* op = sub->get_subcommands().at(0);
        GroupPtr G = the_group(c);
        const std::string opn = op->get_name();
        if (opn == "build") {
            std::string type = op->get_option("--type")->as<std::string>();
            SubgroupClassTable tab = enumerate_subgroups(G);
            OrbitComplex C;
            if (type == "unit") {
                C = unit_complex(G, op->get_option("--degree")->as<int>());
            } else if (type == "u" || type == "cyclic") {
                int ci = op->get_option("--class")->as<int>();
                if (ci < 0 || ci >= tab.num_classes())
                    throw invalid_input("ShapeMismatch", "class index out of range");
                const Subgroup& N = tab.classes[ci].rep;
                C = (type == "u") ? builder_u(G, N) : builder_cyclic3(G, N);
            } else if (type == "dihedral") {
                C = builder_dihedral(G);
            } else if (type == "periodic") {
                C = builder_periodic(G, op->get_option("--n")->as<int>());
            } else {
                throw invalid_input("UnknownName", "unknown builder type " + type);
            }
            emit(c, complex_to_json(C, c.group));
            return 0;
        }
        std::string path = op->get_option("file")->as<std::string>();
        OrbitComplex C = load_complex(G, path);
        if (opn == "validate") {
            emit(c, "ok\n");
            return 0;
        }
        if (opn == "hmarks") {
            SubgroupClassTable tab = enumerate_subgroups(G);
            SuperclassFunction h = h_marks(C, tab);
            emit(c, superclass_csv(tab, {"h"}, {h}));
            return 0;
        }
        if (opn == "minimize") {
            Eliminated e = eliminate_contractibles(C);
            emit(c, complex_to_json(e.min, c.group));
            return 0;
        }
        if (opn == "iota") {
            SubgroupClassTable tab = enumerate_subgroups(G);
            SuperclassFunction h = h_marks(C, tab);
            int ci = op->get_option("--class")->as<int>();
            if (ci < 0 || ci >= tab.num_classes())
                throw invalid_input("ShapeMismatch", "class index out of range");
            UnitMap m = iota(C, tab, h, ci);
            json j;
            j["degree"] = m.degree;
            j["coeffs"] = m.coeffs;
            emit(c, j.dump(2) + "\n");
            return 0;
        }
    }
    if (name == "twisted") {
        auto* op = sub->get_subcommands().at(0);
        TTContext ctx = make_context(c);
        TwistedRing ring(ctx);
        const std::string opn = op->get_name();
        if (opn == "dims") {
            auto twists = twists_up_to(ring.twist_len(), ctx.trivial_index, c.max_twist);
            std::ostringstream os;
            os << "s";
            for (auto& q : twists) os << "," << twist_name(q);
            os << "\n";
            for (int s = 0; s >= -c.max_shift; --s) {
                os << s;
                for (auto& q : twists) os << "," << ring.hom_dimension(q, s);
                os << "\n";
            }
            emit(c, os.str());
            return 0;
        }
        if (opn == "basis") {
            Twist q = parse_twist(ring, op->get_option("--twist")->as<std::string>());
            int s = op->get_option("--shift")->as<int>();
            json j = json::array();
            for (auto& f : ring.basis_of_component(q, s)) j.push_back(json::parse(element_to_json(f)));
            emit(c, j.dump(2) + "\n");
            return 0;
        }
        if (opn == "multiply") {
            TwistedElement a = element_from_json(ring, read_file(op->get_option("a")->as<std::string>()));
            TwistedElement b = element_from_json(ring, read_file(op->get_option("b")->as<std::string>()));
            emit(c, element_to_json(ring.multiply(a, b)));
            return 0;
        }
        if (opn == "psihat") {
            TwistedElement a =
                element_from_json(ring, read_file(op->get_option("elem")->as<std::string>()));
            int ci = op->get_option("--class")->as<int>();
            int n = (int)ring.twist_hmark(a.q)[ci] + a.s;
            if (n + 1 > c.truncate)
                throw invalid_input("ShapeMismatch",
                                    "target degree " + std::to_string(n) +
                                        " exceeds --truncate " + std::to_string(c.truncate));
            emit(c, class_to_json(ring.psi_hat(a, ci)));
            return 0;
        }
    }
    if (name == "spectrum") {
        auto* op = sub->get_subcommands().at(0);
        TTContext ctx = make_context(c);
        const std::string opn = op->get_name();
        if (opn == "umatrix") {
            UMembership um = u_membership_matrix(ctx);
            std::ostringstream os;
            os << (um.partial ? "# partial: unrealized basis elements skipped\n" : "");
            os << "H\\K";
            for (int k = 0; k < ctx.subs.num_classes(); ++k) os << "," << class_label(ctx.subs, k);
            os << "\n";
            for (int h = 0; h < ctx.subs.num_classes(); ++h) {
                os << class_label(ctx.subs, h);
                for (int k = 0; k < ctx.subs.num_classes(); ++k) os << "," << (um.entry[h][k] ? 1 : 0);
                os << "\n";
            }
            emit(c, os.str());
            return 0;
        }
        if (opn == "witness") {
            int h = op->get_option("--h")->as<int>();
            int k = op->get_option("--k")->as<int>();
            SeparationWitness w = separation_witness(ctx, h, k);
            json j;
            j["h"] = class_label(ctx.subs, h);
            j["k"] = class_label(ctx.subs, k);
            j["basis_index"] = w.basis_index;
            j["partial"] = !ctx.realized.complete();
            emit(c, j.dump(2) + "\n");
            return 0;
        }
        if (opn == "compmember") {
            TwistedRing ring(ctx);
            TwistedElement a =
                element_from_json(ring, read_file(op->get_option("elem")->as<std::string>()));
            int ci = op->get_option("--class")->as<int>();
            json j;
            j["class"] = class_label(ctx.subs, ci);
            j["member"] = comp_membership(ring, a, ci);
            emit(c, j.dump(2) + "\n");
            return 0;
        }
    }
    throw invalid_input("UnknownName", "unhandled subcommand");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation-module chain complex toolkit for finite p-groups"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    Common c;
    app.add_option("--group", c.group, "catalog name or @file (cycle-notation group file)");
    app.add_option("--out", c.out, "output path (default stdout)");
    app.add_option("--format", c.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--user-complex", c.user_complexes, "complex JSON supplied to realize_basis");
    app.add_option("--max-shift", c.max_shift, "largest |s| for twisted tables");
    app.add_option("--max-twist", c.max_twist, "largest |q| for twisted tables");
    app.add_option("--truncate", c.truncate, "resolution truncation bound");

    app.add_subcommand("subgroups", "subgroup conjugacy classes");
    auto* sub_chartable = app.add_subcommand("chartable", "character table (mod ell)");
    sub_chartable->add_option("--check-file", "re-ingest a character CSV and verify");
    app.add_subcommand("bsbasis", "canonical Borel-Smith basis (verified)");
    auto* sub_bscheck = app.add_subcommand("bscheck", "check superclass functions from CSV");
    sub_bscheck->add_option("file", "CSV of superclass functions")->required();
    app.add_subcommand("indist", "indistinguishable subgroup pairs");

    auto* sub_complex = app.add_subcommand("complex", "orbit complex operations");
    sub_complex->require_subcommand(1);
    auto* cb = sub_complex->add_subcommand("build", "build a catalog complex");
    cb->add_option("--type", "u|cyclic|dihedral|periodic|unit")->default_str("u");
    cb->add_option("--class", "subgroup class index of N (u/cyclic)")->default_str("0");
    cb->add_option("--n", "length for the periodic builder")->default_str("2");
    cb->add_option("--degree", "degree for the unit builder")->default_str("0");
    sub_complex->add_subcommand("validate", "validate a complex JSON")->add_option("file")->required();
    sub_complex->add_subcommand("hmarks", "h-marks of a complex")->add_option("file")->required();
    sub_complex->add_subcommand("minimize", "remove contractible summands")
        ->add_option("file")
        ->required();
    auto* ci_ = sub_complex->add_subcommand("iota", "iota map at a subgroup class");
    ci_->add_option("file")->required();
    ci_->add_option("--class")->required();

    auto* sub_twisted = app.add_subcommand("twisted", "twisted cohomology");
    sub_twisted->require_subcommand(1);
    sub_twisted->add_subcommand("dims", "component dimension table");
    auto* tb = sub_twisted->add_subcommand("basis", "basis of one component");
    tb->add_option("--twist")->required();
    tb->add_option("--shift")->required();
    auto* tm = sub_twisted->add_subcommand("multiply", "product of two elements");
    tm->add_option("a")->required();
    tm->add_option("b")->required();
    auto* tp = sub_twisted->add_subcommand("psihat", "Psi-hat image of an element");
    tp->add_option("elem")->required();
    tp->add_option("--class")->required();

    auto* sub_spectrum = app.add_subcommand("spectrum", "Balmer spectrum probes");
    sub_spectrum->require_subcommand(1);
    sub_spectrum->add_subcommand("umatrix", "U(H) membership matrix on closed points");
    auto* sw = sub_spectrum->add_subcommand("witness", "separating basis element");
    sw->add_option("--h")->required();
    sw->add_option("--k")->required();
    auto* sc = sub_spectrum->add_subcommand("compmember", "comparison-map membership at m_H");
    sc->add_option("elem")->required();
    sc->add_option("--class")->required();

    // global options (--group, --out, ...) may appear after a subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* s : a->get_subcommands([](const CLI::App*) { return true; })) {
            s->fallthrough();
            enable_fallthrough(s);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return dispatch(app, c);
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const math_guard& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
