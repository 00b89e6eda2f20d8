#include "ttk/io.hpp"

#include "ttk/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ttk {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("MalformedCycle", "cannot open file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_input("MalformedCycle", "cannot write file " + path);
    out << text;
}

GroupPtr load_group_file(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string first;
    std::getline(in, first);
    std::istringstream fl(first);
    std::string kw;
    int degree = 0;
    fl >> kw >> degree;
    if (kw != "degree" || degree < 1)
        throw invalid_input("MalformedCycle", "group file must start with 'degree d'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (!blank) lines.push_back(line);
    }
    return group_from_permutations(degree, parse_cycles_lines(lines, degree));
}

GroupPtr group_from_source(const std::string& source) {
    if (!source.empty() && source[0] == '@') return load_group_file(source.substr(1));
    return catalog(source);
}

std::string group_file_text(const Group& G) {
    std::ostringstream os;
    os << "degree " << G.perm_degree << "\n";
    for (const auto& g : G.generator_perms) os << cycles_to_string(g) << "\n";
    return os.str();
}

std::string class_label(const SubgroupClassTable& tab, int ci) {
    std::ostringstream os;
    os << "H" << ci << ":o" << tab.classes[ci].rep.order();
    return os.str();
}

std::string superclass_csv(const SubgroupClassTable& tab, const std::vector<std::string>& names,
                           const std::vector<SuperclassFunction>& funcs) {
    std::ostringstream os;
    os << "name";
    for (int c = 0; c < tab.num_classes(); ++c) os << "," << class_label(tab, c);
    os << "\n";
    for (size_t i = 0; i < funcs.size(); ++i) {
        os << names[i];
        for (auto v : funcs[i]) os << "," << v;
        os << "\n";
    }
    return os.str();
}

std::vector<std::pair<std::string, SuperclassFunction>> parse_superclass_csv(
    const SubgroupClassTable& tab, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw invalid_input("ShapeMismatch", "empty CSV");
    std::vector<std::pair<std::string, SuperclassFunction>> out;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string name, cell;
        std::getline(ls, name, ',');
        SuperclassFunction f;
        while (std::getline(ls, cell, ',')) f.push_back(std::stoll(cell));
        if ((int)f.size() != tab.num_classes())
            throw invalid_input("ShapeMismatch", "CSV row length does not match class count");
        out.push_back({std::move(name), std::move(f)});
    }
    return out;
}

std::string character_csv(const CharacterTable& t) {
    std::ostringstream os;
    for (size_t k = 0; k < t.classes.members.size(); ++k)
        os << (k ? "," : "") << t.classes.members[k].size();
    os << "\n";
    for (int i = 0; i < t.num_chars(); ++i) {
        for (size_t k = 0; k < t.values[i].size(); ++k) {
            int64_t v = t.values[i][k];
            if (v > t.ell / 2) v -= t.ell; // symmetric lift
            os << (k ? "," : "") << v;
        }
        os << "\n";
    }
    return os.str();
}

CharacterTable parse_character_csv(const Group& G, const std::string& text) {
    CharacterTable t;
    t.ell = splitting_prime(G);
    t.classes = element_classes(G);
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw invalid_input("ShapeMismatch", "empty character CSV");
    {
        std::istringstream ls(line);
        std::string cell;
        int k = 0;
        while (std::getline(ls, cell, ',')) {
            if (k >= t.classes.size() || std::stoll(cell) != (int64_t)t.classes.members[k].size())
                throw invalid_input("ShapeMismatch", "class sizes do not match the group");
            ++k;
        }
        if (k != t.classes.size()) throw invalid_input("ShapeMismatch", "class count mismatch");
    }
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<int64_t> row;
        while (std::getline(ls, cell, ',')) {
            int64_t v = std::stoll(cell) % t.ell;
            if (v < 0) v += t.ell;
            row.push_back(v);
        }
        if ((int)row.size() != t.classes.size())
            throw invalid_input("ShapeMismatch", "character row length mismatch");
        int64_t deg = row[t.classes.class_of[0]];
        if (deg < 1 || deg > G.order) throw invalid_input("ShapeMismatch", "bad character degree");
        t.degrees.push_back((int)deg);
        t.values.push_back(std::move(row));
    }
    validate_table(G, t);
    return t;
}

std::string complex_to_json(const OrbitComplex& C, const std::string& group_name) {
    json j;
    j["group"] = group_name;
    json degrees = json::object();
    json diffs = json::object();
    for (int i = C.lo; i <= C.hi; ++i) {
        json mods = json::array();
        for (const auto& K : C.mod(i).summands) {
            json gens = json::array();
            // store the full element list; generators suffice but the closure
            // is unambiguous and small at this scale
            for (Elt e : K.elems) gens.push_back(e);
            mods.push_back(gens);
        }
        degrees[std::to_string(i)] = mods;
        if (i > C.lo) {
            const OrbitModule& src = C.mod(i);
            const OrbitModule& dst = C.mod(i - 1);
            json rows = json::array();
            for (int s = 0; s < src.size(); ++s) {
                json row = json::array();
                for (int t = 0; t < dst.size(); ++t) {
                    json cell = json::array();
                    if (const CosetVec* v = C.diff(i).entry(s, t))
                        for (auto& [g, c] : *v) cell.push_back(json::array({g, c}));
                    row.push_back(cell);
                }
                rows.push_back(row);
            }
            diffs[std::to_string(i)] = rows;
        }
    }
    j["degrees"] = degrees;
    j["differentials"] = diffs;
    return j.dump(2) + "\n";
}

std::string complex_json_group(const std::string& text) {
    json j = json::parse(text);
    return j.at("group").get<std::string>();
}

OrbitComplex complex_from_json(const GroupPtr& G, const std::string& text) {
    json j = json::parse(text);
    OrbitComplex C;
    C.G = G;
    const auto& degrees = j.at("degrees");
    int lo = 1 << 30, hi = -(1 << 30);
    for (auto it = degrees.begin(); it != degrees.end(); ++it) {
        int d = std::stoi(it.key());
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    if (degrees.empty()) return C;
    C.lo = lo;
    C.hi = hi;
    for (int i = lo; i <= hi; ++i) {
        OrbitModule m;
        auto key = std::to_string(i);
        if (degrees.contains(key)) {
            for (const auto& gens : degrees.at(key)) {
                std::vector<Elt> g;
                for (const auto& e : gens) g.push_back(e.get<int>());
                m.summands.push_back(closure(*G, g));
            }
        }
        C.mods.push_back(std::move(m));
    }
    C.diffs.assign(hi - lo + 1, Morphism{});
    const auto& diffs = j.at("differentials");
    for (auto it = diffs.begin(); it != diffs.end(); ++it) {
        int i = std::stoi(it.key());
        if (i <= lo || i > hi) throw invalid_input("ShapeMismatch", "differential outside support");
        Morphism d;
        const auto& rows = it.value();
        if ((int)rows.size() > C.mod(i).size())
            throw invalid_input("ShapeMismatch", "differential has more sources than summands");
        for (int s = 0; s < (int)rows.size(); ++s) {
            const auto& row = rows[s];
            if ((int)row.size() > C.mod(i - 1).size())
                throw invalid_input("ShapeMismatch", "differential has more targets than summands");
            for (int t = 0; t < (int)row.size(); ++t) {
                CosetVec v;
                for (const auto& pair : row[t]) {
                    Elt g = pair[0].get<int>();
                    int c = pair[1].get<int>() % G->prime;
                    if (c < 0) c += G->prime;
                    if (!c) continue;
                    Elt canon = coset_canon(*G, g, C.mod(i - 1).summands[t]);
                    v[canon] = (v[canon] + c) % G->prime;
                }
                for (auto vit = v.begin(); vit != v.end();)
                    vit = vit->second ? std::next(vit) : v.erase(vit);
                if (!v.empty()) d.e[{s, t}] = std::move(v);
            }
        }
        C.diffs[i - lo] = std::move(d);
    }
    validate(C);
    return C;
}

} // namespace ttk
