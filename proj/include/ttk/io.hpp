#pragma once

#include "ttk/borel_smith.hpp"
#include "ttk/chartable.hpp"
#include "ttk/group.hpp"
#include "ttk/orbit.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ttk {

// ---- group files: "degree d" then one generator per line in cycle notation
GroupPtr load_group_file(const std::string& path);
GroupPtr group_from_source(const std::string& source); // catalog name or @file path
std::string group_file_text(const Group& G);

// ---- superclass-function CSV (rows = functions, columns = class labels)
std::string class_label(const SubgroupClassTable& tab, int ci);
std::string superclass_csv(const SubgroupClassTable& tab, const std::vector<std::string>& names,
                           const std::vector<SuperclassFunction>& funcs);
// parses a CSV produced by superclass_csv against the same table
std::vector<std::pair<std::string, SuperclassFunction>> parse_superclass_csv(
    const SubgroupClassTable& tab, const std::string& text);

// ---- character table CSV: row of class sizes, then one row per character
// (values as symmetric lifts mod ell)
std::string character_csv(const CharacterTable& t);
CharacterTable parse_character_csv(const Group& G, const std::string& text);

// ---- orbit complex JSON
std::string complex_to_json(const OrbitComplex& C, const std::string& group_name);
OrbitComplex complex_from_json(const GroupPtr& G, const std::string& text);
// group name recorded inside a complex file
std::string complex_json_group(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace ttk
