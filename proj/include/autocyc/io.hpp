#ifndef AUTOCYC_IO_HPP
#define AUTOCYC_IO_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "automorphism.hpp"
#include "catalog.hpp"
#include "delta_graph.hpp"
#include "group.hpp"
#include "group_props.hpp"
#include "theorems.hpp"

namespace autocyc::io {

using nlohmann::json;

// Throws ParseError when the file cannot be read or is not JSON.
json read_json_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &text);

// {"name", "degree", "generators", "generator_names"?}: each generator is a 0-based image list or
// a 1-based cycle string such as "(1 2 3)(4 5)".
FiniteGroup group_from_json(const json &j, std::size_t order_bound = kDefaultOrderBound);
json group_to_json(const FiniteGroup &G);

// {"kind", "conjugators"?, "tables"?, "generator_images"?, "group_hash", "label"?}.
// Throws HashMismatch when the hash names a different generator list.
AutAction action_from_json(const FiniteGroup &G, const json &j, std::size_t cap = kDefaultActionCap);
json action_to_json(const FiniteGroup &G, const AutAction &A);

json graph_to_json(const FiniteGroup &G, const DeltaGraph &D);
json report_to_json(const FiniteGroup &G, const DeltaGraph &D, const AnalysisReport &R);
json profile_to_json(const GroupProfile &P);
json verdict_to_json(const TheoremVerdict &v);
json verdicts_to_json(const std::vector<TheoremVerdict> &verdicts);
json metadata_to_json(const CatalogEntry &e);

std::string to_dot(const FiniteGroup &G, const DeltaGraph &D);
std::string to_graphml(const FiniteGroup &G, const DeltaGraph &D);

} // namespace autocyc::io

#endif // AUTOCYC_IO_HPP
