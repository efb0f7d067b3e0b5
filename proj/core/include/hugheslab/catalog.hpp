#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hugheslab/perm_group.hpp"

namespace hugheslab {

/// One catalog entry: a named group given by generator image arrays.
/// Serialized as a single JSON object per line for diff-friendly,
/// streamable catalogs.
struct GroupRecord {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::vector<unsigned>> generators;
  std::vector<std::string> tags;
};

GroupRecord to_record(const std::string& name, const PermGroup& G,
                      std::vector<std::string> tags = {});
PermGroup to_group(const GroupRecord& record);

std::string serialize_record(const GroupRecord& record);
/// Throws ParseError on malformed input (bad JSON, missing fields,
/// non-bijective generator rows).
GroupRecord parse_record(std::string_view line);

/// The builtin catalog: symmetric and alternating groups, cyclic groups,
/// the dihedral family up to order 64, AGL(1,q) for q <= 27, extraspecial
/// groups of order 27/125/343, elementary abelian groups, quaternion and
/// metacyclic examples, and the gamma tower. Deterministic order, unique
/// names, all orders <= 5000.
const std::vector<GroupRecord>& builtin_catalog();

std::optional<GroupRecord> builtin_record(std::string_view name);
std::vector<std::string> builtin_names();

/// Builtin groups materialized once per process (chains and element lists
/// are cached inside the shared PermGroup state).
const std::vector<std::pair<std::string, PermGroup>>& builtin_groups();
std::optional<PermGroup> builtin_group(std::string_view name);

} // namespace hugheslab
