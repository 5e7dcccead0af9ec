#include "oransim/cm/parameter_group.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "oransim/error.hpp"

namespace oransim::cm {

namespace {
const std::vector<std::string> kNoGroups;
}

std::string PgRegistry::key(TargetKind kind, const ParameterId& param) {
  std::string k(to_string(kind));
  k += '/';
  k += param.name();
  return k;
}

const std::vector<std::string>& PgRegistry::groups_of(TargetKind kind,
                                                      const ParameterId& param) const {
  auto it = index_.find(key(kind, param));
  return it == index_.end() ? kNoGroups : it->second;
}

std::vector<std::string> PgRegistry::shared_groups(TargetKind kind, const ParameterId& a,
                                                   const ParameterId& b) const {
  const auto& ga = groups_of(kind, a);
  const auto& gb = groups_of(kind, b);
  std::vector<std::string> out;
  std::set_intersection(ga.begin(), ga.end(), gb.begin(), gb.end(), std::back_inserter(out));
  return out;
}

std::size_t PgRegistry::membership_count() const {
  std::size_t n = 0;
  for (const auto& [k, ids] : index_) n += ids.size();
  return n;
}

PgRegistry register_groups(std::vector<ParameterGroup> groups) {
  PgRegistry reg;
  std::set<std::string> seen;
  for (const auto& g : groups) {
    if (g.group_id.empty()) throw ConfigError("cm.groups: group_id must not be empty");
    if (!seen.insert(g.group_id).second)
      throw ConfigError("cm.groups: duplicate group_id '" + g.group_id + "'");
    if (g.members.empty())
      throw ConfigError("cm.groups." + g.group_id + ".members: must not be empty");
    std::set<ParameterId> members(g.members.begin(), g.members.end());
    if (members.size() != g.members.size())
      throw ConfigError("cm.groups." + g.group_id + ".members: duplicate parameter");
    for (const auto& p : g.members) reg.index_[PgRegistry::key(g.target_kind, p)].push_back(g.group_id);
  }
  for (auto& [k, ids] : reg.index_) std::sort(ids.begin(), ids.end());
  reg.groups_ = std::move(groups);
  return reg;
}

ParameterGroup handover_boundary_group() {
  return {"hob", TargetKind::CELL, {ParameterId::cio(), ParameterId::ttt(), ParameterId::hh()}};
}

}  // namespace oransim::cm
