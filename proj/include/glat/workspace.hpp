#pragma once

#include <map>
#include <string>

#include "glat/reduction.hpp"
#include "glat/serialize.hpp"

namespace glat {

/// Named objects loaded from one JSON document. Every object is validated
/// while loading; lookups throw UnknownName.
struct Workspace {
  std::map<std::string, GroupPtr> groups;
  std::map<std::string, GroupAction> actions;
  std::map<std::string, SemidirectProduct> semidirect;
  std::map<std::string, GammaLattice> lattices;
  std::map<std::string, Cocycle> cocycles;
  std::map<std::string, ReductionInput> reductions;

  const GroupPtr& group(const std::string& name) const;
  const GroupAction& action(const std::string& name) const;
  const GammaLattice& lattice(const std::string& name) const;
  const Cocycle& cocycle(const std::string& name) const;
  const ReductionInput& reduction(const std::string& name) const;
  /// Semidirect product whose group is `g`, if any.
  const SemidirectProduct* semidirect_for(const GroupPtr& g) const;
};

Workspace load_workspace(const Json& doc);
/// Throws ParseError on unreadable or malformed files.
Workspace load_workspace_file(const std::string& path);

}  // namespace glat
