#include "glat/workspace.hpp"

#include <fstream>
#include <sstream>

#include "glat/error.hpp"

namespace glat {
namespace {

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* kind) {
  auto it = m.find(name);
  if (it == m.end()) fail(ErrorCode::UnknownName, std::string("unknown ") + kind + " '" + name + "'");
  return it->second;
}

const Json& section(const Json& doc, const char* key) {
  static const Json empty = Json::object();
  if (!doc.contains(key)) return empty;
  const Json& s = doc.at(key);
  if (!s.is_object()) fail(ErrorCode::ParseError, std::string("'") + key + "' must be an object");
  return s;
}

const Json& field(const Json& obj, const char* key, const std::string& owner) {
  if (!obj.is_object() || !obj.contains(key))
    fail(ErrorCode::ParseError, owner + ": missing field '" + key + "'");
  return obj.at(key);
}

// "(0 1 2)(3 4)" on `points` points.
Permutation parse_cycles(const std::string& text, std::size_t points) {
  Permutation p(points);
  for (std::size_t i = 0; i < points; ++i) p[i] = i;
  std::vector<std::size_t> cycle;
  std::string number;
  auto flush_number = [&] {
    if (number.empty()) return;
    const std::size_t v = std::stoul(number);
    if (v >= points) fail(ErrorCode::ParseError, "point " + number + " out of range in " + text);
    cycle.push_back(v);
    number.clear();
  };
  bool open = false;
  for (char c : text) {
    if (c == '(') {
      if (open) fail(ErrorCode::ParseError, "nested parenthesis in " + text);
      open = true;
      cycle.clear();
    } else if (c == ')') {
      if (!open) fail(ErrorCode::ParseError, "unbalanced parenthesis in " + text);
      flush_number();
      for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
      open = false;
    } else if (c >= '0' && c <= '9') {
      number.push_back(c);
    } else if (c == ' ' || c == ',') {
      flush_number();
    } else if (c != 'e') {
      fail(ErrorCode::ParseError, "unexpected character in cycle notation: " + text);
    }
  }
  if (open) fail(ErrorCode::ParseError, "unbalanced parenthesis in " + text);
  return p;
}

Permutation parse_permutation(const Json& j, std::size_t points) {
  if (j.is_string()) return parse_cycles(j.get<std::string>(), points);
  if (!j.is_array()) fail(ErrorCode::ParseError, "permutation must be an array or cycle string");
  return j.get<Permutation>();
}

ElementId parse_element(const FiniteGroup& g, const Json& j) {
  if (j.is_number_integer()) {
    const auto id = j.get<std::int64_t>();
    if (id < 0 || static_cast<std::size_t>(id) >= g.order())
      fail(ErrorCode::ParseError, "element id out of range: " + j.dump());
    return static_cast<ElementId>(id);
  }
  if (g.permutations().empty())
    fail(ErrorCode::ParseError, "elements of this group must be given by id");
  const Permutation p = parse_permutation(j, g.permutations()[0].size());
  auto id = g.find_permutation(p);
  if (!id) fail(ErrorCode::ParseError, "permutation " + j.dump() + " is not in the group");
  return *id;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Permutation invert(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = i;
  return r;
}

GroupPtr parse_group(const Json& j, const std::string& name) {
  const Json& gens = field(j, "generators", "group " + name);
  if (!gens.is_array()) fail(ErrorCode::ParseError, "group " + name + ": generators must be a list");
  std::size_t points = j.contains("points") ? j.at("points").get<std::size_t>() : 0;
  std::vector<Permutation> perms;
  for (const auto& g : gens) {
    if (g.is_string() && points == 0)
      fail(ErrorCode::ParseError, "group " + name + ": cycle notation needs 'points'");
    perms.push_back(parse_permutation(g, points));
  }
  if (perms.empty() && points > 0) perms.push_back(parse_cycles("", points));
  return make_group(group_from_generators(perms));
}

GroupAction parse_action(const Workspace& ws, const Json& j, const std::string& name) {
  const std::string owner = "action " + name;
  GroupPtr actor = ws.group(field(j, "actor", owner).get<std::string>());
  GroupPtr target = ws.group(field(j, "target", owner).get<std::string>());
  if (j.value("trivial", false)) return GroupAction::trivial(actor, target);
  const FiniteGroup& f = *target;
  std::vector<std::vector<ElementId>> auts;
  if (j.contains("conjugators")) {
    if (f.permutations().empty())
      fail(ErrorCode::ParseError, owner + ": conjugators need a permutation group target");
    const std::size_t points = f.permutations()[0].size();
    for (const auto& c : j.at("conjugators")) {
      const Permutation p = parse_permutation(c, points);
      if (p.size() != points) fail(ErrorCode::ParseError, owner + ": conjugator has wrong degree");
      const Permutation pinv = invert(p);
      std::vector<ElementId> aut(f.order());
      for (ElementId x = 0; x < f.order(); ++x) {
        auto y = f.find_permutation(compose(compose(p, f.permutations()[x]), pinv));
        if (!y) fail(ErrorCode::NotAHomomorphism, owner + ": conjugator does not normalise the target");
        aut[x] = *y;
      }
      auts.push_back(std::move(aut));
    }
  } else {
    for (const auto& imgs : field(j, "generator_images", owner)) {
      std::vector<ElementId> ids;
      for (const auto& e : imgs) ids.push_back(parse_element(f, e));
      auts.push_back(hom_from_generator_images(target, target, ids).images);
    }
  }
  return GroupAction::from_generator_automorphisms(actor, target, auts);
}

GammaLattice parse_lattice(const Workspace& ws, const Json& j, const std::string& name) {
  const std::string owner = "lattice " + name;
  GroupPtr g = ws.group(field(j, "group", owner).get<std::string>());
  if (j.contains("induced_from")) {
    std::vector<ElementId> gens;
    for (const auto& e : j.at("induced_from")) gens.push_back(parse_element(*g, e));
    return induced_lattice(g, generated_subgroup(*g, gens));
  }
  const std::size_t rank = field(j, "rank", owner).get<std::size_t>();
  std::vector<IntMatrix> mats;
  for (const auto& m : field(j, "generator_matrices", owner)) mats.push_back(matrix_from_json(m, rank));
  return lattice_from_action(g, rank, mats);
}

Cocycle parse_cocycle(const Workspace& ws, const Json& j, const std::string& name) {
  const std::string owner = "cocycle " + name;
  const GroupAction& act = ws.action(field(j, "action", owner).get<std::string>());
  std::vector<ElementId> values;
  for (const auto& v : field(j, "generator_values", owner))
    values.push_back(parse_element(*act.target(), v));
  return cocycle_from_generator_values(act, values);
}

ReductionInput parse_reduction(const Workspace& ws, const Json& j, const std::string& name) {
  const std::string owner = "reduction " + name;
  const GroupAction& act = ws.action(field(j, "action", owner).get<std::string>());
  ReductionInput in{semidirect_product(act),
                    ws.lattice(field(j, "T_hat", owner).get<std::string>()),
                    ws.lattice(field(j, "Gtor_hat", owner).get<std::string>()),
                    std::nullopt};
  if (j.contains("d")) in.d = bigint_from_json(j.at("d"));
  if (!in.T_hat.group()->same_table(*in.sp.group))
    fail(ErrorCode::GroupMismatch, owner + ": T_hat is not a lattice over the semidirect product");
  if (!in.Gtor_hat.group()->same_table(*act.actor()))
    fail(ErrorCode::GroupMismatch, owner + ": Gtor_hat is not a lattice over the acting group");
  if (in.d && *in.d < 1) fail(ErrorCode::InvalidArgument, owner + ": d must be positive");
  return in;
}

}  // namespace

const GroupPtr& Workspace::group(const std::string& name) const { return lookup(groups, name, "group"); }
const GroupAction& Workspace::action(const std::string& name) const {
  return lookup(actions, name, "action");
}
const GammaLattice& Workspace::lattice(const std::string& name) const {
  return lookup(lattices, name, "lattice");
}
const Cocycle& Workspace::cocycle(const std::string& name) const {
  return lookup(cocycles, name, "cocycle");
}
const ReductionInput& Workspace::reduction(const std::string& name) const {
  return lookup(reductions, name, "reduction");
}

const SemidirectProduct* Workspace::semidirect_for(const GroupPtr& g) const {
  for (const auto& [name, sp] : semidirect)
    if (sp.group == g) return &sp;
  for (const auto& [name, sp] : semidirect)
    if (sp.group->same_table(*g)) return &sp;
  return nullptr;
}

Workspace load_workspace(const Json& doc) {
  Workspace ws;
  try {
    if (!doc.is_object()) fail(ErrorCode::ParseError, "workspace must be a JSON object");
    if (!doc.contains("format") || doc.at("format") != 1)
      fail(ErrorCode::ParseError, "workspace must declare \"format\": 1");
    for (const auto& [name, j] : section(doc, "groups").items()) ws.groups[name] = parse_group(j, name);
    for (const auto& [name, j] : section(doc, "actions").items())
      ws.actions.emplace(name, parse_action(ws, j, name));
    for (const auto& [name, j] : section(doc, "semidirect").items()) {
      const std::string act = j.is_string() ? j.get<std::string>()
                                            : field(j, "action", "semidirect " + name).get<std::string>();
      if (ws.groups.count(name)) fail(ErrorCode::ParseError, "duplicate group name '" + name + "'");
      SemidirectProduct sp = semidirect_product(ws.action(act));
      ws.groups[name] = sp.group;
      ws.semidirect.emplace(name, std::move(sp));
    }
    for (const auto& [name, j] : section(doc, "lattices").items())
      ws.lattices.emplace(name, parse_lattice(ws, j, name));
    for (const auto& [name, j] : section(doc, "cocycles").items())
      ws.cocycles.emplace(name, parse_cocycle(ws, j, name));
    for (const auto& [name, j] : section(doc, "reductions").items())
      ws.reductions.emplace(name, parse_reduction(ws, j, name));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed workspace: ") + e.what());
  }
  return ws;
}

Workspace load_workspace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open workspace file " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return load_workspace(doc);
}

}  // namespace glat
