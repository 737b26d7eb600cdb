#include "glat/serialize.hpp"

#include <sstream>

#include "glat/error.hpp"

namespace glat {
namespace {

const BigInt kSafeLimit = BigInt(1) << 53;

Json labels_of(const FiniteGroup& g, const std::vector<ElementId>& ids) {
  Json out = Json::array();
  for (ElementId x : ids) out.push_back(g.label(x));
  return out;
}

Json big_list(const std::vector<BigInt>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

bool is_flat(const Json& j) {
  if (!j.is_structured()) return true;
  if (is_scalar_array(j)) return true;
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (!is_scalar_array(e)) return false;
  return true;
}

void render(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (is_flat(j)) {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    return;
  }
  if (j.is_object()) {
    if (j.empty()) os << prefix << ": {}\n";
    for (auto it = j.begin(); it != j.end(); ++it)
      render(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    return;
  }
  for (std::size_t i = 0; i < j.size(); ++i)
    render(j[i], prefix + "[" + std::to_string(i) + "]", os);
}

}  // namespace

Json to_json(const BigInt& x) {
  if (abs(x) < kSafeLimit) return Json(x.get_si());
  return Json(x.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt x;
    if (x.set_str(j.get<std::string>(), 10) != 0)
      fail(ErrorCode::ParseError, "not an integer: " + j.get<std::string>());
    return x;
  }
  fail(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

Json to_json(const IntMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(big_list(a.row(i)));
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", rows}};
}

IntMatrix matrix_from_json(const Json& j, std::size_t expected_rank) {
  const Json* rows = &j;
  std::size_t nr = expected_rank, nc = expected_rank;
  bool sized = false;
  if (j.is_object()) {
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
      fail(ErrorCode::ParseError, "matrix object needs rows, cols and entries");
    nr = j.at("rows").get<std::size_t>();
    nc = j.at("cols").get<std::size_t>();
    rows = &j.at("entries");
    sized = true;
  }
  if (!rows->is_array()) fail(ErrorCode::ParseError, "matrix entries must be an array of rows");
  if (!sized && !rows->empty()) {
    nr = rows->size();
    nc = rows->at(0).is_array() ? rows->at(0).size() : 0;
  }
  if (rows->size() != nr) fail(ErrorCode::ParseError, "matrix row count mismatch");
  IntMatrix a(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    const Json& row = rows->at(i);
    if (!row.is_array() || row.size() != nc)
      fail(ErrorCode::ParseError, "matrix row " + std::to_string(i) + " has wrong length");
    for (std::size_t k = 0; k < nc; ++k) a(i, k) = bigint_from_json(row[k]);
  }
  return a;
}

Json to_json(const FiniteAbelianGroup& a) {
  return Json{{"structure", a.to_string()},
              {"invariant_factors", big_list(a.invariant_factors())},
              {"order", to_json(a.order())}};
}

Json subgroup_json(const FiniteGroup& g, const Subgroup& h) {
  return Json{{"order", h.size()}, {"elements", labels_of(g, h)}};
}

Json group_info_json(const FiniteGroup& g) {
  Json classes = Json::array();
  for (const auto& c : g.conjugacy_classes())
    classes.push_back(Json{{"size", c.size()},
                           {"representative", g.label(c.front())},
                           {"element_order", g.element_order(c.front())},
                           {"elements", labels_of(g, c)}});
  Json cyclic = Json::array();
  for (const auto& h : cyclic_subgroup_class_reps(g)) {
    ElementId gen = 0;
    for (ElementId x : h)
      if (g.element_order(x) == h.size()) {
        gen = x;
        break;
      }
    Json e = subgroup_json(g, h);
    e["generator"] = g.label(gen);
    cyclic.push_back(std::move(e));
  }
  return Json{{"order", g.order()},
              {"generators", labels_of(g, g.generators())},
              {"class_count", g.conjugacy_classes().size()},
              {"classes", classes},
              {"cyclic_subgroup_reps", cyclic},
              {"subgroup_class_count", subgroup_class_reps(g).size()}};
}

Json to_json(const RationalCharacter& chi) {
  Json out = Json::array();
  for (const auto& v : chi.values) {
    if (v.get_den() == 1)
      out.push_back(to_json(v.get_num()));
    else
      out.push_back(v.get_str());
  }
  return out;
}

Json to_json(const GammaLattice& m) {
  const FiniteGroup& g = *m.group();
  Json gens = Json::array();
  for (ElementId s : g.generators()) gens.push_back(to_json(m.action(s)));
  return Json{{"group_order", g.order()},
              {"rank", m.rank()},
              {"generators", labels_of(g, g.generators())},
              {"generator_matrices", gens},
              {"character", to_json(character(m))}};
}

Json to_json(const LatticeEmbedding& e) {
  return Json{{"source_rank", e.source.rank()},
              {"target_rank", e.target.rank()},
              {"matrix", to_json(e.matrix)},
              {"cokernel", to_json(e.cokernel)},
              {"cokernel_free_rank", e.cokernel_free_rank},
              {"index", to_json(e.index())}};
}

Json to_json(const ArtinSolution& s, const FiniteGroup& g) {
  Json reps = Json::array();
  for (const auto& h : s.reps) reps.push_back(subgroup_json(g, h));
  return Json{{"r", to_json(s.r)}, {"reps", reps}, {"n", big_list(s.n)}, {"m", big_list(s.m)}};
}

Json to_json(const OnoResult& o) {
  return Json{{"artin", to_json(o.artin, *o.M0.group())},
              {"r", o.r},
              {"M0", to_json(o.M0)},
              {"M1", to_json(o.M1)},
              {"embedding", to_json(o.embedding)},
              {"index", to_json(o.index)},
              {"search", std::string(to_string(o.method))}};
}

Json to_json(const FiniteAbelianWithAction& a) {
  const FiniteGroup& g = *a.acting_group;
  Json gens = Json::array();
  for (ElementId s : g.generators()) gens.push_back(to_json(a.action[s]));
  Json out = to_json(a.structure);
  out["convention"] = "dual of cokernel";
  out["acting_group_order"] = g.order();
  out["generator_actions"] = gens;
  return out;
}

Json to_json(const PermutationRecognition& p) {
  Json out{{"verdict", std::string(to_string(p.verdict))}, {"reason", p.reason}};
  if (p.verdict == Verdict::Yes) out["basis"] = to_json(p.basis);
  return out;
}

Json to_json(const ReductionReport& r) {
  Json narrative = Json::array();
  for (const auto& s : r.narrative) narrative.push_back(s);
  return Json{{"n", to_json(r.n)},
              {"d", to_json(r.d)},
              {"m", to_json(r.m)},
              {"ono", to_json(r.torus.ono)},
              {"S_hat_rank", r.torus.S_hat.rank()},
              {"Q_hat_rank", r.torus.Q_hat.rank()},
              {"A", to_json(r.A)},
              {"ono_prime", to_json(r.ono_prime)},
              {"reversed", to_json(r.reversed)},
              {"A_prime", to_json(r.A_prime)},
              {"kernel_order_of_F", to_json(r.kernel_order_of_F)},
              {"narrative", narrative}};
}

std::string render_table(const Json& j) {
  std::ostringstream os;
  render(j, "", os);
  return os.str();
}

}  // namespace glat
