#include "glat/properties.hpp"

#include <algorithm>
#include <map>

#include "glat/error.hpp"

namespace glat {
namespace {

class Recorder {
 public:
  void record(const std::string& property, const std::string& entry, bool ok,
              const std::string& detail = {}) {
    PropertyResult& p = results_[property];
    p.name = property;
    if (ok) {
      ++p.passed;
    } else {
      ++p.failed;
      p.failures.push_back(entry + (detail.empty() ? "" : ": " + detail));
    }
  }

  CheckReport finish() {
    CheckReport report;
    for (auto& [name, p] : results_) {
      std::sort(p.failures.begin(), p.failures.end());
      report.properties.push_back(std::move(p));
    }
    return report;
  }

 private:
  std::map<std::string, PropertyResult> results_;
};

IntVector combination(const std::vector<IntVector>& chis, const std::vector<BigInt>& coeffs,
                      std::size_t classes) {
  IntVector out(classes);
  for (std::size_t i = 0; i < chis.size(); ++i)
    for (std::size_t c = 0; c < classes; ++c) out[c] += coeffs[i] * chis[i][c];
  return out;
}

void check_reversal(Recorder& rec, const std::string& property, const std::string& entry,
                    const LatticeEmbedding& iso) {
  const LatticeEmbedding rev = reverse_isogeny(iso);
  const BigInt e = iso.cokernel.exponent();
  const std::size_t n = iso.matrix.rows();
  const bool identity = rev.matrix * iso.matrix == e * IntMatrix::identity(n);
  BigInt e_pow;
  mpz_pow_ui(e_pow.get_mpz_t(), e.get_mpz_t(), n);
  const bool orders = rev.index() * iso.index() == e_pow;
  rec.record(property, entry, identity && orders,
             identity ? "cokernel orders do not multiply to e^rank" : "reverse * iso != e * I");
}

void check_lattice(Recorder& rec, const CorpusLattice& entry, const CheckOptions& opts) {
  const GammaLattice& m = entry.lattice;
  const FiniteGroup& g = *m.group();
  const std::string& name = entry.name;

  bool valid = true;
  try {
    (void)GammaLattice::from_table(m.group(), m.rank(), m.actions(), true);
  } catch (const Error& e) {
    valid = false;
    rec.record("lattice.homomorphism", name, false, e.what());
  }
  if (!valid) return;
  rec.record("lattice.homomorphism", name, true);

  const ArtinSolution artin = artin_decompose(m);
  const std::size_t classes = g.conjugacy_classes().size();
  std::vector<IntVector> chis;
  for (const auto& d : artin.reps) chis.push_back(induced_trivial_character(m.group(), d).as_integers());
  IntVector chi = character(m).as_integers();

  IntVector lhs = combination(chis, artin.n, classes);
  for (std::size_t c = 0; c < classes; ++c) lhs[c] += artin.r * chi[c];
  rec.record("artin.identity", name, lhs == combination(chis, artin.m, classes));

  bool reduced = true;
  for (std::size_t i = 0; i < artin.reps.size(); ++i)
    if (sgn(artin.n[i]) < 0 || sgn(artin.m[i]) < 0 || (sgn(artin.n[i]) != 0 && sgn(artin.m[i]) != 0))
      reduced = false;
  rec.record("artin.reduced", name, reduced);

  rec.record("artin.bound", name, artin.r >= 1 && artin.r <= static_cast<unsigned long>(g.order()),
             "r = " + artin.r.get_str());

  // Every smaller multiplier must fail to give an integer solution.
  bool minimal = true;
  if (m.rank() > 0) {
    IntMatrix b = IntMatrix::from_columns(classes, chis);
    for (BigInt r = 1; r < artin.r && minimal; ++r) {
      IntVector target = chi;
      for (auto& v : target) v *= r;
      if (solve_integer_linear(b, target)) minimal = false;
    }
  }
  rec.record("artin.minimal", name, minimal);

  const OnoResult ono = ono_construct(m, opts.search);
  RationalCharacter expect = BigInt(static_cast<unsigned long>(ono.r)) * character(m) + character(ono.M0);
  rec.record("ono.character_identity", name, expect == character(ono.M1));

  const LatticeEmbedding& emb = ono.embedding;
  const bool square = emb.matrix.is_square() && emb.finite_index();
  const bool equivariant = is_equivariant(emb.source, emb.target, emb.matrix);
  const BigInt det = abs(determinant(emb.matrix));
  rec.record("ono.embedding_sound", name,
             square && equivariant && det >= 1 && det == ono.index && emb.cokernel_free_rank == 0,
             "det " + det.get_str() + ", index " + ono.index.get_str());

  const bool perm0 = is_permutation_lattice(ono.M0, opts.recognition).verdict == Verdict::Yes;
  const bool perm1 = is_permutation_lattice(ono.M1, opts.recognition).verdict == Verdict::Yes;
  rec.record("ono.permutation_parts", name, perm0 && perm1);

  check_reversal(rec, "reversal.identity", name, emb);
}

void check_reduction(Recorder& rec, const CorpusReduction& entry, const CheckOptions& opts) {
  const std::string& name = entry.name;
  const ReductionInput& in = entry.input;
  const ReductionReport rep = reduce_stabilizer(in, opts.search);

  const BigInt d = in.d ? *in.d : BigInt(static_cast<unsigned long>(in.sp.action.actor()->order()));
  rec.record("reduction.m_formula", name,
             rep.m == BigInt(static_cast<unsigned long>(in.sp.action.target()->order())) * d);

  const std::size_t s_rank = rep.torus.S_hat.rank();
  BigInt m_pow;
  mpz_pow_ui(m_pow.get_mpz_t(), rep.m.get_mpz_t(), s_rank);
  const BigInt expected = m_pow * rep.torus.iso.index();
  BigInt snf_product = 1;
  if (s_rank > 0)
    for (const auto& x : smith_normal_form(rep.m * rep.torus.iso.matrix).elementary_divisors)
      snf_product *= abs(x);
  rec.record("reduction.A_order", name,
             rep.A.structure.order() == expected && snf_product == expected,
             "|A| = " + rep.A.structure.order().get_str() + ", expected " + expected.get_str());

  rec.record("reduction.A_action", name, is_valid_quotient_action(rep.A));
  rec.record("reduction.A_prime_action", name, is_valid_quotient_action(rep.A_prime));
  rec.record("reduction.kernel_order", name,
             rep.kernel_order_of_F == rep.A.structure.order() * rep.A_prime.structure.order());
  rec.record("reduction.narrative_steps", name, rep.narrative.size() == 5);

  rec.record("reduction.Q_permutation", name,
             is_permutation_lattice(rep.torus.Q_hat, opts.recognition).verdict == Verdict::Yes);
  bool twists = true;
  std::string detail;
  for (const Cocycle& x : enumerate_cocycles(in.sp.action)) {
    const auto verdict = is_permutation_lattice(twist(rep.torus.Q_hat, in.sp, x), opts.recognition);
    if (verdict.verdict != Verdict::Yes) {
      twists = false;
      detail = std::string(to_string(verdict.verdict)) + ": " + verdict.reason;
      break;
    }
  }
  rec.record("reduction.Q_twists_permutation", name, twists, detail);
  check_reversal(rec, "reduction.reversal_identity", name, rep.ono_prime.embedding);
}

}  // namespace

bool CheckReport::ok() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.failed == 0; });
}

CheckReport run_property_suite(const std::vector<CorpusLattice>& lattices,
                               const std::vector<CorpusReduction>& reductions,
                               const CheckOptions& opts) {
  Recorder rec;
  for (const auto& entry : lattices) {
    try {
      check_lattice(rec, entry, opts);
      rec.record("lattice.no_error", entry.name, true);
    } catch (const Error& e) {
      rec.record("lattice.no_error", entry.name, false,
                 std::string(error_code_name(e.code())) + ": " + e.what());
    }
  }
  for (const auto& entry : reductions) {
    try {
      check_reduction(rec, entry, opts);
      rec.record("reduction.no_error", entry.name, true);
    } catch (const Error& e) {
      rec.record("reduction.no_error", entry.name, false,
                 std::string(error_code_name(e.code())) + ": " + e.what());
    }
  }
  return rec.finish();
}

}  // namespace glat
