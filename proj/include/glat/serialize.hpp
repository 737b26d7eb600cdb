#pragma once

#include "json.hpp"

#include "glat/artin_ono.hpp"
#include "glat/reduction.hpp"

namespace glat {

/// Insertion-ordered JSON keeps output byte-stable.
using Json = nlohmann::ordered_json;

/// Integers below 2^53 in magnitude become JSON numbers, larger ones strings.
Json to_json(const BigInt& x);
BigInt bigint_from_json(const Json& j);

Json to_json(const IntMatrix& a);
/// Accepts {"rows", "cols", "entries"} with entries as nested rows, or a bare
/// array of rows (then an empty array needs `expected_rank` to size it).
IntMatrix matrix_from_json(const Json& j, std::size_t expected_rank = 0);

Json to_json(const FiniteAbelianGroup& a);
Json subgroup_json(const FiniteGroup& g, const Subgroup& h);
Json group_info_json(const FiniteGroup& g);
Json to_json(const GammaLattice& m);
Json to_json(const RationalCharacter& chi);
Json to_json(const LatticeEmbedding& e);
Json to_json(const ArtinSolution& s, const FiniteGroup& g);
Json to_json(const OnoResult& o);
Json to_json(const FiniteAbelianWithAction& a);
Json to_json(const PermutationRecognition& p);
Json to_json(const ReductionReport& r);

/// Plain-text rendering of a JSON value for --table output.
std::string render_table(const Json& j);

}  // namespace glat
