#pragma once

/// Braided families: objects V_i, i ∈ ℑ, with an isomorphism
/// c_ij: V_i⊗V_j → V_j⊗V_i for every ordered pair, extended recursively to
/// tensor words of objects, plus a set of structure maps V_𝐢 → V_𝐣 that are
/// required to slide through every crossing.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bhopf/composite.hpp"
#include "bhopf/hopf.hpp"
#include "bhopf/morphism.hpp"
#include "bhopf/report.hpp"

namespace bhopf {

/// A tensor word (i_1, ..., i_n) of object ids. The empty word is the unit.
using IndexString = std::vector<std::string>;

struct FamilyObject {
  std::string id;
  std::size_t dim;
};

struct FamilyMap {
  std::string name;
  IndexString source;
  IndexString target;
  Morphism matrix;
};

class BraidedFamily {
 public:
  /// Requires a braid for every ordered pair of ids, each invertible and of
  /// shape d_i·d_j → d_j·d_i, and map matrices matching their words.
  /// Throws FormatError, UnknownIndex, DimensionMismatch or NotInvertible.
  BraidedFamily(FieldSpec field, std::vector<FamilyObject> objects,
                std::map<std::pair<std::string, std::string>, Morphism> braids, std::vector<FamilyMap> maps);

  const FieldSpec& field() const { return field_; }
  const std::vector<FamilyObject>& objects() const { return objects_; }
  const std::vector<FamilyMap>& maps() const { return maps_; }
  const std::map<std::pair<std::string, std::string>, Morphism>& braids() const { return braids_; }

  std::size_t dim(const std::string& id) const;
  std::size_t dim(const IndexString& word) const;
  /// Per-letter dimensions of a word, for decoding witnesses.
  std::vector<std::size_t> dims(const IndexString& word) const;
  const Morphism& braid(const std::string& i, const std::string& j) const;
  const FamilyMap& map(const std::string& name) const;

 private:
  FieldSpec field_;
  std::vector<FamilyObject> objects_;
  std::map<std::string, std::size_t> dims_;
  std::map<std::pair<std::string, std::string>, Morphism> braids_;
  std::vector<FamilyMap> maps_;
};

/// The braid equation for every triple (i, j, k) ∈ ℑ³, named
/// "braid_equation(i,j,k)", in lexicographic order of the object list.
CheckReport check_family_braided(const BraidedFamily& f);

/// c_𝐢𝐣: V_𝐢⊗V_𝐣 → V_𝐣⊗V_𝐢 in factored form. Words of length > 1 on the
/// left are split first; an empty word on either side gives the identity.
Composite braid_composite(const BraidedFamily& f, const IndexString& i, const IndexString& j);
Morphism extend_braid(const BraidedFamily& f, const IndexString& i, const IndexString& j);

/// For f: V_𝐢 → V_𝐣 and a word 𝐥:
///   (V_𝐥⊗f)∘c_𝐢𝐥 = c_𝐣𝐥∘(f⊗V_𝐥)   ("right(𝐥)")
///   (f⊗V_𝐥)∘c_𝐥𝐢 = c_𝐥𝐣∘(V_𝐥⊗f)   ("left(𝐥)")
CheckReport check_map_natural(const BraidedFamily& f, const FamilyMap& m, const IndexString& l);
/// check_map_natural against every single object l ∈ ℑ. Throws UnknownMap.
CheckReport check_map_compatible(const BraidedFamily& f, const std::string& name);
/// check_map_compatible for every registered map, prefixed by map name.
CheckReport check_all_maps_compatible(const BraidedFamily& f);

/// Half-braiding λ_i: V_i⊗W → W⊗V_i of an auxiliary object W against the
/// family, keyed by object id.
using LambdaFamily = std::map<std::string, Morphism>;

/// λ_𝐢 = (λ_𝐢<n ⊗ V_in)∘(V_𝐢<n ⊗ λ_in), identity for the empty word.
Composite lambda_composite(const BraidedFamily& f, std::size_t w_dim, const LambdaFamily& lambdas,
                           const IndexString& i);

/// Checks that (W, λ) satisfies (W⊗c_ij)∘λ_(ij) = λ_(ji)∘(c_ij⊗W) for all
/// i, j and (W⊗g)∘λ_𝐢 = λ_𝐣∘(g⊗W) for every registered map g: V_𝐢 → V_𝐣.
/// Throws DimensionMismatch for missing or misshapen λ_i, NotInvertible for a
/// singular one.
CheckReport build_lambda_family(const BraidedFamily& f, std::size_t w_dim, const LambdaFamily& lambdas);

/// λ^{W⊗Z} = (W⊗λ^Z)∘(λ^W⊗Z).
LambdaFamily tensor_lambda(const BraidedFamily& f, std::size_t w_dim, const LambdaFamily& w,
                           std::size_t z_dim, const LambdaFamily& z);

/// The embedding of a family member: λ^{V_j}_i = c_ij.
LambdaFamily member_lambda(const BraidedFamily& f, const std::string& j);

/// The three-object family V_0 = I, V_1 = H, V_2 = L with c_11 = c_H,
/// c_22 = c_L, c_12 = c_HL, c_21 = c_HL⁻¹, identities against V_0, and the
/// eight structure maps eps/eta/delta/mu of H and L registered.
/// Throws NotInvertible.
BraidedFamily disentangle(const HopfBundle& h, const HopfBundle& l, const Morphism& c_hl);

}  // namespace bhopf
