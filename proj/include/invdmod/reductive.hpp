#pragma once

#include <optional>

#include "invdmod/finab.hpp"
#include "invdmod/torusconn.hpp"

namespace invdmod {

/// Direct product T x (G_sc / gamma): an l-torus times a semisimple quotient.
struct ReductiveProductGroup {
  int torus_dim = 0;
  SemisimpleGroup ss;

  ReductiveProductGroup(int l, SemisimpleGroup g);
};

/// Classification datum of a rank-n invariant connection on a reductive
/// product: the torus-part monodromy invariant and the derived-part
/// character multiset over gamma. Both have the same rank.
struct ReductiveClass {
  MonodromyClass torus_part;
  RepClass derived_part;

  ReductiveClass(MonodromyClass t, RepClass d);
  long long rank() const { return derived_part.rank(); }

  friend bool operator==(const ReductiveClass& a, const ReductiveClass& b) {
    return a.torus_part == b.torus_part && a.derived_part == b.derived_part;
  }
};

/// Assemble a class from a torus connection and a derived-part multiset.
/// `torus` must be present iff g.torus_dim >= 1 (its dimension must match);
/// v must be a class over gamma(g) with rank equal to the connection rank.
ReductiveClass construct_class(const ReductiveProductGroup& g,
                               const std::optional<ConstantTorusConnection>& torus,
                               const RepClass& v);

/// The obstruction invariant: the derived-part class over gamma.
RepClass mu_der(const ReductiveClass& c);

/// True iff the class is pulled back from the maximal abelian quotient,
/// i.e. mu_der is a multiple of the trivial character.
bool in_ab_image(const ReductiveClass& c);

/// Pullback of a torus class along ab: G -> T: the derived part is trivial.
ReductiveClass ab_pullback(const ReductiveProductGroup& g, const MonodromyClass& torus_class);

}  // namespace invdmod
