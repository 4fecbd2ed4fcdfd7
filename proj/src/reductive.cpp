#include "invdmod/reductive.hpp"

namespace invdmod {

ReductiveProductGroup::ReductiveProductGroup(int l, SemisimpleGroup g)
    : torus_dim(l), ss(std::move(g)) {
  if (l < 0) fail(ErrorCode::InvalidArgument, "torus dimension must be >= 0");
}

ReductiveClass::ReductiveClass(MonodromyClass t, RepClass d)
    : torus_part(std::move(t)), derived_part(std::move(d)) {
  if (torus_part.n() != derived_part.rank())
    fail(ErrorCode::DimensionMismatch, "torus and derived parts have different ranks");
}

ReductiveClass construct_class(const ReductiveProductGroup& g,
                               const std::optional<ConstantTorusConnection>& torus,
                               const RepClass& v) {
  if (v.group() != g.ss.gamma())
    fail(ErrorCode::GroupMismatch, "derived part is not a class over gamma");
  if (g.torus_dim == 0) {
    if (torus && torus->l != 0)
      fail(ErrorCode::DimensionMismatch, "group has no torus factor");
    return ReductiveClass(MonodromyClass::rank_only(v.rank()), v);
  }
  if (!torus)
    fail(ErrorCode::DimensionMismatch, "torus connection required for torus_dim >= 1");
  if (torus->l != g.torus_dim)
    fail(ErrorCode::DimensionMismatch, "torus connection has wrong dimension");
  if (torus->n != v.rank())
    fail(ErrorCode::DimensionMismatch, "torus and derived parts have different ranks");
  return ReductiveClass(monodromy_class(*torus), v);
}

RepClass mu_der(const ReductiveClass& c) { return c.derived_part; }

bool in_ab_image(const ReductiveClass& c) {
  return invariants_dim(c.derived_part) == c.derived_part.rank();
}

ReductiveClass ab_pullback(const ReductiveProductGroup& g, const MonodromyClass& torus_class) {
  if (torus_class.l() != g.torus_dim)
    fail(ErrorCode::DimensionMismatch, "class does not live on the torus factor");
  if (torus_class.n() < 1) fail(ErrorCode::InvalidArgument, "rank must be >= 1");
  return ReductiveClass(torus_class, trivial_rep(g.ss.gamma(), torus_class.n()));
}

}  // namespace invdmod
