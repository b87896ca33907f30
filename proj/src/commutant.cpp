#include "jordantype/commutant.hpp"

namespace jt {

const char* compatibility_name(Compatibility c) {
  return c == Compatibility::BothStableForbidden ? "both-stable-forbidden" : "unknown";
}

Compatibility check_compatibility(const Partition& p, const Partition& q) {
  if (p.weight() != q.weight())
    throw Error(ErrorCode::WeightMismatch, "partitions " + p.str() + " and " + q.str() + " have different weights");
  if (p != q && is_stable(p) && is_stable(q)) return Compatibility::BothStableForbidden;
  return Compatibility::Unknown;
}

}  // namespace jt
