#include "mcalc/ring.hpp"

#include "mcalc/error.hpp"

namespace mcalc {

RingSpec::RingSpec(PolyRingPtr base, std::vector<Polynomial> quotient)
    : base_(std::move(base)) {
  for (auto& f : quotient) {
    require_same_ring(base_, f.ring());
    if (!f.constant_term().is_zero())
      throw Error(ErrorCode::kInvalidArgument,
                  "quotient generator " + f.to_string() + " does not vanish at the origin");
    if (!f.is_zero()) quotient_.push_back(std::move(f));
  }
}

bool RingSpec::is_homogeneous() const {
  for (const auto& f : quotient_)
    if (!f.is_homogeneous()) return false;
  return true;
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  return same_ring(a.base_, b.base_) && a.quotient_ == b.quotient_;
}

}  // namespace mcalc
