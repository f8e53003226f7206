// Dense-linear-algebra resolution oracle: builds minimal free
// resolutions of graded modules over artinian quotient rings one graded
// piece at a time, using only F_p row reduction and kernels.  No
// Groebner machinery is involved past reading the input presentation;
// this is the independent referee for Betti numbers.

#ifndef FROBKIT_TESTS_DENSE_ORACLE_HPP
#define FROBKIT_TESTS_DENSE_ORACLE_HPP

#include <map>

#include "frobkit/fmodule.hpp"

namespace frobkit::oracle {

struct OracleBetti {
  // (homological degree, internal scaled degree) -> count
  std::map<std::pair<int, std::int64_t>, std::int64_t> entries;
  std::int64_t lcd = 1;
  std::vector<std::int64_t> totals;
};

/// Minimal resolution Betti numbers of an artinian module, to
/// homological degree N.  `ideal_gens` and the module presentation are
/// taken as raw generator data.  Throws std::logic_error when the ring
/// is not artinian within the internal degree cap.
OracleBetti oracle_betti(const FiniteModule& M, int N);

/// Degreewise dense ideal membership (for GB cross-checks).
bool oracle_ideal_member(const QRingPtr& ring, const Poly& f);

/// Dense graded dimensions of the quotient ring, up to the cap it
/// derives internally (artinian rings only).
std::map<std::int64_t, std::int64_t> oracle_ring_dims(const QRingPtr& ring);

}  // namespace frobkit::oracle

#endif
