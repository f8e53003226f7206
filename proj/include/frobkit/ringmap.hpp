/*
 * Copyright 2026 The frobkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FROBKIT_RINGMAP_HPP
#define FROBKIT_RINGMAP_HPP

#include "frobkit/fmodule.hpp"

namespace frobkit {

/// Graded ring homomorphism between quotient rings, given by one
/// homogeneous image per source variable.  deg(image of x) =
/// degree_scale * deg(x) for all variables with nonzero image.
struct RingMap {
  QRingPtr source, target;
  std::vector<Poly> images;  // NF'd in the target
  Rational scale{1};
};

/// Validates gradedness (single consistent scale, no constant terms)
/// and well-definedness (source ideal maps into the target ideal).
/// Throws std::invalid_argument with a reason otherwise.
RingMap make_ring_map(QRingPtr source, QRingPtr target,
                      std::vector<Poly> images);
RingMap make_ring_map(QRingPtr source, QRingPtr target,
                      const std::vector<std::string>& images);

/// Image of a source element (substitute + NF in the target).
Poly map_apply(const RingMap& phi, const Poly& f);

/// S/(images of source variables) = S tensor_R k as a quotient ring.
QRingPtr fiber_ring(const RingMap& phi);

/// The e-fold Frobenius endomorphism x_i -> x_i^{p^e}.
RingMap frobenius_endo(const QRingPtr& ring, int e);

RingMap identity_map(const QRingPtr& ring);

}  // namespace frobkit

#endif
