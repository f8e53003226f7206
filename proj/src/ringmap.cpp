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

#include "frobkit/ringmap.hpp"

#include <stdexcept>

namespace frobkit {

RingMap make_ring_map(QRingPtr source, QRingPtr target,
                      std::vector<Poly> images) {
  if (int(images.size()) != source->nvars())
    throw std::invalid_argument("ring map: expected one image per variable");
  RingMap phi;
  phi.source = std::move(source);
  phi.target = std::move(target);
  for (auto& f : images) f = phi.target->nf(f);
  phi.images = std::move(images);

  // gradedness: consistent positive scale across nonzero images, no
  // constant terms (the map must be graded-local)
  std::optional<Rational> scale;
  for (int i = 0; i < phi.source->nvars(); ++i) {
    const Poly& im = phi.images[size_t(i)];
    if (im.is_zero()) continue;
    auto d = poly_degree(phi.target->P(), im);
    if (!d) throw std::invalid_argument("ring map: inhomogeneous image");
    if (d->num <= 0)
      throw std::invalid_argument("ring map: image has a constant term");
    Rational c = *d / phi.source->P().weights()[size_t(i)];
    if (scale && !(*scale == c))
      throw std::invalid_argument("ring map: inconsistent degree scaling");
    scale = c;
  }
  phi.scale = scale.value_or(Rational(1));

  // well-definedness: the source ideal maps into the target ideal
  for (const auto& g : phi.source->ideal().gens) {
    Poly gp = melem_component(phi.source->P(), g, 0);
    if (!map_apply(phi, gp).is_zero())
      throw std::invalid_argument(
          "ring map: source ideal not respected (image of " +
          poly_str(phi.source->P(), gp) + " is nonzero)");
  }
  return phi;
}

RingMap make_ring_map(QRingPtr source, QRingPtr target,
                      const std::vector<std::string>& images) {
  std::vector<Poly> ims;
  for (const auto& s : images) ims.push_back(poly_parse(target->P(), s));
  return make_ring_map(std::move(source), std::move(target), std::move(ims));
}

Poly map_apply(const RingMap& phi, const Poly& f) {
  return phi.target->nf(
      poly_substitute(phi.source->P(), f, phi.target->P(), phi.images));
}

QRingPtr fiber_ring(const RingMap& phi) {
  std::vector<Poly> gens;
  for (const auto& g : phi.target->ideal().gens)
    gens.push_back(melem_component(phi.target->P(), g, 0));
  for (const auto& im : phi.images)
    if (!im.is_zero()) gens.push_back(im);
  return GradedQuotientRing::make(phi.target->poly(), std::move(gens));
}

RingMap frobenius_endo(const QRingPtr& ring, int e) {
  int q = 1;
  for (int i = 0; i < e; ++i) q *= int(ring->p());
  std::vector<Poly> images;
  for (int v = 0; v < ring->nvars(); ++v)
    images.push_back(poly_var(ring->P(), v, q));
  return make_ring_map(ring, ring, std::move(images));
}

RingMap identity_map(const QRingPtr& ring) {
  std::vector<Poly> images;
  for (int v = 0; v < ring->nvars(); ++v)
    images.push_back(poly_var(ring->P(), v));
  return make_ring_map(ring, ring, std::move(images));
}

}  // namespace frobkit
