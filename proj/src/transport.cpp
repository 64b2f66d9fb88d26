#include "tambara/transport.hpp"

#include <algorithm>

#include "tambara/error.hpp"

namespace tambara {

Bispan induce_bispan(const GroupPtr& g, Subgroup h, const Bispan& b) {
  return {induce_map(g, h, b.f), induce_map(g, h, b.g), induce_map(g, h, b.h)};
}

Bispan transport_forward(const GSet& x, Subgroup h, const Bispan& b) {
  if (!(b.source() == restrict(x, h))) throw ShapeError("transport: bispan does not start at the restriction of X");
  const GroupPtr& g = x.group();
  auto ind_s = induce(g, h, b.s());
  return {induce_adjoint(ind_s, x, b.f), induce_map(g, h, b.g), induce_map(g, h, b.h)};
}

Bispan transport_inverse(const Bispan& b, const Induced& target) {
  if (!(b.target() == target.set)) throw ShapeError("inverse transport: target is not the given induced G-set");
  const Subgroup h = target.subgroup;
  auto ft = sieve_factorization(b.h, target);
  auto fs = sieve_factorization(compose(ft.iso_inverse, b.g), ft.induced);
  GMap f = compose(restrict_map(compose(b.f, fs.iso), h), fs.induced.unit());
  return {std::move(f), fs.to_base, ft.to_base};
}

TransportReport verify_transport(const GSet& x, Subgroup h, const GSet& y, const IndexingSystem& sys, int s_bound,
                                 int t_bound) {
  const GroupPtr& g = x.group();
  const int index = g->order() / h.order();
  auto ind_y = induce(g, h, y);
  auto dh = ExponentPredicate::from_indexing(restrict_system(sys, h));
  auto dg = ExponentPredicate::from_indexing(sys);
  auto hs = enumerate_hom(restrict(x, h), y, dh, s_bound, t_bound);
  auto gs = enumerate_hom(x, ind_y.set, dg, index * s_bound, index * t_bound);
  TransportReport rep;
  rep.h_classes = static_cast<int>(hs.size());
  rep.g_classes = static_cast<int>(gs.size());
  auto fail = [&](std::string why) {
    rep.ok = false;
    rep.failures.push_back(std::move(why));
  };
  if (hs.size() != gs.size()) fail("hom sets have different sizes");
  std::vector<HomClass> images;
  for (const auto& c : hs) {
    auto fwd = transport_forward(x, h, c.representative());
    if (!dg.contains(fwd.g)) fail("forward transport left the exponent class: " + describe(c));
    auto img = HomClass::of(fwd);
    if (std::find(gs.begin(), gs.end(), img) == gs.end()) fail("image outside the bounded G-side: " + describe(c));
    if (std::find(images.begin(), images.end(), img) != images.end()) fail("two classes share an image: " + describe(c));
    images.push_back(img);
    if (!(HomClass::of(transport_inverse(img.representative(), ind_y)) == c))
      fail("inverse o forward is not the identity on " + describe(c));
  }
  for (const auto& c : gs) {
    auto back = transport_inverse(c.representative(), ind_y);
    if (!(HomClass::of(transport_forward(x, h, back)) == c)) fail("forward o inverse is not the identity on " + describe(c));
  }
  return rep;
}

}  // namespace tambara
