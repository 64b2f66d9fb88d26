#include "tambara/options.hpp"

#include "tambara/error.hpp"
#include "tambara/io.hpp"

namespace tambara {

IndexingSystem load_indexing(const std::string& name, const GroupPtr& g) {
  if (name == "complete") return IndexingSystem::complete(g);
  if (name == "trivial") return IndexingSystem::trivial(g);
  auto sys = parse_indexing(read_file(name));
  if (!same_group(sys.group(), g))
    throw ShapeError("indexing system is over " + sys.group()->name() + ", expected " + g->name());
  return sys;
}

ExponentPredicate load_predicate(const std::string& name, const GroupPtr& g) {
  if (name == "all") return ExponentPredicate::all(g);
  if (name == "iso") return ExponentPredicate::iso(g);
  if (name == "mono") return ExponentPredicate::mono(g);
  if (name == "epi") return ExponentPredicate::epi(g);
  return ExponentPredicate::from_indexing(load_indexing(name, g));
}

std::shared_ptr<TambaraModel> build_model(const ModelOptions& o, const GroupPtr& g, const IndexingSystem& sys) {
  auto d = ExponentPredicate::from_indexing(sys);
  if (o.model == "burnside") return std::make_shared<BurnsideModel>(g, d, o.modulus);
  if (o.model != "fixed") throw ValidationError("unknown model '" + o.model + "' (fixed or burnside)");
  if (!o.ring.empty()) return std::make_shared<FixedPointModel>(parse_ring(read_file(o.ring), g), d);
  if (o.regular > 0) return std::make_shared<FixedPointModel>(GRing::regular(g, o.regular), d);
  return std::make_shared<FixedPointModel>(GRing::zmod(g, o.zmod), d);
}

}  // namespace tambara
