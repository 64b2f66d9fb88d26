#pragma once

#include <string>

#include "tambara/model.hpp"

namespace tambara {

/// "complete", "trivial" or the path of an indexing file over g.
IndexingSystem load_indexing(const std::string& spec, const GroupPtr& g);

/// "all", "iso", "mono", "epi" or anything load_indexing accepts.
ExponentPredicate load_predicate(const std::string& spec, const GroupPtr& g);

struct ModelOptions {
  std::string model = "fixed";  // fixed | burnside
  std::string ring;             // ring file, fixed model only
  int zmod = 6;
  int regular = 0;  // Map(G, Z/n) when positive
  long long modulus = 0;
};

std::shared_ptr<TambaraModel> build_model(const ModelOptions& o, const GroupPtr& g, const IndexingSystem& sys);

}  // namespace tambara
