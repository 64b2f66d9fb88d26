#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "tambara/check/acceptance.hpp"
#include "tambara/error.hpp"
#include "tambara/ideal.hpp"
#include "tambara/io.hpp"
#include "tambara/options.hpp"
#include "tambara/reciprocity.hpp"
#include "tambara/subcategory.hpp"

using namespace tambara;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kResource = 3 };

struct Globals {
  bool json = false;
  bool dot = false;
  int threads = 1;
};

Globals globals;

void emit(const json& j, const std::string& human) {
  if (globals.json) std::cout << j.dump() << "\n";
  else std::cout << human << (human.empty() || human.back() == '\n' ? "" : "\n");
}

json subgroup_json(Subgroup h) { return h.elements(); }

std::string braces(const FiniteGroup& g, Subgroup h) { return "{" + format_subgroup(g, h) + "}"; }

// ------------------------------------------------------------------ group

struct GroupCmd {
  std::string ref;
  std::string h, k;
};

int group_info(const GroupCmd& c) {
  auto g = parse_group_ref(c.ref);
  const auto& lat = g->lattice();
  json j{{"group", g->name()}, {"order", g->order()}, {"subgroups", lat.size()}, {"classes", lat.classes.size()}};
  json subs = json::array();
  std::ostringstream os;
  os << g->name() << ": order " << g->order() << ", " << lat.size() << " subgroups in " << lat.classes.size()
     << " conjugacy classes\n";
  for (int i = 0; i < lat.size(); ++i) {
    auto s = lat.subgroups[i];
    subs.push_back({{"index", i}, {"elements", subgroup_json(s)}, {"order", s.order()}, {"class", lat.conj_class[i]}});
    os << "  [" << i << "] " << braces(*g, s) << " order " << s.order() << " class " << lat.conj_class[i] << "\n";
  }
  j["lattice"] = subs;
  emit(j, os.str());
  return kOk;
}

int group_write(const GroupCmd& c) {
  auto g = parse_group_ref(c.ref);
  auto text = write_group(*g);
  emit(json{{"group", g->name()}, {"text", text}}, text);
  return kOk;
}

int group_subconj(const GroupCmd& c) {
  auto g = parse_group_ref(c.ref);
  auto k = parse_subgroup(g, c.k), h = parse_subgroup(g, c.h);
  const bool r = g->is_subconjugate(k, h);
  emit(json{{"subconjugate", r}}, std::string(r ? "true" : "false") + ": " + braces(*g, k) + " is " +
                                      (r ? "" : "not ") + "subconjugate to " + braces(*g, h));
  return r ? kOk : kFalse;
}

int group_double_cosets(const GroupCmd& c) {
  auto g = parse_group_ref(c.ref);
  auto h = parse_subgroup(g, c.h), k = parse_subgroup(g, c.k);
  auto reps = g->double_cosets(h, k);
  std::ostringstream os;
  os << reps.size() << " double cosets, representatives";
  for (int r : reps) os << " " << r;
  emit(json{{"count", reps.size()}, {"representatives", reps}}, os.str());
  return kOk;
}

// --------------------------------------------------------------- indexing

struct IndexingCmd {
  std::string ref;
  std::string file;
  std::string predicate = "all";
  bool count = false;
  bool oracle = false;
};

json system_json(const IndexingSystem& sys) {
  const auto& lat = sys.group()->lattice();
  json pairs = json::array();
  for (auto [h, k] : sys.nontrivial_pairs())
    pairs.push_back({subgroup_json(lat.subgroups[h]), subgroup_json(lat.subgroups[k])});
  return pairs;
}

int indexing_enumerate(const IndexingCmd& c) {
  auto g = parse_group_ref(c.ref);
  auto poset = enumerate_indexing_systems(g, globals.threads);
  if (c.oracle) {
    auto brute = brute_force_indexing_systems(g);
    if (!(brute == poset.systems)) {
      emit(json{{"agree", false}}, "enumerator and subset oracle disagree");
      return kFalse;
    }
  }
  if (c.count) {
    emit(json{{"group", g->name()}, {"count", poset.systems.size()}}, std::to_string(poset.systems.size()));
    return kOk;
  }
  if (globals.dot) {
    std::cout << poset_dot(poset);
    return kOk;
  }
  if (globals.json) {
    for (std::size_t i = 0; i < poset.systems.size(); ++i) {
      json covers = json::array();
      for (auto [a, b] : poset.hasse)
        if (a == static_cast<int>(i)) covers.push_back(b);
      std::cout << json{{"index", i}, {"pairs", system_json(poset.systems[i])}, {"covered_by", covers}}.dump() << "\n";
    }
    return kOk;
  }
  for (std::size_t i = 0; i < poset.systems.size(); ++i) std::cout << (i ? "\n" : "") << write_indexing(poset.systems[i]);
  return kOk;
}

int indexing_validate(const IndexingCmd& c) {
  auto sys = parse_indexing(read_file(c.file), false);
  auto rep = validate(sys);
  json j{{"valid", rep.ok}};
  if (!rep.ok) j["axiom"] = rep.axiom, j["witness"] = rep.witness;
  emit(j, rep.ok ? "valid" : "invalid: " + rep.axiom + " axiom fails at " + rep.witness);
  return rep.ok ? kOk : kFalse;
}

int indexing_properties(const IndexingCmd& c) {
  auto g = parse_group_ref(c.ref);
  auto d = load_predicate(c.predicate, g);
  try {
    auto ex = indexing_from_subcategory(d);
    const auto& r = ex.report;
    json j{{"wide", r.wide},
           {"pullback_stable", r.pullback_stable},
           {"composition_closed", r.composition_closed},
           {"coproduct_complete", r.coproduct_complete()},
           {"mono_implication", r.mono_implication_holds()},
           {"exact", ex.exact},
           {"bound", r.bound},
           {"pair_bound", r.pair_bound},
           {"system", system_json(ex.system)},
           {"witnesses", r.witnesses}};
    std::ostringstream os;
    os << r.summary() << "\n" << (ex.exact ? "" : "not coproduct complete; closest system:\n") << write_indexing(ex.system);
    emit(j, os.str());
    return kOk;
  } catch (const InvalidSubcategory& e) {
    emit(json{{"valid", false}, {"witness", e.what()}}, std::string("invalid: ") + e.what());
    return kFalse;
  }
}

int indexing_roundtrip(const IndexingCmd& c) {
  auto g = parse_group_ref(c.ref);
  auto rep = round_trip_check(g, 8, 4, globals.threads);
  json j{{"systems", rep.systems}, {"ok", rep.ok}, {"order_preserved", rep.order_preserved}, {"mismatches", rep.mismatches}};
  std::string human = rep.ok ? "OK (" + std::to_string(rep.systems) + " systems)"
                             : "FAILED: " + (rep.mismatches.empty() ? std::string() : rep.mismatches.front());
  emit(j, human);
  return rep.ok ? kOk : kFalse;
}

// ----------------------------------------------------------------- bispan

struct BispanCmd {
  std::string a, b;
  std::string indexing = "complete";
  int sbound = 2, tbound = 2;
};

int bispan_compose(const BispanCmd& c) {
  auto p = parse_bispan(read_file(c.a));
  auto q = parse_bispan(read_file(c.b));
  if (!(p.target() == q.source()))
    throw ShapeError("cannot compose: target of the first bispan (" + describe(p.target()) +
                     ") differs from the source of the second (" + describe(q.source()) + ")");
  auto d = load_predicate(c.indexing, p.source().group());
  auto r = compose(p, q, d);
  auto text = write_bispan(r);
  emit(json{{"bispan", text}, {"class", describe(HomClass::of(r))}}, text);
  return kOk;
}

int bispan_canon(const BispanCmd& c) {
  auto p = parse_bispan(read_file(c.a));
  auto cls = HomClass::of(p);
  auto text = write_bispan(cls.representative());
  json summands = json::array();
  for (const auto& s : decompose(cls)) summands.push_back(describe(s));
  emit(json{{"bispan", text}, {"class", describe(cls)}, {"summands", summands}}, text);
  return kOk;
}

int bispan_homcount(const BispanCmd& c) {
  auto x = parse_gset(read_file(c.a));
  auto y = parse_gset(read_file(c.b));
  auto d = load_predicate(c.indexing, x.group());
  auto classes = enumerate_hom(x, y, d, c.sbound, c.tbound);
  emit(json{{"count", classes.size()}, {"sbound", c.sbound}, {"tbound", c.tbound}}, std::to_string(classes.size()));
  return kOk;
}

int bispan_check_exponent(const BispanCmd& c) {
  auto p = parse_bispan(read_file(c.a));
  const auto& g = p.source().group();
  auto sys = load_indexing(c.indexing, g);
  auto bad = first_inadmissible_point(sys, p.g);
  if (!bad) {
    emit(json{{"admissible", true}}, "admissible");
    return kOk;
  }
  auto h = p.g.target.stabilizer(p.g(*bad)), k = p.g.source.stabilizer(*bad);
  emit(json{{"admissible", false}, {"point", *bad}, {"H", subgroup_json(h)}, {"K", subgroup_json(k)}},
       "not admissible: S point " + std::to_string(*bad) + " has orbit pair (" + braces(*g, h) + ", " +
           braces(*g, k) + ")");
  return kFalse;
}

// ---------------------------------------------------------------- tambara

struct TambaraCmd {
  std::string group = "cyclic:2";
  ModelOptions model;
  std::string indexing = "complete";
  std::vector<std::string> sum, transfer;
  std::string bispan;
  std::string value;
  std::vector<std::string> family{"e"};
};

ReciprocityFormula formula_of(const TambaraCmd& c, const GroupPtr& g, const IndexingSystem& sys) {
  if (c.sum.empty() == c.transfer.empty()) throw ValidationError("give exactly one of --sum H K or --transfer H K [G]");
  if (!c.sum.empty()) return reciprocity_sum(sys, parse_subgroup(g, c.sum[0]), parse_subgroup(g, c.sum[1]));
  if (c.transfer.size() == 3 && !(parse_subgroup(g, c.transfer[2]) == g->whole()))
    throw ValidationError("the third subgroup of --transfer must be the whole group");
  return reciprocity_transfer(sys, parse_subgroup(g, c.transfer[0]), parse_subgroup(g, c.transfer[1]));
}

int tambara_eval(const TambaraCmd& c) {
  auto g = parse_group_ref(c.group);
  auto sys = load_indexing(c.indexing, g);
  auto m = build_model(c.model, g, sys);
  auto b = parse_bispan(read_file(c.bispan));
  if (!same_group(b.source().group(), g)) throw ShapeError("bispan is over a different group");
  auto x = parse_value(c.value);
  if (x.c.size() != m->zero(b.source()).c.size())
    throw ValidationError("value has " + std::to_string(x.c.size()) + " coordinates, expected " +
                          std::to_string(m->zero(b.source()).c.size()));
  auto y = eval(*m, b, x);
  emit(json{{"value", y.c}, {"text", m->format(b.target(), y)}}, m->format(b.target(), y));
  return kOk;
}

int tambara_reciprocity(const TambaraCmd& c) {
  auto g = parse_group_ref(c.group);
  auto f = formula_of(c, g, load_indexing(c.indexing, g));
  json terms = json::array();
  std::ostringstream os;
  os << f.summands.size() << " summands\n";
  for (const auto& s : f.summands) {
    terms.push_back(describe(s));
    os << "  " << describe(s) << "\n";
  }
  emit(json{{"summands", f.summands.size()}, {"terms", terms}}, os.str());
  return kOk;
}

int tambara_verify(const TambaraCmd& c) {
  auto g = parse_group_ref(c.group);
  auto sys = load_indexing(c.indexing, g);
  auto m = build_model(c.model, g, sys);
  auto rep = verify_reciprocity(*m, formula_of(c, g, sys), globals.threads);
  emit(json{{"ok", rep.ok}, {"cases", rep.cases}, {"witness", rep.witness}}, rep.summary());
  return rep.ok ? kOk : kFalse;
}

int tambara_ideal(const TambaraCmd& c) {
  auto g = parse_group_ref(c.group);
  auto sys = load_indexing(c.indexing, g);
  auto m = build_model(c.model, g, sys);
  std::vector<int> family;
  for (const auto& f : c.family) family.push_back(g->lattice().index_of(parse_subgroup(g, f)));
  auto rep = is_O_ideal(*m, family_ideal(*m, family));
  emit(json{{"ideal", rep.ok}, {"condition", rep.condition}, {"witness", rep.witness}, {"bound", rep.bound}},
       rep.summary());
  return rep.ok ? kOk : kFalse;
}

int selftest(int only) {
  bool ok = true;
  for (int id = 1; id <= check::kCriteria; ++id) {
    if (only && id != only) continue;
    auto r = check::run_criterion(id, globals.threads);
    ok = ok && r.pass;
    if (globals.json)
      std::cout << json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}}.dump()
                << std::endl;
    else
      std::cout << check::format_result(r) << std::endl;
  }
  return ok ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incomplete Tambara functors over finite groups"};
  app.require_subcommand(1);
  app.add_flag("--json", globals.json, "machine-readable output");
  app.add_flag("--dot", globals.dot, "DOT output where available");
  app.add_option("--threads", globals.threads, "worker threads")->check(CLI::PositiveNumber);
  std::function<int()> action;

  auto sub = [&](CLI::App* parent, const char* name, const char* help) {
    auto* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  GroupCmd gc;
  auto* group = sub(&app, "group", "finite groups");
  group->require_subcommand(1);
  auto* gi = sub(group, "info", "order and subgroup lattice");
  gi->add_option("ref", gc.ref)->required();
  gi->callback([&] { action = [&] { return group_info(gc); }; });
  auto* gw = sub(group, "write", "emit the group file");
  gw->add_option("ref", gc.ref)->required();
  gw->callback([&] { action = [&] { return group_write(gc); }; });
  auto* gs = sub(group, "subconj", "is K subconjugate to H");
  gs->add_option("ref", gc.ref)->required();
  gs->add_option("K", gc.k)->required();
  gs->add_option("H", gc.h)->required();
  gs->callback([&] { action = [&] { return group_subconj(gc); }; });
  auto* gd = sub(group, "double-cosets", "representatives of H\\G/K");
  gd->add_option("ref", gc.ref)->required();
  gd->add_option("H", gc.h)->required();
  gd->add_option("K", gc.k)->required();
  gd->callback([&] { action = [&] { return group_double_cosets(gc); }; });

  IndexingCmd ic;
  auto* indexing = sub(&app, "indexing", "indexing systems");
  indexing->require_subcommand(1);
  auto* ie = sub(indexing, "enumerate", "all indexing systems of a group");
  ie->add_option("ref", ic.ref)->required();
  ie->add_flag("--count", ic.count, "print only the number of systems");
  ie->add_flag("--oracle", ic.oracle, "also compare with the subset oracle");
  ie->callback([&] { action = [&] { return indexing_enumerate(ic); }; });
  auto* iv = sub(indexing, "validate", "check the axioms of an indexing file");
  iv->add_option("file", ic.file)->required();
  iv->callback([&] { action = [&] { return indexing_validate(ic); }; });
  auto* ip = sub(indexing, "properties", "scan an exponent class and extract its system");
  ip->add_option("ref", ic.ref)->required();
  ip->add_option("--predicate", ic.predicate, "all, iso, mono, epi, trivial, complete or an indexing file");
  ip->callback([&] { action = [&] { return indexing_properties(ic); }; });
  auto* ir = sub(indexing, "roundtrip", "systems survive extraction from their map classes");
  ir->add_option("ref", ic.ref)->required();
  ir->callback([&] { action = [&] { return indexing_roundtrip(ic); }; });

  BispanCmd bc;
  auto* bispan = sub(&app, "bispan", "bispans and their composition");
  bispan->require_subcommand(1);
  auto* bco = sub(bispan, "compose", "q o p for bispan files p, q");
  bco->add_option("p", bc.a)->required();
  bco->add_option("q", bc.b)->required();
  bco->add_option("--indexing", bc.indexing, "exponent system: complete, trivial or a file");
  bco->callback([&] { action = [&] { return bispan_compose(bc); }; });
  auto* bca = sub(bispan, "canon", "canonical representative");
  bca->add_option("file", bc.a)->required();
  bca->callback([&] { action = [&] { return bispan_canon(bc); }; });
  auto* bh = sub(bispan, "homcount", "number of bispan classes X -> Y within bounds");
  bh->add_option("X", bc.a)->required();
  bh->add_option("Y", bc.b)->required();
  bh->add_option("--sbound", bc.sbound);
  bh->add_option("--tbound", bc.tbound);
  bh->add_option("--indexing", bc.indexing);
  bh->callback([&] { action = [&] { return bispan_homcount(bc); }; });
  auto* be = sub(bispan, "check-exponent", "is the exponent admissible");
  be->add_option("file", bc.a)->required();
  be->add_option("--indexing", bc.indexing)->required();
  be->callback([&] { action = [&] { return bispan_check_exponent(bc); }; });

  TambaraCmd tc;
  auto* tambara = sub(&app, "tambara", "Tambara functor models");
  tambara->require_subcommand(1);
  auto model_opts = [&](CLI::App* s) {
    s->add_option("--group", tc.group);
    s->add_option("--model", tc.model.model, "fixed or burnside");
    s->add_option("--ring", tc.model.ring, "ring file for the fixed-point model");
    s->add_option("--zmod", tc.model.zmod, "Z/n with trivial action");
    s->add_option("--regular", tc.model.regular, "Map(G, Z/n)");
    s->add_option("--modulus", tc.model.modulus, "Burnside coefficients mod n");
    s->add_option("--indexing", tc.indexing);
  };
  auto formula_opts = [&](CLI::App* s) {
    s->add_option("--sum", tc.sum, "H K")->expected(2);
    s->add_option("--transfer", tc.transfer, "H K [G]")->expected(2, 3);
  };
  auto* te = sub(tambara, "eval", "evaluate a bispan on a value");
  model_opts(te);
  te->add_option("bispan", tc.bispan)->required();
  te->add_option("--value", tc.value)->required();
  te->callback([&] { action = [&] { return tambara_eval(tc); }; });
  auto* tr = sub(tambara, "reciprocity", "generate a reciprocity formula");
  tr->add_option("--group", tc.group);
  tr->add_option("--indexing", tc.indexing);
  formula_opts(tr);
  tr->callback([&] { action = [&] { return tambara_reciprocity(tc); }; });
  auto* tv = sub(tambara, "verify-reciprocity", "check a formula on every test element");
  model_opts(tv);
  formula_opts(tv);
  tv->callback([&] { action = [&] { return tambara_verify(tc); }; });
  auto* ti = sub(tambara, "ideal-check", "is the family ideal an O-ideal");
  model_opts(ti);
  ti->add_option("--family", tc.family, "subgroups generating the family");
  ti->callback([&] { action = [&] { return tambara_ideal(tc); }; });

  int only = 0;
  auto* st = sub(&app, "selftest", "run the acceptance suite");
  st->add_option("--only", only, "a single criterion");
  st->callback([&] { action = [&] { return selftest(only); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action();
  } catch (const ResourceError& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return kResource;
  } catch (const InvalidSubcategory& e) {
    std::cerr << e.what() << "\n";
    return kFalse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
