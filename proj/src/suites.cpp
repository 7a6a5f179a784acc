#include "radgeo/suites.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "radgeo/morse.hpp"
#include "radgeo/radical.hpp"
#include "radgeo/rng.hpp"

namespace radgeo {

const std::vector<std::string>& co3_suite_names() {
  static const std::vector<std::string> names{"calibrate", "sylow", "prop43", "table1",
                                              "table2",    "axioms", "euler", "delta-fixed"};
  return names;
}

Co3Session::Co3Session(GeneratorFile gens, Co3Options opts) : gens_(std::move(gens)), opts_(opts) {}
Co3Session::~Co3Session() = default;

const Co3Context& Co3Session::context() {
  if (!ctx_) ctx_ = Co3Context::calibrate(gens_, opts_, &calibrate_report_);
  return *ctx_;
}

const LocalSylowModel& Co3Session::model() {
  if (!model_) model_ = std::make_unique<LocalSylowModel>(sylow2(context(), &sylow_report_));
  return *model_;
}

const std::vector<RadicalInstance>& Co3Session::instances() {
  if (!inst_) inst_ = instantiate_radicals(model());
  return *inst_;
}

const PointResidue& Co3Session::residue() {
  if (!residue_) residue_ = point_residue(context());
  return *residue_;
}

Report Co3Session::run(const std::string& suite) {
  Report rep;
  if (suite == "all") {
    for (const auto& s : co3_suite_names()) rep.append(run(s));
    return rep;
  }
  if (suite == "calibrate") {
    context();
    rep.append(calibrate_report_);
    rep.append(involution_classes(context(), model()));
  } else if (suite == "sylow") {
    model();
    rep.append(sylow_report_);
  } else if (suite == "prop43") {
    rep.append(prop43_structures(model()));
  } else if (suite == "table1") {
    rep.append(verify_table1(context(), model(), instances()));
  } else if (suite == "table2") {
    rep.append(table2_orbits(context(), model(), instances()));
    rep.append(cone_facts(model(), instances()));
    rep.append(prop51_check(context(), model(), instances()));
    rep.append(step_justifications(model(), instances()));
  } else if (suite == "axioms") {
    rep.append(geometry_axioms(context(), model(), residue()));
    rep.append(borel_tits_checks(context(), model(), residue(), instances()));
  } else if (suite == "euler") {
    rep.append(euler_divisibility(context(), model()));
  } else if (suite == "delta-fixed") {
    rep.append(delta_fixed_report(context(), residue()));
  } else {
    throw InputError("unknown suite '" + suite + "'");
  }
  return rep;
}

namespace {

std::string vec_string(const std::vector<long long>& v) { return printable(v); }

std::vector<long long> trimmed(std::vector<long long> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

TypedComplex simplex_complex(std::size_t n, bool hollow) {
  TypedComplex c;
  c.add_type("v");
  Simplex all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(c.add_vertex(0));
  if (!hollow) {
    c.add_simplex(all);
    return c;
  }
  for (std::size_t k = 0; k < n; ++k) {
    Simplex f;
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) f.push_back(all[j]);
    c.add_simplex(f);
  }
  return c;
}

TypedComplex random_complex(Rng& rng, std::size_t n, std::size_t facets) {
  TypedComplex c;
  c.add_type("v");
  for (std::size_t i = 0; i < n; ++i) c.add_vertex(0);
  for (std::size_t f = 0; f < facets; ++f) {
    const std::size_t k = 1 + uniform_index(rng, 4);
    std::set<VertexId> s;
    while (s.size() < k) s.insert(static_cast<VertexId>(uniform_index(rng, n)));
    c.add_simplex(Simplex(s.begin(), s.end()));
  }
  return c;
}

}  // namespace

Report small_group_suite(const std::string& golden_dir) {
  Report rep;
  for (const std::string name : {"S4", "S5", "GL32"}) {
    Stopwatch sw;
    FiniteGroup g(small_group(name));
    const auto lat = p_subgroups(g, 2);
    const auto table = class_table_json(name, lat);
    std::ifstream in(golden_dir + "/" + name + ".json");
    if (!in) throw InputError("missing golden file " + golden_dir + "/" + name + ".json");
    const auto golden = nlohmann::json::parse(in, nullptr, false);
    if (golden.is_discarded()) throw InputError("golden file for " + name + " is not valid JSON");
    rep.check("small_groups." + name + ".golden", "2-subgroup class table", table == golden,
              "golden file", table == golden ? "identical" : "differs", sw.ms());

    sw.reset();
    const auto a = quillen_poset(g, lat), b = bouc_poset(g, lat);
    const auto h = homotopy_compare(a, b);
    rep.check("small_groups." + name + ".quillen_vs_bouc", "Quillen and Bouc complexes have equal F2 Betti numbers",
              h.equal, vec_string(h.betti_a), vec_string(h.betti_b) + " (" + h.note + ")",
              sw.ms());

    if (name == "S4") {
      sw.reset();
      auto oc = order_complex(b.poset);
      const auto original = oc;
      auto r = greedy_collapse(oc);
      auto again = original;
      bool replay_ok = false;
      try {
        replay_ok = replay_schedule(again, r.certificate.steps).terminal_hash == r.certificate.terminal_hash;
      } catch (const ComplexError&) {
      }
      rep.check("small_groups.S4.bouc_contractible", "Bouc complex of S4 collapses to a point",
                r.reached_point && replay_ok, "certificate to one vertex, replayable",
                std::to_string(r.certificate.steps.size()) + " collapses, terminal size " +
                    std::to_string(r.certificate.terminal_size) + (replay_ok ? ", replayed" : ", replay failed"),
                sw.ms());
      rep.expect("small_groups.S4.bouc_shape", "one normal four-group under three Sylow subgroups", "4 vertices, 3 edges",
                 std::to_string(original.f_vector().at(0)) + " vertices, " +
                     std::to_string(original.f_vector().size() > 1 ? original.f_vector()[1] : 0) + " edges");
    }
    if (name == "GL32") {
      auto oc = order_complex(b.poset);
      const auto betti = oc.betti().reduced;
      rep.expect("small_groups.GL32.bouc_euler", "reduced Euler characteristic of the Bouc complex", -8,
                 oc.euler_reduced());
      rep.expect("small_groups.GL32.bouc_betti", "reduced Betti numbers of the Bouc complex", "{0,8}",
                 vec_string(trimmed(betti)));
    }
  }
  return rep;
}

Report engine_properties(std::uint64_t seed, std::size_t complexes) {
  Report rep;
  auto rng = make_rng(seed);
  Stopwatch sw;
  std::size_t preserved = 0, euler_ok = 0, replayed = 0;
  std::vector<std::uint64_t> hashes;
  for (std::size_t k = 0; k < complexes; ++k) {
    auto c = random_complex(rng, 8, 7);
    const auto original = c;
    const auto before = c.betti();
    long long alt = 0;
    for (std::size_t i = 0; i < before.reduced.size(); ++i) alt += (i % 2 ? -1 : 1) * before.reduced[i];
    euler_ok += alt == c.euler_reduced();
    auto r = greedy_collapse(c);
    preserved += trimmed(before.reduced) == trimmed(c.betti().reduced);
    auto again = original;
    try {
      replayed += replay_schedule(again, r.certificate.steps).terminal_hash == r.certificate.terminal_hash;
    } catch (const ComplexError&) {
    }
    hashes.push_back(r.certificate.terminal_hash);
  }
  const auto n = std::to_string(complexes);
  rep.check("engine.collapse_preserves_homology", "collapses keep F2 homology", preserved == complexes, n,
            std::to_string(preserved), sw.ms());
  rep.check("engine.betti_vs_euler", "alternating Betti sum equals face count", euler_ok == complexes, n,
            std::to_string(euler_ok));
  rep.check("engine.certificate_replay", "certificates replay to identical terminal hashes", replayed == complexes, n,
            std::to_string(replayed));

  sw.reset();
  std::size_t cones_ok = 0;
  for (std::size_t k = 0; k < 20; ++k) {
    auto base = random_complex(rng, 7, 6);
    TypedComplex cone;
    cone.add_type("v");
    for (std::size_t i = 0; i <= base.vertex_count(); ++i) cone.add_vertex(0);
    const auto apex = static_cast<VertexId>(base.vertex_count());
    cone.add_simplex({apex});
    for (auto m : base.maximal_simplices()) {
      m.push_back(apex);
      cone.add_simplex(m);
    }
    const auto red = cone.betti().reduced;
    cones_ok += cone.is_cone().has_value() &&
                std::all_of(red.begin(), red.end(), [](auto x) { return x == 0; });
  }
  rep.check("engine.cone_trivial_homology", "a detected cone has zero reduced homology", cones_ok == 20, "20",
            std::to_string(cones_ok), sw.ms());

  // rerun with the same seed
  auto rng2 = make_rng(seed);
  bool same = true;
  for (std::size_t k = 0; k < complexes; ++k) {
    auto c = random_complex(rng2, 8, 7);
    same &= greedy_collapse(c).certificate.terminal_hash == hashes[k];
  }
  rep.check("engine.seed_reproducible", "same seed, same certificates", same, "identical", same ? "identical" : "differ");
  return rep;
}

Report selftest_suite() {
  Report rep;
  {
    Poset chain(3);
    chain.set_less(0, 1);
    chain.set_less(1, 2);
    chain.close();
    rep.expect("selftest.chain", "chain of three: one 2-simplex", 0, order_complex(chain).euler_reduced());
    Poset anti(4);
    anti.close();
    rep.expect("selftest.antichain", "antichain of four points", 3, order_complex(anti).euler_reduced());
  }
  {
    auto hollow = simplex_complex(3, true);
    rep.expect("selftest.circle_betti", "hollow triangle", "{0,1}", vec_string(hollow.betti().reduced));
    const auto size = hollow.size();
    auto r = greedy_collapse(hollow);
    rep.check("selftest.circle_stuck", "greedy collapse of a circle gets stuck on itself",
              !r.reached_point && hollow.size() == size, "stuck core of " + std::to_string(size),
              (r.reached_point ? "collapsed" : "stuck") + std::string(" core of ") + std::to_string(hollow.size()));
    auto full = simplex_complex(5, false);
    const bool point = greedy_collapse(full).reached_point;
    rep.check("selftest.simplex_collapses", "full 4-simplex collapses", point, "single vertex",
              std::to_string(full.size()) + " simplex left");
  }
  {
    TypedComplex two;
    two.add_type("v");
    for (int i = 0; i < 3; ++i) two.add_vertex(0);
    two.add_simplex({0, 1});
    two.add_simplex({2});
    bool refused = false;
    try {
      remove_star_if_cone(two, 2);
    } catch (const ComplexError&) {
      refused = true;
    }
    rep.check("selftest.isolated_vertex", "empty residue is not a cone", refused, "refused",
              refused ? "refused" : "removed");
  }
  rep.expect("selftest.single_orbit", "one fixed vertex orbit", "0",
             int128_to_string(euler_by_orbit_counting({{"p", 1, 60}}, 60)));
  rep.expect("selftest.fano_orbits", "Fano building from stabilizers", "-8",
             int128_to_string(euler_by_orbit_counting({{"p", 1, 24}, {"l", 1, 24}, {"pl", 2, 8}}, 168)));
  {
    FiniteGroup c2(small_group("C2"));
    rep.expect("selftest.c2_subgroups", "2-subgroup classes of C2", 2, p_subgroups(c2, 2).classes.size());
    FiniteGroup v4(small_group("C2xC2"));
    const auto lat = p_subgroups(v4, 2);
    rep.expect("selftest.four_group_quillen", "Quillen complex of the four-group is a cone", 0,
               order_complex(quillen_poset(v4, lat).poset).euler_reduced());
  }
  rep.expect("selftest.s4_order", "symmetric group of degree 4", "24", to_string(small_group("S4").order()));
  return rep;
}

}  // namespace radgeo
