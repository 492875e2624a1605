#include <set>

#include "doctest.h"
#include "nls2d/config.hpp"

using namespace nls2d;

TEST_CASE("preset catalogue") {
  const auto ps = presets();
  CHECK(ps.size() == 11);
  std::set<std::string> names;
  for (const auto& p : ps) {
    names.insert(p.preset_name);
    CHECK_NOTHROW(p.validate());
    if (p.preset_name == "convergence") continue;
    CHECK(p.n_inner == 100);
    CHECK(p.n_outer == 101);
    CHECK(p.m == 128);
    CHECK(p.l_y == 3.0);
    CHECK(p.n_t == 1000);
    CHECK(p.t_end == 0.5);
  }
  CHECK(names.size() == 11);
  for (const char* n : {"convergence", "elliptic-gauss-0-plus", "elliptic-gauss-0-minus", "elliptic-gauss-m1-plus",
                        "elliptic-gauss-m1-minus", "elliptic-mod-0.9", "elliptic-mod-1.1", "hyperbolic-gauss-0-plus",
                        "hyperbolic-gauss-0-minus", "hyperbolic-gauss-m1-plus", "hyperbolic-gauss-m1-minus"})
    CHECK(names.count(n) == 1);

  const RunConfig conv = *find_preset("convergence");
  CHECK(conv.study == Study::convergence);
  CHECK(conv.n_inner == 80);
  CHECK(conv.n_outer == 75);
  CHECK(conv.convergence_nt == std::vector<int>{100, 200, 400, 800, 1500});

  const RunConfig b = *find_preset("elliptic-mod-1.1");
  CHECK(b.initial.kind == InitialKind::modulated);
  CHECK(b.initial.sigma == 1.1);
  CHECK(b.snapshot_times == std::vector<Real>{0, 0.134, 0.268, 0.4});

  const RunConfig h = *find_preset("hyperbolic-gauss-m1-minus");
  CHECK(h.kappa == -1);
  CHECK(h.initial.x_c == -1);
  CHECK(h.initial.c == Complex(-0.1, 0));
  CHECK_FALSE(find_preset("elliptic-gauss-x0-minus"));
}

TEST_CASE("serialisation round trip preserves every field") {
  for (const auto& p : presets()) {
    const RunConfig back = parse_config(serialize(p));
    CHECK(serialize(back) == serialize(p));
    CHECK(config_hash(back) == config_hash(p));
  }
  RunConfig c;
  c.x0 = 0.1 + 0.2;  // not exactly representable in short decimal form
  c.energy_mode = EnergyMode::far_field_subtract;
  c.snapshot_times = {0, 1.0 / 3};
  c.t_end = 1;
  const RunConfig back = parse_config(serialize(c));
  CHECK(back.x0 == c.x0);
  CHECK(back.snapshot_times[1] == c.snapshot_times[1]);
  CHECK(back.energy_mode == EnergyMode::far_field_subtract);
}

TEST_CASE("hash ignores the output directory and tracks everything else") {
  RunConfig a = *find_preset("elliptic-mod-0.9");
  RunConfig b = a;
  b.output_dir = "/somewhere/else";
  CHECK(config_hash(a) == config_hash(b));
  CHECK(config_hash_hex(a).size() == 16);
  b.initial.sigma = 0.9000000000000001;
  CHECK(config_hash(a) != config_hash(b));
  b = a;
  b.energy_mode = EnergyMode::far_field_subtract;
  CHECK(config_hash(a) != config_hash(b));
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_config("bogus_key: 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("n_t: ten"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("n_t: 10.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("x0 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("initial_kind: soliton"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("energy_mode: other"), std::invalid_argument);
  CHECK_THROWS_AS(load_config("/nonexistent/file.cfg"), std::runtime_error);
  const RunConfig c = parse_config("# comment\n\n  kappa: -1  \nsnapshot_times: 0, 0.25\n");
  CHECK(c.kappa == -1);
  CHECK(c.snapshot_times.size() == 2);
}

TEST_CASE("validation names the violated constraint") {
  auto message = [](const RunConfig& c) {
    try {
      c.validate();
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  RunConfig c;
  c.n_outer = 100;
  CHECK(message(c).find("n_outer") != std::string::npos);
  c = RunConfig{};
  c.kappa = 2;
  CHECK(message(c).find("kappa") != std::string::npos);
  c = RunConfig{};
  c.m = 7;
  CHECK(message(c).find("m must") != std::string::npos);
  c = RunConfig{};
  c.snapshot_times = {0.7};
  CHECK(message(c).find("snapshot") != std::string::npos);
  c = RunConfig{};
  c.study = Study::convergence;
  c.convergence_nt = {100};
  CHECK(message(c).find("convergence") != std::string::npos);
  c = RunConfig{};
  c.initial.kind = InitialKind::modulated;
  c.initial.sigma = -1;
  CHECK_FALSE(message(c).empty());
  CHECK(message(RunConfig{}).empty());
}
