#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hashpim/crossbar.hpp"
#include "hashpim/errors.hpp"
#include "hashpim/scheduler.hpp"
#include "random_streams.hpp"

using namespace hashpim;
using namespace hashpim::testing;

namespace {

void put(Crossbar& xb, std::uint32_t r, std::uint32_t c, bool v) {
  BitMatrix m(1, 1);
  m.set(0, 0, v);
  xb.write_region({r, r + 1}, {c, c + 1}, m);
}

bool macro_eval(MacroKind k, bool a, bool b, bool c) {
  switch (k) {
    case MacroKind::Xor2: return a != b;
    case MacroKind::Mux: return a ? b : c;
    case MacroKind::Copy: return a;
    case MacroKind::Not: return !a;
    case MacroKind::Nor2: return !(a || b);
    case MacroKind::Nor3: return !(a || b || c);
    case MacroKind::Or2: return a || b;
    case MacroKind::And2: return a && b;
    case MacroKind::Init0: return false;
    case MacroKind::Init1: return true;
  }
  return false;
}

}  // namespace

TEST_CASE("every macro expansion matches its truth table") {
  for (MacroKind k : kAllKinds) {
    CAPTURE(macro_name(k));
    for (int combo = 0; combo < 8; ++combo) {
      const bool a = combo & 1, b = combo & 2, c = combo & 4;
      for (bool in_place : {false, true}) {
        if (in_place && (macro_scratch(k) == 0 || macro_arity(k) == 0)) continue;
        Crossbar xb{small_config()};
        randomize(xb, combo);
        put(xb, 3, 1, a);
        put(xb, 3, 2, b);
        put(xb, 3, 3, c);
        std::array<std::uint32_t, 3> in{1, 2, 3};
        MacroOp m;
        m.kind = k;
        m.orientation = Orientation::InRow;
        m.inputs = in;
        m.output = in_place ? in[macro_arity(k) - 1] : 10;
        m.lines = LineSet::single(3);
        const std::uint32_t scratch[] = {20, 21};
        const auto ops = expand(m, scratch);
        for (const auto& op : ops) {
          CycleBundle b;
          b.ops = {op};
          xb.execute(b);
        }
        CHECK(xb.grid().get(3, m.output) == macro_eval(k, a, b, c));
        CHECK(ops.size() == (k == MacroKind::Init0 || k == MacroKind::Init1 ? 1u
                             : macro_scratch(k) == 0                        ? 2u
                             : k == MacroKind::Copy                         ? 4u
                                                                            : 8u));
      }
    }
  }
}

TEST_CASE("macro shapes") {
  CHECK_THROWS_AS(MacroOp::from_cells(MacroKind::Xor2, {{0, 0}, {1, 1}}, {0, 2}, Step::Other),
                  ShapeError);
  CHECK_THROWS_AS(MacroOp::row(MacroKind::Mux, {1, 2}, 3, LineSet::single(0), Step::Rho), ShapeError);
  const auto col = MacroOp::from_cells(MacroKind::Xor2, {{0, 4}, {1, 4}}, {2, 4}, Step::Theta);
  CHECK(col.orientation == Orientation::InColumn);
  CHECK(col.output == 2);
  CHECK(col.lines == LineSet::single(4));
  const auto row = MacroOp::from_cells(MacroKind::Mux, {{5, 0}, {5, 1}, {5, 2}}, {5, 3}, Step::Rho);
  CHECK(row.orientation == Orientation::InRow);
  CHECK(row.inputs == std::array<std::uint32_t, 3>{0, 1, 2});
}

TEST_CASE("25 column-parallel XOR2 macros collapse into one XOR's worth of cycles") {
  const PartitionMap map = PartitionMap::from_config(CrossbarConfig{});
  OpStream s;
  s.barrier({64, 65});
  for (std::uint32_t c = 0; c < 25; ++c)
    s.add(MacroOp::column(MacroKind::Xor2, {0, 1}, 2, LineSet::single(c), Step::Theta));
  const Program p = schedule(s, map);
  CHECK(p.cycles() == 8);  // 4 logic + 4 init
  CHECK(serialize(s, map).cycles() == 200);
  CHECK(bundles_per_label(p)[static_cast<std::size_t>(Step::Theta)] == 8);
  std::size_t execs = 0;
  for (const auto& b : p.bundles) execs += b.executions();
  CHECK(execs == 200);
}

TEST_CASE("a single NOT is one INIT1 bundle and one NOT bundle") {
  const PartitionMap map = PartitionMap::from_config(CrossbarConfig{});
  OpStream s;
  s.add(MacroOp::row(MacroKind::Not, {0}, 1, LineSet::single(0), Step::Chi));
  const Program p = schedule(s, map);
  REQUIRE(p.cycles() == 2);
  CHECK(p.bundles[0].ops[0].gate == Gate::Init1);
  CHECK(p.bundles[1].ops[0].gate == Gate::Not);
  CHECK(p.bundles[1].label == Step::Chi);
  CHECK(p.validated_for == map.fingerprint());
}

TEST_CASE("a barrier orders dependent macros") {
  Crossbar xb{small_config()};
  randomize(xb, 1);
  OpStream s;
  s.barrier({30, 31});
  s.add(MacroOp::row(MacroKind::Xor2, {0, 1}, 2, LineSet::range(0, 64), Step::Theta));
  s.barrier({30, 31});
  s.add(MacroOp::row(MacroKind::Xor2, {2, 3}, 4, LineSet::range(0, 64), Step::Theta));
  const Program p = schedule(s, xb.partitions());
  REQUIRE(p.cycles() == 16);
  // nothing of the second XOR lands in the first XOR's bundles
  for (std::size_t i = 0; i < 8; ++i)
    for (const auto& op : p.bundles[i].ops) CHECK(op.output != 4);
  const auto before = xb.grid();
  xb.run(p);
  for (std::uint32_t r = 0; r < 64; ++r) {
    const bool x = before.get(r, 0) != before.get(r, 1);
    CHECK(xb.grid().get(r, 2) == x);
    CHECK(xb.grid().get(r, 4) == (x != before.get(r, 3)));
  }
}

TEST_CASE("independent macros in different partitions share bundles") {
  const PartitionMap map = PartitionMap::from_config(CrossbarConfig{});
  OpStream s;
  s.barrier({25, 26});
  for (std::uint32_t u = 0; u < 27; ++u)
    s.add(MacroOp::row(MacroKind::Xor2, {37 * u, 37 * u + 1}, 37 * u + 2, LineSet::range(0, 64),
                       Step::Theta, 37 * u));
  CHECK(schedule(s, map).cycles() == 8);
}

TEST_CASE("scratch exhaustion raises an allocation error") {
  const PartitionMap map = PartitionMap::from_config(CrossbarConfig{});
  OpStream s;
  s.barrier({30, 31, 32});
  s.add(MacroOp::row(MacroKind::Xor2, {0, 1}, 2, LineSet::single(0), Step::Theta));
  s.add(MacroOp::row(MacroKind::Xor2, {3, 4}, 5, LineSet::single(0), Step::Theta));
  CHECK_THROWS_AS(schedule(s, map), AllocationError);
  OpStream t;
  t.barrier({});
  t.add(MacroOp::row(MacroKind::Copy, {0}, 1, LineSet::single(0), Step::Pi));
  CHECK_THROWS_AS(schedule(t, map), AllocationError);
  const std::uint32_t one[] = {7};
  CHECK_THROWS_AS(expand(MacroOp::row(MacroKind::Mux, {0, 1, 2}, 3, LineSet::single(0), Step::Rho), one),
                  AllocationError);
}

TEST_CASE("property: scheduled execution equals serial execution for 1000 random streams") {
  std::mt19937_64 rng(424242);
  const Crossbar proto{small_config()};
  const PartitionMap& map = proto.partitions();
  std::size_t illegal = 0;
  std::size_t packed_total = 0;
  std::size_t serial_total = 0;
  for (int t = 0; t < 1000; ++t) {
    const OpStream s = random_stream(rng, map);
    const Program packed = schedule(s, map);
    const Program serial = serialize(s, map);
    for (const auto& b : packed.bundles) illegal += check_bundle(map, b).legal() ? 0 : 1;
    Crossbar a{small_config()};
    Crossbar b{small_config()};
    randomize(a, t);
    randomize(b, t);
    a.run(packed);
    b.run(serial);
    CHECK(a.grid() == b.grid());
    CHECK(a.stats().gate_executions == b.stats().gate_executions);
    CHECK(packed.cycles() <= serial.cycles());
    packed_total += packed.cycles();
    serial_total += serial.cycles();
  }
  CHECK(illegal == 0);
  CHECK(packed_total < serial_total);
}
