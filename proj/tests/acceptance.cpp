// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hashpim/keccak/engine.hpp"
#include "hashpim/metrics.hpp"
#include "hashpim/reference/oracle.hpp"
#include "hashpim/scheduler.hpp"
#include "keccak_fixtures.hpp"
#include "random_streams.hpp"

using namespace hashpim;
using namespace hashpim::keccak;
using namespace hashpim::testing;
namespace ref = hashpim::reference;

namespace {

constexpr double kPublishedCycles = 3494;
constexpr double kPublishedEnergyNj = 0.765;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void verdict(const char* id, const char* what, const Outcome& o) {
  std::printf("%s %s  %s: %s\n", id, o.pass ? "PASS" : "FAIL", what, o.detail.c_str());
  std::fflush(stdout);
  failures += o.pass ? 0 : 1;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Message random_message(std::mt19937_64& rng, std::size_t len) {
  Message m(len);
  for (auto& b : m) b = static_cast<std::uint8_t>(rng());
  return m;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Digests of one lockstep batch against the oracle; returns the mismatch count.
std::size_t mismatches(const std::vector<Message>& msgs, const std::vector<Digest>& got) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < msgs.size(); ++i) bad += got[i] != ref::sha3_256(msgs[i]);
  return bad;
}

Outcome digests() {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  std::mt19937_64 rng(20240601);

  Engine e{CrossbarConfig{}};
  const std::vector<Message> fixed{{}, Message{'a', 'b', 'c'}};
  const auto d = e.hash(fixed);
  const bool fixed_ok =
      ref::to_hex(d[0]) == "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a" &&
      ref::to_hex(d[1]) == "3a985da74fe225b2045c172d6bd390bd855f086e3e9d525b46bfe24511431532" &&
      mismatches(fixed, d) == 0;

  std::vector<Message> lengths;
  for (std::size_t len = 0; len <= 200; ++len) lengths.push_back(random_message(rng, len));
  Engine e2{CrossbarConfig{}};
  const std::size_t len_bad = mismatches(lengths, e2.hash(lengths));

  const std::vector<Message> big{random_message(rng, 1 << 20)};
  Engine e3{CrossbarConfig{}};
  const std::size_t big_bad = mismatches(big, e3.hash(big));

  std::vector<Message> full;
  for (int i = 0; i < 378; ++i) full.push_back(random_message(rng, rng() % 400));
  Engine e4{CrossbarConfig{}};
  const std::size_t full_bad = mismatches(full, e4.hash(full));

  o.pass = fixed_ok && len_bad == 0 && big_bad == 0 && full_bad == 0;
  o.detail = std::string("empty+abc ") + (fixed_ok ? "ok" : "WRONG") + ", lengths 0..200 " +
             std::to_string(len_bad) + " wrong, 1 MiB " + std::to_string(big_bad) + " wrong, 378 concurrent " +
             std::to_string(full_bad) + " wrong (" + fmt("%.1f s", seconds_since(t0)) + ")";
  return o;
}

Outcome steps() {
  std::mt19937_64 rng(777);
  Engine e{CrossbarConfig{}};
  auto batch = [&](const std::vector<std::uint32_t>& units, const OpStream& stream,
                   const std::function<ref::SoftState(const ref::SoftState&)>& oracle) {
    std::vector<LaneArray> in;
    for (auto u : units) {
      in.push_back(random_lanes(rng));
      e.write_state(u, in.back());
    }
    e.run(stream);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < units.size(); ++i) bad += e.read_state(units[i]) != from_soft(oracle(to_soft(in[i])));
    return bad;
  };
  std::vector<std::uint32_t> hundred(100);
  for (std::uint32_t i = 0; i < 100; ++i) hundred[i] = i * 3;  // spread over the grid
  const UnitSet set(e.plan(), hundred);

  std::string detail;
  bool pass = true;
  auto note = [&](const char* name, std::size_t bad) {
    detail += std::string(name) + " " + std::to_string(bad) + "/100 wrong, ";
    pass = pass && bad == 0;
  };
  note("theta", batch(hundred, theta(set), ref::theta));
  note("rho", batch(hundred, rho(set), ref::rho));
  note("pi", batch(hundred, pi(set), ref::pi));
  note("chi", batch(hundred, chi(set), ref::chi));
  std::size_t iota_bad = 0;
  for (unsigned r = 0; r < 24; ++r) {
    std::vector<std::uint32_t> units;
    for (std::uint32_t i = r; i < 100; i += 24) units.push_back(hundred[i]);
    iota_bad += batch(units, iota(UnitSet(e.plan(), units), r),
                      [r](const ref::SoftState& s) { return ref::iota(s, r); });
  }
  note("iota (all 24 rounds)", iota_bad);

  std::vector<std::uint32_t> lane_cols(25);
  for (std::uint32_t i = 0; i < 25; ++i) lane_cols[i] = i;
  std::size_t pairs = 0, rot_bad = 0;
  for (int b = 0; b < 2; ++b) {
    std::vector<std::array<std::uint8_t, 25>> offs(20);
    std::vector<LaneArray> lanes(20);
    std::vector<std::uint32_t> units(20);
    for (std::uint32_t u = 0; u < 20; ++u) {
      units[u] = u;
      for (auto& x : offs[u]) x = static_cast<std::uint8_t>(rng() % 64);
      e.write_rotation_offsets(u, offs[u]);
      lanes[u] = random_lanes(rng);
      e.write_state(u, lanes[u]);
    }
    e.run(variable_rotate(UnitSet(e.plan(), units), lane_cols));
    for (std::uint32_t u = 0; u < 20; ++u) {
      const LaneArray got = e.read_state(u);
      for (unsigned i = 0; i < 25; ++i, ++pairs) rot_bad += got[i] != ref::rotl(lanes[u][i], offs[u][i]);
    }
  }
  e.load_constants();
  pass = pass && rot_bad == 0 && pairs == 1000;
  detail += "rotation " + std::to_string(rot_bad) + "/" + std::to_string(pairs) + " pairs wrong";
  return {pass, detail};
}

struct RoundProfile {
  ExecutionStats stats;  // one permutation (24 rounds)
  std::size_t units = 0;
};

RoundProfile profile(std::size_t units) {
  Engine e{CrossbarConfig{}};
  std::vector<std::uint32_t> ids(units);
  for (std::uint32_t i = 0; i < units; ++i) ids[i] = i;
  const UnitSet set(e.plan(), ids);
  e.permute(set);  // schedule and cache first
  e.crossbar().reset_stats();
  e.permute(set);
  return {e.crossbar().stats(), units};
}

void print_table(const RoundProfile& one, const RoundProfile& full, double e_fj) {
  std::printf("    per round      cycles   gate execs/unit   energy/unit (nJ)   | 378 units: execs/unit   nJ/unit\n");
  auto row = [&](const char* name, const StepStats& a, const StepStats& b) {
    const double ea = static_cast<double>(a.gate_executions) / 24.0;
    const double eb = static_cast<double>(b.gate_executions) / 24.0 / static_cast<double>(full.units);
    std::printf("    %-10s %10.0f   %15.1f   %16.4f   | %20.1f   %7.4f\n", name,
                static_cast<double>(a.cycles) / 24.0, ea, ea * e_fj * 1e-6, eb, eb * e_fj * 1e-6);
  };
  for (Step s : kRoundSteps) row(std::string(step_name(s)).c_str(), one.stats.label(s), full.stats.label(s));
  row("total", one.stats.round_steps(), full.stats.round_steps());
}

Outcome cycles(const RoundProfile& one, const RoundProfile& full) {
  const double c1 = static_cast<double>(one.stats.round_steps().cycles) / 24.0;
  const double c378 = static_cast<double>(full.stats.round_steps().cycles) / 24.0;
  const double dev = (c1 - kPublishedCycles) / kPublishedCycles;
  return {std::abs(dev) <= 0.2 && c1 == c378,
          fmt("%.0f cycles/round", c1) + fmt(" (%+.1f%% vs 3494, limit 20%%)", dev * 100) +
              fmt(", lockstep %.0f", c378)};
}

Outcome energy(const RoundProfile& one, const RoundProfile& full, double e_fj) {
  const double per1 = static_cast<double>(one.stats.round_steps().gate_executions) / 24.0 * e_fj * 1e-6;
  const double perN = static_cast<double>(full.stats.round_steps().gate_executions) / 24.0 /
                      static_cast<double>(full.units) * e_fj * 1e-6;
  const double d1 = (per1 - kPublishedEnergyNj) / kPublishedEnergyNj;
  const double dN = (perN - kPublishedEnergyNj) / kPublishedEnergyNj;

  // energy is derived from the execution count alone, for every step and in total
  Engine e{CrossbarConfig{}};
  e.permute(UnitSet(e.plan(), {0, 1, 2}));
  const ExecutionStats& s = e.crossbar().stats();
  bool exact = e.crossbar().energy_fj() == static_cast<double>(s.gate_executions) * 6.4;
  double step_sum = 0;
  for (const auto& st : s.per_label) step_sum += static_cast<double>(st.gate_executions);
  exact = exact && step_sum == static_cast<double>(s.gate_executions);

  return {std::abs(d1) <= 0.2 && std::abs(dN) <= 0.2 && exact,
          fmt("single unit %.4f nJ", per1) + fmt(" (%+.1f%%)", d1 * 100) + fmt(", 378 lockstep %.4f nJ", perN) +
              fmt(" (%+.1f%%) vs 0.765 nJ", dN * 100) + ", energy = executions x 6.4 fJ " +
              (exact ? "exactly" : "NOT exactly")};
}

Outcome metrics_check() {
  using namespace hashpim::metrics;
  const auto one = compute(MetricsInput::published_constants(1));
  const auto two = compute(MetricsInput::published_constants(2));
  auto within = [](double got, double want) { return std::abs(got - want) / want <= 0.01; };
  const bool pass = within(one.tput_system / 1e9, 39.2) && within(two.tput_system / 1e9, 78.4) &&
                    within(one.tput_per_watt / 1e9, 1422) && within(two.tput_per_watt / 1e9, 1422);
  return {pass, fmt("1 crossbar %.2f Gbps", one.tput_system / 1e9) + fmt(", 2 crossbars %.2f Gbps", two.tput_system / 1e9) +
                    fmt(", %.1f Gbps/W", one.tput_per_watt / 1e9) + " (targets 39.2, 78.4, 1422, limit 1%)"};
}

Outcome packing() {
  const CrossbarPlan plan{CrossbarConfig{}};
  bool shapes = true;
  for (std::uint32_t u = 0; u < plan.unit_count(); ++u) {
    const UnitLayout l = plan.unit(u);
    shapes = shapes && l.origin_row == plan.row_origin(plan.unit_row_of(u)) && l.col(37) - l.col(0) == 37 &&
             l.row(72) - l.row(0) == 72;
  }
  const bool pass = plan.unit_count() == 378 && plan.unit_rows() == 14 && plan.unit_cols() == 27 && shapes;
  return {pass, std::to_string(plan.unit_count()) + " units of 72x37 in a " + std::to_string(plan.unit_rows()) + "x" +
                    std::to_string(plan.unit_cols()) + " grid on 1024x1024"};
}

Outcome scheduler() {
  std::mt19937_64 rng(99);
  const Crossbar proto{small_config()};
  const PartitionMap& map = proto.partitions();
  std::size_t illegal = 0, diverged = 0, bundles = 0, serial_cycles = 0;
  for (int t = 0; t < 1000; ++t) {
    const OpStream s = random_stream(rng, map);
    const Program packed = schedule(s, map);
    const Program serial = serialize(s, map);
    for (const auto& b : packed.bundles) illegal += check_bundle(map, b).legal() ? 0 : 1;
    Crossbar a{small_config()}, b{small_config()};
    randomize(a, t);
    randomize(b, t);
    a.run(packed);
    b.run(serial);
    diverged += a.grid() == b.grid() ? 0 : 1;
    bundles += packed.cycles();
    serial_cycles += serial.cycles();
  }
  return {illegal == 0 && diverged == 0,
          "1000 streams, " + std::to_string(diverged) + " diverged, " + std::to_string(illegal) + " illegal of " +
              std::to_string(bundles) + " bundles (serial " + std::to_string(serial_cycles) + ")"};
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  verdict("AC1", "digests", digests());
  verdict("AC2", "step equivalence", steps());

  const RoundProfile one = profile(1);
  const RoundProfile full = profile(378);
  print_table(one, full, 6.4);
  verdict("AC3", "cycles per round", cycles(one, full));
  verdict("AC4", "energy per round per unit", energy(one, full, 6.4));
  verdict("AC5", "metrics", metrics_check());
  verdict("AC6", "packing", packing());
  verdict("AC7", "scheduler legality", scheduler());
  std::printf("%s: %d of 7 criteria failed (%.1f s)\n", failures ? "FAIL" : "PASS", failures, seconds_since(t0));
  return failures ? 1 : 0;
}
