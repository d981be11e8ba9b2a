#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hashpim/crossbar.hpp"
#include "hashpim/scheduler.hpp"

namespace hashpim::testing {

// Three full column groups of 40 plus 10 spare columns; two full row groups of 64 plus 22 spare rows.
inline CrossbarConfig small_config() {
  CrossbarConfig c;
  c.rows = 150;
  c.cols = 130;
  c.vertical_partitions = 2;
  c.unit_rows = 64;
  c.horizontal_partitions = 3;
  c.unit_cols = 40;
  return c;
}

inline void randomize(Crossbar& xb, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& cfg = xb.config();
  BitMatrix m(cfg.rows, cfg.cols);
  for (std::uint32_t r = 0; r < cfg.rows; ++r)
    for (std::uint32_t c = 0; c < cfg.cols; ++c) m.set(r, c, rng() & 1);
  xb.write_region({0, cfg.rows}, {0, cfg.cols}, m);
}

inline constexpr MacroKind kAllKinds[] = {MacroKind::Xor2, MacroKind::Mux,  MacroKind::Copy,
                                   MacroKind::Not,  MacroKind::Nor2, MacroKind::Nor3,
                                   MacroKind::Or2,  MacroKind::And2, MacroKind::Init0,
                                   MacroKind::Init1};

// Random stream over the small grid. Each group uses one orientation; operands
// sit at offsets 0..29 of a partition and scratch at 30..39, so macros in a
// group touch disjoint cells unless they share the same partition and lines,
// which the generator rules out explicitly.
inline OpStream random_stream(std::mt19937_64& rng, const PartitionMap& map) {
  OpStream s;
  const int groups = 1 + rng() % 4;
  for (int g = 0; g < groups; ++g) {
    std::vector<std::uint32_t> pool;
    for (std::uint32_t p = 30; p < 40; ++p) pool.push_back(p);
    s.barrier(pool);
    const Orientation o = (rng() & 1) ? Orientation::InRow : Orientation::InColumn;
    const bool in_row = o == Orientation::InRow;
    std::set<std::pair<std::uint32_t, std::uint32_t>> reads, writes;  // (line, position)
    const int macros = 1 + rng() % 6;
    for (int m = 0; m < macros; ++m) {
      const MacroKind k = kAllKinds[rng() % std::size(kAllKinds)];
      const std::uint32_t pgroup = rng() % 2;  // row groups 0-1 / column groups 0-2 are full size
      const std::uint32_t pgroups = in_row ? 3 : 2;
      const std::uint32_t origin = in_row ? map.col_group_begin(pgroup % pgroups)
                                          : map.row_group_begin(pgroup % pgroups);
      std::vector<std::uint32_t> offs(30);
      std::iota(offs.begin(), offs.end(), 0);
      std::shuffle(offs.begin(), offs.end(), rng);
      // occasionally reach one operand into the next partition
      const bool span = (rng() % 5 == 0) && (in_row || pgroup == 0);
      MacroOp op;
      op.kind = k;
      op.orientation = o;
      op.scratch_origin = origin;
      for (std::size_t i = 0; i < macro_arity(k); ++i) op.inputs[i] = origin + offs[i];
      if (span && macro_arity(k) > 0) op.inputs[0] = origin + (in_row ? 40 : 64) + offs[0];
      op.output = origin + offs[macro_arity(k)];
      if (macro_scratch(k) > 0 && macro_arity(k) > 0 && (rng() & 1)) op.output = op.inputs[1 % macro_arity(k)];
      const std::uint32_t across = in_row ? map.rows() : map.cols();
      const std::uint32_t first = rng() % across;
      std::vector<std::uint32_t> lines;
      for (std::uint32_t l = first; l < std::min(across, first + 1 + std::uint32_t(rng() % 80)); ++l)
        if (rng() % 3) lines.push_back(l);
      if (lines.empty()) lines.push_back(first);
      op.lines = LineSet::of(lines);
      op.label = static_cast<Step>(rng() % 5);

      bool ok = true;
      for (auto l : lines) {
        for (std::size_t i = 0; i < macro_arity(k); ++i) ok = ok && !writes.count({l, op.inputs[i]});
        ok = ok && !writes.count({l, op.output}) && !reads.count({l, op.output});
      }
      if (!ok) continue;
      for (auto l : lines) {
        for (std::size_t i = 0; i < macro_arity(k); ++i) reads.insert({l, op.inputs[i]});
        writes.insert({l, op.output});
      }
      s.add(op);
    }
  }
  return s;
}

}  // namespace hashpim::testing
