#include "hashpim/keccak/microcode.hpp"

#include <array>
#include <string>

#include "hashpim/errors.hpp"

namespace hashpim::keccak {

namespace {

using U = UnitLayout;

std::vector<std::uint32_t> lane_offsets() {
  std::vector<std::uint32_t> v(25);
  for (std::uint32_t i = 0; i < 25; ++i) v[i] = i;
  return v;
}

MacroOp macro(MacroKind k, Orientation o, std::initializer_list<std::uint32_t> in_offs,
              std::uint32_t out_off, std::uint32_t base, const LineSet& lines, Step label) {
  MacroOp m;
  m.kind = k;
  m.orientation = o;
  std::size_t i = 0;
  for (auto off : in_offs) m.inputs[i++] = base + off;
  m.output = base + out_off;
  m.lines = lines;
  m.label = label;
  m.scratch_origin = base;
  return m;
}

// One barrier group holding the macro replicated over every unit column
// (positions are column offsets, lines are the state rows).
struct RowEmitter {
  OpStream& s;
  std::vector<UnitSet::RowReplica> reps;
  Step label;

  void operator()(MacroKind k, std::initializer_list<std::uint32_t> in, std::uint32_t out,
                  std::vector<std::uint32_t> pool = {}) {
    s.barrier(std::move(pool));
    for (const auto& r : reps) s.add(macro(k, Orientation::InRow, in, out, r.col0, r.rows, label));
  }
};

// Same for in-column gates: positions are row offsets, lines the given columns
// of every unit row.
struct ColumnEmitter {
  OpStream& s;
  std::vector<UnitSet::ColumnReplica> reps;
  Step label;

  void operator()(MacroKind k, std::initializer_list<std::uint32_t> in, std::uint32_t out,
                  std::vector<std::uint32_t> pool = {}) {
    s.barrier(std::move(pool));
    for (const auto& r : reps) s.add(macro(k, Orientation::InColumn, in, out, r.row0, r.cols, label));
  }
};

constexpr unsigned prev(unsigned x) { return (x + 4) % 5; }
constexpr unsigned next(unsigned x) { return (x + 1) % 5; }

}  // namespace

OpStream theta(const UnitSet& units) {
  OpStream s;
  if (units.empty()) return s;
  RowEmitter row{s, units.row_replicas(0, U::kLaneBits), Step::Theta};
  const std::vector<std::uint32_t> d_pool{U::dd(0), U::dd(1)};

  // C[x] = A[x][0] ^ ... ^ A[x][4], accumulated in place
  for (unsigned x = 0; x < 5; ++x) {
    row(MacroKind::Xor2, {U::lane(x, 0), U::lane(x, 1)}, U::cc(x), d_pool);
    for (unsigned y = 2; y < 5; ++y) row(MacroKind::Xor2, {U::cc(x), U::lane(x, y)}, U::cc(x), d_pool);
  }
  // D column holds ~C; shifting it down by one row through NOTs restores C
  for (unsigned x = 0; x < 5; ++x) row(MacroKind::Not, {U::cc(x)}, U::dd(x));
  ColumnEmitter col{s, units.column_replicas({U::dd(0), U::dd(1), U::dd(2), U::dd(3), U::dd(4)}),
                    Step::Theta};
  col(MacroKind::Not, {U::kLaneBits - 1}, U::kHold);
  for (std::uint32_t z = U::kLaneBits - 1; z >= 1; --z) col(MacroKind::Not, {z - 1}, z);
  col(MacroKind::Not, {U::kHold}, U::kHold2);
  col(MacroKind::Not, {U::kHold2}, 0);
  // D[x] = C[x-1] ^ rot(C[x+1], 1), stored over C[x-1] (its last reader)
  for (unsigned x = 0; x < 5; ++x) {
    row(MacroKind::Xor2, {U::cc(prev(x)), U::dd(next(x))}, U::cc(prev(x)), {U::kP, U::kQ});
  }
  for (unsigned x = 0; x < 5; ++x)
    for (unsigned y = 0; y < 5; ++y)
      row(MacroKind::Xor2, {U::lane(x, y), U::cc(prev(x))}, U::lane(x, y), d_pool);
  return s;
}

OpStream variable_rotate(const UnitSet& units, const std::vector<std::uint32_t>& lane_cols,
                         Step label) {
  OpStream s;
  if (units.empty() || lane_cols.empty()) return s;
  const CrossbarPlan& plan = units.plan();
  ColumnEmitter col{s, units.column_replicas(lane_cols), label};
  const LineSet hop_cols = units.active_columns(lane_cols);
  const std::uint32_t last = plan.unit_rows() - 1;

  for (unsigned j = 0; j < CrossbarPlan::kRotBits; ++j) {
    // Offset bit j travels up from the shared block, one unit row per hop. The
    // copy's temporary is the complement row, so it arrives with ~bit for free.
    for (std::uint32_t ur = last + 1; ur-- > units.top_unit_row();) {
      const std::uint32_t src = ur == last ? plan.rot_row(j) : plan.row_origin(ur + 1) + U::kRotBit;
      const std::uint32_t r0 = plan.row_origin(ur);
      s.barrier({U::kRotBitN});
      MacroOp m;
      m.kind = MacroKind::Copy;
      m.orientation = Orientation::InColumn;
      m.inputs[0] = src;
      m.output = r0 + U::kRotBit;
      m.lines = hop_cols;
      m.label = label;
      m.scratch_origin = r0;
      s.add(m);
    }
    // new[z] = bit ? old[z - k] : old[z]. Rows z, z+k, z+2k, ... form a cycle;
    // walk each one downward in place, parking the tail in the spare slice.
    const std::uint32_t k = 1u << j;
    const std::uint32_t len = U::kLaneBits / k;
    for (std::uint32_t c = 0; c < k; ++c) {
      auto at = [&](std::uint32_t m) { return c + m * k; };
      col(MacroKind::Not, {at(len - 1)}, U::kSpare);
      for (std::uint32_t m = len - 1; m >= 1; --m) {
        col(MacroKind::And2, {at(m), U::kRotBitN}, U::kT1);
        col(MacroKind::And2, {at(m - 1), U::kRotBit}, U::kT2);
        col(MacroKind::Or2, {U::kT1, U::kT2}, at(m));
      }
      col(MacroKind::And2, {at(0), U::kRotBitN}, U::kT1);
      col(MacroKind::Nor2, {U::kSpare, U::kRotBitN}, U::kT2);  // tail & bit
      col(MacroKind::Or2, {U::kT1, U::kT2}, at(0));
    }
  }
  return s;
}

OpStream rho(const UnitSet& units) { return variable_rotate(units, lane_offsets(), Step::Rho); }

OpStream pi(const UnitSet& units) {
  OpStream s;
  if (units.empty()) return s;
  RowEmitter row{s, units.row_replicas(0, U::kLaneBits), Step::Pi};
  // source of each destination lane: (x, y) moves to (y, 2x + 3y)
  std::array<std::array<std::uint32_t, 5>, 5> src{};
  for (unsigned x = 0; x < 5; ++x)
    for (unsigned y = 0; y < 5; ++y) src[y][(2 * x + 3 * y) % 5] = U::lane(x, y);

  const std::uint32_t start = U::lane(1, 0);
  row(MacroKind::Copy, {start}, U::kP, {U::kQ});
  std::uint32_t cur = start;
  while (true) {
    const std::uint32_t from = src[cur / 5][cur % 5];
    if (from == start) {
      row(MacroKind::Copy, {U::kP}, cur, {U::kQ});
      break;
    }
    row(MacroKind::Copy, {from}, cur, {U::kQ});
    cur = from;
  }
  return s;
}

OpStream chi(const UnitSet& units) {
  OpStream s;
  if (units.empty()) return s;
  RowEmitter row{s, units.row_replicas(0, U::kLaneBits), Step::Chi};
  for (unsigned y = 0; y < 5; ++y) {
    for (unsigned x = 0; x < 5; ++x) row(MacroKind::Not, {U::lane(x, y)}, U::cc(x));
    // ~A[x+1] & A[x+2] == NOR(A[x+1], ~A[x+2])
    for (unsigned x = 0; x < 5; ++x)
      row(MacroKind::Nor2, {U::lane((x + 1) % 5, y), U::cc((x + 2) % 5)}, U::dd(x));
    for (unsigned x = 0; x < 5; ++x)
      row(MacroKind::Xor2, {U::lane(x, y), U::dd(x)}, U::lane(x, y), {U::kP, U::kQ});
  }
  return s;
}

OpStream iota(const UnitSet& units, unsigned round) {
  if (round >= CrossbarPlan::kRounds) {
    throw InputError("round " + std::to_string(round) + " is outside [0, 24)");
  }
  OpStream s;
  if (units.empty()) return s;
  const CrossbarPlan& plan = units.plan();
  const LineSet rows = units.active_rows(0, U::kLaneBits);
  const std::uint32_t last = plan.unit_cols() - 1;
  for (std::uint32_t uc = last + 1; uc-- > units.left_unit_col();) {
    const std::uint32_t src = uc == last ? plan.rc_col(round) : plan.col_origin(uc + 1) + U::kP;
    const std::uint32_t c0 = plan.col_origin(uc);
    s.barrier({U::kQ});
    MacroOp m;
    m.kind = MacroKind::Copy;
    m.orientation = Orientation::InRow;
    m.inputs[0] = src;
    m.output = c0 + U::kP;
    m.lines = rows;
    m.label = Step::Iota;
    m.scratch_origin = c0;
    s.add(m);
  }
  RowEmitter row{s, units.row_replicas(0, U::kLaneBits), Step::Iota};
  row(MacroKind::Xor2, {U::lane(0, 0), U::kP}, U::lane(0, 0), {U::cc(0), U::cc(1)});
  return s;
}

OpStream keccak_round(const UnitSet& units, unsigned round) {
  OpStream s = theta(units);
  s.append(rho(units));
  s.append(pi(units));
  s.append(chi(units));
  s.append(iota(units, round));
  return s;
}

OpStream keccak_f(const UnitSet& units) {
  OpStream s;
  for (unsigned r = 0; r < CrossbarPlan::kRounds; ++r) s.append(keccak_round(units, r));
  return s;
}

OpStream absorb_staged(const UnitSet& units, const std::vector<unsigned>& lanes) {
  if (lanes.size() > kStagingLanes) {
    throw InputError("at most " + std::to_string(kStagingLanes) + " lanes can be staged at once");
  }
  OpStream s;
  if (units.empty()) return s;
  RowEmitter row{s, units.row_replicas(0, U::kLaneBits), Step::Absorb};
  for (unsigned k = 0; k < lanes.size(); ++k) {
    if (lanes[k] >= 25) throw InputError("lane index " + std::to_string(lanes[k]) + " out of range");
    const std::uint32_t col = U::lane(lanes[k] % 5, lanes[k] / 5);
    row(MacroKind::Xor2, {col, staging_col(k)}, col, {U::kP, U::kQ});
  }
  return s;
}

}  // namespace hashpim::keccak
