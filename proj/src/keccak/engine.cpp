#include "hashpim/keccak/engine.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "hashpim/errors.hpp"

namespace hashpim::keccak {

namespace {

using U = UnitLayout;

BitMatrix lanes_matrix(const LaneArray& lanes, unsigned first_col, unsigned ncols,
                       const std::vector<unsigned>& lane_at_col) {
  BitMatrix m(U::kLaneBits, ncols);
  for (unsigned c = 0; c < ncols; ++c) {
    const std::uint64_t v = lanes[lane_at_col[first_col + c]];
    for (unsigned z = 0; z < U::kLaneBits; ++z) m.set(z, c, (v >> z) & 1);
  }
  return m;
}

std::vector<unsigned> state_col_to_lane() {
  std::vector<unsigned> v(25);
  for (unsigned x = 0; x < 5; ++x)
    for (unsigned y = 0; y < 5; ++y) v[U::lane(x, y)] = static_cast<unsigned>(lane_index(x, y));
  return v;
}

}  // namespace

Engine::Engine(const CrossbarConfig& config, const KeccakParams& params)
    : params_(params), plan_(config), xb_(config) {
  params_.validate();
  load_constants();
  xb_.reset_stats();
}

void Engine::load_constants() {
  std::array<std::uint8_t, 25> offsets{};
  for (unsigned x = 0; x < 5; ++x)
    for (unsigned y = 0; y < 5; ++y) offsets[lane_index(x, y)] = RotationTable::at(x, y);
  for (std::uint32_t uc = 0; uc < plan_.unit_cols(); ++uc) write_rotation_offsets(uc, offsets);

  BitMatrix rc(U::kLaneBits, CrossbarPlan::kRounds);
  for (unsigned i = 0; i < CrossbarPlan::kRounds; ++i)
    for (unsigned z = 0; z < U::kLaneBits; ++z) rc.set(z, i, (RoundConstants::values[i] >> z) & 1);
  for (std::uint32_t ur = 0; ur < plan_.unit_rows(); ++ur) {
    const std::uint32_t r0 = plan_.row_origin(ur);
    xb_.write_region({r0, r0 + U::kLaneBits}, {plan_.rc_col(0), plan_.rc_col(CrossbarPlan::kRounds)}, rc);
  }
}

void Engine::write_rotation_offsets(std::uint32_t unit_col,
                                    const std::array<std::uint8_t, 25>& offsets) {
  if (unit_col >= plan_.unit_cols()) throw AddressError("unit column out of range");
  BitMatrix m(CrossbarPlan::kRotBits, 25);
  for (unsigned x = 0; x < 5; ++x)
    for (unsigned y = 0; y < 5; ++y) {
      const unsigned v = offsets[lane_index(x, y)];
      if (v > 63) throw InputError("rotation offset above 63");
      for (unsigned j = 0; j < CrossbarPlan::kRotBits; ++j) m.set(j, U::lane(x, y), (v >> j) & 1);
    }
  const std::uint32_t c0 = plan_.col_origin(unit_col);
  xb_.write_region({plan_.rot_row(0), plan_.rot_row(CrossbarPlan::kRotBits)}, {c0, c0 + 25}, m);
}

void Engine::write_state(std::uint32_t unit, const LaneArray& lanes) {
  static const auto map = state_col_to_lane();
  const UnitLayout u = plan_.unit(unit);
  xb_.write_region({u.origin_row, u.row(U::kLaneBits)}, {u.origin_col, u.col(25)},
                   lanes_matrix(lanes, 0, 25, map));
}

LaneArray Engine::read_state(std::uint32_t unit) {
  static const auto map = state_col_to_lane();
  const UnitLayout u = plan_.unit(unit);
  const BitMatrix m = xb_.read_region({u.origin_row, u.row(U::kLaneBits)}, {u.origin_col, u.col(25)});
  LaneArray lanes{};
  for (unsigned c = 0; c < 25; ++c)
    for (unsigned z = 0; z < U::kLaneBits; ++z)
      if (m.get(z, c)) lanes[map[c]] |= std::uint64_t{1} << z;
  return lanes;
}

void Engine::run(const OpStream& stream) { xb_.run(schedule(stream, xb_.partitions())); }

const Engine::Programs& Engine::programs(const UnitSet& units) {
  auto& slot = cache_[units.units()];
  if (slot) return *slot;
  auto p = std::make_unique<Programs>();
  const PartitionMap& map = xb_.partitions();
  OpStream body = theta(units);
  body.append(rho(units));
  body.append(pi(units));
  body.append(chi(units));
  p->round_body = schedule(body, map);
  for (unsigned r = 0; r < CrossbarPlan::kRounds; ++r) p->iota[r] = schedule(iota(units, r), map);
  for (unsigned first = 0; first < params_.rate_lanes(); first += kStagingLanes) {
    std::vector<unsigned> batch;
    for (unsigned l = first; l < std::min(first + kStagingLanes, params_.rate_lanes()); ++l) batch.push_back(l);
    p->absorb.push_back(schedule(absorb_staged(units, batch), map));
  }
  slot = std::move(p);
  return *slot;
}

void Engine::permute(const UnitSet& units) {
  if (units.empty()) return;
  const Programs& p = programs(units);
  for (unsigned r = 0; r < CrossbarPlan::kRounds; ++r) {
    xb_.run(p.round_body);
    xb_.run(p.iota[r]);
  }
  rounds_ += CrossbarPlan::kRounds;
  unit_rounds_ += std::uint64_t{CrossbarPlan::kRounds} * units.size();
}

void Engine::absorb(const UnitSet& units, const std::vector<LaneArray>& blocks, bool first) {
  // blocks[i] belongs to units.units()[i]
  if (first) {
    for (std::size_t i = 0; i < blocks.size(); ++i) write_state(units.units()[i], blocks[i]);
    return;
  }
  const Programs& p = programs(units);
  unsigned batch = 0;
  for (unsigned first_lane = 0; first_lane < params_.rate_lanes(); first_lane += kStagingLanes, ++batch) {
    const unsigned n = std::min(kStagingLanes, params_.rate_lanes() - first_lane);
    std::vector<unsigned> lane_of_col(n);
    for (unsigned k = 0; k < n; ++k) lane_of_col[k] = first_lane + k;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const UnitLayout u = plan_.unit(units.units()[i]);
      xb_.write_region({u.origin_row, u.row(U::kLaneBits)}, {u.col(staging_col(0)), u.col(staging_col(n))},
                       lanes_matrix(blocks[i], 0, n, lane_of_col));
    }
    xb_.run(p.absorb[batch]);
  }
}

std::vector<Digest> Engine::hash(std::span<const Message> messages) {
  if (messages.size() > plan_.unit_count()) {
    throw CapacityError(std::to_string(messages.size()) + " messages exceed the " +
                        std::to_string(plan_.unit_count()) + " units of one crossbar");
  }
  std::vector<std::vector<std::vector<std::uint8_t>>> padded;
  padded.reserve(messages.size());
  std::size_t max_blocks = 0;
  for (const auto& m : messages) {
    padded.push_back(pad_message(m, params_));
    max_blocks = std::max(max_blocks, padded.back().size());
  }
  std::vector<Digest> out(messages.size());
  for (std::size_t b = 0; b < max_blocks; ++b) {
    std::vector<std::uint32_t> active;
    std::vector<LaneArray> blocks;
    for (std::uint32_t i = 0; i < padded.size(); ++i) {
      if (padded[i].size() > b) {
        active.push_back(i);
        blocks.push_back(block_lanes(padded[i][b], params_));
      }
    }
    const UnitSet units(plan_, active);
    absorb(units, blocks, b == 0);
    permute(units);
    for (auto i : active) {
      if (padded[i].size() == b + 1) out[i] = squeeze(read_state(i), params_);
    }
  }
  return out;
}

HashRun hash_messages(std::span<const Message> messages, const CrossbarConfig& config,
                      std::uint32_t crossbars, const KeccakParams& params,
                      std::span<TraceSink* const> traces) {
  if (crossbars == 0) throw InputError("crossbar count must be positive");
  const CrossbarPlan plan(config);
  const std::size_t per = plan.unit_count();
  if (messages.size() > per * crossbars) {
    throw CapacityError(std::to_string(messages.size()) + " messages exceed " +
                        std::to_string(crossbars) + " crossbar(s) x " + std::to_string(per) + " units");
  }
  HashRun run;
  run.units_per_crossbar = static_cast<std::uint32_t>(per);
  run.digests.resize(messages.size());
  const std::size_t used = messages.empty() ? 0 : (messages.size() + per - 1) / per;
  run.crossbars_used = static_cast<std::uint32_t>(used);
  run.crossbar_stats.resize(used);
  std::vector<std::uint64_t> rounds(used), unit_rounds(used);
  std::vector<std::exception_ptr> errors(used);
  {
    std::vector<std::jthread> workers;
    for (std::size_t x = 0; x < used; ++x) {
      workers.emplace_back([&, x] {
        try {
          const std::size_t lo = x * per;
          const std::size_t hi = std::min(messages.size(), lo + per);
          Engine e(config, params);
          if (x < traces.size()) e.crossbar().set_trace(traces[x]);
          const auto d = e.hash(messages.subspan(lo, hi - lo));
          std::copy(d.begin(), d.end(), run.digests.begin() + static_cast<std::ptrdiff_t>(lo));
          run.crossbar_stats[x] = e.crossbar().stats();
          rounds[x] = e.rounds();
          unit_rounds[x] = e.unit_rounds();
        } catch (...) {
          errors[x] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (std::size_t x = 0; x < used; ++x) {
    run.stats = x == 0 ? run.crossbar_stats[0] : ExecutionStats::merge_parallel(run.stats, run.crossbar_stats[x]);
    run.rounds = std::max(run.rounds, rounds[x]);
    run.unit_rounds += unit_rounds[x];
  }
  return run;
}

}  // namespace hashpim::keccak
