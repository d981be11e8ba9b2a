#include "hashpim/keccak/layout.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

#include "hashpim/errors.hpp"
#include "hashpim/keccak/params.hpp"

namespace hashpim::keccak {

CrossbarPlan::CrossbarPlan(const CrossbarConfig& config) : config_(config) {
  config.validate();
  if (config.unit_rows < UnitLayout::kRows || config.unit_cols < UnitLayout::kCols) {
    throw InputError("unit of " + std::to_string(config.unit_rows) + " x " +
                     std::to_string(config.unit_cols) + " cannot hold the " +
                     std::to_string(UnitLayout::kRows) + " x " + std::to_string(UnitLayout::kCols) +
                     " state and scratch area");
  }
  unit_rows_ = config.vertical_partitions;
  unit_cols_ = config.horizontal_partitions;
  unit_height_ = config.unit_rows;
  unit_width_ = config.unit_cols;
  if (std::uint64_t{unit_rows_} * unit_height_ + kRotBits > config.rows) {
    throw InputError("no room below the units for the " + std::to_string(kRotBits) +
                     " rotation-offset rows");
  }
  if (std::uint64_t{unit_cols_} * unit_width_ + kRounds > config.cols) {
    throw InputError("no room right of the units for the " + std::to_string(kRounds) +
                     " round-constant columns");
  }
}

UnitLayout CrossbarPlan::unit(std::uint32_t u) const {
  if (u >= unit_count()) throw AddressError("unit " + std::to_string(u) + " does not exist");
  return UnitLayout{row_origin(unit_row_of(u)), col_origin(unit_col_of(u))};
}

std::string CrossbarPlan::describe_json() const {
  using nlohmann::json;
  json lanes = json::array();
  for (unsigned y = 0; y < 5; ++y)
    for (unsigned x = 0; x < 5; ++x)
      lanes.push_back({{"x", x}, {"y", y}, {"col_offset", UnitLayout::lane(x, y)},
                       {"rotation", RotationTable::at(x, y)}});
  json rc = json::array();
  for (auto v : RoundConstants::values) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
    rc.push_back(buf);
  }
  json scratch_cols = json::object();
  for (unsigned x = 0; x < 5; ++x) {
    scratch_cols["C" + std::to_string(x)] = UnitLayout::cc(x);
    scratch_cols["D" + std::to_string(x)] = UnitLayout::dd(x);
  }
  scratch_cols["P"] = UnitLayout::kP;
  scratch_cols["Q"] = UnitLayout::kQ;
  json doc = {
      {"crossbar", {{"rows", config_.rows}, {"cols", config_.cols}}},
      {"unit", {{"rows", UnitLayout::kRows}, {"cols", UnitLayout::kCols},
                {"pitch_rows", unit_height_}, {"pitch_cols", unit_width_}}},
      {"units", {{"count", unit_count()}, {"unit_rows", unit_rows_}, {"unit_cols", unit_cols_}}},
      {"state", {{"bit_rows", "origin_row + z"}, {"lanes", lanes}}},
      {"scratch_columns", scratch_cols},
      {"scratch_rows",
       {{"spare_slice", UnitLayout::kSpare}, {"rot_bit", UnitLayout::kRotBit},
        {"rot_bit_complement", UnitLayout::kRotBitN}, {"t1", UnitLayout::kT1},
        {"t2", UnitLayout::kT2}, {"hold", UnitLayout::kHold}, {"hold2", UnitLayout::kHold2}}},
      {"rotation_block", {{"first_row", rot_row(0)}, {"rows", kRotBits}}},
      {"round_constant_block", {{"first_col", rc_col(0)}, {"cols", kRounds}}},
      {"round_constants", rc},
  };
  return doc.dump(2);
}

UnitSet::UnitSet(const CrossbarPlan& plan, std::vector<std::uint32_t> units)
    : plan_(&plan), units_(std::move(units)) {
  std::sort(units_.begin(), units_.end());
  units_.erase(std::unique(units_.begin(), units_.end()), units_.end());
  for (auto u : units_) {
    if (u >= plan.unit_count()) throw AddressError("unit " + std::to_string(u) + " does not exist");
  }
}

UnitSet UnitSet::all(const CrossbarPlan& plan) {
  std::vector<std::uint32_t> u(plan.unit_count());
  for (std::uint32_t i = 0; i < u.size(); ++i) u[i] = i;
  return UnitSet(plan, std::move(u));
}

std::vector<UnitSet::RowReplica> UnitSet::row_replicas(std::uint32_t lo, std::uint32_t hi) const {
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_col;
  for (auto u : units_) {
    auto& rows = by_col[plan_->unit_col_of(u)];
    const std::uint32_t r0 = plan_->row_origin(plan_->unit_row_of(u));
    for (std::uint32_t z = lo; z < hi; ++z) rows.push_back(r0 + z);
  }
  std::vector<RowReplica> out;
  for (auto& [uc, rows] : by_col) out.push_back({plan_->col_origin(uc), LineSet::of(rows)});
  return out;
}

std::vector<UnitSet::ColumnReplica> UnitSet::column_replicas(
    const std::vector<std::uint32_t>& col_offsets) const {
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_row;
  for (auto u : units_) {
    auto& cols = by_row[plan_->unit_row_of(u)];
    const std::uint32_t c0 = plan_->col_origin(plan_->unit_col_of(u));
    for (auto off : col_offsets) cols.push_back(c0 + off);
  }
  std::vector<ColumnReplica> out;
  for (auto& [ur, cols] : by_row) out.push_back({plan_->row_origin(ur), LineSet::of(cols)});
  return out;
}

LineSet UnitSet::active_columns(const std::vector<std::uint32_t>& col_offsets) const {
  std::set<std::uint32_t> ucs;
  for (auto u : units_) ucs.insert(plan_->unit_col_of(u));
  std::vector<std::uint32_t> cols;
  for (auto uc : ucs)
    for (auto off : col_offsets) cols.push_back(plan_->col_origin(uc) + off);
  return LineSet::of(cols);
}

LineSet UnitSet::active_rows(std::uint32_t lo, std::uint32_t hi) const {
  std::set<std::uint32_t> urs;
  for (auto u : units_) urs.insert(plan_->unit_row_of(u));
  std::vector<std::uint32_t> rows;
  for (auto ur : urs)
    for (std::uint32_t z = lo; z < hi; ++z) rows.push_back(plan_->row_origin(ur) + z);
  return LineSet::of(rows);
}

std::uint32_t UnitSet::top_unit_row() const {
  std::uint32_t top = plan_->unit_rows();
  for (auto u : units_) top = std::min(top, plan_->unit_row_of(u));
  return top;
}

std::uint32_t UnitSet::left_unit_col() const {
  std::uint32_t left = plan_->unit_cols();
  for (auto u : units_) left = std::min(left, plan_->unit_col_of(u));
  return left;
}

}  // namespace hashpim::keccak
