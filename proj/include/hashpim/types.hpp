#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace hashpim {

/// Primitive stateful-logic gates. Every gate takes one cycle.
enum class Gate : std::uint8_t { Init0, Init1, Not, Nor2, Nor3, Or2, And2 };

inline constexpr std::size_t kGateCount = 7;

constexpr std::size_t gate_arity(Gate g) {
  switch (g) {
    case Gate::Init0:
    case Gate::Init1:
      return 0;
    case Gate::Not:
      return 1;
    case Gate::Nor2:
    case Gate::Or2:
    case Gate::And2:
      return 2;
    case Gate::Nor3:
      return 3;
  }
  return 0;
}

constexpr std::string_view gate_name(Gate g) {
  switch (g) {
    case Gate::Init0: return "INIT0";
    case Gate::Init1: return "INIT1";
    case Gate::Not: return "NOT";
    case Gate::Nor2: return "NOR2";
    case Gate::Nor3: return "NOR3";
    case Gate::Or2: return "OR2";
    case Gate::And2: return "AND2";
  }
  return "?";
}

/// Truth table of a primitive gate on single bits; unused inputs are ignored.
constexpr bool gate_eval(Gate g, bool a, bool b, bool c) {
  switch (g) {
    case Gate::Init0: return false;
    case Gate::Init1: return true;
    case Gate::Not: return !a;
    case Gate::Nor2: return !(a || b);
    case Gate::Nor3: return !(a || b || c);
    case Gate::Or2: return a || b;
    case Gate::And2: return a && b;
  }
  return false;
}

/// In-row gates keep every operand in one row (and replicate over rows);
/// in-column gates keep every operand in one column.
enum class Orientation : std::uint8_t { InRow, InColumn };

constexpr std::string_view orientation_name(Orientation o) {
  return o == Orientation::InRow ? "row" : "column";
}

/// Accounting label attached to every bundle.
enum class Step : std::uint8_t { Theta, Rho, Pi, Chi, Iota, Absorb, Io, Other };

inline constexpr std::size_t kStepCount = 8;

constexpr std::string_view step_name(Step s) {
  switch (s) {
    case Step::Theta: return "theta";
    case Step::Rho: return "rho";
    case Step::Pi: return "pi";
    case Step::Chi: return "chi";
    case Step::Iota: return "iota";
    case Step::Absorb: return "absorb";
    case Step::Io: return "io";
    case Step::Other: return "other";
  }
  return "?";
}

/// The five steps of one Keccak-f round.
inline constexpr std::array<Step, 5> kRoundSteps{Step::Theta, Step::Rho, Step::Pi, Step::Chi,
                                                 Step::Iota};

struct Cell {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  friend constexpr bool operator==(const Cell&, const Cell&) = default;
};

}  // namespace hashpim
