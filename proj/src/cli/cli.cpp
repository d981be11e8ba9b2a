#include "hashpim/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hashpim/errors.hpp"
#include "hashpim/keccak/engine.hpp"
#include "hashpim/metrics.hpp"
#include "hashpim/reference/oracle.hpp"

namespace hashpim::cli {

namespace {

using keccak::Message;
using nlohmann::json;

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct HexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string source;
  Message bytes;
};

Message read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read file '" + path + "'");
  Message m((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw FileError("error while reading '" + path + "'");
  return m;
}

Message random_message(std::mt19937_64& rng, std::size_t len) {
  Message m(len);
  for (auto& b : m) b = static_cast<std::uint8_t>(rng());
  return m;
}

std::vector<Input> collect(const RunConfig& c, std::ostream& err) {
  std::vector<Input> in;
  for (const auto& t : c.texts) in.push_back({"text", Message(t.begin(), t.end())});
  for (const auto& h : c.hexes) {
    auto bytes = parse_hex(h);
    if (!bytes) throw HexError("malformed hex input '" + h + "'");
    in.push_back({"hex", std::move(*bytes)});
  }
  for (const auto& f : c.files) in.push_back({"file:" + f, read_file(f)});
  if (c.random_count > 0 || c.suite) {
    err << "random messages: mt19937_64 seed " << c.seed << "\n";
  }
  if (c.random_count > 0) {
    std::mt19937_64 rng(c.seed);
    for (std::uint32_t i = 0; i < c.random_count; ++i) in.push_back({"random", random_message(rng, c.random_len)});
  }
  if (c.suite) {
    in.push_back({"suite:empty", {}});
    in.push_back({"suite:abc", Message{'a', 'b', 'c'}});
    std::mt19937_64 rng(c.seed);
    for (std::size_t len = 0; len <= 200; ++len) in.push_back({"suite:len" + std::to_string(len), random_message(rng, len)});
  }
  return in;
}

json step_json(const StepStats& s, double e_fj) {
  return {{"cycles", s.cycles},
          {"gate_executions", s.gate_executions},
          {"energy_fj", static_cast<double>(s.gate_executions) * e_fj}};
}

json stats_json(const ExecutionStats& st, double e_fj) {
  json per = json::object();
  for (std::size_t i = 0; i < kStepCount; ++i) {
    per[std::string(step_name(static_cast<Step>(i)))] = step_json(st.per_label[i], e_fj);
  }
  return {{"cycles", st.cycles},
          {"gate_executions", st.gate_executions},
          {"energy_fj", st.energy_fj(e_fj)},
          {"per_step", per}};
}

json metrics_json(const metrics::MetricsInput& in, const metrics::MetricsReport& r) {
  return {{"input",
           {{"f_hz", in.f_hz},
            {"r_bits", in.r_bits},
            {"latency_round_cycles", in.latency_round},
            {"energy_unit_j", in.energy_unit},
            {"units_per_crossbar", in.units_per_crossbar},
            {"crossbars", in.crossbars},
            {"cell_area_f2", in.cell_area_f2},
            {"crossbar_cells", in.crossbar_cells}}},
          {"tput_unit_bps", r.tput_unit},
          {"tput_system_bps", r.tput_system},
          {"power_system_w", r.power_system},
          {"tput_per_watt_bps", r.tput_per_watt},
          {"tput_per_area_bps_per_f2", r.tput_per_area}};
}

void print_metrics(std::ostream& out, std::string_view source, const metrics::MetricsReport& r) {
  out << std::fixed << std::setprecision(2);
  out << "metrics (" << source << ")\n";
  out << "  throughput per unit    " << r.tput_unit / 1e6 << " Mbps\n";
  out << "  system throughput      " << r.tput_system / 1e9 << " Gbps\n";
  out << "  power                  " << r.power_system * 1e3 << " mW\n";
  out << "  throughput per watt    " << r.tput_per_watt / 1e9 << " Gbps/W\n";
  out << "  throughput per area    " << r.tput_per_area << " bps/F^2\n";
  out << "  for comparison:\n";
  for (const auto& d : metrics::kReferenceDesigns) {
    out << "    " << std::left << std::setw(10) << d.name << std::right << " " << d.tput_gbps << " Gbps, ";
    if (d.tput_per_watt_gbps) out << *d.tput_per_watt_gbps << " Gbps/W, ";
    out << d.tput_per_area << " bps/F^2\n";
  }
  out.unsetf(std::ios::floatfield);
}

int run_checked(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (!c.has_messages() && !c.dump_layout && !(c.metrics && c.published_constants)) {
    err << "error: nothing to do; give --text, --hex, --file, --random, --suite, --dump-layout "
           "or --paper-constants --metrics\n";
    return kUsage;
  }
  if (c.metrics && !c.published_constants && !c.has_messages()) {
    err << "error: --metrics needs messages to measure, or --paper-constants\n";
    return kUsage;
  }
  if (c.crossbars == 0) {
    err << "error: --crossbars must be positive\n";
    return kUsage;
  }
  c.crossbar.validate();
  const keccak::CrossbarPlan plan(c.crossbar);
  if (c.dump_layout) out << plan.describe_json() << "\n";

  const std::vector<Input> inputs = collect(c, err);
  std::vector<Message> messages;
  messages.reserve(inputs.size());
  for (const auto& i : inputs) messages.push_back(i.bytes);

  json report = {{"schema_version", kReportSchemaVersion}};
  report["config"] = {{"rows", c.crossbar.rows},
                      {"cols", c.crossbar.cols},
                      {"horizontal_partitions", c.crossbar.horizontal_partitions},
                      {"vertical_partitions", c.crossbar.vertical_partitions},
                      {"unit_rows", c.crossbar.unit_rows},
                      {"unit_cols", c.crossbar.unit_cols},
                      {"gate_delay_ns", c.crossbar.gate_delay_ns},
                      {"gate_energy_fj", c.crossbar.gate_energy_fj},
                      {"strict_init", c.crossbar.strict_init},
                      {"crossbars", c.crossbars}};
  if (c.random_count > 0 || c.suite) report["config"]["seed"] = c.seed;

  bool all_ok = true;
  keccak::HashRun hashed;
  if (!messages.empty()) {
    std::vector<std::unique_ptr<std::ofstream>> files;
    std::vector<std::unique_ptr<TraceSink>> sinks;
    std::vector<TraceSink*> sink_ptrs;
    if (!c.trace_path.empty()) {
      const std::uint32_t per = plan.unit_count();
      const std::size_t used = (messages.size() + per - 1) / per;
      for (std::size_t x = 0; x < used; ++x) {
        const std::string path = x == 0 ? c.trace_path : c.trace_path + "." + std::to_string(x);
        files.push_back(std::make_unique<std::ofstream>(path));
        if (!*files.back()) throw FileError("cannot write trace file '" + path + "'");
        sinks.push_back(std::make_unique<TraceSink>(*files.back()));
        sink_ptrs.push_back(sinks.back().get());
      }
    }
    hashed = keccak::hash_messages(messages, c.crossbar, c.crossbars, {}, sink_ptrs);

    json msgs = json::array();
    for (std::size_t i = 0; i < messages.size(); ++i) {
      const auto want = reference::sha3_256(messages[i]);
      const bool ok = std::equal(want.begin(), want.end(), hashed.digests[i].begin());
      all_ok = all_ok && ok;
      const std::string hex = reference::to_hex(hashed.digests[i]);
      out << hex << "  " << (ok ? "OK" : "MISMATCH") << "\n";
      msgs.push_back({{"index", i},
                      {"source", inputs[i].source},
                      {"length", messages[i].size()},
                      {"digest", hex},
                      {"oracle", reference::to_hex(want)},
                      {"match", ok}});
    }
    report["messages"] = msgs;

    const double e_fj = c.crossbar.gate_energy_fj;
    json exec = stats_json(hashed.stats, e_fj);
    exec["rounds"] = hashed.rounds;
    exec["unit_rounds"] = hashed.unit_rounds;
    json per_xb = json::array();
    for (const auto& s : hashed.crossbar_stats) per_xb.push_back(stats_json(s, e_fj));
    exec["per_crossbar"] = per_xb;
    report["execution"] = exec;

    const StepStats round = hashed.stats.round_steps();
    const double latency = static_cast<double>(round.cycles) / static_cast<double>(hashed.rounds);
    const double energy_j = static_cast<double>(round.gate_executions) * e_fj * 1e-15 /
                            static_cast<double>(hashed.unit_rounds);
    report["per_round"] = {{"cycles", latency}, {"energy_per_unit_j", energy_j}};
    report["packing"] = {{"unit_rows", c.crossbar.unit_rows},
                         {"unit_cols", c.crossbar.unit_cols},
                         {"unit_grid", {plan.unit_rows(), plan.unit_cols()}},
                         {"units_per_crossbar", hashed.units_per_crossbar},
                         {"crossbars_available", c.crossbars},
                         {"crossbars_used", hashed.crossbars_used},
                         {"units_used", messages.size()}};
    if (c.metrics && !c.published_constants) {
      const auto in = metrics::MetricsInput::measured(c.crossbar, latency, energy_j, plan.unit_count(), c.crossbars);
      const auto r = metrics::compute(in);
      report["metrics"] = metrics_json(in, r);
      report["metrics"]["source"] = "measured";
      print_metrics(out, "measured", r);
    }
  } else {
    report["packing"] = {{"unit_rows", c.crossbar.unit_rows},
                         {"unit_cols", c.crossbar.unit_cols},
                         {"unit_grid", {plan.unit_rows(), plan.unit_cols()}},
                         {"units_per_crossbar", plan.unit_count()},
                         {"crossbars_available", c.crossbars},
                         {"crossbars_used", 0},
                         {"units_used", 0}};
  }
  if (c.metrics && c.published_constants) {
    const auto in = metrics::MetricsInput::published_constants(c.crossbars);
    const auto r = metrics::compute(in);
    report["metrics"] = metrics_json(in, r);
    report["metrics"]["source"] = "published constants";
    print_metrics(out, "published constants", r);
  }
  report["all_ok"] = all_ok;

  if (!c.report_path.empty()) {
    if (c.report_path == "-") {
      out << report.dump(2) << "\n";
    } else {
      std::ofstream f(c.report_path);
      if (!f) throw FileError("cannot write report file '" + c.report_path + "'");
      f << report.dump(2) << "\n";
    }
  }
  if (!all_ok) err << "error: at least one digest differs from the reference\n";
  return all_ok ? kOk : kMismatch;
}

}  // namespace

std::optional<std::vector<std::uint8_t>> parse_hex(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  if (text.size() % 2 != 0) return std::nullopt;
  auto nibble = [](char ch) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    return -1;
  };
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 2);
  for (std::size_t i = 0; i < text.size(); i += 2) {
    const int hi = nibble(text[i]);
    const int lo = nibble(text[i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return run_checked(config, out, err);
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kUnreadableFile;
  } catch (const HexError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedHex;
  } catch (const CapacityError& e) {
    err << "error: capacity exceeded: " << e.what() << "\n";
    return kCapacity;
  } catch (const InputError& e) {
    err << "error: invalid configuration: " << e.what() << "\n";
    return kBadConfig;
  } catch (const Error& e) {
    err << "error: simulator invariant violated: " << e.what() << "\n";
    return kInvariant;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"SHA3-256 on a simulated partitioned memristive crossbar"};
  app.add_option("--text", c.texts, "Message given as text (repeatable)");
  app.add_option("--hex", c.hexes, "Message given as hex bytes (repeatable)");
  app.add_option("--file", c.files, "Message read from a file (repeatable)");
  app.add_option("--random", c.random_count, "Number of random messages");
  app.add_option("--len", c.random_len, "Length of each random message in bytes");
  app.add_option("--seed", c.seed, "mt19937_64 seed for --random and --suite")->capture_default_str();
  app.add_flag("--suite", c.suite, "Empty, \"abc\" and random messages of every length 0..200");
  app.add_option("--crossbars", c.crossbars, "Crossbars available")->capture_default_str();
  app.add_option("--rows", c.crossbar.rows, "Crossbar rows")->capture_default_str();
  app.add_option("--cols", c.crossbar.cols, "Crossbar columns")->capture_default_str();
  app.add_option("--hpart", c.crossbar.horizontal_partitions, "Partitions across the columns")->capture_default_str();
  app.add_option("--vpart", c.crossbar.vertical_partitions, "Partitions across the rows")->capture_default_str();
  app.add_option("--gate-delay-ns", c.crossbar.gate_delay_ns, "Gate delay")->capture_default_str();
  app.add_option("--gate-energy-fj", c.crossbar.gate_energy_fj, "Energy per gate execution")->capture_default_str();
  app.add_option("--trace", c.trace_path, "Per-cycle JSON Lines trace (crossbar k > 0 gets PATH.k)");
  app.add_option("--report", c.report_path, "JSON report file, - for stdout");
  app.add_flag("--metrics", c.metrics, "Print throughput, power and area metrics");
  app.add_flag("--paper-constants", c.published_constants, "Metrics from the published operating point");
  app.add_flag("--strict-init", c.crossbar.strict_init, "Fail on reads of never-written cells");
  app.add_flag("--dump-layout", c.dump_layout, "Print the unit layout as JSON");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (c.random_count > 0 && !app.count("--len")) {
    err << "error: --random needs --len\n";
    return kUsage;
  }
  return run(c, out, err);
}

}  // namespace hashpim::cli
