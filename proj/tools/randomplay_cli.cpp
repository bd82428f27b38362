#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "randomplay/analysis.hpp"
#include "randomplay/board.hpp"
#include "randomplay/closed_form.hpp"
#include "randomplay/exact_engine.hpp"
#include "randomplay/montecarlo.hpp"
#include "randomplay/nim.hpp"
#include "randomplay/rational.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;
using namespace randomplay;

void emit(const json& envelope, bool pretty) {
  std::cout << envelope.dump(pretty ? 2 : -1) << "\n";
}

json make_envelope(const std::string& command, json inputs, json results) {
  return {{"command", command},
          {"inputs", std::move(inputs)},
          {"results", std::move(results)},
          {"version", kVersion}};
}

// Two-row boards have a closed-form win probability; reads (n, k) off the
// partition, treating a missing second row as k = 0.
bool two_row_params(const ChompBoard& board, std::int64_t& n, std::int64_t& k) {
  if (board.row_count() > 2) return false;
  n = board.row_count() >= 1 ? board.rows()[0] : 0;
  k = board.row_count() == 2 ? board.rows()[1] : 0;
  return true;
}

int run_chomp_eval(const std::string& board_literal, const std::string& method,
                   bool pretty) {
  const ChompBoard board = ChompBoard::parse(board_literal);
  json results;
  results["cells"] = board.cell_count();

  std::int64_t n = 0, k = 0;
  const bool has_closed_form = two_row_params(board, n, k);

  if (method == "exact" || method == "both") {
    EvalCache cache;
    const Evaluation eval = evaluate(board, cache);
    if (method == "both") {
      if (expected_turns_formula(board) != eval.expected_turns)
        throw std::runtime_error("engine/formula disagreement on expected turns");
      if (has_closed_form && win_prob_two_row(n, k) != eval.win_prob)
        throw std::runtime_error("engine/formula disagreement on win probability");
      results["methods_agree"] = true;
    }
    results["expected_turns"] = rational_to_json(eval.expected_turns);
    results["win_prob"] = rational_to_json(eval.win_prob);
  } else {  // formula
    results["expected_turns"] = rational_to_json(expected_turns_formula(board));
    if (has_closed_form)
      results["win_prob"] = rational_to_json(win_prob_two_row(n, k));
    else
      results["win_prob"] = "no closed form";
  }

  emit(make_envelope("chomp-eval",
                     {{"board", board_literal}, {"method", method}}, results),
       pretty);
  return 0;
}

int run_nim_eval(const std::string& piles_literal, const std::string& convention,
                 bool pretty) {
  const NimPosition pos = NimPosition::parse(piles_literal, parse_convention(convention));

  NimEvalCache cache;
  const Rational expected_dp = nim_expected_turns_exact(pos, cache);
  if (nim_expected_turns_formula(pos) != expected_dp)
    throw std::runtime_error("engine/formula disagreement on expected turns");

  const Rational win_prob = nim_first_player_win_prob(pos);
  const Rational parity_even = nim_turn_parity_exact(pos, cache);
  const Rational win_prob_dp =
      pos.convention() == PlayConvention::misere ? parity_even : 1 - parity_even;
  if (win_prob_dp != win_prob)
    throw std::runtime_error("engine/formula disagreement on win probability");

  json results;
  results["pile_count"] = pos.pile_count();
  results["total_tokens"] = pos.total_tokens();
  results["expected_turns"] = rational_to_json(expected_dp);
  results["first_player_win_prob"] = rational_to_json(win_prob);
  results["turn_parity_even"] = rational_to_json(parity_even);
  results["methods_agree"] = true;

  emit(make_envelope("nim-eval",
                     {{"piles", piles_literal}, {"convention", convention}}, results),
       pretty);
  return 0;
}

int run_sequences(std::int64_t k_max, bool csv, bool pretty) {
  const std::vector<AlphaBeta> table = alpha_beta(k_max);
  if (csv) {
    std::cout << "k,alpha,beta\n";
    for (const AlphaBeta& entry : table)
      std::cout << entry.k << "," << entry.alpha.get_str() << ","
                << entry.beta.get_str() << "\n";
    return 0;
  }
  json rows = json::array();
  for (const AlphaBeta& entry : table)
    rows.push_back({{"k", entry.k},
                    {"alpha", entry.alpha.get_str()},
                    {"beta", entry.beta.get_str()}});
  emit(make_envelope("sequences", {{"k_max", k_max}}, {{"table", std::move(rows)}}),
       pretty);
  return 0;
}

int run_simulate(const std::string& game, const std::string& board_literal,
                 const std::string& piles_literal, std::int64_t games,
                 std::uint64_t seed, const std::string& convention, int threads,
                 bool pretty) {
  SimConfig config;
  config.num_games = games;
  config.seed = seed;
  json inputs{{"game", game}, {"games", games}, {"seed", seed}, {"threads", threads}};
  if (game == "chomp") {
    config.game = GameKind::chomp;
    config.board = ChompBoard::parse(board_literal);
    inputs["board"] = board_literal;
  } else {
    config.game = GameKind::nim;
    config.piles = NimPosition::parse(piles_literal, parse_convention(convention));
    inputs["piles"] = piles_literal;
    inputs["convention"] = convention;
  }

  const SimReport report = run_simulation(config, threads);
  emit(make_envelope("simulate", std::move(inputs), report_to_json(report)), pretty);
  return 0;
}

int run_scan(const std::string& kind, std::int64_t max_cells, const std::string& out_path,
             bool csv, int threads, bool pretty) {
  json results;
  std::vector<std::string> lines;  // report rows, one per record
  bool holds = true;

  if (kind == "conjecture1") {
    const Conjecture1Result scan = scan_conjecture1(max_cells, threads);
    holds = scan.holds;
    results["verdict"] = scan.holds ? "holds" : "violated";
    results["record_count"] = scan.records.size();
    if (scan.counterexample)
      results["counterexample"] = scan.counterexample->to_string();
    if (csv) lines.push_back(kScanCsvHeader);
    json records = json::array();
    for (const ScanRecord& record : scan.records) {
      if (!out_path.empty())
        lines.push_back(csv ? scan_record_to_csv(record)
                            : scan_record_to_json(record).dump());
      else
        records.push_back(scan_record_to_json(record));
    }
    if (out_path.empty()) results["records"] = std::move(records);
  } else if (kind == "envelope") {
    const std::vector<EnvelopeRecord> scan = envelope(max_cells, threads);
    results["verdict"] = "advisory";
    results["record_count"] = scan.size();
    if (csv) lines.push_back(kEnvelopeCsvHeader);
    json records = json::array();
    for (const EnvelopeRecord& record : scan) {
      if (!out_path.empty())
        lines.push_back(csv ? envelope_record_to_csv(record)
                            : envelope_record_to_json(record).dump());
      else
        records.push_back(envelope_record_to_json(record));
    }
    if (out_path.empty()) results["records"] = std::move(records);
  } else {  // extremal
    const ExtremalResult scan = verify_extremal(max_cells, threads);
    holds = scan.holds;
    results["verdict"] = scan.holds ? "holds" : "violated";
    results["record_count"] = scan.records.size();
    if (!scan.holds) results["counterexample"] = scan.failure;
    if (csv) lines.push_back(kExtremalCsvHeader);
    json records = json::array();
    for (const ExtremalRecord& record : scan.records) {
      if (!out_path.empty())
        lines.push_back(csv ? extremal_record_to_csv(record)
                            : extremal_record_to_json(record).dump());
      else
        records.push_back(extremal_record_to_json(record));
    }
    if (out_path.empty()) results["records"] = std::move(records);
  }

  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "error: cannot write report to " << out_path << "\n";
      return 3;
    }
    for (const std::string& line : lines) file << line << "\n";
    results["report_path"] = out_path;
  }

  emit(make_envelope("scan",
                     {{"kind", kind},
                      {"max_cells", max_cells},
                      {"threads", threads},
                      {"format", csv ? "csv" : "jsonl"}},
                     std::move(results)),
       pretty);
  return holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and simulated analysis of randomly played Chomp and nim"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output")->configurable(false);
  app.fallthrough();  // lets --pretty appear after the subcommand too

  // chomp-eval
  auto* chomp_cmd = app.add_subcommand(
      "chomp-eval", "expected turns and win probability for a Chomp board");
  std::string board_literal;
  std::string method = "both";
  chomp_cmd->add_option("--board", board_literal, "board as r1,r2,...,rm")->required();
  chomp_cmd->add_option("--method", method, "exact|formula|both")
      ->check(CLI::IsMember({"exact", "formula", "both"}));

  // nim-eval
  auto* nim_cmd =
      app.add_subcommand("nim-eval", "expected turns and win probability for nim");
  std::string piles_literal;
  std::string convention = "misere";
  nim_cmd->add_option("--piles", piles_literal, "piles as s1,s2,...,sk")->required();
  nim_cmd->add_option("--convention", convention, "misere|normal")
      ->check(CLI::IsMember({"misere", "normal"}));

  // sequences
  auto* seq_cmd = app.add_subcommand("sequences", "alpha/beta sequence table");
  std::int64_t k_max = 8;
  bool csv = false;
  seq_cmd->add_option("--k-max", k_max, "largest index")->check(CLI::PositiveNumber);
  seq_cmd->add_flag("--csv", csv, "emit CSV instead of JSON");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo random play");
  std::string game = "chomp";
  std::string sim_board;
  std::string sim_piles;
  std::string sim_convention = "misere";
  std::int64_t games = 10000;
  std::uint64_t seed = 0;
  int threads = 0;
  sim_cmd->add_option("--game", game, "chomp|nim")
      ->check(CLI::IsMember({"chomp", "nim"}));
  sim_cmd->add_option("--board", sim_board, "chomp board literal");
  sim_cmd->add_option("--piles", sim_piles, "nim piles literal");
  sim_cmd->add_option("--convention", sim_convention, "misere|normal")
      ->check(CLI::IsMember({"misere", "normal"}));
  sim_cmd->add_option("--games", games, "number of games")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", seed, "64-bit RNG seed");
  sim_cmd->add_option("--threads", threads, "worker threads (0 = default)");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "exhaustive conjecture/extremal scans");
  std::string kind = "conjecture1";
  std::int64_t max_cells = 12;
  std::string out_path;
  bool scan_csv = false;
  int scan_threads = 0;
  scan_cmd->add_option("--kind", kind, "conjecture1|envelope|extremal")
      ->check(CLI::IsMember({"conjecture1", "envelope", "extremal"}));
  scan_cmd->add_option("--max-cells", max_cells, "largest cell count")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--out", out_path, "report file (JSON lines, or CSV with --csv)");
  scan_cmd->add_flag("--csv", scan_csv, "CSV report format");
  scan_cmd->add_option("--threads", scan_threads, "worker threads (0 = default)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*chomp_cmd) return run_chomp_eval(board_literal, method, pretty);
    if (*nim_cmd) return run_nim_eval(piles_literal, convention, pretty);
    if (*seq_cmd) return run_sequences(k_max, csv, pretty);
    if (*sim_cmd)
      return run_simulate(game, sim_board, sim_piles, games, seed, sim_convention,
                          threads, pretty);
    if (*scan_cmd)
      return run_scan(kind, max_cells, out_path, scan_csv, scan_threads, pretty);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
