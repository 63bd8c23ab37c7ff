// Command-line front end: Laurent inversion, forward mirrors, periods,
// degenerations, mutations and period-database matching.
//
// Output is a single JSON document on stdout (compact by default; with
// --pretty a human-readable summary followed by indented JSON).
// Exit codes: 0 success, 1 usage error, 2 validation failure,
// 3 unreachable database URL.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fetch.hpp"
#include "lift/degeneration.hpp"
#include "lift/json_io.hpp"
#include "lift/mutation.hpp"
#include "lift/period.hpp"
#include "lift/period_db.hpp"

namespace {

using namespace lift;

std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream file(arg);
  if (file.good()) {
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
  }
  return arg;  // literal text
}

ParsedPoly input_poly(const std::string& arg) { return parse_poly(read_input(arg)); }

void emit(const Json& j, bool pretty, const std::vector<std::string>& summary) {
  if (!pretty) {
    std::cout << j.dump() << "\n";
    return;
  }
  for (const auto& line : summary) std::cout << "# " << line << "\n";
  std::cout << j.dump(2) << "\n";
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t v = std::stoul(tok);
    if (v == 0) throw error("indices are 1-based");
    out.push_back(v - 1);
  }
  return out;
}

std::vector<std::vector<std::size_t>> parse_parts(const std::string& text) {
  std::vector<std::vector<std::size_t>> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '|')) {
    auto part = parse_index_list(tok);
    if (!part.empty()) parts.push_back(std::move(part));
  }
  return parts;
}

BasisPartition make_partition(std::size_t dim, const std::string& parts_text,
                              const std::string& basis_text) {
  BasisPartition p;
  p.dim = dim;
  p.parts = parse_parts(parts_text);
  std::vector<bool> used(dim, false);
  for (const auto& part : p.parts)
    for (auto i : part) {
      if (i >= dim) throw error("partition index exceeds the number of variables");
      used[i] = true;
    }
  for (std::size_t i = 0; i < dim; ++i)
    if (!used[i]) p.free_indices.push_back(i);
  if (!basis_text.empty()) p.basis = intmat_from_json(Json::parse(read_input(basis_text)));
  p.validate();
  return p;
}

// Scaffolding selection shared by the scaffold-consuming commands.
Scaffolding select_scaffolding(const Laurent& f, const std::string& partition_text,
                               const std::string& basis_text,
                               const std::string& scaffolding_file, int index,
                               bool allow_shift) {
  if (!scaffolding_file.empty()) {
    Scaffolding sc = scaffolding_from_json(Json::parse(read_input(scaffolding_file)));
    auto [ok, shift] = validate_scaffolding(f, sc);
    if (!ok) throw error("scaffolding does not sum to the polynomial up to a constant");
    sc.shift = shift;
    return sc;
  }
  if (partition_text.empty())
    throw error("either --scaffolding or --partition is required");
  BasisPartition p = make_partition(f.dimension(), partition_text, basis_text);
  auto all = enumerate_scaffoldings(f, p, allow_shift);
  if (all.empty()) throw error("no scaffolding exists for this partition");
  if (index >= 0) {
    if (static_cast<std::size_t>(index) >= all.size())
      throw error("scaffolding index out of range (" + std::to_string(all.size()) +
                  " scaffoldings)");
    return all[static_cast<std::size_t>(index)];
  }
  if (all.size() > 1)
    throw error("partition admits " + std::to_string(all.size()) +
                " scaffoldings; pick one with --index");
  return all[0];
}

int run(int argc, char** argv) {
  CLI::App app{"Laurent inversion toolkit: mirrors, periods, toric GIT data"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable rendering");

  std::string input, partition_text, basis_text, scaffolding_file, s_positions_text;
  std::string db, strategy = "naive", weight_text, factor_text, mutation_file;
  std::string basis_set_text, parts_text, s_choices_text;
  int dmax = 10, index = -1, chamber = 0;
  std::size_t min_overlap = 8;
  bool allow_shift = false;

  auto* period_cmd = app.add_subcommand("period", "classical period of a Laurent polynomial");
  period_cmd->add_option("input", input, "polynomial (text, file, or - for stdin)")->required();
  period_cmd->add_option("--dmax", dmax, "highest coefficient degree")->capture_default_str();
  period_cmd->add_option("--strategy", strategy, "naive|pruned")->capture_default_str();

  auto* newton_cmd = app.add_subcommand("newton", "Newton polytope with exact facet data");
  newton_cmd->add_option("input", input)->required();

  auto* scaffold_cmd = app.add_subcommand("scaffold", "enumerate scaffoldings for a partition");
  scaffold_cmd->add_option("input", input)->required();
  scaffold_cmd->add_option("--partition", partition_text, "parts, e.g. \"1,2|3\" (1-based)")
      ->required();
  scaffold_cmd->add_flag("--allow-shift", allow_shift, "match up to an additive constant");
  scaffold_cmd->add_option("--basis", basis_text, "unimodular basis (JSON matrix or file)");

  auto* invert_cmd = app.add_subcommand("invert", "GIT data and ambient report from a scaffolding");
  invert_cmd->add_option("input", input)->required();
  invert_cmd->add_option("--partition", partition_text);
  invert_cmd->add_option("--basis", basis_text);
  invert_cmd->add_option("--scaffolding", scaffolding_file, "scaffolding JSON (file or literal)");
  invert_cmd->add_option("--index", index, "pick the n-th enumerated scaffolding (0-based)");
  invert_cmd->add_flag("--allow-shift", allow_shift);
  invert_cmd->add_option("--s-choices", s_positions_text,
                         "1-based eliminated-slot position per part");

  auto* forward_cmd = app.add_subcommand("forward", "Laurent mirror from GIT data");
  forward_cmd->add_option("input", input, "GIT data JSON (file or literal)")->required();
  forward_cmd->add_option("--basis-set", basis_set_text, "B as 1-based indices, e.g. \"1,2\"")
      ->required();
  forward_cmd->add_option("--parts", parts_text, "S_1|S_2|... as 1-based indices")
      ->capture_default_str();
  forward_cmd->add_option("--s-choices", s_choices_text, "one 1-based s_i per part");

  auto* degenerate_cmd = app.add_subcommand("degenerate", "toric degeneration report");
  degenerate_cmd->add_option("input", input)->required();
  degenerate_cmd->add_option("--partition", partition_text);
  degenerate_cmd->add_option("--basis", basis_text);
  degenerate_cmd->add_option("--scaffolding", scaffolding_file);
  degenerate_cmd->add_option("--index", index);
  degenerate_cmd->add_flag("--allow-shift", allow_shift);
  degenerate_cmd->add_option("--s-choices", s_positions_text);
  degenerate_cmd->add_option("--chamber", chamber, "1-based secondary-fan chamber")
      ->capture_default_str();

  auto* mutate_cmd = app.add_subcommand("mutate", "apply an algebraic mutation");
  mutate_cmd->add_option("input", input)->required();
  mutate_cmd->add_option("--weight", weight_text, "covector, e.g. \"0,1\"");
  mutate_cmd->add_option("--factor", factor_text, "factor polynomial text");
  mutate_cmd->add_option("--mutation", mutation_file, "mutation JSON (file or literal)");

  auto* match_cmd = app.add_subcommand("match", "compare the period against a database");
  match_cmd->add_option("input", input)->required();
  match_cmd->add_option("--db", db, "JSONL database path or URL")->required();
  match_cmd->add_option("--dmax", dmax)->capture_default_str();
  match_cmd->add_option("--min-overlap", min_overlap)->capture_default_str();
  match_cmd->add_option("--strategy", strategy)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage error
  }

  auto strat = [&] {
    if (strategy == "naive") return PeriodStrategy::naive;
    if (strategy == "pruned") return PeriodStrategy::pruned;
    throw error("unknown strategy '" + strategy + "' (naive|pruned)");
  };

  if (period_cmd->parsed()) {
    auto f = input_poly(input);
    auto seq = classical_period(f.poly, dmax, strat());
    Json j = to_json(seq);
    j["dmax"] = dmax;
    emit(j, pretty, {"classical period of " + format(f.poly, f.vars)});
    return 0;
  }

  if (newton_cmd->parsed()) {
    auto f = input_poly(input);
    Polytope p = newton_polytope(f.poly);
    emit(to_json(p), pretty,
         {"Newton polytope: " + std::to_string(p.vertices().size()) + " vertices, " +
          std::to_string(p.facets().size()) + " facets"});
    return 0;
  }

  if (scaffold_cmd->parsed()) {
    auto f = input_poly(input);
    BasisPartition p = make_partition(f.poly.dimension(), partition_text, basis_text);
    auto all = enumerate_scaffoldings(f.poly, p, allow_shift);
    Json j;
    j["count"] = all.size();
    Json arr = Json::array();
    for (const auto& sc : all) arr.push_back(to_json(sc));
    j["scaffoldings"] = std::move(arr);
    emit(j, pretty, {std::to_string(all.size()) + " scaffoldings"});
    return 0;
  }

  if (invert_cmd->parsed()) {
    auto f = input_poly(input);
    Scaffolding sc = select_scaffolding(f.poly, partition_text, basis_text, scaffolding_file,
                                        index, allow_shift);
    auto spos = parse_index_list(s_positions_text);
    InversionReport rep = invert(f.poly, sc, spos);
    std::vector<std::string> summary;
    summary.push_back("R = " + std::to_string(rep.wm.R()) + ", r = " + std::to_string(rep.wm.r) +
                      ", shift = " + rep.shift.str());
    if (rep.strictly_convex)
      summary.push_back(std::to_string(rep.chambers.size()) + " secondary-fan chambers");
    else
      summary.push_back("failed: " + rep.failure);
    emit(to_json(rep), pretty, summary);
    return rep.strictly_convex ? 0 : 2;
  }

  if (forward_cmd->parsed()) {
    GitData g = git_from_json(Json::parse(read_input(input)));
    ConvexPartition cp;
    cp.basis = parse_index_list(basis_set_text);
    cp.parts = parse_parts(parts_text);
    cp.s_choices = parse_index_list(s_choices_text);
    if (cp.s_choices.empty())
      for (const auto& part : cp.parts)
        cp.s_choices.push_back(*std::min_element(part.begin(), part.end()));
    std::vector<bool> used(g.R(), false);
    for (auto i : cp.basis) used.at(i) = true;
    for (const auto& part : cp.parts)
      for (auto i : part) used.at(i) = true;
    for (std::size_t i = 0; i < g.R(); ++i)
      if (!used[i]) cp.free_indices.push_back(i);
    Laurent f = forward_mirror(g, cp);
    Json j;
    j["polynomial"] = format(f);
    j["records"] = to_exponent_records(f);
    emit(j, pretty, {"mirror: " + format(f)});
    return 0;
  }

  if (degenerate_cmd->parsed()) {
    auto f = input_poly(input);
    Scaffolding sc = select_scaffolding(f.poly, partition_text, basis_text, scaffolding_file,
                                        index, allow_shift);
    auto spos = parse_index_list(s_positions_text);
    InversionReport rep = invert(f.poly, sc, spos);
    if (!rep.strictly_convex) {
      emit(to_json(rep), pretty, {"failed: " + rep.failure});
      return 2;
    }
    std::vector<std::size_t> ok_chambers;
    for (std::size_t i = 0; i < rep.chambers.size(); ++i)
      if (rep.chambers[i].ok) ok_chambers.push_back(i);
    std::size_t pick;
    if (chamber > 0) {
      if (static_cast<std::size_t>(chamber) > rep.chambers.size())
        throw error("chamber index out of range");
      pick = static_cast<std::size_t>(chamber - 1);
      if (!rep.chambers[pick].ok)
        throw error("chamber " + std::to_string(chamber) + ": " + rep.chambers[pick].failure);
    } else if (ok_chambers.size() == 1) {
      pick = ok_chambers[0];
    } else {
      throw error(std::to_string(ok_chambers.size()) +
                  " chambers admit a quotient; pick one with --chamber");
    }
    Polytope newt = newton_polytope(to_partition_coords(f.poly, sc.partition));
    DegenerationReport dr =
        degeneration_report(rep.wm, *rep.chambers[pick].stacky, newt);
    Json j = to_json(dr);
    j["chamber"] = pick + 1;
    emit(j, pretty,
         {std::string("spanning_fan: ") + (dr.spanning ? "true" : "false")});
    return 0;
  }

  if (mutate_cmd->parsed()) {
    auto f = input_poly(input);
    Mutation m;
    if (!mutation_file.empty()) {
      m = mutation_from_json(Json::parse(read_input(mutation_file)));
    } else {
      if (weight_text.empty() || factor_text.empty())
        throw error("provide --mutation or both --weight and --factor");
      std::stringstream ss(weight_text);
      std::string tok;
      while (std::getline(ss, tok, ',')) m.weight.push_back(Int(tok));
      m.factor = parse(factor_text);
    }
    Laurent out = mutate(f.poly, m);
    Json j;
    j["polynomial"] = format(out, f.vars);
    j["records"] = to_exponent_records(out);
    emit(j, pretty, {"mutated: " + format(out, f.vars)});
    return 0;
  }

  if (match_cmd->parsed()) {
    auto f = input_poly(input);
    auto seq = classical_period(f.poly, dmax, strat());
    std::vector<PeriodRecord> records;
    if (lift::cli::looks_like_url(db)) {
      std::string body = lift::cli::fetch_with_cache(db);
      std::istringstream in(body);
      records = parse_period_db(in, db);
    } else {
      std::ifstream in(db);
      if (!in.good()) throw error("cannot open database file " + db);
      records = parse_period_db(in, db);
    }
    auto matches = match_period(records, seq.coeffs, min_overlap);
    Json j;
    j["computed"] = to_json(seq);
    j["records"] = records.size();
    j["min_overlap"] = min_overlap;
    Json arr = Json::array();
    for (const auto& m : matches) {
      Json mj;
      mj["name"] = m.record->name;
      mj["overlap"] = m.overlap;
      mj["source"] = m.record->source;
      arr.push_back(std::move(mj));
    }
    j["matches"] = std::move(arr);
    j["match"] = !matches.empty();
    emit(j, pretty,
         {matches.empty() ? "no match: the period is not in the database"
                          : std::to_string(matches.size()) + " match(es)"});
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lift::cli::fetch_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lift::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
