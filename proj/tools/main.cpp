#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "schubbd/action.hpp"
#include "schubbd/clan.hpp"
#include "schubbd/oracle.hpp"
#include "schubbd/orbit_graph.hpp"
#include "schubbd/richardson.hpp"
#include "schubbd/tables.hpp"
#include "schubbd/text.hpp"
#include "schubbd/weyl.hpp"

using json = nlohmann::json;
using namespace schubbd;

namespace {

LieType parse_type(const std::string& s) {
  if (s == "B" || s == "b") return LieType::B;
  if (s == "D" || s == "d") return LieType::D;
  throw ParseError("lie type must be B or D");
}

std::string word_of_table_row(const ReferenceTableRow& row) { return row.word; }

int run_constant(const std::string& type_str, int rank, const std::string& u_str,
                 const std::string& v_str, const std::string& w_str,
                 const std::string& word_str, bool with_oracle,
                 const std::string& format) {
  const LieType type = parse_type(type_str);
  const auto u = parse_signed_perm(u_str, rank, type);
  const auto v = parse_signed_perm(v_str, rank, type);
  Word word;
  if (!word_str.empty()) {
    word = parse_word(word_str, rank);
  } else if (!w_str.empty()) {
    word = reduced_word(parse_signed_perm(w_str, rank, type));
  } else {
    throw ParseError("supply --w (one-line notation) or --word (letters)");
  }
  const auto w = evaluate_word(word, rank, type);
  const auto res = structure_constant_for_word(u, v, word);

  std::string verdict;
  long oracle_value = -1;
  if (with_oracle) {
    BggOracle oracle(type, rank);
    const auto w0 = SignedPermutation::longest_element(rank, type);
    oracle_value = oracle.oracle_constant(w0 * u, v, w);
    verdict = (oracle_value == res.value) ? "AGREE" : "DISAGREE";
  }

  if (format == "jsonl") {
    json rec{{"type", to_string(type)},
             {"rank", rank},
             {"inputs",
              {{"u", format_signed_perm(u)},
               {"v", format_signed_perm(v)},
               {"w", format_signed_perm(w)},
               {"word", format_word_plain(word)}}},
             {"result",
              {{"constant", res.value},
               {"length_mismatch", res.length_mismatch},
               {"gamma", gamma_of_pair(u, v).to_string()}}}};
    if (!res.length_mismatch) {
      rec["result"]["acted_clan"] = res.action.result.to_string();
      rec["result"]["rule7_fired"] = res.action.rule7_fired;
      json trace = json::array();
      for (const auto& step : res.action.trace)
        trace.push_back({{"letter", step.letter},
                         {"rule", to_string(step.rule)},
                         {"clan", step.after.to_string()}});
      rec["result"]["trace"] = trace;
    }
    if (with_oracle) {
      rec["result"]["oracle"] = oracle_value;
      rec["result"]["verdict"] = verdict;
    }
    std::cout << rec.dump() << "\n";
    return 0;
  }

  std::cout << "gamma(u,v) = " << format_clan_parens(gamma_of_pair(u, v))
            << "\n";
  if (res.length_mismatch) {
    std::cout << "constant   = 0  (warning: l(w) != l(w0 u) + l(v))\n";
    return 0;
  }
  std::cout << "word       = " << format_word_brackets(word) << "\n";
  for (const auto& step : res.action.trace)
    std::cout << "  s" << step.letter << " [" << to_string(step.rule)
              << "] -> " << format_clan_parens(step.after) << "\n";
  std::cout << "acted clan = " << format_clan_parens(res.action.result)
            << "\n";
  std::cout << "constant   = " << res.value << "\n";
  if (with_oracle)
    std::cout << "oracle     = " << oracle_value << "  [" << verdict << "]\n";
  return 0;
}

std::string render_table(int which) {
  const ReferenceTable& table = reference_table(which);
  const auto u = parse_signed_perm(table.u, table.rank, table.type);
  const auto v = parse_signed_perm(table.v, table.rank, table.type);
  std::ostringstream os;
  for (const auto& row : table.rows) {
    const Word word = parse_word(word_of_table_row(row), table.rank);
    const auto res = structure_constant_for_word(u, v, word);
    os << row.word << "\t" << format_clan_parens(res.action.result) << "\t"
       << res.value << "\n";
  }
  return os.str();
}

std::string golden_table(int which) {
  const ReferenceTable& table = reference_table(which);
  std::ostringstream os;
  for (const auto& row : table.rows)
    os << row.word << "\t" << row.clan << "\t" << row.coefficient << "\n";
  return os.str();
}

int run_table(int which, bool check) {
  const std::string generated = render_table(which);
  std::cout << generated;
  if (!check) return 0;
  const std::string golden = golden_table(which);
  if (generated == golden) {
    std::cerr << "table " << which << ": OK, matches the reference rows\n";
    return 0;
  }
  std::cerr << "table " << which << ": MISMATCH against the reference rows\n";
  return 1;
}

struct VerifyStats {
  long pairs = 0;
  long pairs_skipped_degree = 0;
  long constants = 0;
  long mismatches = 0;
};

int run_verify(const std::string& type_str, int rank, int max_degree,
               const std::string& format) {
  const LieType type = parse_type(type_str);
  BggOracle oracle(type, rank);
  const auto w0 = SignedPermutation::longest_element(rank, type);
  VerifyStats stats;
  for (const auto& desc : all_coset_descriptors(rank)) {
    const auto u = coset_max_rep(desc, rank, type);
    for (int p = 1; p <= rank; ++p) {
      const auto v =
          coset_min_rep({CosetDescriptor::Sign::positive, p}, rank, type);
      if (!lemma_comparable(u, v)) continue;
      const auto expansion = expand_richardson_class(u, v);
      if (max_degree >= 0 && expansion.degree > max_degree) {
        ++stats.pairs_skipped_degree;
        continue;
      }
      ++stats.pairs;
      const auto u_prime = w0 * u;
      for (const auto& entry : expansion.entries) {
        const long truth = oracle.oracle_constant(u_prime, v, entry.w);
        ++stats.constants;
        if (truth != entry.coefficient) {
          ++stats.mismatches;
          json rec{{"type", to_string(type)},
                   {"rank", rank},
                   {"inputs",
                    {{"u", format_signed_perm(u)},
                     {"v", format_signed_perm(v)},
                     {"w", format_signed_perm(entry.w)}}},
                   {"result",
                    {{"conjecture", entry.coefficient}, {"oracle", truth}}}};
          std::cout << "MISMATCH " << rec.dump() << "\n";
        }
      }
    }
  }
  if (format == "jsonl") {
    json rec{{"type", to_string(type)},
             {"rank", rank},
             {"inputs", {{"max_degree", max_degree}}},
             {"result",
              {{"pairs", stats.pairs},
               {"pairs_skipped_by_degree", stats.pairs_skipped_degree},
               {"constants", stats.constants},
               {"mismatches", stats.mismatches}}}};
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << "type " << to_string(type) << rank << ": " << stats.pairs
              << " pairs checked";
    if (stats.pairs_skipped_degree > 0)
      std::cout << " (" << stats.pairs_skipped_degree
                << " skipped by --max-degree, coverage is partial)";
    std::cout << ", " << stats.constants << " constants, " << stats.mismatches
              << " mismatches\n";
  }
  return stats.mismatches == 0 ? 0 : 1;
}

int run_clans(const std::string& type_str, int rank, const std::string& format) {
  const LieType type = parse_type(type_str);
  for (const auto& clan : enumerate_symmetric_clans(rank, type)) {
    const auto cls = classify_symmetric(clan);
    std::string shape = to_string(cls.shape);
    if (cls.pattern) shape += " " + to_string(*cls.pattern);
    if (format == "jsonl") {
      json rec{{"type", to_string(type)},
               {"rank", rank},
               {"inputs", {{"clan", clan.to_string()}}},
               {"result",
                {{"disconnected", clan.is_disconnected()}, {"shape", shape}}}};
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << format_clan_parens(clan) << "\t"
                << (clan.is_disconnected() ? "disconnected" : "connected")
                << "\t" << shape << "\n";
    }
  }
  return 0;
}

int run_graph(const std::string& type_str, int rank, const std::string& level,
              const std::string& format) {
  const LieType type = parse_type(type_str);
  if (level == "K") {
    const auto g = k_orbit_graph(rank, type);
    if (format == "dot") {
      std::cout << to_dot(g);
    } else {
      for (const auto& e : g.edges)
        std::cout << g.nodes[e.source].to_string() << "\ts" << e.label
                  << (e.merging ? " =>\t" : " ->\t")
                  << g.nodes[e.target].to_string() << "\n";
    }
    return 0;
  }
  if (level == "L") {
    const auto g = l_orbit_graph(rank, type);
    auto label = [&](int idx) {
      std::string s = g.nodes[idx].clan.to_string();
      if (g.nodes[idx].component == LOrbitGraph::Component::half_1) s += "#1";
      if (g.nodes[idx].component == LOrbitGraph::Component::half_2) s += "#2";
      return s;
    };
    if (format == "dot") {
      std::cout << to_dot(g);
    } else {
      for (const auto& e : g.edges)
        std::cout << label(e.source) << "\ts" << e.label
                  << (e.double_style ? " =>\t" : " ->\t") << label(e.target)
                  << "\n";
    }
    return 0;
  }
  throw ParseError("--level must be K or L");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert structure constants in types B and D: conjectural "
               "clan rule plus a divided-difference oracle"};
  app.require_subcommand(1);

  std::string type_str = "B", format = "table";
  int rank = 2;

  auto* constant = app.add_subcommand(
      "constant", "one structure constant c_{w0 u, v}^w by the clan rule");
  std::string u_str, v_str, w_str, word_str;
  bool with_oracle = false;
  constant->add_option("--type", type_str, "B or D")->required();
  constant->add_option("--rank", rank, "rank n")->required();
  constant->add_option("--u", u_str, "max coset rep, e.g. -2,-3,-4,1")->required();
  constant->add_option("--v", v_str, "min coset rep, e.g. 2,3,4,1")->required();
  constant->add_option("--w", w_str, "w in one-line notation");
  constant->add_option("--word", word_str, "reduced word for w, e.g. 2,1,3,2");
  constant->add_flag("--oracle", with_oracle,
                     "also compute the divided-difference oracle value");
  constant->add_option("--format", format, "table or jsonl");

  auto* table = app.add_subcommand(
      "table", "reproduce one of the two reference product expansions");
  int which = 1;
  bool check = false;
  table->add_option("example", which, "1 (B4) or 2 (D4)")->required();
  table->add_flag("--check", check, "diff against the embedded reference rows");

  auto* verify = app.add_subcommand(
      "verify", "sweep all v-positive pairs and compare rule against oracle");
  int max_degree = -1;
  verify->add_option("--type", type_str, "B or D")->required();
  verify->add_option("--rank", rank, "rank n")->required();
  verify->add_option("--max-degree", max_degree,
                     "skip pairs whose expansion degree exceeds this");
  verify->add_option("--format", format, "table or jsonl");

  auto* clans = app.add_subcommand("clans", "list the symmetric clans");
  clans->add_option("--type", type_str, "B or D")->required();
  clans->add_option("--rank", rank, "rank n")->required();
  clans->add_option("--format", format, "table or jsonl");

  auto* graph = app.add_subcommand("graph", "export the weak order graph");
  std::string level = "K";
  graph->add_option("--type", type_str, "B or D")->required();
  graph->add_option("--rank", rank, "rank n")->required();
  graph->add_option("--level", level, "K or L");
  graph->add_option("--format", format, "dot or text");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*constant)
      return run_constant(type_str, rank, u_str, v_str, w_str, word_str,
                          with_oracle, format);
    if (*table) return run_table(which, check);
    if (*verify) return run_verify(type_str, rank, max_degree, format);
    if (*clans) return run_clans(type_str, rank, format);
    if (*graph)
      return run_graph(type_str, rank, level,
                       format == "table" ? "dot" : format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
