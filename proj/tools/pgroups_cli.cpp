#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pgroups/classify.hpp"
#include "pgroups/lemmas.hpp"
#include "pgroups/numtheory.hpp"
#include "pgroups/serialize.hpp"

using namespace pgroups;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t parse_order(const std::string& s) {
  try {
    const auto caret = s.find('^');
    if (caret == std::string::npos) return std::stoull(s);
    if (s.substr(0, caret) != "2") throw UsageError("orders are powers of 2");
    const int k = std::stoi(s.substr(caret + 1));
    if (k < 0 || k > 40) throw UsageError("exponent out of range");
    return std::uint64_t{1} << k;
  } catch (const std::logic_error&) {
    throw UsageError("bad order '" + s + "'");
  }
}

int to_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw UsageError("bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("bad integer '" + s + "'");
  }
}

GroupSpec construct(const std::vector<std::string>& args) {
  const std::string usage = "construct {A n k | B n 1 | Bexc | homocyclic n | q8}";
  if (args.empty()) throw UsageError(usage);
  const std::string& kind = args[0];
  try {
    if (kind == "A" && args.size() == 3)
      return from_squaring(singer_squaring(to_int(args[1]), SingerVariant::A, 0, to_int(args[2]), 0).squaring);
    if (kind == "B" && args.size() == 3) {
      if (args[2] != "1") throw UsageError("only B(n,1) is standard; use Bexc for the exceptional group");
      return from_squaring(singer_squaring(2 * to_int(args[1]), SingerVariant::B, 0, 0, 0).squaring);
    }
    if (kind == "Bexc" && args.size() == 1) return from_squaring(sigma_omega());
    if (kind == "homocyclic" && args.size() == 2) return homocyclic_spec(to_int(args[1]));
    if (kind == "q8" && args.size() == 1)
      return from_squaring(singer_squaring(2, SingerVariant::B, 0, 0, 0).squaring);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError(usage);
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int emit_reports(const std::vector<Report>& reports) {
  bool ok = true;
  json out = json::array();
  for (const Report& r : reports) {
    ok = ok && r.ok();
    out.push_back(to_json(r));
  }
  print(out);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite 2-groups from squarings: orbit counts, Gamma L_1 calculus, classification"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "list the 3-orbit 2-groups up to an order");
  std::string max_order = "512";
  bool classify_json = false;
  classify->add_option("--max-order", max_order, "largest order, as N or 2^K")->required();
  classify->add_flag("--json", classify_json, "print the full JSON document");

  auto* cons = app.add_subcommand("construct", "print the GroupSpec of a named group");
  std::vector<std::string> cons_args;
  std::string cons_format = "json";
  cons->add_option("what", cons_args, "A n k | B n 1 | Bexc | homocyclic n | q8")->required();
  cons->add_option("--format", cons_format)->check(CLI::IsMember({"json", "pc"}));

  auto* orbits = app.add_subcommand("orbits", "count automorphism orbits");
  std::string orbits_spec;
  bool oracle = false;
  orbits->add_option("--spec", orbits_spec, "GroupSpec/Squaring JSON or PC text")->required();
  orbits->add_flag("--oracle", oracle, "also run the brute-force oracle and compare");

  auto* search = app.add_subcommand("search-nonstandard", "run the nonstandard pipeline for one m");
  int search_m = 0;
  bool search_json = false;
  search->add_option("--m", search_m)->required()->check(CLI::Range(2, 14));
  search->add_flag("--json", search_json);

  auto* verify = app.add_subcommand("verify", "run exhaustive checks");
  verify->require_subcommand(1);
  auto* v_num = verify->add_subcommand("numtheory", "delta sets and the m <= 37 bound");
  int max_m = 37;
  v_num->add_option("--max-m", max_m)->check(CLI::Range(1, 62));
  auto* v_lem = verify->add_subcommand("lemmas", "lemma suites");
  std::string level = "exhaustive";
  v_lem->add_option("--level", level)->check(CLI::IsMember({"exhaustive", "fast"}));

  auto* equiv = app.add_subcommand("equiv", "test two squarings for equivalence");
  std::string fa, fb;
  bool gl = false;
  std::uint64_t budget = 200'000'000;
  equiv->add_option("--a", fa)->required();
  equiv->add_option("--b", fb)->required();
  equiv->add_flag("--gl", gl, "search GL_m(2) x GL_n(2) instead of Gamma L_1");
  equiv->add_option("--budget", budget, "node budget for --gl");

  auto* exp = app.add_subcommand("export", "convert a spec");
  std::string export_spec, export_format = "json";
  exp->add_option("--spec", export_spec)->required();
  exp->add_option("--format", export_format)->required()->check(CLI::IsMember({"json", "pc"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classify) {
      const Classification C = theorem_list(parse_order(max_order));
      if (classify_json || !C.ok()) {
        print(to_json(C));
      } else {
        for (const ClassEntry& e : C.entries)
          std::cout << e.order << "\t" << e.label << "\torbits=" << e.orbits << " (" << e.orbit_method
                    << ")\tmembers=" << e.members << "\n";
        std::size_t undecided = 0;
        for (const auto& c : C.certificates) undecided += c.kind == "undecided";
        std::cout << C.entries.size() << " classes, " << C.certificates.size() << " pairwise certificates, "
                  << undecided << " undecided\n";
      }
      return C.ok() ? 0 : 1;
    }
    if (*cons) {
      const GroupSpec spec = construct(cons_args);
      if (cons_format == "pc") std::cout << export_pc_presentation(spec);
      else print(to_json(spec));
      return 0;
    }
    if (*orbits) {
      const GroupSpec spec = load_group_spec(read_file(orbits_spec));
      json out = {{"order", std::uint64_t{1} << (spec.m + spec.n)}};
      bool ok = true;
      std::int64_t pair_count = -1;
      try {
        const OrbitCount oc = orbit_count(spec);
        pair_count = oc.orbits;
        out["orbits"] = oc.orbits;
        out["a_orbits"] = oc.a_orbits;
        out["b_orbits"] = oc.b_orbits;
        out["pair_group_order"] = oc.pair_group_order;
        out["method"] = "pair-group";
      } catch (const std::invalid_argument& e) {
        out["pair_group_skipped"] = e.what();
        oracle = true;
      }
      if (oracle) {
        const BruteForceOrbits bf = brute_force_orbits(spec);
        out["oracle_orbits"] = bf.orbits;
        out["aut_order"] = bf.aut_order;
        if (pair_count < 0) {
          out["orbits"] = bf.orbits;
          out["method"] = "brute-force";
        } else if (pair_count != bf.orbits) {
          ok = false;
          out["violation"] = "pair-group and brute-force orbit counts differ";
        }
      }
      print(out);
      return ok ? 0 : 1;
    }
    if (*search) {
      const NonstandardResult R = nonstandard_search(search_m);
      json out = to_json(R);
      json eq = json::array();
      for (const auto& cls : R.classes) {
        const Squaring& sq = cls.representative.squaring;
        if (sq.m == 6 && sq.n == 3) {
          const auto w = gammal1_equivalent(sq, sigma_omega());
          eq.push_back(w ? to_json(*w) : json(nullptr));
        } else {
          eq.push_back(nullptr);
        }
      }
      out["equivalence_to_sigma_omega"] = eq;
      if (search_json) {
        print(out);
      } else {
        std::cout << "m=" << search_m << ": " << R.classes.size() << " class(es); " << R.transitive_subgroups
                  << " transitive subgroups, " << R.targets << " targets, " << R.candidates << " candidates\n";
        for (std::size_t i = 0; i < R.classes.size(); ++i)
          std::cout << "class " << i << ": A=" << to_string(R.classes[i].representative.a_params)
                    << " n=" << R.classes[i].representative.squaring.n << " merged "
                    << R.classes[i].witnesses.size() << " candidates; sigma_omega witness "
                    << eq[i].dump() << "\n";
        for (const auto& line : R.log) std::cout << line << "\n";
      }
      return 0;
    }
    if (*v_num) return emit_reports({verify_unexpected(max_m)});
    if (*v_lem) return emit_reports(lemma_suite(level == "fast" ? SuiteLevel::Fast : SuiteLevel::Exhaustive));
    if (*equiv) {
      const Squaring a = load_squaring(read_file(fa)), b = load_squaring(read_file(fb));
      if (a.m != b.m || a.n != b.n) throw UsageError("squarings have different dimensions");
      if (gl) {
        const GlResult r = gl_equivalent(a, b, budget);
        json out = {{"mode", "gl"}, {"nodes", r.nodes}};
        if (r.status == GlStatus::BudgetExceeded) {
          out["status"] = "budget-exceeded";
          print(out);
          return 1;
        }
        out["equivalent"] = r.status == GlStatus::Found;
        if (r.witness) out["witness"] = to_json(*r.witness);
        print(out);
        return 0;
      }
      const auto w = gammal1_equivalent(a, b);
      json out = {{"mode", "gammal1"}, {"equivalent", w.has_value()}};
      if (w) out["witness"] = to_json(*w);
      print(out);
      return 0;
    }
    if (*exp) {
      const GroupSpec spec = load_group_spec(read_file(export_spec));
      if (export_format == "pc") std::cout << export_pc_presentation(spec);
      else print(to_json(spec));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    print(json{{"claim", "internal consistency"}, {"range", "this run"}, {"violations", {e.what()}}});
    return 1;
  }
  return 2;
}
