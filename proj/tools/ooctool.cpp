// Batch front end: verify / profile / bounds / construct / search / convert /
// canonical / equivalent over the JSON family interchange format.
// Exit codes: 0 success, 1 domain failure (violation, infeasible, not
// equivalent), 2 usage or document format error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ooc/bounds.hpp"
#include "ooc/constructions.hpp"
#include "ooc/conversions.hpp"
#include "ooc/differences.hpp"
#include "ooc/family.hpp"
#include "ooc/json_io.hpp"
#include "ooc/search.hpp"

using ooc::Json;

namespace {

struct Options {
  std::string input;
  std::string input2;
  int la = 0;
  int lc = 0;
  double budget = 60.0;
  bool bits = false;
  bool json = false;

  std::vector<int> numbers;
  std::string kind;
  int t = 2;
  int lambda = 1;
  int k = 0;
  int m = 0;
  int subgroup = 1;
};

void print_bitstrings(const ooc::OocFamily& f) {
  for (const auto& c : f.codewords()) std::cout << c.bitstring() << "\n";
}

Json family_document(const ooc::OocFamily& f, Json meta, bool bits) {
  if (bits) {
    Json arr = Json::array();
    for (const auto& c : f.codewords()) arr.push_back(c.bitstring());
    meta["bitstrings"] = std::move(arr);
  }
  return ooc::family_to_json(f, std::move(meta));
}

int cmd_verify(const Options& opt) {
  auto doc = ooc::load_family_document(opt.input);
  const auto& f = doc.family;
  auto result = ooc::verify_ooc(f, opt.la, opt.lc);
  const bool nondeg = ooc::is_nondegenerate(f);
  std::optional<ooc::Properness> proper;
  if (result.ok) proper = ooc::properness(f, opt.la, opt.lc);

  if (opt.json) {
    Json out;
    out["ok"] = result.ok;
    out["v"] = f.modulus();
    out["w"] = f.weight();
    out["N"] = f.size();
    out["claimed"] = {{"lambda_a", opt.la}, {"lambda_c", opt.lc}};
    out["measured"] = {{"lambda_a", f.lambda_a()}, {"lambda_c", f.lambda_c()}};
    out["nondegenerate"] = nondeg;
    out["a_proper"] = proper ? Json(proper->a_proper) : Json(nullptr);
    out["c_proper"] = proper ? Json(proper->c_proper) : Json(nullptr);
    Json violations = Json::array();
    for (const auto& violation : result.violations) {
      Json item;
      item["kind"] = violation.kind == ooc::Violation::Kind::Auto ? "auto" : "cross";
      item["i"] = violation.i;
      if (violation.j >= 0) item["j"] = violation.j;
      item["delta"] = violation.delta;
      item["count"] = violation.count;
      violations.push_back(std::move(item));
    }
    out["violations"] = std::move(violations);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "v=" << f.modulus() << " w=" << f.weight() << " N=" << f.size()
              << " lambda_a=" << f.lambda_a() << " lambda_c=" << f.lambda_c()
              << " (claimed " << opt.la << "," << opt.lc << ")\n";
    std::cout << "non-degenerate: " << (nondeg ? "yes" : "no") << "\n";
    if (proper)
      std::cout << "a-proper: " << (proper->a_proper ? "yes" : "no")
                << "  c-proper: " << (proper->c_proper ? "yes" : "no") << "\n";
    if (opt.bits) print_bitstrings(f);
    if (result.ok) {
      std::cout << "ok\n";
    } else {
      for (size_t i = 0; i < result.violations.size() && i < 10; ++i) {
        const auto& violation = result.violations[i];
        if (violation.kind == ooc::Violation::Kind::Auto)
          std::cout << "auto violation: codeword " << violation.i << " delta " << violation.delta
                    << " count " << violation.count << " > " << opt.la << "\n";
        else
          std::cout << "cross violation: pair (" << violation.i << "," << violation.j
                    << ") delta " << violation.delta << " count " << violation.count << " > "
                    << opt.lc << "\n";
      }
      if (result.violations.size() > 10)
        std::cout << "... " << result.violations.size() - 10 << " more\n";
    }
  }
  return result.ok ? 0 : 1;
}

int cmd_profile(const Options& opt) {
  auto doc = ooc::load_family_document(opt.input);
  const auto& f = doc.family;
  if (opt.json) {
    Json out;
    out["v"] = f.modulus();
    Json autos = Json::array();
    for (const auto& c : f.codewords()) autos.push_back(ooc::auto_profile(c).entries);
    out["auto"] = std::move(autos);
    Json crosses = Json::array();
    for (int i = 0; i < f.size(); ++i)
      for (int j = i + 1; j < f.size(); ++j) {
        Json item;
        item["i"] = i;
        item["j"] = j;
        item["entries"] = ooc::cross_profile(f.at(i), f.at(j)).entries;
        crosses.push_back(std::move(item));
      }
    out["cross"] = std::move(crosses);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (int i = 0; i < f.size(); ++i) {
    if (opt.bits) std::cout << f.at(i).bitstring() << "\n";
    std::cout << "auto " << i << " (delta 1.." << f.modulus() - 1 << "):";
    for (int e : ooc::auto_profile(f.at(i)).entries) std::cout << " " << e;
    std::cout << "\n";
  }
  for (int i = 0; i < f.size(); ++i)
    for (int j = i + 1; j < f.size(); ++j) {
      std::cout << "cross (" << i << "," << j << ") (delta 0.." << f.modulus() - 1 << "):";
      for (int e : ooc::cross_profile(f.at(i), f.at(j)).entries) std::cout << " " << e;
      std::cout << "\n";
    }
  return 0;
}

void print_bound_line(const char* name, const ooc::BoundEntry& entry, bool upper) {
  std::cout << name << ": ";
  if (!entry.applicable) {
    std::cout << "inapplicable (" << entry.note << ")\n";
    return;
  }
  std::cout << ooc::rational_string(entry.value);
  if (upper)
    std::cout << "  floor=" << ooc::floor_to_int(entry.value);
  else
    std::cout << "  int=" << ooc::size_lower_int(entry.value);
  std::cout << "\n";
}

Json bound_json(const ooc::BoundEntry& entry, bool upper) {
  Json out;
  out["applicable"] = entry.applicable;
  if (entry.applicable) {
    out["value"] = ooc::rational_string(entry.value);
    out["int"] = upper ? ooc::floor_to_int(entry.value) : ooc::size_lower_int(entry.value);
  } else {
    out["note"] = entry.note;
  }
  return out;
}

int cmd_bounds(const Options& opt) {
  const int v = opt.numbers[0], w = opt.numbers[1], la = opt.numbers[2], lc = opt.numbers[3];
  auto report = ooc::bound_report(v, w, la, lc);
  if (opt.json) {
    Json out;
    out["v"] = v;
    out["w"] = w;
    out["lambda_a"] = la;
    out["lambda_c"] = lc;
    out["johnson"] = bound_json(report.johnson, true);
    out["yang_fuja"] = bound_json(report.yang_fuja, true);
    out["gv_lower"] = bound_json(report.gv_lower, false);
    out["csw_lower"] = bound_json(report.csw_lower, false);
    out["fm_lower"] = bound_json(report.fm_lower, false);
    out["lambda_a_min"] = {{"value", ooc::rational_string(report.la_min)},
                           {"ceil", ooc::ceil_to_int(report.la_min)}};
    out["lambda_c_min"] = {{"value", ooc::rational_string(report.lc_min)},
                           {"ceil", ooc::ceil_to_int(report.lc_min)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "parameters: v=" << v << " w=" << w << " lambda_a=" << la << " lambda_c=" << lc
            << "\n";
  print_bound_line("johnson", report.johnson, true);
  print_bound_line("yang_fuja", report.yang_fuja, true);
  print_bound_line("gv_lower", report.gv_lower, false);
  print_bound_line("csw_lower", report.csw_lower, false);
  print_bound_line("fm_lower", report.fm_lower, false);
  std::cout << "lambda_a_min: " << ooc::rational_string(report.la_min)
            << "  ceil=" << ooc::ceil_to_int(report.la_min) << "\n";
  std::cout << "lambda_c_min: " << ooc::rational_string(report.lc_min)
            << "  ceil=" << ooc::ceil_to_int(report.lc_min) << "\n";
  return 0;
}

int cmd_construct(const Options& opt) {
  auto id = ooc::family_id_from_string(opt.kind);
  if (!id) {
    std::cerr << "error: unknown family id: " << opt.kind << "\n";
    return 2;
  }
  ooc::ConstructionRecipe recipe{*id, opt.numbers, std::nullopt};
  ooc::OocFamily f = ooc::construct(recipe);
  if (!ooc::verify_ooc(f, f.lambda_a(), f.lambda_c()).ok)
    throw std::logic_error("construct: emitted family failed re-verification");
  Json meta;
  meta["construction"] = opt.kind;
  meta["params"] = opt.numbers;
  meta["lambda_a"] = f.lambda_a();
  meta["lambda_c"] = f.lambda_c();
  std::cout << family_document(f, std::move(meta), opt.bits).dump() << "\n";
  return 0;
}

int cmd_search(const Options& opt) {
  const int v = opt.numbers[0], w = opt.numbers[1], la = opt.numbers[2], lc = opt.numbers[3];
  auto result = ooc::phi_search(v, w, la, lc, opt.budget);
  if (!result.witness) {
    std::cerr << "no codeword satisfies the auto-correlation constraint (phi = 0)\n";
    return 1;
  }
  Json meta;
  meta["phi"] = result.phi;
  meta["exhaustive"] = result.exhaustive;
  meta["nodes"] = result.nodes;
  meta["seconds"] = result.seconds;
  meta["lambda_a"] = la;
  meta["lambda_c"] = lc;
  std::cout << family_document(*result.witness, std::move(meta), opt.bits).dump() << "\n";
  return 0;
}

int cmd_convert(const Options& opt) {
  const std::string& kind = opt.kind;
  if (kind == "packing") {
    auto doc = ooc::load_family_document(opt.input);
    auto packing = ooc::ooc_to_packing(doc.family, opt.t);
    std::cout << ooc::packing_to_json(packing).dump() << "\n";
    return 0;
  }
  if (kind == "from_packing") {
    auto packing = ooc::load_packing_document(opt.input);
    auto result = ooc::packing_to_ooc(packing);
    Json meta;
    meta["from"] = "packing";
    meta["short_orbits_dropped"] = result.short_orbits_dropped;
    if (result.short_orbits_dropped > 0)
      std::cerr << "warning: dropped " << result.short_orbits_dropped << " short orbit(s)\n";
    std::cout << family_document(result.family, std::move(meta), opt.bits).dump() << "\n";
    return 0;
  }
  if (kind == "cwcpc") {
    auto doc = ooc::load_family_document(opt.input);
    std::cout << ooc::cwcpc_to_json(ooc::ooc_to_cwcpc(doc.family)).dump() << "\n";
    return 0;
  }
  if (kind == "from_cwcpc") {
    auto cw = ooc::load_cwcpc_document(opt.input);
    ooc::OocFamily f = ooc::cwcpc_to_ooc(cw);
    Json meta;
    meta["from"] = "cwcpc";
    meta["lambda_a"] = f.lambda_a();
    meta["lambda_c"] = f.lambda_c();
    std::cout << family_document(f, std::move(meta), opt.bits).dump() << "\n";
    return 0;
  }
  if (kind == "closure") {
    auto doc = ooc::load_family_document(opt.input);
    std::cout << ooc::cwcpc_to_json(ooc::cyclic_closure(doc.family)).dump() << "\n";
    return 0;
  }
  if (kind == "sdf_to_ooc" || kind == "sedf_to_ooc") {
    auto doc = ooc::load_family_document(opt.input);
    ooc::OocFamily f = kind == "sdf_to_ooc"
                           ? ooc::sdf_to_ooc(doc.family.codewords(), opt.lambda)
                           : ooc::sedf_to_ooc(doc.family.codewords(), opt.lambda);
    Json meta;
    meta["from"] = kind == "sdf_to_ooc" ? "sdf" : "sedf";
    meta["lambda"] = opt.lambda;
    meta["lambda_a"] = f.lambda_a();
    meta["lambda_c"] = f.lambda_c();
    std::cout << family_document(f, std::move(meta), opt.bits).dump() << "\n";
    return 0;
  }

  // Verdict-style checks: exit 0 on pass, 1 on fail.
  auto doc = ooc::load_family_document(opt.input);
  bool ok = false;
  Json extra = Json::object();
  if (kind == "cac") {
    ok = ooc::check_cac(doc.family);
  } else if (kind == "irs") {
    ok = ooc::check_irs(doc.family, opt.k, opt.m);
  } else if (kind == "df") {
    ok = ooc::check_df(doc.family.codewords(), opt.lambda);
  } else if (kind == "sdf") {
    auto verdict = ooc::check_sdf(doc.family.codewords(), opt.lambda);
    ok = verdict.ok;
    extra["proper"] = verdict.proper;
  } else if (kind == "rdf") {
    ok = ooc::check_rdf(doc.family.codewords(), opt.subgroup, opt.lambda);
  } else if (kind == "sedf") {
    ok = ooc::check_sedf(doc.family.codewords(), opt.lambda);
  } else {
    std::cerr << "error: unknown convert kind: " << kind << "\n";
    return 2;
  }

  if (opt.json) {
    Json out;
    out["check"] = kind;
    out["ok"] = ok;
    for (auto& [key, val] : extra.items()) out[key] = val;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << kind << ": " << (ok ? "true" : "false") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_canonical(const Options& opt) {
  auto doc = ooc::load_family_document(opt.input);
  ooc::OocFamily canon = ooc::canonical_form(doc.family);
  Json meta;
  meta["canonical"] = true;
  std::cout << family_document(canon, std::move(meta), opt.bits).dump() << "\n";
  return 0;
}

int cmd_equivalent(const Options& opt) {
  auto a = ooc::load_family_document(opt.input);
  auto b = ooc::load_family_document(opt.input2);
  bool eq = ooc::are_equivalent(a.family, b.family);
  if (opt.json) {
    Json out;
    out["equivalent"] = eq;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "equivalent: " << (eq ? "yes" : "no") << "\n";
  }
  return eq ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optical orthogonal code toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto* verify = app.add_subcommand("verify", "check a family against claimed bounds");
  verify->add_option("--input", opt.input, "family document")->required();
  verify->add_option("--la", opt.la, "claimed lambda_a")->required();
  verify->add_option("--lc", opt.lc, "claimed lambda_c")->required();

  auto* profile = app.add_subcommand("profile", "print correlation profiles");
  profile->add_option("--input", opt.input, "family document")->required();

  auto* bounds = app.add_subcommand("bounds", "exact rational bound report");
  bounds->add_option("params", opt.numbers, "v w lambda_a lambda_c")->expected(4);

  auto* construct = app.add_subcommand("construct", "emit a built-in family");
  construct
      ->add_option("id", opt.kind,
                   "block | appended | powers_of_two | t_family | coset | paley_sedf")
      ->required();
  construct->add_option("params", opt.numbers, "construction parameters");

  auto* search = app.add_subcommand("search", "exhaustive maximum-family search");
  search->add_option("params", opt.numbers, "v w lambda_a lambda_c")->expected(4);
  search->add_option("--budget", opt.budget, "wall-clock budget in seconds");

  auto* convert = app.add_subcommand("convert", "bridges to neighboring objects");
  convert
      ->add_option("kind", opt.kind,
                   "packing | from_packing | cwcpc | from_cwcpc | closure | cac | irs | df | "
                   "sdf | rdf | sedf | sdf_to_ooc | sedf_to_ooc")
      ->required();
  convert->add_option("--input", opt.input, "input document")->required();
  convert->add_option("--t", opt.t, "packing strength (default 2)");
  convert->add_option("--lambda", opt.lambda, "lambda for df/sdf/rdf/sedf");
  convert->add_option("--k", opt.k, "irs blocks");
  convert->add_option("--m", opt.m, "irs block length");
  convert->add_option("--n", opt.subgroup, "rdf subgroup order");

  auto* canonical = app.add_subcommand("canonical", "canonical form under equivalence");
  canonical->add_option("--input", opt.input, "family document")->required();

  auto* equivalent = app.add_subcommand("equivalent", "multiplier equivalence of two families");
  equivalent->add_option("--input", opt.input, "first family")->required();
  equivalent->add_option("--input2", opt.input2, "second family")->required();

  for (auto* sub : {verify, profile, bounds, construct, search, convert, canonical, equivalent}) {
    sub->add_flag("--bits", opt.bits, "print bitstring renderings");
    sub->add_flag("--json", opt.json, "machine-readable output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt);
    if (profile->parsed()) return cmd_profile(opt);
    if (bounds->parsed()) return cmd_bounds(opt);
    if (construct->parsed()) return cmd_construct(opt);
    if (search->parsed()) return cmd_search(opt);
    if (convert->parsed()) return cmd_convert(opt);
    if (canonical->parsed()) return cmd_canonical(opt);
    if (equivalent->parsed()) return cmd_equivalent(opt);
  } catch (const ooc::DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
