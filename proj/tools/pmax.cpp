#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pmax/autom.hpp"
#include "pmax/blackburn.hpp"
#include "pmax/error.hpp"
#include "pmax/group_io.hpp"
#include "pmax/maxclass.hpp"
#include "pmax/ring_module.hpp"
#include "pmax/selftest.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

enum Exit { kPass = 0, kUsage = 1, kViolation = 2, kRefused = 3, kBadInput = 4 };

using Json = nlohmann::ordered_json;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json envelope(const std::string& command) {
  Json j;
  j["tool"] = "pmax";
  j["version"] = kVersion;
  j["command"] = command;
  return j;
}

void merge(Json& into, const pmax::Report& rep) {
  const Json body = rep.to_json();
  for (const auto& [k, v] : body.items()) into[k] = v;
}

struct Input {
  std::string path;
  std::string digest;
  pmax::GroupPtr group;
};

// Reads and consistency-checks a group file.
Input load(const std::string& path) {
  Input in;
  in.path = path;
  const std::string text = pmax::read_text(path);
  in.digest = pmax::digest_hex(text);
  in.group = pmax::PcGroup::make_checked(pmax::parse_group_file(text));
  return in;
}

void describe_input(Json& j, const Input& in) {
  j["input"] = {{"path", in.path}, {"digest", in.digest}};
}

int exit_for(pmax::ErrorKind kind) {
  switch (kind) {
    case pmax::ErrorKind::InvalidInput:
    case pmax::ErrorKind::Inconsistent: return kBadInput;
    case pmax::ErrorKind::NotMaximalClass:
    case pmax::ErrorKind::PreconditionRefused: return kRefused;
    default: return kViolation;
  }
}

int fail(const std::string& command, const pmax::Error& e) {
  Json j = envelope(command);
  j["error"] = pmax::to_string(e.kind());
  j["message"] = e.what();
  emit(j);
  return exit_for(e.kind());
}

Json ring_tables(int p, int n) {
  pmax::RingModule ring(p, n);
  Json j;
  j["p"] = p;
  j["n"] = n;
  j["basis"] = "b_i = (theta-1)^(i-1), i = 1.." + std::to_string(n - 1);
  j["exponent_modulus"] = ring.exponent_modulus();
  Json binom = Json::array();
  for (int k = 0; k <= p; ++k) binom.push_back(ring.binomial(k));
  j["binomials"] = binom;
  Json pb = Json::array();
  Json theta = Json::array();
  for (int i = 0; i < ring.dimension(); ++i) {
    pb.push_back(ring.scale(ring.basis(i), p));
    theta.push_back(ring.theta_multiply(ring.basis(i)));
  }
  j["p_times_basis"] = pb;
  j["theta_times_basis"] = theta;
  j["abelian_invariants"] = pmax::module_abelian_invariants(p, n);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groups of maximal class: construction, analysis and automorphism verification", "pmax"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  int p = 0, n = 0;
  std::string out_path, model = "pc";
  bool nonmetabelian = false;
  std::uint64_t seed = pmax::DriverBudget{}.seed;
  std::int64_t search_budget = 1'000'000;
  auto* build = app.add_subcommand("build", "Write a group file for G'(p, n) or a searched nonmetabelian group");
  build->add_option("--p", p, "prime")->required();
  build->add_option("--n", n, "order exponent")->required();
  build->add_option("-o,--output", out_path, "output path (standard output if omitted)");
  build->add_option("--model", model, "pc: the group G'; ring: the module M")
      ->check(CLI::IsMember({"pc", "ring"}));
  build->add_flag("--nonmetabelian", nonmetabelian, "search for a nonmetabelian group of maximal class");
  build->add_option("--seed", seed, "search seed");
  build->add_option("--budget", search_budget, "search candidate budget");

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "Print order, class, l, r, t and the series");
  analyze->add_option("file", file, "group file")->required();

  std::string theorem;
  pmax::DriverBudget budget;
  auto* verify = app.add_subcommand("verify", "Run a theorem driver");
  verify->add_option("theorem", theorem, "metabelian | main1 | main2")
      ->required()
      ->check(CLI::IsMember({"metabelian", "main1", "main2"}));
  verify->add_option("file", file, "group file")->required();
  verify->add_option("--seed", budget.seed, "sampling seed");
  verify->add_option("--exhaustive-pairs", budget.exhaustive_pairs, "largest pair set enumerated completely");
  verify->add_option("--sampled-pairs", budget.sampled_pairs, "seeded pairs when sampling");
  verify->add_option("--commute-pairs", budget.commute_pairs, "commutation pair budget");
  verify->add_option("--closure-samples", budget.closure_samples, "sampled closure pairs for H");
  verify->add_option("--conjugation-members", budget.conjugation_members, "family members per conjugator");
  verify->add_option("--threads", budget.threads, "worker threads (0 = all cores)");
  verify->add_flag("--timings", budget.timings, "include stage timings (output no longer reproducible)");

  std::uint64_t selftest_seed = pmax::DriverBudget{}.seed;
  auto* selftest = app.add_subcommand("selftest", "Run the property suites");
  selftest->add_option("--seed", selftest_seed, "seed");

  auto* exporter = app.add_subcommand("export", "Dump model tables");
  exporter->add_option("--model", model, "ring")->required()->check(CLI::IsMember({"ring"}));
  exporter->add_option("--p", p, "prime")->required();
  exporter->add_option("--n", n, "order exponent")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*build) {
      pmax::PcPresentation pres(3, 1);
      Json info = envelope("build");
      if (nonmetabelian) {
        if (model != "pc") throw pmax::Error(pmax::ErrorKind::InvalidInput, "--nonmetabelian needs --model pc");
        auto found = pmax::search_nonmetabelian(p, n, seed, search_budget);
        info["search"] = {{"seed", seed}, {"budget", search_budget}, {"candidates", found.candidates},
                          {"found", found.found.has_value()}};
        if (!found.found) {
          emit(info);
          return kViolation;
        }
        pres = *found.found;
      } else {
        pres = model == "pc" ? pmax::blackburn_presentation(p, n) : pmax::module_presentation(p, n);
        pmax::PcGroup::make_checked(pres);
      }
      const std::string text = pmax::to_group_file(pres);
      if (out_path.empty()) {
        std::cout << text;
        return kPass;
      }
      std::ofstream f(out_path, std::ios::binary);
      if (!(f << text)) throw pmax::Error(pmax::ErrorKind::InvalidInput, "cannot write " + out_path);
      info["output"] = out_path;
      info["digest"] = pmax::digest_hex(text);
      emit(info);
      return kPass;
    }
    if (*analyze) {
      Input in = load(file);
      Json j = envelope("analyze");
      describe_input(j, in);
      auto mc = pmax::validate_maximal_class(*in.group);
      if (!mc.passed) {
        j["maximal_class"] = false;
        j["reason"] = mc.reason;
        emit(j);
        return kRefused;
      }
      merge(j, pmax::analysis_report(pmax::analyze(in.group)));
      emit(j);
      return kPass;
    }
    if (*verify) {
      Input in = load(file);
      Json j = envelope("verify " + theorem);
      describe_input(j, in);
      pmax::VerificationReport r = theorem == "metabelian" ? pmax::verify_thm_metabelian(in.group, budget)
                                   : theorem == "main1"    ? pmax::verify_thm_main1(in.group, budget)
                                                           : pmax::verify_thm_main2(in.group, budget);
      merge(j, r.report);
      emit(j);
      return r.exit_code();
    }
    if (*selftest) {
      Json j = envelope("selftest");
      pmax::Report r = pmax::run_selftest(selftest_seed);
      merge(j, r);
      emit(j);
      return r.passed() ? kPass : kViolation;
    }
    if (*exporter) {
      Json j = envelope("export");
      j["model"] = model;
      j["tables"] = ring_tables(p, n);
      emit(j);
      return kPass;
    }
  } catch (const pmax::Error& e) {
    return fail(app.get_subcommands().front()->get_name(), e);
  } catch (const std::exception& e) {
    Json j = envelope(app.get_subcommands().front()->get_name());
    j["error"] = "InvalidInput";
    j["message"] = e.what();
    emit(j);
    return kBadInput;
  }
  return kUsage;
}
