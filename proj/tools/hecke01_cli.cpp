// hecke01: canonical bases, reflection subgroups and Bott-Samelson
// characters for Hecke algebras with 0/1 weights.
//
// Exit status: 0 success, 1 failed check or internal error, 2 bad input.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hecke01/verify.hpp"

namespace fs = std::filesystem;
using namespace hecke01;

namespace {

struct Common {
  std::string group;
  std::string out;
  std::string cache;
  std::string format = "json";
  std::size_t max_length = 12;
  std::size_t cap = 2000;
  std::size_t root_cap = 200;
  std::uint64_t seed = 1;
};

void emit(const Common& opt, const std::string& text) {
  if (opt.out.empty()) std::cout << text;
  else write_atomically(opt.out, text);
}

// "1 4; 4 1" -> rows of integers.
std::vector<std::vector<int>> parse_matrix(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::stringstream all(text);
  std::string row;
  while (std::getline(all, row, ';')) {
    std::stringstream ss(row);
    std::vector<int> r;
    std::string tok;
    while (ss >> tok) {
      try {
        std::size_t used = 0;
        r.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidInput, "matrix entry '" + tok + "' is not an integer");
      }
    }
    if (!r.empty()) rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<int> parse_ints(const std::string& text) {
  auto rows = parse_matrix(text);
  if (rows.size() != 1) throw Error(ErrorCode::InvalidInput, "expected one row of integers");
  return rows[0];
}

std::vector<std::string> split_names(const std::string& text) {
  std::stringstream ss(text);
  std::vector<std::string> names;
  for (std::string tok; ss >> tok;) names.push_back(tok);
  return names;
}

void attach_cache(GroupAlgebra& alg, const Common& opt) {
  if (!opt.cache.empty() && fs::exists(opt.cache)) load_cache(alg, read_file(opt.cache));
}

void store_cache(const GroupAlgebra& alg, const Common& opt) {
  if (opt.cache.empty()) return;
  write_atomically(opt.cache, kl_table_json(alg.cache(), kDefaultLengthCap).dump(1) + "\n");
}

int cmd_define(const Common& opt, const std::string& matrix, const std::string& weights, const std::string& name,
               const std::string& generators) {
  CoxeterSystem sys = [&] {
    if (!opt.group.empty()) return load_group_spec(opt.group);
    if (matrix.empty() || weights.empty())
      throw Error(ErrorCode::InvalidInput, "define needs --group, or --matrix and --weights");
    return CoxeterSystem(parse_matrix(matrix), parse_ints(weights), split_names(generators), name);
  }();
  Json j = group_spec_json(sys);
  j["fingerprint"] = fingerprint(sys);
  emit(opt, j.dump(1) + "\n");
  return 0;
}

int cmd_kl(const Common& opt) {
  CoxeterGroup group(load_group_spec(opt.group));
  GroupAlgebra alg(group, fingerprint(group.system()));
  attach_cache(alg, opt);
  for (const Element& w : enumerate_elements(group, opt.max_length, opt.cap).elements) alg.canonical(w);
  if (opt.format == "csv") emit(opt, kl_table_csv(alg.cache(), opt.max_length));
  else emit(opt, kl_table_json(alg.cache(), opt.max_length).dump(1) + "\n");
  store_cache(alg, opt);
  return 0;
}

int cmd_subgroup(const Common& opt) {
  CoxeterGroup group(load_group_spec(opt.group));
  SubgroupData data = build_subgroup(group, opt.cap, opt.root_cap);
  ReflectionSubgroup sub(group, data);
  std::optional<std::size_t> order;
  try {
    SubgroupEnumeration e = enumerate_subgroup(sub, opt.max_length, opt.cap);
    if (e.complete) order = e.elements.size();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
  }
  Json j = subgroup_json(data, order);
  emit(opt, j.dump(1) + "\n");
  return 0;
}

int cmd_bs(const Common& opt, const std::string& expr_text) {
  CoxeterGroup group(load_group_spec(opt.group));
  Word expr = parse_expression(group.system(), expr_text);
  GroupAlgebra alg(group, fingerprint(group.system()));
  attach_cache(alg, opt);
  DecompositionReport rep = decompose_bs(alg, expr);
  std::optional<SweepNormalForm> nf;
  try {
    SubgroupData data = build_subgroup(group, opt.cap, opt.root_cap);
    nf = sweep_normalize(group, data, expr);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
  }
  emit(opt, decomposition_json(rep, nf).dump(1) + "\n");
  store_cache(alg, opt);
  return rep.all_ok() ? 0 : 1;
}

int cmd_verify(const Common& opt, const std::string& suite_name) {
  Suite suite = parse_suite(suite_name);
  CoxeterSystem sys = load_group_spec(opt.group);
  VerifyOptions vo;
  vo.max_length = opt.max_length;
  vo.cap = opt.cap;
  vo.root_cap = opt.root_cap;
  vo.seed = opt.seed;
  Verifier verifier(sys, vo);
  attach_cache(verifier.algebra(), opt);
  VerifyReport rep = verifier.run(suite);
  emit(opt, report_json(rep).dump(1) + "\n");
  for (const CheckRecord& c : rep.checks) {
    const char* status = c.skipped ? "SKIP" : c.passed() ? "PASS" : "FAIL";
    std::cerr << status << "  " << c.id << "  (" << c.instances << " instances)";
    if (!c.passed()) std::cerr << "  first counterexample: " << c.counterexample;
    std::cerr << "\n";
  }
  store_cache(verifier.algebra(), opt);
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical bases and Soergel characters for Hecke algebras with 0/1 weights"};
  app.require_subcommand(1);
  Common opt;
  auto add_common = [&](CLI::App* cmd, bool needs_group) {
    auto* g = cmd->add_option("--group", opt.group, "group specification file (JSON)");
    if (needs_group) g->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", opt.out, "output file (default: stdout)");
    cmd->add_option("--max-length", opt.max_length, "largest length considered")->capture_default_str();
    cmd->add_option("--cap", opt.cap, "element cap")->capture_default_str();
    cmd->add_option("--root-cap", opt.root_cap, "positive roots enumerated for T_1")->capture_default_str();
  };

  std::string matrix, weights, name, generators;
  auto* define = app.add_subcommand("define", "validate a group and print its specification file");
  add_common(define, false);
  define->add_option("--matrix", matrix, "Coxeter matrix, rows separated by ';', 0 for infinity");
  define->add_option("--weights", weights, "weights, one 0/1 per generator");
  define->add_option("--name", name, "group name");
  define->add_option("--generators", generators, "generator names");

  auto* kl = app.add_subcommand("kl", "canonical basis table up to --max-length");
  add_common(kl, true);
  kl->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  kl->add_option("--cache", opt.cache, "cache file, read if present and rewritten");

  auto* subgroup = app.add_subcommand("subgroup", "S', its palindromes, the induced Coxeter matrix and |W'|");
  add_common(subgroup, true);

  std::string expr;
  auto* bs = app.add_subcommand("bs", "decompose the Bott-Samelson character of an expression");
  add_common(bs, true);
  bs->add_option("expr,--expr", expr, "generator names or 1-based indices, whitespace separated");
  bs->add_option("--cache", opt.cache, "cache file, read if present and rewritten");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a verification suite and write a JSON report");
  add_common(verify, true);
  verify->add_option("--suite", suite, "bruhat, rho, translate, theorem or all")->capture_default_str();
  verify->add_option("--seed", opt.seed, "random seed")->capture_default_str();
  verify->add_option("--cache", opt.cache, "cache file, read if present and rewritten");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*define) return cmd_define(opt, matrix, weights, name, generators);
    if (*kl) return cmd_kl(opt);
    if (*subgroup) return cmd_subgroup(opt);
    if (*bs) return cmd_bs(opt, expr);
    if (*verify) return cmd_verify(opt, suite);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
