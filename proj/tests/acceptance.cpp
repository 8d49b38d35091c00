// Acceptance suite: one PASS/FAIL line per criterion. Exact equality
// everywhere; random samples use fixed seeds.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "hecke01/verify.hpp"
#include "oracles.hpp"

using namespace hecke01;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t instances = 0;
  std::string detail;  // first failure

  void check(bool ok, const std::string& what) {
    ++instances;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
  void absorb(const CheckRecord& rec, const std::string& group) {
    instances += rec.instances;
    if (rec.skipped) check(false, group + " " + rec.id + " skipped: " + rec.note);
    else if (!rec.passed()) check(false, group + " " + rec.id + ": " + rec.counterexample);
  }
};

CoxeterSystem load(const std::string& name) {
  return load_group_spec(std::filesystem::path(HECKE01_GROUPS_DIR) / (name + ".json"));
}

std::vector<int> ints(const Word& w) { return std::vector<int>(w.begin(), w.end()); }

VerifyOptions options(std::size_t max_length = 12) {
  VerifyOptions o;
  o.max_length = max_length;
  o.seed = 20240601;
  o.random_samples = 500;
  o.sweep_samples = 200;
  o.expression_length = 8;
  return o;
}

// 1. canonical() against the bar-invariance solve.
Outcome canonical_basis() {
  Outcome out;
  for (const char* name : {"b2_01", "g2_01", "a2_11", "b2_11"}) {
    CoxeterSystem sys = load(name);
    CoxeterGroup group(sys);
    GroupAlgebra alg(group);
    oracle::DihedralHecke d(sys.order(0, 1), sys.weight(0), sys.weight(1));
    for (const Element& w : enumerate_elements(group, 12, 100).elements) {
      auto expected = d.canonical(d.product(ints(w.word)));
      const HeckeElt& got = alg.canonical(w);
      bool same = got.size() == expected.size();
      for (const auto& [y, p] : got.terms()) {
        auto it = expected.find(d.product(ints(y.word)));
        if (it == expected.end() || p.size() != it->second.size()) {
          same = false;
          continue;
        }
        for (auto [k, c] : it->second) same = same && p.coeff(k) == c;
      }
      out.check(same, std::string(name) + " w = " + describe(w));
    }
  }
  return out;
}

// 2. rho(c'_w) = c_w and rho multiplicative.
Outcome rho() {
  Outcome out;
  for (auto [name, max_length] : {std::pair{"b2_01", 12}, {"g2_01", 12}, {"b3_100", 12}, {"inf_01", 6}}) {
    Verifier v(load(name), options(max_length));
    out.absorb(v.rho_canonical(), name);
    out.absorb(v.rho_multiplicative(), name);
  }
  return out;
}

// 3. T_g c_w = c_gw and c_w T_g = c_wg, exhaustively.
Outcome translation() {
  Outcome out;
  for (auto [name, order] : {std::pair{"b2_01", 8u}, {"g2_01", 12u}, {"b3_100", 48u}}) {
    Verifier v(load(name), options());
    out.check(v.elements().size() == order, std::string(name) + " has the wrong order");
    out.absorb(v.translate(), name);
  }
  return out;
}

// 4. Every reduced expression: c_w with multiplicity 1, lower support,
// positive bar-symmetric multiplicities, and the same multiplicity map.
Outcome reduced_expressions() {
  Outcome per_expression;
  std::size_t elements = 0, differing = 0;
  std::string first_difference;
  for (auto [name, max_length] : {std::pair{"b2_01", 12}, {"g2_01", 12}, {"b3_100", 6}}) {
    CoxeterGroup group(load(name));
    GroupAlgebra alg(group);
    for (const Element& w : enumerate_elements(group, max_length, 1000).elements) {
      ++elements;
      std::optional<DecompositionReport> first;
      bool same = true;
      for (const Word& expr : reduced_words(group, w)) {
        DecompositionReport rep = decompose_bs(alg, expr);
        per_expression.check(rep.all_ok() && rep.top == w, std::string(name) + " expr " + describe(expr));
        if (!first) {
          first = rep;
        } else if (same && first->multiplicities != rep.multiplicities) {
          same = false;
          if (first_difference.empty()) {
            std::ostringstream why;
            why << name << " w = " << describe(w) << ":";
            for (const auto* r : {&*first, &rep}) {
              why << " expr " << describe(r->expr) << " ->";
              for (const auto& [x, p] : r->multiplicities) why << " c_{" << describe(x) << "}*(" << p << ")";
              why << ";";
            }
            first_difference = why.str();
          }
        }
      }
      if (!same) ++differing;
    }
  }
  Outcome out = per_expression;
  std::ostringstream summary;
  summary << "per-expression conditions " << (per_expression.pass ? "hold" : "fail") << " on "
          << per_expression.instances << " expressions";
  if (!per_expression.pass) summary << " (" << per_expression.detail << ")";
  summary << "; multiplicity maps differ across reduced expressions for " << differing << " of " << elements
          << " elements";
  if (differing > 0) summary << ", e.g. " << first_difference;
  out.pass = per_expression.pass && differing == 0;
  out.detail = summary.str();
  return out;
}

// 5. S' by both constructions, palindromes, induced matrices.
Outcome dyer() {
  Outcome out;
  for (const char* name : {"b2_01", "g2_01", "b3_100", "b3_011", "inf_01", "a2_11"}) {
    Verifier v(load(name), options());
    out.absorb(v.sprime_characterizations(), name);
    out.absorb(v.sprime_palindromes(), name);
    if (v.group().rank() == 2 && v.group().weight(0) != v.group().weight(1)) out.absorb(v.dihedral_halving(), name);
  }
  for (auto [name, expected] : {std::pair{"b2_01", 2}, {"g2_01", 3}, {"inf_01", kInfinity}}) {
    CoxeterGroup group(load(name));
    SubgroupData data = build_subgroup(group, 2000, 200);
    out.check(data.sprime.size() == 2 && data.matrix[0][1] == expected,
              std::string(name) + " m' = " + std::to_string(data.matrix.at(0).at(1)));
  }
  return out;
}

// 6. Both parts of the Bruhat lifting lemma, exhaustively.
Outcome lifting() {
  Outcome out;
  for (const char* name : {"b2_01", "g2_01", "b3_100"}) {
    Verifier v(load(name), options());
    out.absorb(v.lift_length(), name);
    out.absorb(v.lift_length_parabolic(), name);
    out.check(v.subgroup_elements().size() * v.t1_reflections().size() > 0, std::string(name) + " is empty");
  }
  return out;
}

// 7. Sweep normal forms reproduce the character.
Outcome sweep() {
  Outcome out;
  for (const char* name : {"b2_01", "g2_01", "b3_100", "b3_011", "inf_01", "a2_11"}) {
    Verifier v(load(name), options(8));
    out.absorb(v.sweep_right(), name);
    out.absorb(v.sweep_left(), name);
  }
  return out;
}

// 8. Inversion counts, Bruhat order, associativity, bar.
Outcome substrate() {
  Outcome out;
  for (const char* name : {"b2_01", "g2_01", "a3_111", "b3_100"}) {
    CoxeterSystem sys = load(name);
    Verifier v(sys, options());
    oracle::MatrixGroup model(sys.coxeter_matrix());
    for (const Element& w : v.elements()) {
      out.check(model.inversion_count(ints(w.word)) == static_cast<int>(w.length()) &&
                    inversions(sys, w).size() == w.length(),
                std::string(name) + " n(w) != l(w) at " + describe(w));
    }
    out.check(v.elements().size() == model.order(), std::string(name) + " enumeration incomplete");
    if (std::string(name) != "b3_100")
      for (const Element& x : v.elements())
        for (const Element& y : v.elements())
          out.check(bruhat_leq(v.group(), x, y) == model.subword_leq(ints(x.word), ints(y.word)),
                    std::string(name) + " x = " + describe(x) + ", y = " + describe(y));
    out.absorb(v.hecke_associativity(), name);
    out.absorb(v.bar_involution(), name);
    out.absorb(v.bar_multiplicative(), name);
  }
  return out;
}

// 9. Equal weights: p_yw = v^(l(w)-l(y)) by the oracle; zero weights: one term.
Outcome degenerate() {
  Outcome out;
  for (int m : {3, 4, 5, 6}) {
    CoxeterGroup group(CoxeterSystem({{1, m}, {m, 1}}, {1, 1}));
    GroupAlgebra alg(group);
    oracle::DihedralHecke d(m, 1, 1);
    for (const Element& w : enumerate_elements(group, 12, 100).elements) {
      auto expected = d.canonical(d.product(ints(w.word)));
      for (const auto& [y, p] : expected) {
        int gap = w.length() - y.len;
        out.check(p == oracle::Poly{{gap, 1}}, "oracle at m = " + std::to_string(m));
      }
      const HeckeElt& c = alg.canonical(w);
      out.check(c.size() == expected.size(), "m = " + std::to_string(m) + " w = " + describe(w));
      for (const auto& [y, p] : c.terms())
        out.check(p == LaurentPoly::power(static_cast<int>(w.length() - y.length())),
                  "m = " + std::to_string(m) + " w = " + describe(w) + " y = " + describe(y));
    }
  }
  for (const char* name : {"b2_00"}) {
    Verifier v(load(name), options(8));
    out.absorb(v.degenerate_zero(), name);
  }
  {
    CoxeterSystem sys({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}, {0, 0, 0});
    Verifier v(sys, options(8));
    oracle::MatrixGroup model(sys.coxeter_matrix());
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
      Word expr = v.random_word(rng, 8, 3);
      HeckeElt ch = bs_character(v.algebra(), expr);
      bool ok = ch.size() == 1 && ch.terms().begin()->second == LaurentPoly(1) &&
                model.key_of(ints(ch.terms().begin()->first.word)) == model.key_of(ints(expr));
      out.check(ok, "A3 zero weights expr " + describe(expr));
    }
    out.absorb(v.degenerate_zero(), "a3_000");
  }
  for (const char* name : {"a2_11", "b2_11", "a3_111"}) {
    Verifier v(load(name), options(8));
    out.absorb(v.degenerate_equal(), name);
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "canonical basis equals bar-invariance solve (B2, G2 at (0,1); A2, B2 equal weights)", canonical_basis},
      {2, "rho(c'_w) = c_w and rho multiplicative (B2, G2, B3, infinite dihedral with n_1 <= 6)", rho},
      {3, "T_g c_w = c_gw and c_w T_g = c_wg for all g in W_{S_0}, all w (B2, G2, B3)", translation},
      {4, "reduced expressions: c_w once, lower support, positive bar-symmetric, expression-independent",
       reduced_expressions},
      {5, "S' constructions agree, palindromes, m' = 2, 3, infinity", dyer},
      {6, "Bruhat lifting lemma parts (1) and (2) (B2, G2, B3)", lifting},
      {7, "sweep normal forms reproduce characters (200 expressions of length <= 8 per group)", sweep},
      {8, "n(w) = l(w), Bruhat = subword order, associativity, bar involution and multiplicativity", substrate},
      {9, "equal weights give p_yw = v^(l(w)-l(y)); zero weights give one standard term", degenerate},
  };
  auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  [" << o.instances
              << " instances, " << std::fixed << std::setprecision(2) << secs << "s]";
    if (!o.pass) std::cout << "\n      first failure: " << o.detail;
    std::cout << std::endl;
    if (!o.pass) ++failed;
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = total < 60.0;
  std::cout << (in_time ? "PASS" : "FAIL") << "  time budget: all criteria in " << std::fixed << std::setprecision(2)
            << total << "s (limit 60s)" << std::endl;
  if (!in_time) ++failed;
  return failed == 0 ? 0 : 1;
}
