#pragma once

// File formats: group specification files, canonical-basis tables and
// caches, and the JSON reports of the command-line tool. Generator indices
// in every file are 1-based.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hecke01/dyer.hpp"
#include "hecke01/soergel.hpp"

namespace hecke01 {

using Json = nlohmann::ordered_json;

inline constexpr int kCacheSchema = 1;

// ---------------------------------------------------------------------------
// Group specification files

namespace detail {

[[noreturn]] inline void spec_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, "group spec field '" + where + "': " + what);
}

inline int spec_int(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) spec_error(where, "expected an integer");
  return j.get<int>();
}

}  // namespace detail

/// Parses {"name", "rank", "coxeter_matrix", "weights"[, "generators"]}.
inline CoxeterSystem parse_group_spec(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("group spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) detail::spec_error("<root>", "expected an object");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) detail::spec_error("name", "expected a string");
    name = j["name"].get<std::string>();
  }
  if (!j.contains("rank")) detail::spec_error("rank", "missing");
  int rank = detail::spec_int(j["rank"], "rank");
  if (rank <= 0) detail::spec_error("rank", "must be positive");

  if (!j.contains("coxeter_matrix")) detail::spec_error("coxeter_matrix", "missing");
  const auto& jm = j["coxeter_matrix"];
  if (!jm.is_array() || jm.size() != static_cast<std::size_t>(rank))
    detail::spec_error("coxeter_matrix", "expected " + std::to_string(rank) + " rows");
  CoxeterSystem::Matrix matrix;
  for (std::size_t i = 0; i < jm.size(); ++i) {
    const std::string row_where = "coxeter_matrix[" + std::to_string(i) + "]";
    if (!jm[i].is_array() || jm[i].size() != static_cast<std::size_t>(rank))
      detail::spec_error(row_where, "expected " + std::to_string(rank) + " entries");
    std::vector<int> row;
    for (std::size_t k = 0; k < jm[i].size(); ++k)
      row.push_back(detail::spec_int(jm[i][k], row_where + "[" + std::to_string(k) + "]"));
    matrix.push_back(std::move(row));
  }

  if (!j.contains("weights")) detail::spec_error("weights", "missing");
  const auto& jw = j["weights"];
  if (!jw.is_array() || jw.size() != static_cast<std::size_t>(rank))
    detail::spec_error("weights", "expected " + std::to_string(rank) + " entries");
  std::vector<int> weights;
  for (std::size_t i = 0; i < jw.size(); ++i)
    weights.push_back(detail::spec_int(jw[i], "weights[" + std::to_string(i) + "]"));

  std::vector<std::string> names;
  if (j.contains("generators")) {
    const auto& jg = j["generators"];
    if (!jg.is_array() || jg.size() != static_cast<std::size_t>(rank))
      detail::spec_error("generators", "expected " + std::to_string(rank) + " names");
    for (std::size_t i = 0; i < jg.size(); ++i) {
      if (!jg[i].is_string() || jg[i].get<std::string>().empty())
        detail::spec_error("generators[" + std::to_string(i) + "]", "expected a non-empty string");
      names.push_back(jg[i].get<std::string>());
    }
  }
  return CoxeterSystem(std::move(matrix), std::move(weights), std::move(names), std::move(name));
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline CoxeterSystem load_group_spec(const std::filesystem::path& path) {
  return parse_group_spec(read_file(path));
}

inline Json group_spec_json(const CoxeterSystem& sys) {
  Json j;
  j["name"] = sys.name();
  j["rank"] = sys.rank();
  j["coxeter_matrix"] = sys.coxeter_matrix();
  j["weights"] = sys.weights();
  if (!sys.names().empty()) j["generators"] = sys.names();
  return j;
}

/// 64-bit FNV-1a of the group data (matrix and weights), as 16 hex digits.
inline std::string fingerprint(const CoxeterSystem& sys) {
  Json j;
  j["rank"] = sys.rank();
  j["coxeter_matrix"] = sys.coxeter_matrix();
  j["weights"] = sys.weights();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

/// Writes through a temporary file and a rename.
inline void write_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + tmp.string());
    out << content;
    if (!out) throw Error(ErrorCode::InvalidInput, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

// ---------------------------------------------------------------------------
// Words, expressions, polynomials

inline Json word_json(const Word& w) {
  Json j = Json::array();
  for (Generator s : w) j.push_back(static_cast<int>(s) + 1);
  return j;
}
inline Json word_json(const Element& w) { return word_json(w.word); }

inline Word word_from_json(const nlohmann::json& j, std::size_t rank, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, where + ": expected an array of generators");
  Word w;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 1 || x.get<long long>() > static_cast<long long>(rank))
      throw Error(ErrorCode::BadGenerator, where + ": generator out of range");
    w.push_back(static_cast<Generator>(x.get<int>() - 1));
  }
  return w;
}

/// Whitespace-separated generator names or 1-based indices.
inline Word parse_expression(const CoxeterSystem& sys, const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  Word out;
  while (in >> tok) {
    const auto& names = sys.names();
    auto it = std::find(names.begin(), names.end(), tok);
    if (it != names.end()) {
      out.push_back(static_cast<Generator>(it - names.begin()));
      continue;
    }
    std::size_t used = 0;
    long long idx = 0;
    try {
      idx = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || idx < 1 || idx > static_cast<long long>(sys.rank()))
      throw Error(ErrorCode::BadGenerator, "unknown generator '" + tok + "'");
    out.push_back(static_cast<Generator>(idx - 1));
  }
  return out;
}

/// {"-1": 1, "1": 1} for v^-1 + v.
inline Json laurent_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

inline LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "polynomial: expected an object");
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != key.size() || std::to_string(e) != key)
      throw Error(ErrorCode::InvalidInput, "polynomial: bad exponent '" + key + "'");
    if (!value.is_number_integer() || value.get<long long>() == 0)
      throw Error(ErrorCode::InvalidInput, "polynomial: coefficient must be a nonzero integer");
    p.add_term(e, value.get<long long>());
  }
  return p;
}

inline Json hecke_terms_json(const HeckeElt& h) {
  Json terms = Json::array();
  for (const auto& [y, p] : h.terms()) terms.push_back(Json{{"y", word_json(y)}, {"poly", laurent_json(p)}});
  return terms;
}

// ---------------------------------------------------------------------------
// Canonical-basis tables and caches

/// {"group", "schema", "entries": [{"w", "terms": [{"y", "poly"}]}]}, sorted by (length, word).
inline Json kl_table_json(const CanonicalCache& cache, std::size_t max_length) {
  Json j;
  j["group"] = cache.fingerprint;
  j["schema"] = kCacheSchema;
  Json entries = Json::array();
  for (const auto& [w, c] : cache.entries) {
    if (w.length() > max_length) continue;
    entries.push_back(Json{{"w", word_json(w)}, {"terms", hecke_terms_json(c)}});
  }
  j["entries"] = std::move(entries);
  return j;
}

inline std::string kl_table_csv(const CanonicalCache& cache, std::size_t max_length) {
  std::ostringstream os;
  os << "w,y,poly\n";
  auto render = [](const Element& x) {
    std::string s;
    for (std::size_t i = 0; i < x.word.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(static_cast<int>(x.word[i]) + 1);
    }
    return s;
  };
  for (const auto& [w, c] : cache.entries) {
    if (w.length() > max_length) continue;
    for (const auto& [y, p] : c.terms()) os << render(w) << ',' << render(y) << ",\"" << p.to_string() << "\"\n";
  }
  return os.str();
}

/// Loads a cache file into `alg`. Every entry is re-checked against the
/// defining conditions of c_w, which by uniqueness certifies it; anything
/// else (wrong group, unknown schema, malformed or wrong entries) is a
/// CacheMismatch.
inline void load_cache(GroupAlgebra& alg, const std::string& text) {
  const std::string& expected = alg.cache().fingerprint;
  const std::size_t rank = alg.group().rank();
  std::map<Element, HeckeElt> entries;
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("schema") || !j["schema"].is_number_integer() ||
        j["schema"].get<int>() != kCacheSchema)
      throw Error(ErrorCode::CacheMismatch, "unknown cache schema");
    if (!j.contains("group") || !j["group"].is_string() || j["group"].get<std::string>() != expected)
      throw Error(ErrorCode::CacheMismatch, "cache belongs to a different group");
    for (const auto& entry : j.at("entries")) {
      Element w(word_from_json(entry.at("w"), rank, "w"));
      HeckeElt c;
      for (const auto& term : entry.at("terms"))
        c.add_term(Element(word_from_json(term.at("y"), rank, "y")), laurent_from_json(term.at("poly")));
      entries.emplace(std::move(w), std::move(c));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CacheMismatch) throw;
    throw Error(ErrorCode::CacheMismatch, e.what());
  } catch (const std::exception& e) {
    throw Error(ErrorCode::CacheMismatch, std::string("malformed cache: ") + e.what());
  }
  for (const auto& [w, c] : entries) {
    if (alg.group().normalize(w.word) != w)
      throw Error(ErrorCode::CacheMismatch, "cache entry is not in normal form");
    for (const auto& [y, p] : c.terms())
      if (alg.group().normalize(y.word) != y)
        throw Error(ErrorCode::CacheMismatch, "cache term is not in normal form");
    std::string why = alg.canonical_violation(w, c);
    if (!why.empty()) throw Error(ErrorCode::CacheMismatch, "cache entry fails the canonical-basis conditions: " + why);
  }
  for (auto& [w, c] : entries) alg.cache().entries.insert_or_assign(w, std::move(c));
}

// ---------------------------------------------------------------------------
// Reports

inline Json subgroup_json(const SubgroupData& data, const std::optional<std::size_t>& order) {
  Json j;
  Json sprime = Json::array();
  for (std::size_t i = 0; i < data.sprime.size(); ++i) {
    const Palindrome& p = data.palindromes[i];
    sprime.push_back(Json{{"word", word_json(data.sprime[i])},
                          {"palindrome", Json{{"prefix", word_json(p.prefix)}, {"middle", static_cast<int>(p.middle) + 1}}}});
  }
  j["sprime"] = std::move(sprime);
  j["matrix"] = data.matrix;
  if (order) j["order"] = *order;
  else j["order"] = "cap-exceeded";
  return j;
}

inline Json decomposition_json(const DecompositionReport& rep, const std::optional<SweepNormalForm>& sweep) {
  Json j;
  j["expr"] = word_json(rep.expr);
  j["character"] = hecke_terms_json(rep.character);
  Json mult = Json::array();
  for (const auto& [x, p] : rep.multiplicities) mult.push_back(Json{{"x", word_json(x)}, {"poly", laurent_json(p)}});
  j["multiplicities"] = std::move(mult);
  if (sweep) {
    Json factors = Json::array();
    for (std::size_t i : sweep->factors) factors.push_back(i + 1);
    j["sweep"] = Json{{"factors", std::move(factors)}, {"tail", word_json(sweep->tail)}};
  } else {
    j["sweep"] = nullptr;
  }
  Json flags;
  flags["top"] = rep.top ? word_json(*rep.top) : Json(nullptr);
  flags["standard_positive"] = rep.standard_positive;
  flags["positivity_ok"] = rep.positivity_ok;
  flags["bar_symmetric"] = rep.bar_symmetric;
  flags["top_multiplicity_one"] = rep.top_multiplicity_one ? Json(*rep.top_multiplicity_one) : Json(nullptr);
  flags["support_below_top"] = rep.support_below_top ? Json(*rep.support_below_top) : Json(nullptr);
  j["flags"] = std::move(flags);
  return j;
}

}  // namespace hecke01
