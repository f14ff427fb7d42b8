#ifndef CLASSQUARE_CORPUS_HPP
#define CLASSQUARE_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "builtins.hpp"
#include "error.hpp"
#include "group.hpp"
#include "perm.hpp"

/**
 * @file corpus.hpp
 * @brief Corpus files: one JSON object per line,
 *
 *   {"name": "...", "degree": n, "generators": ["(1,2,3)", ...], "expected": {...}}
 *
 * A record without generators names a builtin, either through a "builtin"
 * field or through its name.
 */

namespace classquare
{

/// Keys accepted in a record's "expected" block.
inline const std::vector<std::string> &pin_keys()
{
  static const std::vector<std::string> keys{
    "order", "soluble", "classes", "appendix_passed", "subsets_tested",
    "hypothesis_holding", "violations",
  };
  return keys;
}

struct CorpusEntry
{
  std::string name;
  std::string source;                  // "builtin:<tag>" or "<file>:<line>"
  std::string builtin;                 // empty when generators are given
  std::size_t degree = 0;
  std::vector<std::string> generators; // cycle text
  nlohmann::json expected = nlohmann::json::object();
};

/// Group described by an entry; builtins are constructed under `limits`.
inline Group entry_group(const CorpusEntry &e, const Limits &limits)
{
  if (!e.builtin.empty())
    return builtin(e.builtin, limits);
  if (e.degree == 0 || e.degree > limits.max_degree)
    throw DegreeError("degree " + std::to_string(e.degree) + " outside [1, " +
                      std::to_string(limits.max_degree) + "]");
  std::vector<Perm> gens;
  for (auto const &text : e.generators)
    gens.push_back(parse_cycles(text, e.degree, limits.max_degree));
  return Group(e.degree, std::move(gens), limits);
}

namespace detail
{

inline CorpusEntry parse_record(const std::string &line, const std::string &where)
{
  auto fail = [&](const std::string &what) -> CorpusEntry {
    throw ParseError(where + ": " + what);
  };

  nlohmann::json rec;
  try {
    rec = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error &ex) {
    return fail(std::string("invalid JSON: ") + ex.what());
  }
  if (!rec.is_object())
    return fail("record is not a JSON object");
  for (auto it = rec.begin(); it != rec.end(); ++it) {
    auto const &k = it.key();
    if (k != "name" && k != "degree" && k != "generators" && k != "builtin" && k != "expected")
      return fail("unknown field \"" + k + "\"");
  }

  CorpusEntry e;
  if (!rec.contains("name") || !rec["name"].is_string())
    return fail("missing string field \"name\"");
  e.name = rec["name"].get<std::string>();

  if (rec.contains("expected")) {
    if (!rec["expected"].is_object())
      return fail("\"expected\" is not an object");
    for (auto it = rec["expected"].begin(); it != rec["expected"].end(); ++it) {
      bool known = false;
      for (auto const &k : pin_keys())
        known = known || k == it.key();
      if (!known)
        return fail("unknown pin \"" + it.key() + "\"");
      bool boolean = it.key() == "soluble" || it.key() == "appendix_passed";
      if (boolean ? !it->is_boolean() : !it->is_number_unsigned())
        return fail("pin \"" + it.key() + "\" has the wrong type");
    }
    e.expected = rec["expected"];
  }

  if (!rec.contains("generators")) {
    if (rec.contains("degree"))
      return fail("\"degree\" given without \"generators\"");
    e.builtin = rec.contains("builtin") ? rec["builtin"].get<std::string>() : e.name;
    e.source = "builtin:" + e.builtin;
    return e;
  }

  if (rec.contains("builtin"))
    return fail("\"builtin\" and \"generators\" are exclusive");
  if (!rec.contains("degree") || !rec["degree"].is_number_unsigned())
    return fail("missing non-negative integer field \"degree\"");
  auto degree = rec["degree"].get<std::uint64_t>();
  if (degree < 1 || degree > Perm::max_degree())
    return fail("degree " + std::to_string(degree) + " not representable");
  e.degree = static_cast<std::size_t>(degree);
  if (!rec["generators"].is_array())
    return fail("\"generators\" is not an array");
  for (auto const &g : rec["generators"]) {
    if (!g.is_string())
      return fail("generator is not a string");
    auto text = g.get<std::string>();
    try {
      parse_cycles(text, e.degree, e.degree);
    } catch (const ParseError &ex) {
      return fail(ex.what());
    }
    e.generators.push_back(std::move(text));
  }
  e.source = where;
  return e;
}

} // namespace detail

/**
 * Reads line-delimited records. Blank lines and lines starting with '#' are
 * skipped. Malformed records raise ParseError naming "<name>:<line>".
 */
inline std::vector<CorpusEntry> load_corpus(std::istream &in, const std::string &name = "<corpus>")
{
  std::vector<CorpusEntry> res;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    res.push_back(detail::parse_record(line, name + ":" + std::to_string(lineno)));
  }
  return res;
}

inline std::vector<CorpusEntry> load_corpus(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open corpus file \"" + path + "\"");
  return load_corpus(in, path);
}

/// Record for a builtin, with its generators written out as cycle text.
inline CorpusEntry builtin_entry(const std::string &tag, const Limits &limits = {})
{
  Group g = builtin(tag, limits);
  CorpusEntry e;
  e.name = tag;
  e.source = "builtin:" + tag;
  e.builtin = tag;
  e.degree = g.degree();
  for (auto const &x : g.generators())
    e.generators.push_back(format_cycles(x));
  return e;
}

/**
 * Group argument of the command-line tools: a builtin name, or
 * "gens:<degree>:<cycles>;<cycles>;..." for explicit generators.
 */
inline Group resolve_group(std::string_view group_arg, const Limits &limits = {})
{
  if (group_arg.substr(0, 5) != "gens:")
    return builtin(group_arg, limits);
  auto rest = group_arg.substr(5);
  auto colon = rest.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("expected gens:<degree>:<cycles>;...");
  auto degree = detail::parse_param(group_arg, rest.substr(0, colon));
  if (degree < 1 || degree > limits.max_degree)
    throw DegreeError("degree " + std::to_string(degree) + " outside [1, " +
                      std::to_string(limits.max_degree) + "]");
  std::vector<Perm> gens;
  auto list = rest.substr(colon + 1);
  while (!list.empty()) {
    auto semi = list.find(';');
    gens.push_back(parse_cycles(list.substr(0, semi), degree, limits.max_degree));
    if (semi == std::string_view::npos)
      break;
    list = list.substr(semi + 1);
  }
  return Group(degree, std::move(gens), limits);
}

} // namespace classquare

#endif // CLASSQUARE_CORPUS_HPP
