#pragma once

// JSON documents for machines and separation reports.
//
// Machine schema (version 1):
//   { "schema": 1, "model": "mcqfa" | "afa", "kind": "...",
//     "backend": "rational" | "complex", "states": n,
//     "alphabet": ["a", "b", ...],
//     "transitions": { "a": [row-major entries], ... },
//     "end_marker": [row-major entries],          // afa only
//     "initial": [entries], "accepting": [0-based state indices] }
// Rational entries are fraction strings "p/q"; complex entries are [re, im].

#include <string>
#include <vector>

#include "json.hpp"
#include "wordsep/afa.hpp"
#include "wordsep/mcqfa.hpp"
#include "wordsep/separation.hpp"

namespace wordsep {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline json entry_json(const Rational& r) { return r.get_str(); }
inline json entry_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

template <class S>
S entry_from_json(const json& j) {
  if constexpr (std::is_same_v<S, Rational>) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw InvalidArgument("rational entry must be a \"p/q\" string");
  } else {
    if (j.is_array() && j.size() == 2) return Complex(j[0].get<double>(), j[1].get<double>());
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    throw InvalidArgument("complex entry must be [re, im]");
  }
}

template <class S>
json entries_json(const std::vector<S>& v) {
  json out = json::array();
  for (const S& x : v) out.push_back(entry_json(x));
  return out;
}

template <class S>
std::vector<S> entries_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of entries");
  std::vector<S> out;
  for (const auto& e : j) out.push_back(entry_from_json<S>(e));
  return out;
}

template <class S>
json machine_header(const char* model, const std::string& kind, std::size_t states, int alphabet_size) {
  json alphabet = json::array();
  for (int s = 0; s < alphabet_size; ++s) alphabet.push_back(std::string(1, symbol_letter(s)));
  return {{"schema", kSchemaVersion}, {"model", model},     {"kind", kind},
          {"backend", scalar_traits<S>::name}, {"states", states}, {"alphabet", alphabet}};
}

template <class S>
json transitions_json(const std::vector<Matrix<S>>& ts) {
  json out = json::object();
  for (std::size_t s = 0; s < ts.size(); ++s) out[std::string(1, symbol_letter(static_cast<int>(s)))] = entries_json(ts[s].data());
  return out;
}

template <class S>
std::vector<Matrix<S>> transitions_from_json(const json& doc, std::size_t n) {
  std::vector<Matrix<S>> out;
  for (const auto& letter : doc.at("alphabet"))
    out.emplace_back(n, n, entries_from_json<S>(doc.at("transitions").at(letter.get<std::string>())));
  return out;
}

inline void check_header(const json& doc, const char* model) {
  if (doc.value("schema", 0) != kSchemaVersion) throw InvalidArgument("unsupported machine schema version");
  if (doc.value("model", "") != model) throw InvalidArgument(std::string("document is not an ") + model);
}

}  // namespace detail

template <class S>
json to_json(const Mcqfa<S>& m, const std::string& kind) {
  json doc = detail::machine_header<S>("mcqfa", kind, m.states(), m.alphabet_size());
  doc["transitions"] = detail::transitions_json(m.transitions());
  doc["initial"] = detail::entries_json(m.initial());
  doc["accepting"] = m.accepting();
  return doc;
}

template <class S>
Mcqfa<S> mcqfa_from_json(const json& doc) {
  detail::check_header(doc, "mcqfa");
  if (doc.at("backend") != scalar_traits<S>::name) throw InvalidArgument("machine backend mismatch");
  const auto n = doc.at("states").get<std::size_t>();
  return Mcqfa<S>(detail::transitions_from_json<S>(doc, n), detail::entries_from_json<S>(doc.at("initial")),
                  doc.at("accepting").get<std::vector<std::size_t>>());
}

inline json to_json(const Afa& m, const std::string& kind) {
  json doc = detail::machine_header<Rational>("afa", kind, m.states(), m.alphabet_size());
  doc["transitions"] = detail::transitions_json(m.transitions());
  doc["end_marker"] = detail::entries_json(m.end_marker().data());
  doc["initial"] = detail::entries_json(m.initial());
  doc["accepting"] = m.accepting();
  return doc;
}

inline Afa afa_from_json(const json& doc) {
  detail::check_header(doc, "afa");
  const auto n = doc.at("states").get<std::size_t>();
  return Afa(detail::transitions_from_json<Rational>(doc, n),
             Matrix<Rational>(n, n, detail::entries_from_json<Rational>(doc.at("end_marker"))),
             detail::entries_from_json<Rational>(doc.at("initial")),
             doc.at("accepting").get<std::vector<std::size_t>>());
}

inline json to_json(const SeparationReport& r) {
  json words = json::array();
  for (const auto& w : r.words)
    words.push_back({{"word", to_string(w.word)}, {"set", w.in_x ? "X" : "Y"}, {"accept", w.value}, {"approx", w.approx}});
  json mode = {{"claimed", to_string(r.mode.mode)}};
  if (r.mode.mode == SeparationMode::Bounded) mode["bound"] = r.mode.bound.get_str();
  return {{"schema", kSchemaVersion},
          {"machine", {{"kind", r.machine.kind}, {"states", r.machine.states}, {"backend", r.machine.backend}}},
          {"mode", mode},
          {"verified", r.verified},
          {"accepted_side", r.x_side_accepted ? "X" : "Y"},
          {"exact", r.exact},
          {"elapsed_ms", r.elapsed_ms},
          {"words", words}};
}

}  // namespace wordsep
