#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ncc/errors.hpp"
#include "ncc/law.hpp"

// Line-oriented text format shared by laws and cumulant tables:
//
//   # comment
//   vars 2
//   order 3
//   family free          (cumulant tables only)
//   1 2 : 1/2, -3        word : body[, soul]
//
// Every word of length 1..order must appear exactly once.

namespace ncc {

namespace detail {

inline std::string_view trim(std::string_view s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline int parse_count(std::string_view s, int line, const char* what) {
  s = trim(s);
  if (s.empty()) throw ParseError(std::string("missing value for ") + what, line);
  long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError(std::string("malformed ") + what + " '" + std::string(s) + "'", line);
    v = v * 10 + (c - '0');
    if (v > 1000000) throw ParseError(std::string(what) + " too large", line);
  }
  return static_cast<int>(v);
}

struct ParsedTable {
  Law table;
  std::optional<CumulantFamily> family;
};

inline GScalar parse_entry_value(std::string_view text, int line) {
  try {
    auto comma = text.find(',');
    if (comma == std::string_view::npos) return GScalar(parse_rational(text));
    if (text.find(',', comma + 1) != std::string_view::npos) throw ParseError("too many values in entry");
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

inline ParsedTable parse_table(std::istream& in, bool allow_family) {
  std::optional<int> k, order;
  std::optional<CumulantFamily> family;
  std::optional<Law> table;
  std::vector<char> seen;
  std::size_t seen_count = 0;
  int line_no = 0;
  std::string raw;

  auto ensure_table = [&](int line) {
    if (table) return;
    if (!k || !order) throw ParseError("entry before 'vars' and 'order' header lines", line);
    try {
      table.emplace(*k, *order);
    } catch (const Error& e) {
      throw ParseError(e.what(), line);
    }
    seen.assign(table->entry_count(), 0);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      auto sp = line.find_first_of(" \t");
      std::string_view key = line.substr(0, sp);
      std::string_view value = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
      if (table) throw ParseError("header line '" + std::string(key) + "' after table entries", line_no);
      if (key == "vars") {
        if (k) throw ParseError("duplicate 'vars' line", line_no);
        k = parse_count(value, line_no, "vars");
        if (*k < 1) throw ParseError("vars must be positive", line_no);
      } else if (key == "order") {
        if (order) throw ParseError("duplicate 'order' line", line_no);
        order = parse_count(value, line_no, "order");
      } else if (key == "family" && allow_family) {
        if (family) throw ParseError("duplicate 'family' line", line_no);
        try {
          family = parse_cumulant_family(value);
        } catch (const DomainError& e) {
          throw ParseError(e.what(), line_no);
        }
      } else {
        throw ParseError("unknown directive '" + std::string(key) + "'", line_no);
      }
      continue;
    }

    std::vector<int> letters;
    std::istringstream word_in{std::string(line.substr(0, colon))};
    std::string tok;
    while (word_in >> tok) letters.push_back(parse_count(tok, line_no, "letter"));
    GScalar value = parse_entry_value(line.substr(colon + 1), line_no);

    if (letters.empty()) {
      if (value != GScalar(Rational(1))) throw ParseError("value of the empty word must be 1", line_no);
      continue;
    }
    ensure_table(line_no);
    Word w(std::move(letters));
    for (int l : w)
      if (l < 1 || l > *k) throw ParseError("letter " + std::to_string(l) + " outside 1.." + std::to_string(*k), line_no);
    if (static_cast<int>(w.size()) > *order)
      throw ParseError("word longer than order " + std::to_string(*order), line_no);

    std::size_t idx = table->index(w);
    if (seen[idx]) throw ParseError("duplicate entry for word '" + w.to_string() + "'", line_no);
    seen[idx] = 1;
    ++seen_count;
    table->set(w, value);
  }

  if (!k) throw ParseError("missing 'vars' header line", line_no);
  if (!order) throw ParseError("missing 'order' header line", line_no);
  ensure_table(line_no);
  if (allow_family && !family) throw ParseError("missing 'family' header line", line_no);
  if (seen_count != table->entry_count()) {
    std::size_t i = 0;
    for (const Word& w : table->words()) {
      if (!seen[i++]) throw ParseError("missing entry for word '" + w.to_string() + "'", line_no);
    }
  }
  return {std::move(*table), family};
}

template <Scalar S>
void write_entries(std::ostream& out, const WordTable<S>& t) {
  t.for_each([&](const Word& w, const GScalar& v) {
    out << w.to_string() << " : " << to_string(v.body) << ", " << to_string(v.soul) << '\n';
  });
}

}  // namespace detail

inline Law law_read(std::istream& in) { return detail::parse_table(in, false).table; }

inline Law law_read(std::string_view text) {
  std::istringstream in{std::string(text)};
  return law_read(in);
}

/// Canonical text: header, then every word in shortlex order with both body
/// and soul written out.
inline std::string law_write(const Law& law) {
  std::ostringstream out;
  out << "vars " << law.vars() << "\norder " << law.order() << '\n';
  detail::write_entries(out, law);
  return out.str();
}

inline CumulantTable cumulant_table_read(std::istream& in) {
  auto parsed = detail::parse_table(in, true);
  return {*parsed.family, std::move(parsed.table)};
}

inline CumulantTable cumulant_table_read(std::string_view text) {
  std::istringstream in{std::string(text)};
  return cumulant_table_read(in);
}

inline std::string cumulant_table_write(const CumulantTable& t) {
  std::ostringstream out;
  out << "vars " << t.values.vars() << "\norder " << t.values.order() << "\nfamily " << to_string(t.family) << '\n';
  detail::write_entries(out, t.values);
  return out.str();
}

}  // namespace ncc
