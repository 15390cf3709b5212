#pragma once

// JSON and CSV renderings of library values. Big integers and rationals
// are always strings ("123", "p/q") so no consumer truncates them.

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nckit/arith.hpp"
#include "nckit/dual_braid.hpp"
#include "nckit/free_cumulants.hpp"
#include "nckit/garside_count.hpp"
#include "nckit/nc_lattice.hpp"

namespace nckit {

using json = nlohmann::ordered_json;

inline json blocks_to_json(const Blocks& blocks) {
  json arr = json::array();
  for (const auto& b : blocks) arr.push_back(b);
  return arr;
}

/// {"n": n, "blocks": [[...], ...]} in canonical order.
inline json to_json(const detail::PartitionData& p) {
  return json{{"n", p.size()}, {"blocks", blocks_to_json(p.blocks())}};
}

/// Accepts {"n": n, "blocks": [...]} or a bare block array (n is then the
/// largest element).
inline Blocks blocks_from_json(const json& j, int& n) {
  const json& arr = j.is_object() ? j.at("blocks") : j;
  if (!arr.is_array()) throw invalid_input("partition JSON must be an array of blocks");
  Blocks blocks;
  int largest = 0;
  for (const auto& b : arr) {
    if (!b.is_array()) throw invalid_input("partition block must be an array of integers");
    Block block;
    for (const auto& x : b) {
      if (!x.is_number_integer()) throw invalid_input("partition elements must be integers");
      block.push_back(x.get<int>());
      largest = std::max(largest, block.back());
    }
    blocks.push_back(std::move(block));
  }
  n = j.is_object() && j.contains("n") ? j.at("n").get<int>() : largest;
  return blocks;
}

inline NcPartition nc_partition_from_json(const json& j) {
  int n = 0;
  auto blocks = blocks_from_json(j, n);
  return NcPartition::from_blocks(n, blocks);
}

inline NcPartition parse_nc_partition(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("malformed partition JSON: ") + e.what());
  }
  return nc_partition_from_json(j);
}

inline json to_json(const BigInt& v) { return to_string(v); }

inline json to_json(const ExactSeq& s) {
  json arr = json::array();
  for (const auto& t : s.terms()) arr.push_back(to_string(t));
  return arr;
}

inline json to_json(const FormalSeries& s) {
  json arr = json::array();
  for (const auto& c : s.coefficients()) arr.push_back(to_string(c));
  return arr;
}

inline ExactSeq sequence_from_json(const json& j, SeqRole role) {
  if (!j.is_array()) throw invalid_input("sequence JSON must be an array");
  std::vector<Rational> terms;
  for (const auto& t : j) {
    if (t.is_string()) terms.push_back(parse_rational(t.get<std::string>()));
    else if (t.is_number_integer()) terms.emplace_back(t.get<long long>());
    else throw invalid_input("sequence terms must be \"p/q\" strings or integers");
  }
  return ExactSeq(std::move(terms), role);
}

/// "1,2,5/3,14" -> exact terms.
inline ExactSeq parse_sequence_list(const std::string& text, SeqRole role) {
  std::vector<Rational> terms;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) terms.push_back(parse_rational(item));
  return ExactSeq(std::move(terms), role);
}

inline json to_json(const BraidWord& w) { return json{{"strands", w.strands()}, {"letters", w.letters()}}; }

inline json to_json(const Permutation& p) { return p.images(); }

inline json to_json(const CountVector& c) {
  json by_last = json::array();
  for (std::size_t i = 0; i < c.order.size(); ++i)
    by_last.push_back(json{{"partition", blocks_to_json(c.order[i].blocks())}, {"count", to_string(c.values[i])}});
  return json{{"n", c.n}, {"d", c.d}, {"total", to_string(c.total())}, {"by_last", by_last}};
}

inline json to_json(const IncidenceMatrix& m) {
  json order = json::array(), rows = json::array();
  for (const auto& p : m.order()) order.push_back(blocks_to_json(p.blocks()));
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dimension(); ++j) row.push_back(m(i, j) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return json{{"n", m.strands()}, {"order", order}, {"ones", m.ones()}, {"entries", rows}};
}

/// Header line: the partition order, each cell a quoted JSON block list;
/// then one line of 0/1 entries per row in the same order.
inline std::string to_csv(const IncidenceMatrix& m) {
  std::string out;
  for (std::size_t j = 0; j < m.dimension(); ++j) {
    if (j) out += ',';
    out += '"' + blocks_to_json(m.order()[j].blocks()).dump() + '"';
  }
  out += '\n';
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    for (std::size_t j = 0; j < m.dimension(); ++j) {
      if (j) out += ',';
      out += m(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace nckit
