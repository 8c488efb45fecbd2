#include "elspl/instance_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace elspl {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

void reject_unknown_fields(const json& obj, const std::string& where,
                           std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
          return item.key() == k;
        }) == allowed.end()) {
      fail(where, "unknown field \"" + item.key() + "\"");
    }
  }
}

std::int64_t require_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) fail(where, "expected an integer");
  return value.get<std::int64_t>();
}

std::vector<std::int64_t> require_int_array(const json& value, const std::string& where) {
  if (!value.is_array()) fail(where, "expected an array");
  std::vector<std::int64_t> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(require_int(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ConcaveCostTable parse_table(const json& value, const std::string& where) {
  if (!value.is_object()) fail(where, "expected a rate or {breaks, slopes} table");
  reject_unknown_fields(value, where, {"breaks", "slopes"});
  if (!value.contains("breaks") || !value.contains("slopes")) {
    fail(where, "table needs \"breaks\" and \"slopes\"");
  }
  ConcaveCostTable table;
  table.breaks = require_int_array(value["breaks"], where + ".breaks");
  table.slopes = require_int_array(value["slopes"], where + ".slopes");
  return table;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("document: ") + e.what());
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");
  reject_unknown_fields(doc, "document",
                        {"horizon", "demands", "breakpoints", "pieces", "inventory"});
  for (const char* key : {"horizon", "demands", "breakpoints", "pieces", "inventory"}) {
    if (!doc.contains(key)) fail("document", std::string("missing field \"") + key + "\"");
  }

  const std::int64_t horizon = require_int(doc["horizon"], "horizon");
  if (horizon < 0 || horizon > 1'000'000) fail("horizon", "out of supported range");
  std::vector<Quantity> demands = require_int_array(doc["demands"], "demands");
  std::vector<Quantity> breakpoints = require_int_array(doc["breakpoints"], "breakpoints");

  const json& pieces_doc = doc["pieces"];
  if (!pieces_doc.is_array()) fail("pieces", "expected an array");
  std::vector<std::vector<PieceCost>> pieces;
  pieces.reserve(pieces_doc.size());
  for (std::size_t j = 0; j < pieces_doc.size(); ++j) {
    const std::string row_where = "pieces[" + std::to_string(j) + "]";
    const json& row_doc = pieces_doc[j];
    if (!row_doc.is_array()) fail(row_where, "expected an array");
    std::vector<PieceCost> row;
    row.reserve(row_doc.size());
    for (std::size_t l = 0; l < row_doc.size(); ++l) {
      const std::string where = row_where + "[" + std::to_string(l) + "]";
      const json& cell = row_doc[l];
      if (!cell.is_object()) fail(where, "expected {setup, unit}");
      reject_unknown_fields(cell, where, {"setup", "unit"});
      if (!cell.contains("setup") || !cell.contains("unit")) {
        fail(where, "needs \"setup\" and \"unit\"");
      }
      row.push_back({require_int(cell["setup"], where + ".setup"),
                     require_int(cell["unit"], where + ".unit")});
    }
    pieces.push_back(std::move(row));
  }

  const json& inv_doc = doc["inventory"];
  if (!inv_doc.is_array()) fail("inventory", "expected an array");
  std::vector<InventoryModel> inventory;
  inventory.reserve(inv_doc.size());
  for (std::size_t j = 0; j < inv_doc.size(); ++j) {
    const std::string where = "inventory[" + std::to_string(j) + "]";
    const json& cell = inv_doc[j];
    if (!cell.is_object()) fail(where, "expected {hold, backlog}");
    reject_unknown_fields(cell, where, {"hold", "backlog"});
    if (!cell.contains("hold") || !cell.contains("backlog")) {
      fail(where, "needs \"hold\" and \"backlog\"");
    }
    InventoryModel inv;
    if (cell["hold"].is_number_integer()) {
      inv.hold_rate = cell["hold"].get<Money>();
    } else {
      inv.hold_table = parse_table(cell["hold"], where + ".hold");
    }
    if (cell["backlog"].is_number_integer()) {
      inv.backlog_rate = cell["backlog"].get<Money>();
    } else {
      inv.backlog_table = parse_table(cell["backlog"], where + ".backlog");
    }
    inventory.push_back(std::move(inv));
  }

  return Instance(static_cast<int>(horizon), std::move(demands), std::move(breakpoints),
                  std::move(pieces), std::move(inventory));
}

namespace {

json table_to_json(const ConcaveCostTable& table) {
  return json{{"breaks", table.breaks}, {"slopes", table.slopes}};
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
  json doc;
  doc["horizon"] = inst.horizon();
  doc["demands"] = inst.demands();
  doc["breakpoints"] = inst.breakpoints();
  json pieces = json::array();
  for (const auto& row : inst.pieces()) {
    json row_doc = json::array();
    for (const auto& piece : row) {
      row_doc.push_back(json{{"setup", piece.setup}, {"unit", piece.unit}});
    }
    pieces.push_back(std::move(row_doc));
  }
  doc["pieces"] = std::move(pieces);
  json inventory = json::array();
  for (const auto& inv : inst.inventory()) {
    json cell;
    if (inv.hold_table) {
      cell["hold"] = table_to_json(*inv.hold_table);
    } else {
      cell["hold"] = inv.hold_rate;
    }
    if (inv.backlog_table) {
      cell["backlog"] = table_to_json(*inv.backlog_table);
    } else {
      cell["backlog"] = inv.backlog_rate;
    }
    inventory.push_back(std::move(cell));
  }
  doc["inventory"] = std::move(inventory);
  return doc.dump(2) + "\n";
}

std::string serialize_schedule(const Schedule& schedule) {
  json doc;
  doc["production"] = schedule.production;
  if (schedule.total_cost.is_finite()) {
    doc["cost"] = schedule.total_cost.amount();
  } else {
    doc["cost"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

namespace {

/// Small deterministic generator so emitted instances do not depend on
/// the standard library's distribution implementations.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    if (hi <= lo) return lo;
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }
};

}  // namespace

Instance generate_instance(const GeneratorParams& params) {
  SplitMix64 rng{params.seed};
  const int T = params.horizon;
  const int m = params.breakpoints;

  std::vector<Quantity> demands(static_cast<std::size_t>(T));
  for (auto& d : demands) d = rng.between(0, params.demand_max);
  Quantity total = 0;
  for (Quantity d : demands) total += d;

  // m distinct interior breakpoints, strictly increasing.
  std::vector<Quantity> interior;
  const Quantity interior_max = std::max<Quantity>(params.breakpoint_max, m);
  while (static_cast<int>(interior.size()) < m) {
    const Quantity candidate = rng.between(1, interior_max);
    if (std::find(interior.begin(), interior.end(), candidate) == interior.end()) {
      interior.push_back(candidate);
    }
  }
  std::sort(interior.begin(), interior.end());

  const Quantity largest = m > 0 ? interior.back() : 0;
  const Quantity ceil_avg = T > 0 ? (total + T - 1) / T : 0;
  const Quantity lo = std::max<Quantity>(largest + 1, ceil_avg);
  const Quantity hi = std::max<Quantity>(lo, total + 1);
  std::vector<Quantity> breakpoints = interior;
  breakpoints.push_back(rng.between(lo, hi));

  std::vector<std::vector<PieceCost>> pieces(static_cast<std::size_t>(T));
  for (auto& row : pieces) {
    row.resize(static_cast<std::size_t>(m) + 1);
    for (auto& piece : row) {
      piece.setup = rng.between(0, params.setup_max);
      piece.unit = rng.between(0, params.unit_max);
    }
  }

  std::vector<InventoryModel> inventory(static_cast<std::size_t>(T));
  for (auto& inv : inventory) {
    inv.hold_rate = rng.between(0, params.rate_max);
    inv.backlog_rate = rng.between(0, params.rate_max);
  }

  return Instance(T, std::move(demands), std::move(breakpoints), std::move(pieces),
                  std::move(inventory));
}

std::string instance_digest(const Instance& instance) {
  const std::string text = serialize_instance(instance);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) {
    out << ((hash >> shift) & 0xf);
  }
  return out.str();
}

}  // namespace elspl
