#include "fairdiv/instance_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace fairdiv {
namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_unsigned()) {
    return Rational(Integer(std::to_string(value.get<std::uint64_t>())));
  }
  if (value.is_number_integer()) {
    return Rational(Integer(std::to_string(value.get<std::int64_t>())));
  }
  throw InputError("rational values must be strings or integers, got " +
                   value.dump());
}

std::vector<std::string> labels_from_json(const Json& doc, const char* key) {
  std::vector<std::string> labels;
  if (!doc.contains(key)) return labels;
  if (!doc[key].is_array()) throw InputError(std::string(key) + " must be a list");
  for (const auto& label : doc[key]) {
    if (!label.is_string()) {
      throw InputError(std::string(key) + " entries must be strings");
    }
    labels.push_back(label.get<std::string>());
  }
  return labels;
}

Json bundles_to_json(const Allocation& alloc) {
  Json bundles = Json::array();
  for (const auto& bundle : alloc.bundles) {
    Json goods = Json::array();
    for (GoodIndex g : bundle) goods.push_back(g + 1);
    bundles.push_back(std::move(goods));
  }
  return bundles;
}

}  // namespace

Instance parse_instance(std::string_view json_text) {
  const Json doc = parse_json(json_text);
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  if (!doc.contains("m") || !doc["m"].is_number_unsigned()) {
    throw InputError("instance needs a non-negative integer \"m\"");
  }
  if (!doc.contains("utilities") || !doc["utilities"].is_array()) {
    throw InputError("instance needs a \"utilities\" matrix");
  }
  const auto m = doc["m"].get<std::size_t>();
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : doc["utilities"]) {
    if (!row.is_array()) throw InputError("utilities rows must be lists");
    std::vector<Rational> values;
    for (const auto& entry : row) values.push_back(rational_from_json(entry));
    rows.push_back(std::move(values));
  }
  return Instance(m, std::move(rows), labels_from_json(doc, "agents"),
                  labels_from_json(doc, "goods"));
}

std::string serialize_instance(const Instance& inst) {
  Json doc = Json::object();
  if (!inst.agent_labels().empty()) doc["agents"] = inst.agent_labels();
  if (!inst.good_labels().empty()) doc["goods"] = inst.good_labels();
  doc["m"] = inst.m();
  Json rows = Json::array();
  for (const auto& row : inst.utilities()) {
    Json values = Json::array();
    for (const auto& u : row) values.push_back(format_rational(u));
    rows.push_back(std::move(values));
  }
  doc["utilities"] = std::move(rows);
  return doc.dump(2) + "\n";
}

RunResult make_run_result(MechanismId mechanism, const Instance& inst,
                          const AgentOrdering& ordering,
                          const Allocation& allocation) {
  RunResult result{mechanism, ordering, allocation, {}};
  for (AgentIndex a = 0; a < inst.n(); ++a) {
    result.utilities.push_back(bundle_utility(inst, a, allocation.bundles[a]));
  }
  return result;
}

std::string serialize_run_result(const RunResult& result) {
  Json doc = Json::object();
  doc["mechanism"] = std::string(mechanism_name(result.mechanism));
  Json ordering = Json::array();
  for (AgentIndex a : result.ordering.pick_order()) ordering.push_back(a + 1);
  doc["ordering"] = std::move(ordering);
  doc["bundles"] = bundles_to_json(result.allocation);
  Json utilities = Json::array();
  for (const auto& u : result.utilities) utilities.push_back(format_rational(u));
  doc["utilities"] = std::move(utilities);
  return doc.dump(2) + "\n";
}

RunResult parse_run_result(std::string_view json_text) {
  const Json doc = parse_json(json_text);
  try {
    RunResult result;
    const auto name = doc.at("mechanism").get<std::string>();
    const auto id = parse_mechanism(name);
    if (!id) throw InputError("unknown mechanism \"" + name + "\"");
    result.mechanism = *id;

    std::vector<AgentIndex> order;
    for (const auto& a : doc.at("ordering")) {
      const auto value = a.get<std::size_t>();
      if (value == 0) throw InputError("ordering entries are 1-based");
      order.push_back(value - 1);
    }
    result.ordering = AgentOrdering(std::move(order));

    for (const auto& bundle : doc.at("bundles")) {
      Bundle goods;
      for (const auto& g : bundle) {
        const auto value = g.get<std::size_t>();
        if (value == 0) throw InputError("good numbers are 1-based");
        goods.push_back(value - 1);
      }
      result.allocation.bundles.push_back(make_bundle(std::move(goods)));
    }
    for (const auto& u : doc.at("utilities")) {
      result.utilities.push_back(rational_from_json(u));
    }
    return result;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed run result: ") + e.what());
  }
}

AgentOrdering parse_ordering(std::string_view text, std::size_t n) {
  std::vector<AgentIndex> order;
  std::stringstream stream{std::string(text)};
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t consumed = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(item, &consumed);
    } catch (const std::exception&) {
      throw InputError("ordering entry \"" + item + "\" is not a number");
    }
    if (consumed != item.size() || value == 0 || value > n) {
      throw InputError("ordering entry \"" + item + "\" is not in 1.." +
                       std::to_string(n));
    }
    order.push_back(value - 1);
  }
  if (order.size() != n) {
    throw InputError("ordering lists " + std::to_string(order.size()) +
                     " agents, expected " + std::to_string(n));
  }
  return AgentOrdering(std::move(order));
}

std::string format_ordering(const AgentOrdering& ordering) {
  std::string text;
  for (AgentIndex a : ordering.pick_order()) {
    if (!text.empty()) text += ',';
    text += std::to_string(a + 1);
  }
  return text;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> values;
  std::stringstream stream{std::string(text)};
  std::string item;
  while (std::getline(stream, item, ',')) values.push_back(parse_rational(item));
  return values;
}

std::string read_text_file(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace fairdiv
