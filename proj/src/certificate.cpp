#include "ackbo/certificate.hpp"

#include <json.hpp>

namespace ackbo {

using json = nlohmann::ordered_json;

std::string certificate_json(OrderId id, const Trs &trs, const OrientResult &result) {
  json doc;
  doc["order"] = to_string(id);
  doc["status"] = to_string(result.status);
  if (result.status == OrientStatus::oriented) {
    const OrderParams &p = result.params;
    json prec = json::array();
    for (const auto &[f, g] : p.precedence.pairs())
      prec.push_back({f, g});
    json weights = json::object();
    for (const auto &[f, w] : p.weights.w)
      weights[f] = w;
    json sc = json::array();
    for (const auto &[key, v] : p.weights.sc)
      sc.push_back({{"symbol", key.first}, {"position", key.second}, {"value", v}});
    json status = json::object();
    for (const auto &[f, s] : p.status)
      status[f] = s == Status::lex ? "lex" : "mul";
    doc["params"] = {{"precedence", prec}, {"weights", weights}, {"w0", p.weights.w0}, {"sc", sc}, {"status", status}};

    json rules = json::array();
    for (std::size_t i = 0; i < trs.rules.size(); ++i) {
      const Verdict &v = result.verdicts.at(i);
      json trace = json::array();
      for (const TraceStep &step : v.trace)
        trace.push_back({{"lhs", to_string(step.lhs)}, {"rhs", to_string(step.rhs)}, {"case", step.label}});
      rules.push_back({{"lhs", to_string(trs.rules[i].lhs)},
                       {"rhs", to_string(trs.rules[i].rhs)},
                       {"verdict", to_string(v.relation)},
                       {"trace", trace}});
    }
    doc["rules"] = rules;
  }
  doc["stats"] = {{"precedences", result.stats.precedences},
                  {"candidates", result.stats.candidates},
                  {"wall_time_ms", result.stats.wall_time_ms}};
  return doc.dump(2) + "\n";
}

std::pair<OrderId, OrderParams> read_certificate(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const auto id = parse_order_id(doc.at("order").get<std::string>());
    if (!id)
      throw ConfigError("unknown order in certificate");
    OrderParams params;
    const json &p = doc.at("params");
    for (const auto &pair : p.at("precedence"))
      params.precedence.add(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
    for (const auto &[f, w] : p.at("weights").items())
      params.weights.w[f] = w.get<std::int64_t>();
    params.weights.w0 = p.at("w0").get<std::int64_t>();
    const json sc = p.value("sc", json::array());
    for (const auto &e : sc)
      params.weights.sc[{e.at("symbol").get<std::string>(), e.at("position").get<std::size_t>()}] =
          e.at("value").get<std::int64_t>();
    const json status = p.value("status", json::object());
    for (const auto &[f, s] : status.items()) {
      const auto v = s.get<std::string>();
      if (v != "lex" && v != "mul")
        throw ConfigError("status of " + f + " must be lex or mul");
      params.status[f] = v == "lex" ? Status::lex : Status::mul;
    }
    return {*id, std::move(params)};
  } catch (const json::exception &e) {
    throw ConfigError(std::string("malformed certificate: ") + e.what());
  }
}

} // namespace ackbo
