// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ys/json_io.hpp"

#include <set>
#include <string>

namespace ys {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

void reject_unknown(const Json& j, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(where + ": expected an object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(where + ": unknown field \"" + key + "\"");
  }
}

const Json& field(const Json& j, const std::string& where, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) fail(where + ": missing field \"" + name + "\"");
  return *it;
}

int get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where + ": expected an integer");
  return j.get<int>();
}

Rational get_rational(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where + ": rationals must be strings like \"a/b\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(where + ": " + e.what());
  }
}

Bundle get_bundle(const Json& j, int m, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array of good indices");
  Bundle b(static_cast<std::size_t>(m));
  for (const auto& g : j) {
    int id = get_int(g, where);
    if (id < 0 || id >= m) fail(where + ": good index out of range");
    b.set(static_cast<std::size_t>(id));
  }
  return b;
}

}  // namespace

Json bundle_to_json(const Bundle& b) {
  Json out = Json::array();
  for (auto g = b.find_first(); g != Bundle::npos; g = b.find_next(g))
    out.push_back(static_cast<int>(g));
  return out;
}

Json valuation_to_json(const ValuationSpec& spec) {
  Json j;
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, CappedRelevant>) {
          j["type"] = "capped_relevant";
          j["relevant"] = bundle_to_json(fam.relevant);
          j["cap"] = fam.cap;
        } else if constexpr (std::is_same_v<T, PartitionFamily>) {
          j["type"] = "partition";
          Json cats = Json::array();
          for (const auto& c : fam.categories) cats.push_back(bundle_to_json(c));
          j["categories"] = std::move(cats);
          j["caps"] = fam.caps;
        } else if constexpr (std::is_same_v<T, Transversal>) {
          j["type"] = "transversal";
          j["slots"] = fam.slots;
          Json edges = Json::array();
          for (const auto& [g, s] : fam.edges)
            edges.push_back(Json::array({g, s}));
          j["edges"] = std::move(edges);
        } else if constexpr (std::is_same_v<T, Graphic>) {
          j["type"] = "graphic";
          j["vertices"] = fam.vertices;
          Json edges = Json::array();
          for (const auto& [a, b] : fam.edge_of)
            edges.push_back(Json::array({a, b}));
          j["edges"] = std::move(edges);
        } else {
          j["type"] = "explicit";
          j["values"] = fam.values;
        }
      },
      spec.family);
  return j;
}

ValuationSpec valuation_from_json(const Json& j, int m) {
  const std::string where = "valuation";
  std::string type =
      field(j, where, "type").is_string()
          ? field(j, where, "type").get<std::string>()
          : (fail(where + ": \"type\" must be a string"), "");
  ValuationSpec spec;
  spec.m = m;
  if (type == "capped_relevant") {
    reject_unknown(j, where, {"type", "relevant", "cap"});
    CappedRelevant cr;
    cr.relevant = get_bundle(field(j, where, "relevant"), m, where);
    cr.cap = get_int(field(j, where, "cap"), where);
    spec.family = std::move(cr);
  } else if (type == "partition") {
    reject_unknown(j, where, {"type", "categories", "caps"});
    PartitionFamily pf;
    const Json& cats = field(j, where, "categories");
    if (!cats.is_array()) fail(where + ": categories must be an array");
    for (const auto& c : cats) pf.categories.push_back(get_bundle(c, m, where));
    const Json& caps = field(j, where, "caps");
    if (!caps.is_array()) fail(where + ": caps must be an array");
    for (const auto& c : caps) pf.caps.push_back(get_int(c, where));
    spec.family = std::move(pf);
  } else if (type == "transversal") {
    reject_unknown(j, where, {"type", "slots", "edges"});
    Transversal tv;
    tv.slots = get_int(field(j, where, "slots"), where);
    for (const auto& e : field(j, where, "edges")) {
      if (!e.is_array() || e.size() != 2)
        fail(where + ": edges must be [good, slot] pairs");
      tv.edges.emplace_back(get_int(e[0], where), get_int(e[1], where));
    }
    spec.family = std::move(tv);
  } else if (type == "graphic") {
    reject_unknown(j, where, {"type", "vertices", "edges"});
    Graphic gr;
    gr.vertices = get_int(field(j, where, "vertices"), where);
    for (const auto& e : field(j, where, "edges")) {
      if (!e.is_array() || e.size() != 2)
        fail(where + ": edges must be [vertex, vertex] pairs");
      gr.edge_of.emplace_back(get_int(e[0], where), get_int(e[1], where));
    }
    spec.family = std::move(gr);
  } else if (type == "explicit") {
    reject_unknown(j, where, {"type", "values"});
    ExplicitTable table;
    for (const auto& v : field(j, where, "values"))
      table.values.push_back(get_int(v, where));
    spec.family = std::move(table);
  } else {
    fail(where + ": unknown type \"" + type + "\"");
  }
  return spec;
}

Json criterion_to_json(const Criterion& c) {
  Json j;
  j["criterion"] = criterion_name(c.kind);
  if (c.kind == CriterionKind::kPMean) j["p"] = rational_to_string(c.p);
  if (!c.shares.empty()) {
    Json shares = Json::array();
    for (const auto& s : c.shares) shares.push_back(rational_to_string(s));
    j["shares"] = std::move(shares);
  }
  if (!c.priority.empty()) j["priority"] = c.priority;
  return j;
}

Criterion criterion_from_json(const Json& j) {
  const std::string where = "criterion";
  reject_unknown(j, where, {"criterion", "p", "shares", "priority"});
  const Json& name = field(j, where, "criterion");
  if (!name.is_string()) fail(where + ": name must be a string");
  auto kind = criterion_from_name(name.get<std::string>());
  if (!kind) fail(where + ": unknown criterion \"" +
                  name.get<std::string>() + "\"");
  Criterion c;
  c.kind = *kind;
  if (j.contains("p")) c.p = get_rational(j["p"], where + ".p");
  if (j.contains("shares"))
    for (const auto& s : j["shares"])
      c.shares.push_back(get_rational(s, where + ".shares"));
  if (j.contains("priority"))
    for (const auto& p : j["priority"])
      c.priority.push_back(get_int(p, where + ".priority"));
  return c;
}

Json instance_to_json(const InstanceFile& f) {
  Json j;
  j["m"] = f.instance.m;
  Json agents = Json::array();
  for (const auto& a : f.instance.agents) {
    Json aj;
    aj["valuation"] = valuation_to_json(a.valuation);
    aj["weight"] = rational_to_string(a.weight);
    if (a.priority) aj["priority"] = *a.priority;
    if (a.fair_share) aj["fair_share"] = rational_to_string(*a.fair_share);
    agents.push_back(std::move(aj));
  }
  j["agents"] = std::move(agents);
  if (f.criterion) j["criterion"] = criterion_to_json(*f.criterion);
  return j;
}

InstanceFile instance_from_json(const Json& j) {
  const std::string where = "instance";
  reject_unknown(j, where, {"m", "agents", "criterion"});
  InstanceFile f;
  f.instance.m = get_int(field(j, where, "m"), where + ".m");
  const Json& agents = field(j, where, "agents");
  if (!agents.is_array()) fail(where + ": agents must be an array");
  int idx = 0;
  for (const auto& aj : agents) {
    ++idx;
    std::string aw = "agents[" + std::to_string(idx) + "]";
    reject_unknown(aj, aw, {"valuation", "weight", "priority", "fair_share"});
    AgentSpec a;
    a.valuation = valuation_from_json(field(aj, aw, "valuation"),
                                      f.instance.m);
    a.weight = get_rational(field(aj, aw, "weight"), aw + ".weight");
    if (aj.contains("priority"))
      a.priority = get_int(aj["priority"], aw + ".priority");
    if (aj.contains("fair_share"))
      a.fair_share = get_rational(aj["fair_share"], aw + ".fair_share");
    f.instance.agents.push_back(std::move(a));
  }
  if (j.contains("criterion")) f.criterion = criterion_from_json(j["criterion"]);
  return f;
}

Criterion finalize_criterion(const Instance& inst,
                             const std::optional<Criterion>& parsed,
                             CriterionKind kind, const Rational& p) {
  CriterionKind k = parsed ? parsed->kind : kind;
  Rational pp = parsed && parsed->p != 0 ? parsed->p : p;
  Criterion base;
  if (parsed && k == CriterionKind::kFairShare && !parsed->shares.empty()) {
    base = *parsed;
    base.p = pp;
    return base;
  }
  if (parsed && k == CriterionKind::kLorenz && !parsed->priority.empty()) {
    base = *parsed;
    return base;
  }
  return resolve_criterion(inst, k, pp);
}

Json run_result_to_json(const RunResult& r, const Criterion& c) {
  Json j;
  j["criterion"] = criterion_to_json(c);
  Json bundles = Json::array();
  for (const auto& b : r.allocation.bundles) bundles.push_back(bundle_to_json(b));
  j["bundles"] = std::move(bundles);
  j["utilities"] = r.utilities;
  j["usw"] = r.usw;
  j["query_count"] = r.query_count;
  Json trace = Json::array();
  for (const auto& s : r.trace) {
    Json sj;
    sj["iteration"] = s.iteration;
    sj["active_size"] = s.active_size;
    sj["agent"] = s.agent;
    sj["gain"] = s.gain;
    sj["augmented"] = s.augmented;
    sj["path"] = s.path;
    trace.push_back(std::move(sj));
  }
  j["trace"] = std::move(trace);
  return j;
}

Json fuzz_report_to_json(const FuzzReport& r) {
  Json j;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json vj;
    vj["trial"] = v.trial;
    vj["agent"] = v.manipulation.agent;
    vj["kind"] = v.manipulation.kind;
    vj["reported"] = valuation_to_json(v.manipulation.reported);
    vj["property"] = v.property;
    vj["detail"] = v.detail;
    vj["truthful_utility"] = v.truthful_utility;
    vj["manipulated_utility"] = v.manipulated_utility;
    violations.push_back(std::move(vj));
  }
  j["violations"] = std::move(violations);
  return j;
}

}  // namespace ys
