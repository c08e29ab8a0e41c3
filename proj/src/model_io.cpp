#include "comparo/model_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "comparo/errors.hpp"
#include "json.hpp"

namespace comparo {

using json = nlohmann::ordered_json;

namespace {

void require_keys(const json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw ModelError("model must be a JSON object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) throw ModelError("unknown key '" + k + "'");
  }
  for (const char* k : keys) {
    if (!j.contains(k)) throw ModelError(std::string("missing key '") + k + "'");
  }
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw ModelError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ModelError(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

StateSet state_set(const StateSpace& space, const json& j, const char* what) {
  StateSet s(space.size());
  for (const auto& id : string_list(j, what)) {
    auto i = space.find(id);
    if (!i) throw ModelError(std::string(what) + " names unknown state '" + id + "'");
    s.insert(*i);
  }
  return s;
}

Valuation read_valuation(const StateSpace& space, const json& j) {
  if (!j.is_object()) throw ModelError("valuation must be an object");
  Valuation v;
  for (const auto& [atom, states] : j.items()) v.emplace(atom, state_set(space, states, "valuation"));
  return v;
}

json ids_of(const StateSpace& space, const StateSet& s) {
  json arr = json::array();
  for (StateIndex i : s.members()) arr.push_back(space.id(i));
  return arr;
}

json write_valuation(const StateSpace& space, const Valuation& v) {
  json obj = json::object();
  for (const auto& [atom, set] : v) obj[atom] = ids_of(space, set);
  return obj;
}

}  // namespace

AnyModel parse_model(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw ModelError("model needs a string \"type\" field");
  }
  const std::string type = j["type"].get<std::string>();

  if (type == "preferential") {
    require_keys(j, {"type", "states", "distinguished", "order", "valuation"});
    StateSpace space(string_list(j["states"], "states"));
    StateSet field = state_set(space, j["distinguished"], "distinguished");
    if (!j["order"].is_array()) throw ModelError("order must be an array of pairs");
    std::vector<std::pair<StateIndex, StateIndex>> order;
    for (const auto& pair : j["order"]) {
      auto ids = string_list(pair, "order pair");
      if (ids.size() != 2) throw ModelError("order entries must be [\"x\",\"y\"] pairs");
      auto x = space.find(ids[0]), y = space.find(ids[1]);
      if (!x || !y) throw ModelError("order names an unknown state");
      order.emplace_back(*x, *y);
    }
    Valuation v = read_valuation(space, j["valuation"]);
    return PreferentialModel(std::move(space), std::move(field), std::move(order), std::move(v));
  }
  if (type == "multimeasure") {
    require_keys(j, {"type", "states", "measures", "valuation"});
    StateSpace space(string_list(j["states"], "states"));
    if (!j["measures"].is_array()) throw ModelError("measures must be an array of objects");
    std::vector<Measure> measures;
    for (const auto& mj : j["measures"]) {
      if (!mj.is_object()) throw ModelError("each measure must be an object");
      Measure mu(space.size(), Rational(0));
      for (const auto& [id, w] : mj.items()) {
        auto i = space.find(id);
        if (!i) throw ModelError("measure names unknown state '" + id + "'");
        if (!w.is_string()) throw ModelError("weights must be \"num/den\" strings");
        mu[*i] = parse_rational(w.get<std::string>());
      }
      measures.push_back(std::move(mu));
    }
    Valuation v = read_valuation(space, j["valuation"]);
    return MultiMeasureModel(std::move(space), std::move(measures), std::move(v));
  }
  if (type == "distinguished") {
    require_keys(j, {"type", "states", "plus", "valuation"});
    StateSpace space(string_list(j["states"], "states"));
    StateSet plus = state_set(space, j["plus"], "plus");
    Valuation v = read_valuation(space, j["valuation"]);
    return DistinguishedStateModel(std::move(space), std::move(plus), std::move(v));
  }
  throw ModelError("unknown model type '" + type + "'");
}

std::string_view model_type(const AnyModel& m) {
  switch (m.index()) {
    case 0:
      return "preferential";
    case 1:
      return "multimeasure";
    default:
      return "distinguished";
  }
}

std::string dump_model(const AnyModel& m) {
  json j;
  j["type"] = std::string(model_type(m));
  if (const auto* p = std::get_if<PreferentialModel>(&m)) {
    j["states"] = p->space().ids();
    j["distinguished"] = ids_of(p->space(), p->field());
    json order = json::array();
    for (auto [x, y] : p->order()) order.push_back({p->space().id(x), p->space().id(y)});
    j["order"] = order;
    j["valuation"] = write_valuation(p->space(), p->valuation());
  } else if (const auto* mm = std::get_if<MultiMeasureModel>(&m)) {
    j["states"] = mm->space().ids();
    json measures = json::array();
    for (const auto& mu : mm->measures()) {
      json obj = json::object();
      for (StateIndex s = 0; s < mu.size() && s < mm->space().size(); ++s)
        obj[mm->space().id(s)] = format_rational(mu[s]);
      measures.push_back(obj);
    }
    j["measures"] = measures;
    j["valuation"] = write_valuation(mm->space(), mm->valuation());
  } else {
    const auto& d = std::get<DistinguishedStateModel>(m);
    j["states"] = d.space().ids();
    j["plus"] = ids_of(d.space(), d.plus());
    j["valuation"] = write_valuation(d.space(), d.valuation());
  }
  return j.dump(2) + "\n";
}

AnyModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

void save_model(const std::filesystem::path& path, const AnyModel& m) {
  std::ofstream out(path);
  if (!out) throw ModelError("cannot write model file " + path.string());
  out << dump_model(m);
}

}  // namespace comparo
