#include "eulercalc/models.hpp"

#include <sstream>

namespace eulercalc {

namespace {

const std::string kUniverse = "universe";

std::vector<std::string> split_tuple(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(item);
  if (!s.empty() && s.back() == ',') parts.emplace_back();
  return parts;
}

}  // namespace

void FiniteModel::validate() const {
  const std::set<std::string> u(universe.begin(), universe.end());
  if (u.size() != universe.size()) throw RejectedInput("duplicate element in the universe");
  if (u.size() < 2) throw RejectedInput("a model needs at least two distinct elements");

  for (const auto& [name, elems] : subsets) {
    if (name == kUniverse && elems != u) throw RejectedInput("subset name 'universe' is reserved");
    std::optional<std::size_t> arity;
    for (const auto& e : elems) {
      const auto parts = split_tuple(e);
      if (arity && *arity != parts.size()) throw RejectedInput("subset '" + name + "' mixes tuple lengths");
      arity = parts.size();
      for (const auto& p : parts) {
        if (!u.count(p)) throw RejectedInput("subset '" + name + "' uses '" + p + "', which is not in the universe");
      }
    }
  }
  for (const auto& [name, map] : maps) {
    const auto dom = subset(map.dom);
    const auto cod = subset(map.cod);
    for (const auto& x : dom) {
      auto it = map.table.find(x);
      if (it == map.table.end()) throw RejectedInput("map '" + name + "' is undefined at '" + x + "'");
      if (!cod.count(it->second)) {
        throw RejectedInput("map '" + name + "' sends '" + x + "' outside its codomain '" + map.cod + "'");
      }
    }
    if (map.table.size() != dom.size()) throw RejectedInput("map '" + name + "' has entries outside its domain");
  }
}

std::set<std::string> FiniteModel::subset(const std::string& name) const {
  if (name == kUniverse && !subsets.count(name)) return {universe.begin(), universe.end()};
  auto it = subsets.find(name);
  if (it == subsets.end()) throw RejectedInput("unknown subset '" + name + "'");
  return it->second;
}

FiniteMap FiniteModel::finite_map(const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) throw RejectedInput("unknown map '" + name + "'");
  FiniteMap m;
  m.table = it->second.table;
  m.codomain = subset(it->second.cod);
  return m;
}

EulerDim sk0_class(const FiniteModel& m, const std::string& subset) { return EulerDim::count(m.subset(subset).size()); }

ConstructibleFn model_pushforward(const FiniteModel& m, const std::string& map, const ConstructibleFn& g) {
  const FiniteMap f = m.finite_map(map);
  const auto* fn = g.get<FiniteFn>();
  if (!fn || fn->domain != m.subset(m.maps.at(map).dom)) {
    throw RejectedInput("function does not live on the domain of '" + map + "'");
  }
  if (f.table.empty()) {
    FiniteFn zero;
    zero.domain = f.codomain;
    return ConstructibleFn(std::move(zero));
  }
  return cf_pushforward(f, g);
}

ConstructibleFn model_pullback(const FiniteModel& m, const std::string& map, const ConstructibleFn& h) {
  const FiniteMap f = m.finite_map(map);
  const auto* fn = h.get<FiniteFn>();
  if (!fn || fn->domain != m.subset(m.maps.at(map).cod)) {
    throw RejectedInput("function does not live on the codomain of '" + map + "'");
  }
  FiniteFn out;
  out.domain = m.subset(m.maps.at(map).dom);
  for (const auto& [x, y] : f.table) {
    EulerDim v = fn->at(y);
    if (!v.is_zero()) out.values.emplace(x, std::move(v));
  }
  return ConstructibleFn(std::move(out));
}

FiniteMap compose(const FiniteMap& outer, const FiniteMap& inner) {
  FiniteMap out;
  out.codomain = outer.target();
  for (const auto& [x, y] : inner.table) {
    auto it = outer.table.find(y);
    if (it == outer.table.end()) throw RejectedInput("maps are not composable at '" + y + "'");
    out.table.emplace(x, it->second);
  }
  return out;
}

}  // namespace eulercalc
