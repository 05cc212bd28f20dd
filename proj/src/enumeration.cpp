#include "arbor/enumeration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arbor {

namespace {

DecoratedTree zero_leaf(int parity) { return {{EdgeKind::T1, parity}, FreqVector()}; }

std::vector<DecoratedTree> unique_sorted(std::map<std::string, DecoratedTree>& m) {
  std::vector<DecoratedTree> out;
  for (auto& [enc, t] : m) out.push_back(t);
  return out;
}

FreqVector rename(const FreqVector& f, const std::map<Symbol, Symbol>& names) {
  FreqVector r;
  for (const auto& [s, c] : f.coeffs()) {
    auto it = names.find(s);
    r += FreqVector::symbol(it == names.end() ? s : it->second, c);
  }
  return r;
}

bool is_leaf_cherry(const DecoratedTree& n) {
  if (n.deco().kind != EdgeKind::T2 || n.is_leaf()) return false;
  return std::all_of(n.children().begin(), n.children().end(), [](const DecoratedTree& c) { return c.is_leaf(); });
}

}  // namespace

std::vector<DecoratedTree> t0_shapes(int parity, int order) {
  if (order < 0) return {};
  if (order == 0) return {zero_leaf(parity)};
  std::vector<DecoratedTree> out;
  for (const auto& s : that_shapes(parity, order)) out.emplace_back(EdgeDecoration{EdgeKind::T1, parity}, FreqVector(), std::vector<DecoratedTree>{s});
  return out;
}

std::vector<DecoratedTree> that_shapes(int parity, int order) {
  if (order < 1) return {};
  std::map<std::string, DecoratedTree> found;
  int rest = order - 1;
  for (int m1 = 0; m1 <= rest; ++m1) {
    for (int m2 = 0; m1 + m2 <= rest; ++m2) {
      int m3 = rest - m1 - m2;
      auto a = t0_shapes(parity, m1);
      auto b = t0_shapes(parity, m2);
      auto c = t0_shapes(1 - parity, m3);
      for (const auto& x : a) {
        for (const auto& y : b) {
          for (const auto& z : c) {
            DecoratedTree t({EdgeKind::T2, parity}, FreqVector(), {x, y, z});
            found.emplace(t.encoding(), t);
          }
        }
      }
    }
  }
  return unique_sorted(found);
}

namespace {

DecoratedTree instantiate_rec(const DecoratedTree& shape, Symbol& next) {
  if (shape.is_leaf()) return {shape.deco(), FreqVector::symbol(next++)};
  std::vector<const DecoratedTree*> order;
  for (const auto& c : shape.children()) {
    if (c.deco().parity != shape.deco().parity) order.push_back(&c);
  }
  for (const auto& c : shape.children()) {
    if (c.deco().parity == shape.deco().parity) order.push_back(&c);
  }
  std::vector<DecoratedTree> kids;
  FreqVector sum;
  for (const auto* c : order) {
    kids.push_back(instantiate_rec(*c, next));
    sum += kids.back().deco().parity == 1 ? -kids.back().freq() : kids.back().freq();
  }
  if (shape.deco().parity == 1) sum = -sum;
  return {shape.deco(), sum, std::move(kids)};
}

}  // namespace

DecoratedTree instantiate(const DecoratedTree& shape, Symbol first) {
  Symbol next = first;
  return instantiate_rec(shape, next);
}

DecoratedTree constrain_root(const DecoratedTree& t, std::vector<std::pair<FreqVector, FreqVector>>* side) {
  const FreqVector& root = t.freq();
  if (root.coeff(0) != 0) throw std::invalid_argument("root frequency already involves k");
  std::optional<Symbol> solve;
  for (const auto& [s, c] : root.coeffs()) {
    if (c == 1 || c == -1) solve = s;
  }
  if (!solve) throw std::invalid_argument("cannot solve the root constraint for " + t.encoding());
  int64_t c = root.coeff(*solve);
  // root = rest + c*s = k  =>  s = c*(k - rest)
  FreqVector rest = root - FreqVector::symbol(*solve, c);
  FreqVector value = (FreqVector::symbol(0) - rest).scaled(c);
  if (side) {
    for (auto& [a, b] : *side) {
      a = a.substitute(*solve, value);
      b = b.substitute(*solve, value);
    }
  }
  return t.substitute(*solve, value);
}

std::vector<DecoratedTree> gen_T0(const TreeSpaceSpec& spec) {
  if (spec.resonant) throw std::invalid_argument("T0 spaces are never resonant");
  std::vector<DecoratedTree> out;
  int lo = spec.up_to ? 0 : spec.order;
  for (int m = lo; m <= spec.order; ++m) {
    for (const auto& s : t0_shapes(spec.parity, m)) {
      auto t = instantiate(s);
      out.push_back(spec.constrain_root ? constrain_root(t) : t);
    }
  }
  return out;
}

std::vector<DecoratedTree> gen_That(const TreeSpaceSpec& spec) {
  if (spec.resonant) throw std::invalid_argument("use gen_That_res for resonant spaces");
  if (spec.order < 1) throw std::invalid_argument("hat spaces need order >= 1");
  std::vector<DecoratedTree> out;
  for (const auto& s : that_shapes(spec.parity, spec.order)) {
    auto t = instantiate(s);
    if (spec.constrain_root) t = constrain_root(t);
    if (is_non_resonant(t)) out.push_back(t);
  }
  return out;
}

std::vector<NodePath> resonant_nodes(const DecoratedTree& t) {
  std::vector<NodePath> out;
  for_each_node(t, [&](const NodePath& p, const DecoratedTree& n) {
    if (n.deco().kind == EdgeKind::T2 && !n.is_leaf() && local_phase(n).is_zero()) out.push_back(p);
  });
  return out;
}

std::vector<SpaceEntry> gen_That_res(const TreeSpaceSpec& spec) {
  if (spec.order < 1) throw std::invalid_argument("hat spaces need order >= 1");
  std::vector<SpaceEntry> out;
  for (const auto& s : that_shapes(spec.parity, spec.order)) {
    auto base = instantiate(s);
    std::vector<NodePath> cherries;
    for_each_node(base, [&](const NodePath& p, const DecoratedTree& n) {
      if (is_leaf_cherry(n)) cherries.push_back(p);
    });
    for (const auto& path : cherries) {
      const auto& node = base.at(path);
      Symbol odd = 0;
      std::vector<Symbol> same;
      for (const auto& c : node.children()) {
        Symbol sym = c.freq().coeffs().begin()->first;
        if (c.deco().parity != node.deco().parity) {
          odd = sym;
        } else {
          same.push_back(sym);
        }
      }
      std::sort(same.begin(), same.end());
      for (int pattern = 1; pattern <= 2; ++pattern) {
        Symbol target = same[pattern - 1];
        auto t = base.substitute(odd, FreqVector::symbol(target));
        std::vector<std::pair<FreqVector, FreqVector>> distinct;
        if (pattern == 2) distinct.emplace_back(FreqVector::symbol(same[0]), FreqVector::symbol(target));

        std::map<Symbol, Symbol> names;
        Symbol next = 1;
        for (Symbol sym : tree_symbols(t)) names[sym] = next++;
        t = t.map_freq([&](const FreqVector& f) { return rename(f, names); });
        for (auto& [a, b] : distinct) {
          a = rename(a, names);
          b = rename(b, names);
        }
        if (spec.constrain_root) t = constrain_root(t, &distinct);

        auto res = resonant_nodes(t);
        if (res.size() != 1 || !is_leaf_cherry(t.at(res.front()))) continue;
        out.push_back({t, distinct, pattern, res.front()});
      }
    }
  }
  return out;
}

std::vector<SpaceEntry> that_entries(const TreeSpaceSpec& spec) {
  if (spec.resonant) return gen_That_res(spec);
  std::vector<SpaceEntry> out;
  for (auto& t : gen_That(spec)) out.push_back({t, {}, 0, std::nullopt});
  return out;
}

namespace {

int node_count(const DecoratedTree& t) {
  int n = 1;
  for (const auto& c : t.children()) n += node_count(c);
  return n;
}

void forests_of_size(const std::vector<DecoratedTree>& pool, size_t from, int size, std::vector<DecoratedTree>& current,
                     std::vector<std::vector<DecoratedTree>>& out) {
  if (size == 0) {
    out.push_back(current);
    return;
  }
  for (size_t i = from; i < pool.size(); ++i) {
    int n = node_count(pool[i]);
    if (n > size) continue;
    current.push_back(pool[i]);
    forests_of_size(pool, i, size - n, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<DecoratedTree> generic_trees(int max_nodes, const std::vector<EdgeDecoration>& labels) {
  std::vector<DecoratedTree> all;
  for (int n = 1; n <= max_nodes; ++n) {
    std::vector<std::vector<DecoratedTree>> forests;
    std::vector<DecoratedTree> current;
    forests_of_size(all, 0, n - 1, current, forests);
    std::map<std::string, DecoratedTree> found;
    for (const auto& deco : labels) {
      for (const auto& f : forests) {
        DecoratedTree t(deco, FreqVector(), f);
        found.emplace(t.encoding(), t);
      }
    }
    for (auto& t : unique_sorted(found)) all.push_back(t);
  }
  return all;
}

std::vector<DecoratedTree> alphabet_letters(const std::vector<int>& parities) {
  std::vector<DecoratedTree> out;
  for (int p : parities) out.push_back(instantiate(that_shapes(p, 1).front(), kEllBase + 1));
  return out;
}

}  // namespace arbor
