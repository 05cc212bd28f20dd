#include "arbor/hopf.hpp"

#include <stdexcept>

namespace arbor {

std::string word_str(const Word& w, RenderFormat fmt) {
  if (w.empty()) return fmt == RenderFormat::Ascii ? "eps" : "\\varepsilon";
  std::string out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!out.empty()) out += fmt == RenderFormat::Ascii ? " | " : " \\; ";
    out += render(*it, fmt);
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

namespace {

void shuffle_into(const Word& u, size_t i, const Word& v, size_t j, Word& prefix, WordComb& out) {
  if (i == u.size() && j == v.size()) {
    out.add(prefix, Scalar(1));
    return;
  }
  if (i < u.size()) {
    prefix.push_back(u[i]);
    shuffle_into(u, i + 1, v, j, prefix, out);
    prefix.pop_back();
  }
  if (j < v.size()) {
    prefix.push_back(v[j]);
    shuffle_into(u, i, v, j + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

WordComb shuffle(const Word& u, const Word& v) {
  WordComb out;
  Word prefix;
  prefix.reserve(u.size() + v.size());
  shuffle_into(u, 0, v, 0, prefix, out);
  return out;
}

WordComb shuffle(const WordComb& u, const WordComb& v) {
  return bilinear<Word, Word, Word>(u, v, [](const Word& a, const Word& b) { return shuffle(a, b); });
}

WordTensor deconcat(const Word& w) {
  WordTensor out;
  for (size_t i = 0; i <= w.size(); ++i) {
    out.add({Word(w.begin() + static_cast<long>(i), w.end()), Word(w.begin(), w.begin() + static_cast<long>(i))}, Scalar(1));
  }
  return out;
}

WordTensor deconcat(const WordComb& w) { return w.map<std::pair<Word, Word>>([](const Word& x) { return deconcat(x); }); }

WordComb antipode_shuffle(const Word& w) {
  Word r(w.rbegin(), w.rend());
  return WordComb(r, Scalar(w.size() % 2 == 0 ? 1 : -1));
}

WordTensor deconcat_first(const Word& w) {
  WordTensor out;
  if (w.empty()) return out;
  out.add({Word{w.back()}, Word(w.begin(), w.end() - 1)}, Scalar(1));
  return out;
}

WordTensor3 deconcat_left(const WordTensor& d) {
  WordTensor3 out;
  for (const auto& [pair, c] : d.terms()) {
    for (const auto comb = deconcat(pair.first); const auto& [p2, c2] : comb.terms()) out.add({p2.first, p2.second, pair.second}, c * c2);
  }
  return out;
}

WordTensor3 deconcat_right(const WordTensor& d) {
  WordTensor3 out;
  for (const auto& [pair, c] : d.terms()) {
    for (const auto comb = deconcat(pair.second); const auto& [p2, c2] : comb.terms()) out.add({pair.first, p2.first, p2.second}, c * c2);
  }
  return out;
}

// ---------------------------------------------------------------- cuts

bool root_cuttable(const DecoratedTree& t, Mode mode) { return mode == Mode::Generic || t.deco().kind == EdgeKind::T2; }

bool is_letter(const DecoratedTree& t, Mode mode) {
  if (mode == Mode::Generic) return t.is_leaf();
  if (t.deco().kind != EdgeKind::T2 || t.is_leaf()) return false;
  for (const auto& c : t.children()) {
    if (c.deco().kind != EdgeKind::T1 || !c.is_leaf()) return false;
  }
  return true;
}

namespace {

ForestTensor tensor_product(const ForestTensor& a, const ForestTensor& b) {
  ForestTensor out;
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) out.add({pa.first * pb.first, pa.second * pb.second}, ca * cb);
  }
  return out;
}

}  // namespace

ForestTensor bck_coproduct(const DecoratedTree& t, Mode mode) {
  ForestTensor out;
  if (root_cuttable(t, mode)) out.add({Forest(t), Forest()}, Scalar(1));
  for (const auto comb = bck_coproduct(Forest(t.children()), mode); const auto& [pair, c] : comb.terms()) {
    out.add({pair.first, Forest(t.with_children(pair.second.trees()))}, c);
  }
  return out;
}

ForestTensor bck_coproduct(const Forest& f, Mode mode) {
  ForestTensor out({Forest(), Forest()});
  for (const auto& t : f.trees()) out = tensor_product(out, bck_coproduct(t, mode));
  return out;
}

ForestTensor3 coproduct_left(const ForestTensor& d, Mode mode) {
  ForestTensor3 out;
  for (const auto& [pair, c] : d.terms()) {
    for (const auto comb = bck_coproduct(pair.first, mode); const auto& [p2, c2] : comb.terms()) out.add({p2.first, p2.second, pair.second}, c * c2);
  }
  return out;
}

ForestTensor3 coproduct_right(const ForestTensor& d, Mode mode) {
  ForestTensor3 out;
  for (const auto& [pair, c] : d.terms()) {
    for (const auto comb = bck_coproduct(pair.second, mode); const auto& [p2, c2] : comb.terms()) out.add({pair.first, p2.first, p2.second}, c * c2);
  }
  return out;
}

// ---------------------------------------------------------------- grafting

DecoratedTree graft_at(const DecoratedTree& sigma, const DecoratedTree& tau, const NodePath& node) {
  const auto& target = tau.at(node);
  auto kids = target.children();
  kids.push_back(sigma);
  return tau.replace_at(node, target.with_children(std::move(kids)));
}

ForestComb graft(const Forest& sigma, const Forest& tau, Mode mode) {
  if (sigma.size() > 1 || tau.size() > 1) throw std::invalid_argument("grafting takes single trees or the empty forest");
  if (sigma.empty()) return ForestComb(tau);
  if (tau.empty()) return ForestComb(sigma);
  const auto& s = sigma.single();
  const auto& t = tau.single();
  ForestComb out;
  for_each_node(t, [&](const NodePath& path, const DecoratedTree& node) {
    if (mode == Mode::Fourier) {
      if (!node.is_leaf() || !(node.freq() == s.freq()) || node.deco().parity != s.deco().parity) return;
    }
    out.add(Forest(graft_at(s, t, path)), Scalar(1));
  });
  return out;
}

ForestTensor graft_adjoint(const DecoratedTree& tau, Mode mode) {
  ForestTensor out;
  if (root_cuttable(tau, mode)) out.add({Forest(tau), Forest()}, Scalar(1));
  const auto& kids = tau.children();
  for (size_t j = 0; j < kids.size(); ++j) {
    for (const auto comb = graft_adjoint(kids[j], mode); const auto& [pair, c] : comb.terms()) {
      std::vector<DecoratedTree> rest;
      for (size_t i = 0; i < kids.size(); ++i) {
        if (i != j) rest.push_back(kids[i]);
      }
      if (!pair.second.empty()) rest.push_back(pair.second.single());
      out.add({pair.first, Forest(tau.with_children(std::move(rest)))}, c);
    }
  }
  return out;
}

Scalar inner_product(const Forest& a, const Forest& b, bool with_freq) {
  if (!(a == b)) return Scalar(0);
  return Scalar(symmetry_factor(b, with_freq));
}

Scalar inner_product(const ForestComb& a, const ForestComb& b, bool with_freq) {
  Scalar s;
  for (const auto& [f, c] : a.terms()) s += c * b.coeff(f) * inner_product(f, f, with_freq);
  return s;
}

Scalar inner_product(const ForestTensor& a, const ForestTensor& b, bool with_freq) {
  Scalar s;
  for (const auto& [p, c] : a.terms()) {
    Scalar other = b.coeff(p);
    if (other.is_zero()) continue;
    s += c * other * inner_product(p.first, p.first, with_freq) * inner_product(p.second, p.second, with_freq);
  }
  return s;
}

// ---------------------------------------------------------------- arborification

void check_letter_structure(const DecoratedTree& t) {
  for_each_node(t, [&](const NodePath&, const DecoratedTree& n) {
    for (const auto& c : n.children()) {
      bool ok = n.deco().kind == EdgeKind::T2 ? c.deco().kind == EdgeKind::T1 : c.deco().kind == EdgeKind::T2;
      if (!ok) throw std::domain_error("structural error: cuts of " + t.encoding() + " do not produce letters at " + n.encoding());
    }
  });
  if (order(t) > 0 && t.deco().kind != EdgeKind::T2) {
    throw std::domain_error("structural error: arborification needs a T2 root edge: " + t.encoding());
  }
}

WordComb arborify(const Forest& f, Mode mode, ArbVariant variant) {
  WordComb out(Word{});
  for (const auto& t : f.trees()) out = shuffle(out, arborify(t, mode, variant));
  return out;
}

WordComb arborify(const DecoratedTree& t, Mode mode, ArbVariant variant) {
  if (mode == Mode::Fourier) {
    check_letter_structure(t);
    if (order(t) == 0) return WordComb(Word{});
  }
  WordComb out;
  if (variant == ArbVariant::Coproduct) {
    for (const auto comb = bck_coproduct(t, mode); const auto& [pair, c] : comb.terms()) {
      if (pair.second.size() != 1 || !is_letter(pair.second.single(), mode)) continue;
      Word head{pair.second.single()};
      for (const auto comb = arborify(pair.first, mode, variant); const auto& [w, cw] : comb.terms()) out.add(concat(head, w), c * cw);
    }
  } else {
    for (const auto comb = graft_adjoint(t, mode); const auto& [pair, c] : comb.terms()) {
      if (pair.first.size() != 1 || !is_letter(pair.first.single(), mode)) continue;
      Word tail{pair.first.single()};
      for (const auto comb = arborify(pair.second, mode, variant); const auto& [w, cw] : comb.terms()) out.add(concat(w, tail), c * cw);
    }
  }
  return out;
}

WordComb hairer_kelly(const Forest& f, ArbVariant variant) {
  WordComb out(Word{});
  for (const auto& t : f.trees()) out = shuffle(out, hairer_kelly(t, variant));
  return out;
}

WordComb hairer_kelly(const DecoratedTree& t, ArbVariant variant) {
  WordComb out;
  if (variant == ArbVariant::Coproduct) {
    for (const auto comb = bck_coproduct(t, Mode::Generic); const auto& [pair, c] : comb.terms()) {
      if (pair.second.empty()) continue;
      Word head{pair.second.single()};
      for (const auto comb = hairer_kelly(pair.first, variant); const auto& [w, cw] : comb.terms()) out.add(concat(head, w), c * cw);
    }
  } else {
    for (const auto comb = graft_adjoint(t, Mode::Generic); const auto& [pair, c] : comb.terms()) {
      if (pair.first.empty()) continue;
      Word tail{pair.first.single()};
      for (const auto comb = hairer_kelly(pair.second, variant); const auto& [w, cw] : comb.terms()) out.add(concat(w, tail), c * cw);
    }
  }
  return out;
}

}  // namespace arbor
