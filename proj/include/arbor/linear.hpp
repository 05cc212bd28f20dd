#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "arbor/scalar.hpp"

namespace arbor {

// Finite formal sum over an ordered basis with exact coefficients.
template <class B>
class LinearCombination {
 public:
  using Terms = std::map<B, Scalar>;

  LinearCombination() = default;
  explicit LinearCombination(const B& b, const Scalar& c = Scalar(1)) { add(b, c); }

  void add(const B& b, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(b, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Scalar coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  LinearCombination scaled(const Scalar& s) const {
    LinearCombination r;
    for (const auto& [b, c] : terms_) r.add(b, c * s);
    return r;
  }

  // Apply a linear map given on basis elements.
  template <class C>
  LinearCombination<C> map(const std::function<LinearCombination<C>(const B&)>& fn) const {
    LinearCombination<C> r;
    for (const auto& [b, c] : terms_) r += fn(b).scaled(c);
    return r;
  }

  LinearCombination filter(const std::function<bool(const B&)>& keep) const {
    LinearCombination r;
    for (const auto& [b, c] : terms_) {
      if (keep(b)) r.add(b, c);
    }
    return r;
  }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) = default;

  std::string str(const std::function<std::string(const B&)>& name) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [b, c] : terms_) {
      if (!out.empty()) out += " + ";
      if (!(c == Scalar(1))) out += c.str() + " ";
      out += name(b);
    }
    return out;
  }

 private:
  Terms terms_;
};

template <class A, class B>
using Tensor = LinearCombination<std::pair<A, B>>;

// Bilinear product of two combinations through a basis-level product.
template <class A, class B, class C>
LinearCombination<C> bilinear(const LinearCombination<A>& x, const LinearCombination<B>& y,
                              const std::function<LinearCombination<C>(const A&, const B&)>& fn) {
  LinearCombination<C> r;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) r += fn(a, b).scaled(ca * cb);
  }
  return r;
}

}  // namespace arbor
