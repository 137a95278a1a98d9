// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "ncdeform/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncdeform {

TensorElement TensorElement::unit(std::vector<TensorSlot> slots) {
  TensorElement t(std::move(slots));
  std::vector<Exponents> mono;
  mono.reserve(t.slots_.size());
  for (const auto& s : t.slots_) mono.emplace_back(s.alg->size(), 0);
  t.add_term(mono, CycScalar(1));
  return t;
}

TensorElement TensorElement::outer(const TensorSlot& s0, const TensorSlot& s1,
                                   const PolyElement& f, const PolyElement& g) {
  if (f.algebra() != s0.alg || g.algebra() != s1.alg) {
    throw std::invalid_argument("outer: factor algebra does not match slot");
  }
  TensorElement t({s0, s1});
  for (const auto& [e0, c0] : f.terms()) {
    for (const auto& [e1, c1] : g.terms()) {
      t.add_term({e0, e1}, c0 * c1);
    }
  }
  return t;
}

void TensorElement::add_term(const std::vector<Exponents>& mono,
                             const CycScalar& c) {
  if (mono.size() != slots_.size()) {
    throw std::invalid_argument("tensor term arity mismatch");
  }
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (static_cast<int>(mono[i].size()) != slots_[i].alg->size()) {
      throw std::invalid_argument("tensor slot monomial length mismatch");
    }
  }
  if (c.term_count() == 0) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.term_count() == 0) terms_.erase(it);
  }
}

namespace {
void require_same_shape(const TensorElement& a, const TensorElement& b) {
  if (a.slot_count() != b.slot_count()) {
    throw std::invalid_argument("tensor slot count mismatch");
  }
  for (int i = 0; i < a.slot_count(); ++i) {
    if (a.slots()[i].alg != b.slots()[i].alg) {
      throw std::invalid_argument("tensor slot algebra mismatch");
    }
  }
}
}  // namespace

TensorElement TensorElement::operator+(const TensorElement& o) const {
  require_same_shape(*this, o);
  TensorElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  return *this + o.scaled(CycScalar(-1));
}

TensorElement TensorElement::scaled(const CycScalar& c) const {
  TensorElement r(slots_);
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

bool TensorElement::is_zero() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_zero(); });
}

TensorElement TensorElement::star(const TensorElement& o) const {
  require_same_shape(*this, o);
  TensorElement r(slots_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      CycScalar coeff = c1 * c2;
      std::vector<Exponents> mono(slots_.size());
      for (std::size_t s = 0; s < slots_.size(); ++s) {
        const auto& alg = *slots_[s].alg;
        coeff *= slots_[s].ctx.twist(alg.monomial_degree(m1[s]),
                                     alg.monomial_degree(m2[s]));
        mono[s].resize(m1[s].size());
        for (std::size_t i = 0; i < mono[s].size(); ++i) {
          mono[s][i] = m1[s][i] + m2[s][i];
        }
      }
      r.add_term(mono, coeff);
    }
  }
  return r;
}

PolyElement TensorElement::slot_element(int slot, const Exponents& mono) const {
  return PolyElement::monomial(slots_.at(slot).alg, mono);
}

TensorElement TensorElement::map_slot(
    int slot, const TensorSlot& new_slot,
    const std::function<PolyElement(const Exponents&)>& monomial_map) const {
  std::vector<TensorSlot> out_slots = slots_;
  out_slots.at(slot) = new_slot;
  TensorElement r(out_slots);
  for (const auto& [m, c] : terms_) {
    const PolyElement image = monomial_map(m[slot]);
    if (image.algebra() != new_slot.alg) {
      throw std::invalid_argument("map_slot: image over wrong algebra");
    }
    for (const auto& [e, ic] : image.terms()) {
      std::vector<Exponents> mono = m;
      mono[slot] = e;
      r.add_term(mono, c * ic);
    }
  }
  return r;
}

TensorElement TensorElement::expand_slot(
    int slot, const std::vector<TensorSlot>& replacement,
    const std::function<TensorElement(const Exponents&)>& monomial_map) const {
  std::vector<TensorSlot> out_slots;
  for (int i = 0; i < slot_count(); ++i) {
    if (i == slot) {
      out_slots.insert(out_slots.end(), replacement.begin(), replacement.end());
    } else {
      out_slots.push_back(slots_[i]);
    }
  }
  TensorElement r(out_slots);
  for (const auto& [m, c] : terms_) {
    const TensorElement image = monomial_map(m[slot]);
    if (image.slot_count() != static_cast<int>(replacement.size())) {
      throw std::invalid_argument("expand_slot: image arity mismatch");
    }
    for (const auto& [im, ic] : image.terms()) {
      std::vector<Exponents> mono;
      mono.reserve(out_slots.size());
      for (int i = 0; i < slot_count(); ++i) {
        if (i == slot) {
          mono.insert(mono.end(), im.begin(), im.end());
        } else {
          mono.push_back(m[i]);
        }
      }
      r.add_term(mono, c * ic);
    }
  }
  return r;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*";
    for (std::size_t s = 0; s < m.size(); ++s) {
      if (s) out << " (x) ";
      out << slots_[s].alg->monomial_to_string(m[s]);
    }
  }
  return out.str();
}

}  // namespace ncdeform
