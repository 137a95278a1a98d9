// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "ncdeform/algebra.hpp"

namespace ncdeform {

struct TensorSlot {
  AlgebraPtr alg;
  StarContext ctx;
};

/// Finite sum of pure tensors of monomials, two or three factors, each factor
/// over its own graded algebra. The twisted product multiplies slotwise and
/// twists each slot with its own context, which realizes x_{J (+) J} on
/// A (x) A and the mixed group/space contexts used by coactions.
class TensorElement {
 public:
  explicit TensorElement(std::vector<TensorSlot> slots)
      : slots_(std::move(slots)) {}

  static TensorElement unit(std::vector<TensorSlot> slots);
  /// f (x) g as a pure tensor (expanded bilinearly).
  static TensorElement outer(const TensorSlot& s0, const TensorSlot& s1,
                             const PolyElement& f, const PolyElement& g);

  const std::vector<TensorSlot>& slots() const { return slots_; }
  int slot_count() const { return static_cast<int>(slots_.size()); }
  const std::map<std::vector<Exponents>, CycScalar>& terms() const {
    return terms_;
  }

  void add_term(const std::vector<Exponents>& mono, const CycScalar& c);

  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement scaled(const CycScalar& c) const;

  bool is_zero() const;
  bool operator==(const TensorElement& o) const {
    return (*this - o).is_zero();
  }

  /// Slotwise twisted product.
  TensorElement star(const TensorElement& o) const;

  /// Extract the factor at `slot` of a given term as an element.
  PolyElement slot_element(int slot, const Exponents& mono) const;

  /// Applies a linear map to one slot; the map sends a basis monomial of that
  /// slot to an element of `new_alg` (used for id (x) S and for zeta).
  TensorElement map_slot(
      int slot, const TensorSlot& new_slot,
      const std::function<PolyElement(const Exponents&)>& monomial_map) const;

  /// Replaces one slot by a two-slot tensor, splicing the slots in place
  /// (used for (Delta (x) id) and (id (x) Delta)).
  TensorElement expand_slot(
      int slot, const std::vector<TensorSlot>& replacement,
      const std::function<TensorElement(const Exponents&)>& monomial_map) const;

  std::string to_string() const;

 private:
  std::vector<TensorSlot> slots_;
  std::map<std::vector<Exponents>, CycScalar> terms_;
};

}  // namespace ncdeform
