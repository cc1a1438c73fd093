#pragma once

// Comparison-exchange network model: elements, networks, evaluation and
// stage scheduling. Wires are 1-based; a CE on (i,j) leaves the minimum on
// wire i and the maximum on wire j.

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cen/errors.hpp"

namespace cen {

enum class ElementKind : std::uint8_t { link, fused2, fused3 };

/// A plain link or a fused NICE element (2-op / 3-op).
///
/// Slots are the constituent CEs in wire order: a link has one slot,
/// Fused2(a,b,c) has (a,b),(b,c) and Fused3(a,b,c,d) has (a,b),(b,c),(c,d).
/// Endpoints are stored as given; `normalized()` sorts them.
class Element {
public:
  static Element link(int i, int j);
  static Element fused2(int a, int b, int c);
  static Element fused3(int a, int b, int c, int d);
  /// Kind chosen by arity (2, 3 or 4 wires). Throws ContractViolation otherwise.
  static Element from_wires(std::span<const int> wires);

  ElementKind kind() const noexcept { return kind_; }
  bool is_link() const noexcept { return kind_ == ElementKind::link; }
  std::size_t arity() const noexcept { return static_cast<std::size_t>(kind_) + 2; }
  std::size_t slot_count() const noexcept { return arity() - 1; }

  std::span<const int> wires() const noexcept { return {wires_.data(), arity()}; }
  int wire(std::size_t k) const noexcept { return wires_[k]; }
  int lowest() const noexcept;
  int highest() const noexcept;
  std::pair<int, int> slot(std::size_t s) const noexcept { return {wires_[s], wires_[s + 1]}; }

  bool touches(int w) const noexcept;
  bool shares_wire(const Element& other) const noexcept;
  std::size_t shared_wire_count(const Element& other) const noexcept;

  Element normalized() const;
  bool is_normalized() const noexcept;

  friend bool operator==(const Element&, const Element&) = default;

private:
  Element(ElementKind kind, std::array<int, 4> wires) : kind_(kind), wires_(wires) {}

  ElementKind kind_ = ElementKind::link;
  std::array<int, 4> wires_{};
};

std::string to_string(const Element& e);
std::ostream& operator<<(std::ostream& os, const Element& e);

/// Immutable network value. Equality ignores the display name.
class Network {
public:
  Network() = default;
  explicit Network(int order, std::vector<Element> elements = {}, std::string name = {});

  int order() const noexcept { return order_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const Element& operator[](std::size_t i) const { return elements_.at(i); }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const std::string& name() const noexcept { return name_; }

  /// Number of constituent CE slots (a 2-op counts as two links).
  std::size_t link_count() const noexcept;
  bool has_fused() const noexcept;

  Network with_elements(std::vector<Element> elements) const;
  Network renamed(std::string name) const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.order_ == b.order_ && a.elements_ == b.elements_;
  }

private:
  int order_ = 1;
  std::vector<Element> elements_;
  std::string name_;
};

std::ostream& operator<<(std::ostream& os, const Network& n);

enum class ViolationKind { invalid_order, endpoint_out_of_range, endpoints_not_increasing, duplicate_endpoint };

struct Violation {
  std::size_t element_index; // npos-like value for invalid_order
  ViolationKind kind;
  int wire;
  std::string message;
};

/// Every invariant violation in `network`; empty means valid.
std::vector<Violation> validate(const Network& network);

/// Throws ContractViolation carrying the first violation.
void require_valid(const Network& network);

struct ElementOutcome {
  std::array<bool, 3> swapped{}; // per slot
  int swaps = 0;
  int comparisons = 0;

  bool active() const noexcept { return swaps > 0; }
};

namespace detail {

template <class T>
inline bool compare_exchange(T& lo, T& hi) {
  if (hi < lo) {
    using std::swap;
    swap(lo, hi);
    return true;
  }
  return false;
}

// Endpoints must already be in range for `state`.
template <class T>
inline ElementOutcome apply_unchecked(const Element& e, T* state) {
  ElementOutcome out;
  const auto at = [&](std::size_t k) -> T& { return state[e.wire(k) - 1]; };
  switch (e.kind()) {
  case ElementKind::link:
    out.comparisons = 1;
    out.swapped[0] = compare_exchange(at(0), at(1));
    break;
  case ElementKind::fused2:
    // CE(a,b); if it swapped, CE(b,c) is elided.
    out.swapped[0] = compare_exchange(at(0), at(1));
    out.comparisons = 1;
    if (!out.swapped[0]) {
      out.swapped[1] = compare_exchange(at(1), at(2));
      out.comparisons = 2;
    }
    break;
  case ElementKind::fused3:
    // Central CE(b,c) first; if it swapped, both wings are elided.
    out.swapped[1] = compare_exchange(at(1), at(2));
    out.comparisons = 1;
    if (!out.swapped[1]) {
      out.swapped[0] = compare_exchange(at(0), at(1));
      out.swapped[2] = compare_exchange(at(2), at(3));
      out.comparisons = 3;
    }
    break;
  }
  out.swaps = out.swapped[0] + out.swapped[1] + out.swapped[2];
  return out;
}

} // namespace detail

/// Applies one element in place. Throws ContractViolation when an endpoint
/// lies outside `state`.
template <class T>
ElementOutcome apply_element(const Element& e, std::span<T> state) {
  for (int w : e.wires())
    if (w < 1 || static_cast<std::size_t>(w) > state.size())
      throw ContractViolation("element " + to_string(e) + " reaches wire " + std::to_string(w) +
                              " but state has " + std::to_string(state.size()) + " values");
  return detail::apply_unchecked(e, state.data());
}

struct EvalTrace {
  std::vector<int> output;
  std::vector<ElementOutcome> per_element;
  int total_swaps = 0;
  int total_comparisons = 0;
};

/// Evaluates the network on `input` (length must equal the order).
EvalTrace run(const Network& network, std::span<const int> input);

/// Maps each endpoint w to order+1-w; the result is normalized.
Element mirror(const Element& e, int order);

/// Replaces each fused element by its constituent links
/// (Fused2 -> (a,b),(b,c); Fused3 -> (b,c),(a,b),(c,d)).
Network decompose(const Network& network);

struct Schedule {
  std::vector<std::vector<std::size_t>> stages; // element indices, ascending
  std::vector<std::size_t> stage_of;            // 0-based stage per element

  std::size_t stage_count() const noexcept { return stages.size(); }
};

/// Greedy earliest-fit: each element goes one stage after the latest earlier
/// element it shares a wire with.
Schedule schedule(const Network& network);

} // namespace cen
