#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "semreg/expr_tree.hpp"

namespace semreg {

/// One position of a forbidden semantics: a real value that must not be
/// produced, or one of the two degenerate markers. AnyAllowed means no real
/// value is out of domain at that position; NoneAllowed means every value is.
class ExtendedValue {
 public:
  enum class Kind : std::uint8_t { Real, AnyAllowed, NoneAllowed };

  constexpr ExtendedValue() = default;
  static constexpr ExtendedValue real(double v) { return ExtendedValue(Kind::Real, v); }
  static constexpr ExtendedValue any_allowed() { return ExtendedValue(Kind::AnyAllowed, 0.0); }
  static constexpr ExtendedValue none_allowed() { return ExtendedValue(Kind::NoneAllowed, 0.0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_real() const { return kind_ == Kind::Real; }
  constexpr bool is_any_allowed() const { return kind_ == Kind::AnyAllowed; }
  constexpr bool is_none_allowed() const { return kind_ == Kind::NoneAllowed; }
  /// Meaningful only for Real.
  constexpr double value() const { return value_; }

  friend constexpr bool operator==(ExtendedValue lhs, ExtendedValue rhs) {
    return lhs.kind_ == rhs.kind_ && (lhs.kind_ != Kind::Real || lhs.value_ == rhs.value_);
  }

 private:
  constexpr ExtendedValue(Kind kind, double v) : kind_(kind), value_(v) {}

  Kind kind_ = Kind::Real;
  double value_ = 0.0;
};

using ExtendedSemantics = std::vector<ExtendedValue>;

enum class Side : std::uint8_t { First, Second };

/// Maps a forbidden value at a node with operator `op` to the value that is
/// forbidden for the child on `side`, given the other child's output.
///
///   Add: s - y | s - x        Sub: s + y | x - s
///   Mul: s / y | s / x        Div: s * y | x / s
///
/// Degenerate cases: r/0 is AnyAllowed for r != 0 and NoneAllowed for 0/0;
/// AnyAllowed survives + - and division by anything, becomes NoneAllowed when
/// multiplied by 0, and x / AnyAllowed is 0. NoneAllowed is absorbing.
ExtendedValue invert_forbidden_value(ExtendedValue s, Op op, Side side, double sibling);

ExtendedSemantics invert_forbidden(std::span<const ExtendedValue> s, Op op, Side side,
                                   std::span<const double> sibling);

/// |candidate - forbidden| <= kForbiddenMatchTolerance * max(1, |forbidden|).
inline constexpr double kForbiddenMatchTolerance = 1e-12;
bool forbidden_match(double candidate, double forbidden);

/// Semantics that would drive some ancestor division out of its domain.
/// A candidate is rejected when, for some member and some position, the
/// member holds NoneAllowed or a real that matches the candidate there.
class ForbiddenSet {
 public:
  ForbiddenSet() = default;
  static ForbiddenSet all_forbidden();

  bool is_all_forbidden() const { return all_forbidden_; }
  bool empty() const { return !all_forbidden_ && members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<ExtendedSemantics>& members() const { return members_; }

  /// Adds a member, skipping exact duplicates. A member containing
  /// NoneAllowed collapses the whole set to AllForbidden.
  void insert(ExtendedSemantics member);

  /// The set seen by one child of an `op` node whose children output
  /// `left` and `right`. Includes the all-zeros member for a divisor.
  ForbiddenSet for_child(Op op, Side side, std::span<const double> left,
                         std::span<const double> right) const;

  bool allows(std::span<const double> candidate) const;
  /// allows() for the constant semantics (k, ..., k).
  bool allows_constant(double k) const;

  friend bool operator==(const ForbiddenSet&, const ForbiddenSet&) = default;

 private:
  bool all_forbidden_ = false;
  std::vector<ExtendedSemantics> members_;
};

bool forbidden_allows(const ForbiddenSet& set, std::span<const double> candidate);

/// Sorted copy of a set's real entries, answering allows_constant() in
/// O(log m) for repeated queries against the same set.
class ConstantScreen {
 public:
  explicit ConstantScreen(const ForbiddenSet& set);
  bool allows(double k) const;

 private:
  bool all_forbidden_ = false;
  std::vector<double> values_;
};

}  // namespace semreg
