#include "semreg/forbidden_set.hpp"

#include <algorithm>
#include <cmath>

namespace semreg {

namespace {

// r / divisor with the degenerate-divisor rules shared by Mul and Div.
ExtendedValue divide_real(double r, double divisor) {
  if (divisor != 0.0) return ExtendedValue::real(r / divisor);
  return r != 0.0 ? ExtendedValue::any_allowed() : ExtendedValue::none_allowed();
}

}  // namespace

ExtendedValue invert_forbidden_value(ExtendedValue s, Op op, Side side, double sibling) {
  if (s.is_none_allowed()) return s;
  const bool any = s.is_any_allowed();
  switch (op) {
    case Op::Add:
      return any ? s : ExtendedValue::real(s.value() - sibling);
    case Op::Sub:
      if (any) return s;
      return side == Side::First ? ExtendedValue::real(s.value() + sibling)
                                 : ExtendedValue::real(sibling - s.value());
    case Op::Mul:
      return any ? s : divide_real(s.value(), sibling);
    case Op::Div:
      if (side == Side::First) {
        if (!any) return ExtendedValue::real(s.value() * sibling);
        return sibling != 0.0 ? s : ExtendedValue::none_allowed();
      }
      // Second child: s = x / s'  =>  s' = x / s.
      if (any) return ExtendedValue::real(0.0);
      return divide_real(sibling, s.value());
  }
  return ExtendedValue::none_allowed();
}

ExtendedSemantics invert_forbidden(std::span<const ExtendedValue> s, Op op, Side side,
                                   std::span<const double> sibling) {
  ExtendedSemantics out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out[i] = invert_forbidden_value(s[i], op, side, sibling[i]);
  }
  return out;
}

bool forbidden_match(double candidate, double forbidden) {
  return std::abs(candidate - forbidden) <=
         kForbiddenMatchTolerance * std::max(1.0, std::abs(forbidden));
}

ForbiddenSet ForbiddenSet::all_forbidden() {
  ForbiddenSet set;
  set.all_forbidden_ = true;
  return set;
}

void ForbiddenSet::insert(ExtendedSemantics member) {
  if (all_forbidden_) return;
  if (std::any_of(member.begin(), member.end(),
                  [](ExtendedValue v) { return v.is_none_allowed(); })) {
    all_forbidden_ = true;
    members_.clear();
    return;
  }
  if (std::find(members_.begin(), members_.end(), member) != members_.end()) return;
  members_.push_back(std::move(member));
}

ForbiddenSet ForbiddenSet::for_child(Op op, Side side, std::span<const double> left,
                                     std::span<const double> right) const {
  if (all_forbidden_) return all_forbidden();
  const std::span<const double> sibling = side == Side::First ? right : left;
  ForbiddenSet child;
  for (const auto& member : members_) {
    child.insert(invert_forbidden(member, op, side, sibling));
    if (child.all_forbidden_) return child;
  }
  if (op == Op::Div && side == Side::Second) {
    child.insert(ExtendedSemantics(left.size(), ExtendedValue::real(0.0)));
  }
  return child;
}

bool ForbiddenSet::allows(std::span<const double> candidate) const {
  if (all_forbidden_) return false;
  for (const auto& member : members_) {
    for (std::size_t i = 0; i < member.size(); ++i) {
      const ExtendedValue v = member[i];
      if (v.is_none_allowed()) return false;
      if (v.is_real() && forbidden_match(candidate[i], v.value())) return false;
    }
  }
  return true;
}

bool ForbiddenSet::allows_constant(double k) const {
  if (all_forbidden_) return false;
  for (const auto& member : members_) {
    for (const ExtendedValue v : member) {
      if (v.is_none_allowed()) return false;
      if (v.is_real() && forbidden_match(k, v.value())) return false;
    }
  }
  return true;
}

bool forbidden_allows(const ForbiddenSet& set, std::span<const double> candidate) {
  return set.allows(candidate);
}

ConstantScreen::ConstantScreen(const ForbiddenSet& set) : all_forbidden_(set.is_all_forbidden()) {
  for (const auto& member : set.members()) {
    for (const ExtendedValue v : member) {
      if (v.is_none_allowed()) all_forbidden_ = true;
      if (v.is_real()) values_.push_back(v.value());
    }
  }
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool ConstantScreen::allows(double k) const {
  if (all_forbidden_) return false;
  // The nearest entry on either side is the only one that can match: the
  // tolerance grows far slower than the distance.
  const auto it = std::lower_bound(values_.begin(), values_.end(), k);
  if (it != values_.end() && forbidden_match(k, *it)) return false;
  return it == values_.begin() || !forbidden_match(k, *std::prev(it));
}

}  // namespace semreg
