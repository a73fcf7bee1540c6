#pragma once

#include <concepts>
#include <string>

namespace qes {

/// Exact scalar field usable as an operator coefficient type.
template <class F>
concept ExactField = std::regular<F> && requires(const F a, const F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::convertible_to<F>;
  { to_double(a) } -> std::convertible_to<double>;
  { to_string(a) } -> std::convertible_to<std::string>;
  F(0);
  F(1);
};

}  // namespace qes
