#pragma once

namespace rrca::detail {

// Free is_zero for scalar types, callable from classes that also define a member is_zero.
template <class T>
bool zero_adl(const T& x) {
  return is_zero(x);
}

}  // namespace rrca::detail
