#pragma once

#include <optional>

#include "srd/error.hpp"

// Kind of the srd::Error thrown by fn, or nullopt if it returns normally.
template <typename Fn>
std::optional<srd::ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const srd::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

#define CHECK_ERROR(expr, kind) \
  CHECK(error_kind([&] { (void)(expr); }) == std::optional<srd::ErrorKind>(kind))
