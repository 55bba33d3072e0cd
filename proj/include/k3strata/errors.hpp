// Copyright 2026 the k3strata authors
//
// Licensed under the Apache License, Version 2.0
// (https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace k3strata {

// Violation of a documented domain invariant (bad polygon data, impossible
// parameters, singular curve, ...). Carries a stable machine-readable name
// that front ends echo verbatim; what() is "<name>: <detail>".
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace k3strata
