// Copyright 2026 the k3strata authors
//
// Licensed under the Apache License, Version 2.0
// (https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include "k3strata/coverage.hpp"
#include "k3strata/errors.hpp"
#include "k3strata/fieldarith.hpp"
#include "k3strata/json_io.hpp"
#include "k3strata/kummer.hpp"
#include "k3strata/polygon.hpp"
#include "k3strata/rational.hpp"
