// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/common.hpp"

namespace bhchaos {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::usage: return "usage";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::representation: return "representation";
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::symmetry: return "symmetry";
    case ErrorKind::integrity: return "integrity";
    case ErrorKind::insufficient_data: return "insufficient_data";
    case ErrorKind::domain: return "domain";
    case ErrorKind::model: return "model";
    case ErrorKind::degenerate_profile: return "degenerate_profile";
    case ErrorKind::integrator: return "integrator";
    case ErrorKind::provenance: return "provenance";
  }
  return "unknown";
}

}  // namespace bhchaos
