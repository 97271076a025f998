#pragma once

#include <string>

#include "frolicher/spectral.hpp"

namespace frolicher {

/// JSON form of a FrolicherReport. Keys are sorted, (p,q) entries are in
/// lexicographic order and only nonzero dimensions appear, so the output is
/// byte-stable across runs for the same input.
std::string emitReportJson(const FrolicherReport& report);

}  // namespace frolicher
