#pragma once

#include "hodgecalc/io.hpp"

namespace hodgecalc {

/// Seeded invariant suite for one module. Deterministic for a fixed seed.
std::vector<Verdict> verify_suite(const std::string& name, uint64_t seed);

/// Names accepted by verify_suite, in canonical order.
const std::vector<std::string>& verify_suite_names();

} // namespace hodgecalc
