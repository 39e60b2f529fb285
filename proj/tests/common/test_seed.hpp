#pragma once

#include <cstdint>

// Seed shared by every randomized test; override with --seed N on the test
// binary's command line.
std::uint64_t test_seed();
