#pragma once

#include <optional>
#include <string_view>

#include "altcat/covers/check.hpp"

namespace altcat {

enum class Suite { all, covers, weierstrass, identities, schubert };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

/// Largest g the Schubert suite evaluates regardless of max_g.
inline constexpr unsigned kSchubertSuiteMaxG = 8;

/// Runs one suite (or all of them, concurrently, reported in fixed order).
/// max_g bounds the identity and Schubert loops.
covers::CheckReport run_suite(Suite suite, unsigned max_g);

}  // namespace altcat
