#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gapedit {

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;

    bool passed() const;
    std::string to_text() const;
};

/// Invariant and oracle-equivalence checks at reduced sizes. Index files for
/// the save/load and corruption checks go to scratch_dir (a fresh directory
/// under the system temp dir when empty) and are removed afterwards.
SelftestReport run_selftest(std::uint64_t seed, const std::string& scratch_dir = {});

}  // namespace gapedit
