#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace smtop {

/// One golden comparison: a computed value against its expected rendering.
struct GoldenCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool passed() const { return expected == actual; }
};

struct GoldenGroup {
    std::string name;
    std::string title;
    std::vector<GoldenCheck> checks;
    /// Set when the group could not run at all, e.g. a missing fixture.
    std::string error;
    bool ok() const;
    std::size_t failures() const;
};

/// "coin", "dice", "ecart", "rsphere".
const std::vector<std::string>& golden_group_names();

/// Recomputes the worked examples from the fixtures in `fixtures`
/// (coin.space, dice.space, ecart3.space, ramp.space) and compares them with the
/// expected values. An empty `only` runs every group; unknown names throw
/// DomainError. `window` bounds the rendering of sets over the naturals.
std::vector<GoldenGroup> run_golden(const std::filesystem::path& fixtures, const std::vector<std::string>& only = {},
                                    std::size_t window = 10);

} // namespace smtop
