#pragma once

// Formula-versus-oracle cross checks behind the `validate` command.

#include <cstddef>
#include <string>
#include <vector>

#include "digitopo/topo2d.hpp"
#include "digitopo/topo3d.hpp"

namespace digitopo {

struct ValidationTally {
    std::size_t inputs = 0;
    std::size_t components = 0;
    std::size_t formula_checked = 0; // components whose formula value was compared
    std::size_t fallback = 0;        // components reported through the oracle
    std::size_t disagreements = 0;
    std::vector<std::string> failures; // first few, human readable

    bool ok() const noexcept { return disagreements == 0; }
};

/// Runs the hole pipeline and, per final component, compares the formula
/// (when its preconditions hold), flood fill and 1 - chi of the closed-pixel
/// complex.
void validate_image(const Image2D& img, const HolesOptions& opts, ValidationTally& tally,
                    const std::string& label = "input");

/// Per final piece compares the surface genera and Betti ranks of the
/// formula path with the face-complex oracle, the streaming counter with the
/// in-memory one, and checks the discrete Gauss-Bonnet identity.
void validate_volume(const Volume3D& vol, const VolumeOptions& opts, ValidationTally& tally,
                     const std::string& label = "input");

} // namespace digitopo
