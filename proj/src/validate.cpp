#include "digitopo/validate.hpp"

#include "digitopo/oracle.hpp"

namespace digitopo {

namespace {

constexpr std::size_t kMaxFailures = 20;

void fail(ValidationTally& t, const std::string& label, std::uint32_t id, const std::string& what) {
    ++t.disagreements;
    if (t.failures.size() < kMaxFailures)
        t.failures.push_back(label + " component " + std::to_string(id) + ": " + what);
}

} // namespace

void validate_image(const Image2D& img, const HolesOptions& opts, ValidationTally& tally,
                    const std::string& label) {
    ++tally.inputs;
    holes_pipeline(img, opts, [&](const Image2D& piece, const HoleReport& rep) {
        ++tally.components;
        const long flood = holes_by_floodfill(piece);
        const long euler = 1 - static_cast<long>(euler_2d(piece).chi);
        if (flood != euler)
            fail(tally, label, rep.component_id,
                 "flood fill " + std::to_string(flood) + " vs euler " + std::to_string(euler));
        if (rep.holes != flood)
            fail(tally, label, rep.component_id,
                 "reported " + std::to_string(rep.holes) + " vs flood fill " + std::to_string(flood));
        if (rep.precondition_ok) {
            ++tally.formula_checked;
            const long formula = hole_formula(rep.histogram);
            if (formula != flood)
                fail(tally, label, rep.component_id,
                     "formula " + std::to_string(formula) + " vs flood fill " + std::to_string(flood));
        } else {
            ++tally.fallback;
        }
    });
}

void validate_volume(const Volume3D& vol, const VolumeOptions& opts, ValidationTally& tally,
                     const std::string& label) {
    ++tally.inputs;
    analyze_volume(vol, opts, [&](const Volume3D& piece, const TopoReport3D& rep) {
        ++tally.components;
        const auto oracle = euler_surface_3d(piece);
        bool formula = true;
        for (const auto& s : rep.boundary_surfaces) formula &= s.method == GenusMethod::Formula;
        if (formula) ++tally.formula_checked;
        else ++tally.fallback;

        if (oracle.size() != rep.boundary_surfaces.size()) {
            fail(tally, label, rep.component_id,
                 std::to_string(rep.boundary_surfaces.size()) + " surfaces vs oracle " +
                     std::to_string(oracle.size()));
            return;
        }
        for (std::size_t k = 0; k < oracle.size(); ++k) {
            const auto& s = rep.boundary_surfaces[k];
            if (s.genus != oracle[k].genus())
                fail(tally, label, rep.component_id,
                     "surface " + std::to_string(k) + " genus " + std::to_string(s.genus) + " vs oracle " +
                         std::to_string(oracle[k].genus()));
            if (s.method == GenusMethod::Formula && !curvature_audit(s.histogram, s.genus))
                fail(tally, label, rep.component_id, "curvature audit failed on surface " + std::to_string(k));
        }
        const auto streamed = homology_streaming(piece, opts.fallback_oracle);
        if (streamed.betti != rep.betti)
            fail(tally, label, rep.component_id, "streaming Betti ranks differ");
    });
}

} // namespace digitopo
