#include "digitopo/topo2d.hpp"

#include <algorithm>
#include <string>

#include "digitopo/error.hpp"
#include "digitopo/kernels.hpp"
#include "digitopo/oracle.hpp"

namespace digitopo {

const char* to_string(HoleMethod m) noexcept {
    return m == HoleMethod::Formula ? "formula" : "oracle_fallback";
}

Repair2DResult remove_speckles(const Image2D& input) {
    Repair2DResult out{input, {}};
    Image2D& img = out.image;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int y = 0; y < img.height(); ++y)
            for (int x = 0; x < img.width(); ++x) {
                const bool v = img.at(x, y);
                bool all_same = true; // every 8-neighbor differs from v
                for (int dy = -1; dy <= 1 && all_same; ++dy)
                    for (int dx = -1; dx <= 1; ++dx)
                        if ((dx || dy) && img.at(x + dx, y + dy) == v) {
                            all_same = false;
                            break;
                        }
                if (!all_same) continue;
                img.set(x, y, !v);
                out.actions.push_back({x, y, 0, v ? RepairOp::Delete : RepairOp::Add,
                                       RepairReason::Speckle});
                changed = true;
            }
    }
    return out;
}

std::vector<Pathology2D> find_pathologies_2d(const Image2D& img) {
    return parallel::pathologies_2d(img);
}

namespace {

bool window_matches(const Image2D& img, const Pathology2D& p) {
    const auto w = window2(img, p.x, p.y);
    return p.kind == PathologyKind2D::DiagMain ? (w[0] && w[3] && !w[1] && !w[2])
                                               : (w[1] && w[2] && !w[0] && !w[3]);
}

// Pathological windows anchored in [x-1, x+1] x [y-1, y+1]: every window
// that shares a pixel with the 2x2 window at (x,y), i.e. the 4x4 region.
std::vector<Pathology2D> region_pathologies(const Image2D& img, int x, int y) {
    std::vector<Pathology2D> out;
    for (int ay = y - 1; ay <= y + 1; ++ay)
        for (int ax = x - 1; ax <= x + 1; ++ax)
            for (auto kind : {PathologyKind2D::DiagMain, PathologyKind2D::DiagAnti}) {
                const Pathology2D p{ax, ay, kind};
                if (window_matches(img, p)) out.push_back(p);
            }
    return out;
}

} // namespace

Repair2DResult repair_2d(const Image2D& input) {
    Repair2DResult out{input, {}};
    Image2D& img = out.image;
    const std::size_t cap = 4 * img.size();

    for (;;) {
        const auto found = find_pathologies_2d(img);
        if (found.empty()) break;
        for (const auto& p : found) {
            if (!window_matches(img, p)) continue; // fixed by an earlier action

            const Coord2 cells[4] = {{p.x, p.y}, {p.x + 1, p.y}, {p.x, p.y + 1}, {p.x + 1, p.y + 1}};
            std::vector<Coord2> bg, fg;
            for (const auto& c : cells) (img.at(c.x, c.y) ? fg : bg).push_back(c);

            struct Candidate {
                Coord2 at;
                RepairOp op;
            };
            const Candidate candidates[4] = {{bg[0], RepairOp::Add},
                                             {bg[1], RepairOp::Add},
                                             {fg[0], RepairOp::Delete},
                                             {fg[1], RepairOp::Delete}};

            const Candidate* chosen = nullptr;
            for (const auto& c : candidates) {
                img.set(c.at.x, c.at.y, c.op == RepairOp::Add);
                if (region_pathologies(img, p.x, p.y).empty()) {
                    chosen = &c;
                    break;
                }
                img.set(c.at.x, c.at.y, c.op != RepairOp::Add);
            }
            if (!chosen) {
                chosen = &candidates[2];
                img.set(chosen->at.x, chosen->at.y, false);
            }
            out.actions.push_back({chosen->at.x, chosen->at.y, 0, chosen->op, RepairReason::PathologyFix});
            if (out.actions.size() > cap)
                throw Error(ErrorKind::NotConverged, "repair did not converge");
        }
    }
    return out;
}

CornerHistogram classify_boundary_2d(const Image2D& component) {
    if (component.count() == 0) throw Error(ErrorKind::EmptyComponent, "empty component");
    return parallel::corner_histogram(component);
}

long hole_formula(const CornerHistogram& h) {
    const long diff = static_cast<long>(h.cp4) - static_cast<long>(h.cp2);
    if (diff % 4 != 0)
        throw Error(ErrorKind::InvalidSurface, "cp4 - cp2 is not divisible by 4");
    return 1 + diff / 4;
}

PreconditionReport2D check_preconditions_2d(const Image2D& component, const CornerHistogram& hist) {
    PreconditionReport2D r;
    for (const auto& p : find_pathologies_2d(component))
        r.diagnostics.push_back({{p.x, p.y}, std::string("pathological window ") + to_string(p.kind)});
    r.no_pathologies = r.diagnostics.empty();

    r.no_dangling = hist.cp0 == 0 && hist.cp1 == 0;
    r.not_thin = hist.thin == 0;
    r.single_crossing = hist.multi_curve == 0;
    if (!r.no_dangling || !r.not_thin || !r.single_crossing) {
        for (int y = 0; y < component.height(); ++y)
            for (int x = 0; x < component.width(); ++x) {
                CornerHistogram one;
                detail::classify_pixel(component, x, y, one);
                if (one.cp0) r.diagnostics.push_back({{x, y}, "isolated boundary pixel"});
                if (one.cp1) r.diagnostics.push_back({{x, y}, "dangling boundary pixel"});
                if (one.thin) r.diagnostics.push_back({{x, y}, "thin pixel"});
                if (one.multi_curve) r.diagnostics.push_back({{x, y}, "pixel on two boundary curves"});
            }
    }
    const long diff = static_cast<long>(hist.cp4) - static_cast<long>(hist.cp2);
    r.divisible = diff % 4 == 0;
    r.ok = r.no_pathologies && r.no_dangling && r.not_thin && r.single_crossing && r.divisible;
    return r;
}

HoleReport hole_count(const Image2D& component, bool allow_fallback) {
    HoleReport rep;
    rep.histogram = classify_boundary_2d(component);
    rep.area = component.count();
    rep.precondition_ok = check_preconditions_2d(component, rep.histogram).ok;
    if (rep.precondition_ok) {
        rep.holes = hole_formula(rep.histogram);
        rep.method = HoleMethod::Formula;
    } else {
        if (!allow_fallback)
            throw Error(ErrorKind::PreconditionFailed, "hole formula preconditions not met");
        rep.holes = holes_by_floodfill(component);
        rep.method = HoleMethod::OracleFallback;
    }
    return rep;
}

HolesResult holes_pipeline(const Image2D& img, const HolesOptions& opts) {
    return holes_pipeline(img, opts, nullptr);
}

HolesResult holes_pipeline(const Image2D& img, const HolesOptions& opts, const HolePieceVisitor& visit) {
    HolesResult out;
    const Labeling lab = label_components_2d(img, Adjacency::Direct2D);
    auto log = [&](const std::vector<RepairAction>& acts, Coord2 origin) {
        for (auto a : acts) {
            a.x += origin.x;
            a.y += origin.y;
            out.actions.push_back(a);
        }
    };

    auto extracted = extract_all_components(lab);
    for (std::uint32_t id = 1; id <= lab.count; ++id) {
        auto& [comp, origin] = extracted[id - 1];
        auto speckled = remove_speckles(comp);
        log(speckled.actions, origin);
        comp = std::move(speckled.image);
        if (opts.repair) {
            auto repaired = repair_2d(comp);
            log(repaired.actions, origin);
            comp = std::move(repaired.image);
        }
        const Labeling parts = label_components_2d(comp, Adjacency::Direct2D);
        const auto pieces = extract_all_components(parts);
        for (std::uint32_t part = 1; part <= parts.count; ++part) {
            HoleReport rep = hole_count(pieces[part - 1].image, opts.fallback_oracle);
            rep.component_id = static_cast<std::uint32_t>(out.reports.size() + 1);
            rep.source_component = id;
            if (visit) visit(pieces[part - 1].image, rep);
            out.reports.push_back(rep);
        }
    }
    return out;
}

} // namespace digitopo
