#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <optional>
#include <sstream>

#include <sys/resource.h>

#include <CLI11.hpp>

#include "digitopo/error.hpp"
#include "digitopo/io.hpp"
#include "digitopo/report.hpp"
#include "digitopo/shapes.hpp"
#include "digitopo/streaming.hpp"
#include "digitopo/validate.hpp"

namespace digitopo::cli {

namespace {

struct Globals {
    bool json = false;
    bool no_repair = false;
    bool fallback = true;
    bool streaming = false;
    std::uint64_t seed = 1;
};

HolesOptions holes_options(const Globals& g) { return {!g.no_repair, g.fallback}; }
VolumeOptions volume_options(const Globals& g) { return {!g.no_repair, g.fallback, g.streaming}; }

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Text reports end with a timestamp line; JSON reports never carry one.
void finish_text(std::ostream& out) { out << "generated: " << utc_timestamp() << "\n"; }

Image2D expect_image(const AnyGrid& g, const std::string& cmd) {
    if (const auto* img = std::get_if<Image2D>(&g)) return *img;
    throw Error(ErrorKind::Parse, cmd + " expects a PBM image");
}

Volume3D expect_volume(const AnyGrid& g, const std::string& cmd) {
    if (const auto* vol = std::get_if<Volume3D>(&g)) return *vol;
    throw Error(ErrorKind::Parse, cmd + " expects a vox3 volume");
}

std::string actions_line(std::size_t n) { return "repair actions: " + std::to_string(n) + "\n"; }

// ---- components --------------------------------------------------------------

int cmd_components(const Globals& g, const std::string& path, int adjacency, std::ostream& out) {
    const AnyGrid grid = read_any(path);
    const bool is2d = std::holds_alternative<Image2D>(grid);
    if (adjacency == 0) adjacency = is2d ? 4 : 26;
    Adjacency adj;
    switch (adjacency) {
    case 4: adj = Adjacency::Direct2D; break;
    case 8: adj = Adjacency::Indirect2D; break;
    case 6: adj = Adjacency::Direct3D; break;
    case 26: adj = Adjacency::Indirect3D; break;
    default: throw Error(ErrorKind::InvalidArgument, "adjacency must be 4, 8, 6 or 26");
    }
    if (is_2d(adj) != is2d) throw Error(ErrorKind::InvalidArgument, "adjacency does not match the input dimension");

    const Labeling lab = is2d ? label_components_2d(std::get<Image2D>(grid), adj)
                              : label_components_3d(std::get<Volume3D>(grid), adj);
    std::vector<std::size_t> sizes(lab.count, 0);
    for (const auto l : lab.labels)
        if (l) ++sizes[l - 1];

    if (g.json) {
        Json j = is2d ? report_header("components", std::get<Image2D>(grid))
                      : report_header("components", std::get<Volume3D>(grid));
        j["adjacency"] = adjacency;
        j["component_count"] = lab.count;
        Json comps = Json::array();
        for (std::uint32_t k = 0; k < lab.count; ++k)
            comps.push_back(Json{{"component_id", k + 1}, {"size", sizes[k]}});
        j["components"] = comps;
        out << dump(j);
        return kOk;
    }
    out << "components (" << adjacency << "-adjacency): " << lab.count << "\n";
    for (std::uint32_t k = 0; k < lab.count; ++k) out << "  " << k + 1 << ": " << sizes[k] << " cells\n";
    finish_text(out);
    return kOk;
}

// ---- holes / genus / homology -----------------------------------------------

int cmd_holes(const Globals& g, const std::string& path, std::ostream& out) {
    const Image2D img = expect_image(read_any(path), "holes");
    const auto opts = holes_options(g);
    const HolesResult res = holes_pipeline(img, opts);
    if (g.json) {
        out << dump(holes_report("holes", img, opts, res));
        return kOk;
    }
    long total = 0;
    for (const auto& r : res.reports) {
        const auto& h = r.histogram;
        out << "component " << r.component_id << " (source " << r.source_component << "): area " << r.area
            << ", cp2 " << h.cp2 << ", cp4 " << h.cp4 << ", holes " << r.holes << " [" << to_string(r.method)
            << "]\n";
        total += r.holes;
    }
    out << "components: " << res.reports.size() << "\n";
    out << "total holes: " << total << "\n";
    out << actions_line(res.actions.size());
    finish_text(out);
    return kOk;
}

int cmd_volume(const Globals& g, const std::string& cmd, const std::string& path, std::ostream& out) {
    const Volume3D vol = expect_volume(read_any(path), cmd);
    const auto opts = volume_options(g);
    const VolumeResult res = analyze_volume(vol, opts);
    if (g.json) {
        out << dump(volume_report(cmd, vol, opts, res));
        return kOk;
    }
    std::array<long, 4> betti{};
    for (const auto& r : res.reports) {
        out << "component " << r.component_id << " (source " << r.source_component << "): " << r.voxel_count
            << " voxels, " << r.boundary_surfaces.size() << " boundary surface(s)";
        if (cmd == "homology")
            out << ", betti (" << r.betti[0] << "," << r.betti[1] << "," << r.betti[2] << "," << r.betti[3] << ")";
        out << "\n";
        for (std::size_t k = 0; k < r.boundary_surfaces.size(); ++k) {
            const auto& s = r.boundary_surfaces[k];
            out << "  surface " << k << ": " << s.points << " points, m3 " << s.histogram.m3 << ", m4 "
                << s.histogram.m4 << ", m5 " << s.histogram.m5 << ", m6 " << s.histogram.m6 << ", genus "
                << s.genus << " [" << to_string(s.method) << "]\n";
        }
        for (int k = 0; k < 4; ++k) betti[k] += r.betti[k];
    }
    out << "components: " << res.reports.size() << "\n";
    if (cmd == "homology")
        out << "betti: (" << betti[0] << "," << betti[1] << "," << betti[2] << "," << betti[3] << ")\n";
    else
        out << "total genus: " << betti[1] << "\n";
    out << actions_line(res.actions.size());
    finish_text(out);
    return kOk;
}

// ---- repair -----------------------------------------------------------------

int cmd_repair(const Globals& g, const std::string& path, const std::string& output, bool raw,
               std::ostream& out) {
    const AnyGrid grid = read_any(path);
    std::vector<RepairAction> actions;
    Json j;
    std::size_t remaining = 0;
    if (const auto* img = std::get_if<Image2D>(&grid)) {
        auto speckled = remove_speckles(*img);
        auto repaired = repair_2d(speckled.image);
        actions = std::move(speckled.actions);
        actions.insert(actions.end(), repaired.actions.begin(), repaired.actions.end());
        remaining = find_pathologies_2d(repaired.image).size();
        if (!output.empty()) write_pbm(output, repaired.image, raw ? PbmVariant::Raw : PbmVariant::Plain);
        if (g.json) {
            j = report_header("repair", *img);
            j["output_digest"] = grid_digest(repaired.image);
        }
    } else {
        const auto& vol = std::get<Volume3D>(grid);
        auto repaired = repair_3d(vol);
        actions = std::move(repaired.actions);
        remaining = find_pathologies_3d(repaired.volume).size();
        if (!output.empty()) write_vox3(output, repaired.volume);
        if (g.json) {
            j = report_header("repair", vol);
            j["output_digest"] = grid_digest(repaired.volume);
        }
    }
    if (g.json) {
        j["remaining_pathologies"] = remaining;
        j["repair_actions"] = to_json(actions);
        out << dump(j);
        return kOk;
    }
    for (const auto& a : actions)
        out << to_string(a.op) << " (" << a.x << "," << a.y << "," << a.z << ") " << to_string(a.reason) << "\n";
    out << actions_line(actions.size());
    out << "remaining pathologies: " << remaining << "\n";
    finish_text(out);
    return kOk;
}

// ---- validate ---------------------------------------------------------------

int cmd_validate(const Globals& g, const std::string& path, const std::string& corpus, int count,
                 std::ostream& out) {
    ValidationTally tally;
    if (!path.empty()) {
        const AnyGrid grid = read_any(path);
        if (const auto* img = std::get_if<Image2D>(&grid)) validate_image(*img, holes_options(g), tally, path);
        else validate_volume(std::get<Volume3D>(grid), volume_options(g), tally, path);
    } else {
        if (count < 0) throw Error(ErrorKind::InvalidArgument, "negative corpus size");
        for (int i = 0; i < count; ++i) {
            const std::uint64_t seed = g.seed + static_cast<std::uint64_t>(i);
            SeededStream rng(seed);
            const std::string label = corpus + " seed " + std::to_string(seed);
            if (corpus == "polyomino")
                validate_image(gen_fat_polyomino_2d(rng.next(), rng.between(16, 4096)), holes_options(g), tally,
                               label);
            else if (corpus == "holed")
                validate_image(gen_holed_polyomino_2d(rng.next(), rng.between(64, 4096), rng.between(0, 6)),
                               holes_options(g), tally, label);
            else if (corpus == "scene")
                validate_image(gen_scene_2d(rng.next()), holes_options(g), tally, label);
            else if (corpus == "blob")
                validate_volume(gen_fat_blob_3d(rng.next(), rng.between(8, 2000)), volume_options(g), tally, label);
            else if (corpus == "frame")
                validate_volume(gen_random_frame(rng.between(0, 6), rng.next()), volume_options(g), tally, label);
            else if (corpus == "salted")
                validate_volume(gen_salted_volume(rng.next()), volume_options(g), tally, label);
            else
                throw Error(ErrorKind::InvalidArgument, "unknown corpus '" + corpus + "'");
        }
    }
    if (g.json) {
        Json j{{"schema_version", kReportSchemaVersion},
               {"command", "validate"},
               {"source", path.empty() ? Json(corpus) : Json(path)},
               {"seed", path.empty() ? Json(g.seed) : Json(nullptr)},
               {"inputs", tally.inputs},
               {"components", tally.components},
               {"formula_checked", tally.formula_checked},
               {"fallback", tally.fallback},
               {"disagreements", tally.disagreements},
               {"failures", tally.failures}};
        out << dump(j);
    } else {
        out << "inputs: " << tally.inputs << "\ncomponents: " << tally.components
            << "\nformula checked: " << tally.formula_checked << "\nfallback: " << tally.fallback
            << "\ndisagreements: " << tally.disagreements << "\n";
        for (const auto& f : tally.failures) out << "  " << f << "\n";
        finish_text(out);
    }
    return tally.ok() ? kOk : kDisagreement;
}

// ---- gen --------------------------------------------------------------------

struct GenParams {
    std::string shape;
    std::string output;
    bool raw = false;
    int width = 4, height = 4, depth = 4;
    int holes = 1, ring_width = 1, thickness = 1, hole_size = 1;
    int outer = 5, cavity = 1;
    int area = 256, min_width = 2, voxels = 512;
    int noise = 10;
    int side = 16;
    int layers = 2;
    std::string input;
};

int cmd_gen(const Globals& g, const GenParams& p, std::ostream& out) {
    std::optional<Image2D> img;
    std::optional<Volume3D> vol;
    const auto& s = p.shape;
    if (s == "block2d") img = gen_block_2d(p.width, p.height);
    else if (s == "polyomino") img = gen_fat_polyomino_2d(g.seed, p.area, p.min_width);
    else if (s == "holed-polyomino") img = gen_holed_polyomino_2d(g.seed, p.area, p.holes);
    else if (s == "scene") img = gen_scene_2d(g.seed, p.width, p.height, p.noise);
    else if (s == "noise2d") img = gen_noise_2d(g.seed, p.width, p.height, p.noise);
    else if (s == "block3d") vol = gen_block_3d(p.width, p.height, p.depth);
    else if (s == "frame") vol = gen_frame(FrameParams{p.holes, p.ring_width, p.thickness, p.hole_size});
    else if (s == "random-frame") vol = gen_random_frame(p.holes, g.seed);
    else if (s == "shell") vol = gen_shell(p.outer, p.cavity);
    else if (s == "blob") vol = gen_fat_blob_3d(g.seed, p.voxels, p.min_width);
    else if (s == "salted") vol = gen_salted_volume(g.seed, p.noise);
    else if (s == "sponge") vol = gen_sponge_3d(p.side);
    else if (s == "extrude") {
        if (p.input.empty()) throw Error(ErrorKind::InvalidArgument, "extrude needs --input");
        vol = extrude(read_pbm(p.input), p.layers);
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown shape '" + s + "'");
    }

    const std::string text = img ? format_pbm(*img, p.raw ? PbmVariant::Raw : PbmVariant::Plain) : format_vox3(*vol);
    if (p.output.empty() || p.output == "-") {
        out << text;
        return kOk;
    }
    write_file(p.output, text);
    if (g.json) {
        Json j = img ? report_header("gen", *img) : report_header("gen", *vol);
        j["shape"] = s;
        j["seed"] = g.seed;
        j["output"] = p.output;
        out << dump(j);
    } else {
        out << "wrote " << s << " to " << p.output << "\n";
    }
    return kOk;
}

// ---- bench ------------------------------------------------------------------

long peak_rss_kib() {
    rusage ru{};
    getrusage(RUSAGE_SELF, &ru);
    return ru.ru_maxrss; // KiB on Linux
}

int cmd_bench(const Globals& g, std::vector<long> sizes, int repeat, std::ostream& out) {
    if (sizes.empty()) sizes = {1L << 18, 1L << 21};
    if (repeat < 1) throw Error(ErrorKind::InvalidArgument, "repeat must be positive");
    const VolumeOptions opts{!g.no_repair, g.fallback, g.streaming};
    Json rows = Json::array();
    if (!g.json) out << "voxels\tside\ttime_us\tpeak_rss_kib\tslab_unit_bytes\tstream_peak_bytes\tpeak_fragments\tgenus\n";
    for (const long n : sizes) {
        if (n < 216) throw Error(ErrorKind::InvalidArgument, "bench size must be at least 216 voxels");
        // Padded cube closest to n voxels.
        const int side = std::max(6, static_cast<int>(std::lround(std::cbrt(static_cast<double>(n)))) - 2);
        const Volume3D vol = gen_sponge_3d(side);
        std::int64_t best_us = -1;
        long genus_total = 0;
        for (int r = 0; r < repeat; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            const VolumeResult res = analyze_volume(vol, opts);
            const auto t1 = std::chrono::steady_clock::now();
            const auto us = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
            if (best_us < 0 || us < best_us) best_us = us;
            genus_total = 0;
            for (const auto& rep : res.reports) genus_total += rep.betti[1];
        }
        std::size_t peak_bytes = 0, peak_frags = 0;
        stream_surfaces(vol, &peak_bytes, &peak_frags);
        // The largest resident slab buffer is one vertex-label layer.
        const std::size_t unit = static_cast<std::size_t>(vol.nx() + 1) * (vol.ny() + 1) * sizeof(std::uint32_t);
        const Json row{{"voxels", vol.size()},
                       {"side", side},
                       {"time_us", best_us},
                       {"peak_rss_kib", peak_rss_kib()},
                       {"slab_unit_bytes", unit},
                       {"stream_peak_bytes", peak_bytes},
                       {"peak_fragments", peak_frags},
                       {"genus", genus_total},
                       {"expected_genus", sponge_tunnels(side)}};
        if (g.json) rows.push_back(row);
        else
            out << vol.size() << "\t" << side << "\t" << best_us << "\t" << row["peak_rss_kib"] << "\t" << unit << "\t"
                << peak_bytes << "\t" << peak_frags << "\t" << genus_total << "\n";
    }
    if (g.json) {
        Json j{{"schema_version", kReportSchemaVersion},
               {"command", "bench"},
               {"workload", "sponge"},
               {"options", Json{{"repair", opts.repair}, {"streaming", opts.streaming}}},
               {"repeat", repeat},
               {"rows", rows}};
        out << dump(j);
    } else {
        finish_text(out);
    }
    return kOk;
}

int exit_code_for(ErrorKind k) {
    switch (k) {
    case ErrorKind::PreconditionFailed:
    case ErrorKind::InvalidSurface:
    case ErrorKind::NonManifold: return kPrecondition;
    case ErrorKind::NotConverged: return kNotConverged;
    case ErrorKind::InvalidArgument: return kUsage;
    case ErrorKind::Io: return kIoError;
    case ErrorKind::Parse:
    case ErrorKind::NoSuchComponent:
    case ErrorKind::EmptyComponent: return kDataError;
    }
    return kDataError;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hole, genus and homology counts for binary images and volumes", "digitopo"};
    app.fallthrough();
    app.require_subcommand(1);

    Globals g;
    app.add_flag("--json", g.json, "Machine-readable report");
    app.add_flag("--no-repair", g.no_repair, "Skip pathology repair");
    app.add_flag("--fallback-oracle,!--no-fallback-oracle", g.fallback,
                 "Use the brute-force oracle when formula preconditions fail (default on)");
    app.add_flag("--streaming", g.streaming, "Count surfaces slab by slab");
    app.add_option("--seed", g.seed, "Seed for generated inputs")->capture_default_str();

    std::string path;
    int adjacency = 0;
    auto* components = app.add_subcommand("components", "Label connected components");
    components->add_option("file", path, "PBM or vox3 input")->required();
    components->add_option("--adjacency", adjacency, "4, 8, 6 or 26 (default 4 in 2D, 26 in 3D)");

    auto* holes = app.add_subcommand("holes", "Count holes per component of a PBM image");
    holes->add_option("file", path, "PBM input")->required();
    auto* genus_cmd = app.add_subcommand("genus", "Genus of every boundary surface of a vox3 volume");
    genus_cmd->add_option("file", path, "vox3 input")->required();
    auto* homology_cmd = app.add_subcommand("homology", "Betti ranks per component of a vox3 volume");
    homology_cmd->add_option("file", path, "vox3 input")->required();

    std::string output;
    bool raw = false;
    auto* repair = app.add_subcommand("repair", "Remove diagonal-only contacts and write the result");
    repair->add_option("file", path, "PBM or vox3 input")->required();
    repair->add_option("-o,--output", output, "Output path (same format as input)");
    repair->add_flag("--raw", raw, "Write PBM as P4");

    std::string corpus = "polyomino";
    int count = 1000;
    auto* validate = app.add_subcommand("validate", "Compare formula results with brute-force oracles");
    validate->add_option("file", path, "PBM or vox3 input; omit to use a seeded corpus");
    validate->add_option("--corpus", corpus, "polyomino, holed, scene, blob, frame or salted")->capture_default_str();
    validate->add_option("--count", count, "Corpus size")->capture_default_str();

    GenParams gp;
    auto* gen = app.add_subcommand("gen", "Write a generated shape");
    gen->add_option("shape", gp.shape,
                    "block2d, polyomino, holed-polyomino, scene, noise2d, block3d, frame, random-frame, shell, "
                    "blob, salted, sponge, extrude")
        ->required();
    gen->add_option("-o,--output", gp.output, "Output path (default stdout)");
    gen->add_flag("--raw", gp.raw, "Write PBM as P4");
    gen->add_option("--width", gp.width);
    gen->add_option("--height", gp.height);
    gen->add_option("--depth", gp.depth);
    gen->add_option("--holes", gp.holes);
    gen->add_option("--ring-width", gp.ring_width);
    gen->add_option("--thickness", gp.thickness);
    gen->add_option("--hole-size", gp.hole_size);
    gen->add_option("--outer", gp.outer);
    gen->add_option("--cavity", gp.cavity);
    gen->add_option("--area", gp.area);
    gen->add_option("--min-width", gp.min_width);
    gen->add_option("--voxels", gp.voxels);
    gen->add_option("--noise", gp.noise, "Flip probability in permille");
    gen->add_option("--side", gp.side);
    gen->add_option("--layers", gp.layers);
    gen->add_option("--input", gp.input, "PBM input for extrude");

    std::vector<long> sizes;
    int repeat = 3;
    auto* bench = app.add_subcommand("bench", "Time the counting pipeline on generated volumes");
    bench->add_option("--sizes", sizes, "Voxel counts (default 262144 2097152)");
    bench->add_option("--repeat", repeat, "Runs per size; the fastest is reported")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (*components) return cmd_components(g, path, adjacency, out);
        if (*holes) return cmd_holes(g, path, out);
        if (*genus_cmd) return cmd_volume(g, "genus", path, out);
        if (*homology_cmd) return cmd_volume(g, "homology", path, out);
        if (*repair) return cmd_repair(g, path, output, raw, out);
        if (*validate) return cmd_validate(g, path, corpus, count, out);
        if (*gen) return cmd_gen(g, gp, out);
        if (*bench) return cmd_bench(g, sizes, repeat, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        const int code = exit_code_for(e.kind());
        if (code == kUsage) err << "\n" << app.help();
        return code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    }
    err << app.help();
    return kUsage;
}

} // namespace digitopo::cli
