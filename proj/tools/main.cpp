// hierseg: command-line front end.
//
//   hierseg <subcommand> [--alpha A] [--omega W] [--n N] [--lambda L]
//                        [--min-area K] [--log] -i INPUT -o OUTPUT
//
// Exit status: 0 success, 2 input/output failure, 64 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hierseg/hierseg.hpp"
#include "raster_io.hpp"

namespace {

using namespace hierseg;
using json = nlohmann::ordered_json;

constexpr int exit_io = 2;
constexpr int exit_usage = 64;

struct Options {
    std::string input;
    std::string output;
    Level alpha = 0;
    std::optional<Level> omega;
    Level n = 1;
    Level lambda = 0;
    std::optional<std::uint64_t> min_area;
    bool log_scale = false;
    std::string kind = "pixels";
};

// Label rasters are 16-bit. The smallest pixel index of each component is
// used when every index fits; larger images fall back to the rank of that
// index among all labels. The sidecar records which encoding was used.
void write_labels(const Options& opt, const Partition& part, std::size_t width, std::size_t height, json params) {
    if (part.component_count() > 65536)
        throw io_error(std::to_string(part.component_count()) + " components do not fit in a 16-bit label raster");
    ScalarMap raster(width, height);
    const bool direct = part.size() <= 65536;
    std::vector<Level> rank;
    if (!direct) {
        rank.assign(part.size(), 0);
        Level next = 0;
        for (VertexId v = 0; v < part.size(); ++v)
            if (part.label(v) == v) rank[v] = next++;
    }
    for (VertexId v = 0; v < part.size(); ++v) raster[v] = direct ? part.label(v) : rank[part.label(v)];
    write_pgm16(opt.output, raster);

    json sidecar;
    sidecar["component_count"] = part.component_count();
    sidecar["label_encoding"] = direct ? "smallest-pixel-index" : "rank-of-smallest-pixel-index";
    sidecar["parameters"] = std::move(params);
    write_file(opt.output + ".json", sidecar.dump(2) + "\n");
}

AlphaTree tree_of(const EdgeWeightedGraph& g) { return build_alpha_tree(g); }

// Saliency of the image hierarchy after the optional range flooding and
// area filtering, as used by `saliency` and `cut`.
SaliencyMap filtered_saliency(const Options& opt, const GridImage& img) {
    const auto graph = build_pixel_graph(img);
    auto saliency = saliency_from_tree(tree_of(graph), graph);
    if (opt.omega) saliency = range_filter_saliency(saliency, img.values(), *opt.omega);
    if (opt.min_area) saliency = saliency_from_tree(area_filter(hierarchy_from_saliency(saliency), graph, *opt.min_area), graph);
    return saliency;
}

json filter_params(const Options& opt) {
    json p = json::object();
    if (opt.omega) p["omega"] = *opt.omega;
    if (opt.min_area) p["min_area"] = *opt.min_area;
    return p;
}

int run(const std::string& command, const Options& opt) {
    const auto img = tools::read_raster(opt.input);
    const auto w = img.width(), h = img.height();

    if (command == "flatzones") {
        write_labels(opt, flat_zones(img), w, h, json::object());
    } else if (command == "alphacc") {
        write_labels(opt, alpha_cc_partition(build_pixel_graph(img), opt.alpha), w, h, {{"alpha", opt.alpha}});
    } else if (command == "constrained") {
        const Level omega = opt.omega.value_or(0);
        write_labels(opt, constrained_cc(tree_of(build_pixel_graph(img)), opt.alpha, omega), w, h,
                     {{"alpha", opt.alpha}, {"omega", omega}});
    } else if (command == "omegacc") {
        const Level omega = opt.omega.value_or(0);
        write_labels(opt, omega_cc(tree_of(build_pixel_graph(img)), omega), w, h, {{"omega", omega}});
    } else if (command == "alphan") {
        write_labels(opt, alpha_n_partition(img, opt.alpha, opt.n), w, h, {{"alpha", opt.alpha}, {"n", opt.n}});
    } else if (command == "cut") {
        auto params = filter_params(opt);
        params["lambda"] = opt.lambda;
        write_labels(opt, cut_saliency(filtered_saliency(opt, img), opt.lambda), w, h, std::move(params));
    } else if (command == "tree") {
        write_dendrogram(tree_of(build_pixel_graph(img)), opt.output);
    } else if (command == "saliency") {
        auto raster = render_khalimsky(filtered_saliency(opt, img), w, h);
        if (opt.log_scale) {
            Level top = 0;
            for (auto v : raster.values) top = std::max(top, v);
            if (top > 0)
                for (auto& v : raster.values)
                    v = static_cast<Level>(std::lround(65535.0 * std::log1p(v) / std::log1p(top)));
        }
        write_pgm16(opt.output, raster);
    } else if (command == "degree") {
        write_pgm16(opt.output, alpha_degree_map(img, opt.alpha));
    } else if (command == "transition") {
        write_pgm16(opt.output, transition_mask(img));
    } else if (command == "separation") {
        static const std::map<std::string, std::function<ScalarMap(const GridImage&)>> kinds{
            {"pixels", min_separation_pixels},
            {"flatzones", min_separation_flatzones},
            {"max-pixels", max_separation_pixels},
            {"max-flatzones", max_separation_flatzones},
            {"rmin", [](const GridImage& i) { return regional_minima(min_separation_flatzones(i)); }},
            {"rmax", [](const GridImage& i) { return regional_maxima(min_separation_flatzones(i)); }},
        };
        write_pgm16(opt.output, kinds.at(opt.kind)(img));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hierarchical image segmentation by constrained connectivity"};
    app.require_subcommand(1, 1);
    Options opt;

    auto io = [&](CLI::App* sub) {
        sub->add_option("-i,--input", opt.input, "input raster (PGM or PNG, greyscale)")->required();
        sub->add_option("-o,--output", opt.output, "output file")->required();
    };
    auto alpha = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--alpha", opt.alpha, "local dissimilarity threshold");
        if (required) o->required();
    };
    auto omega = [&](CLI::App* sub, const char* name, const char* help) { sub->add_option(name, opt.omega, help); };
    auto filters = [&](CLI::App* sub) {
        omega(sub, "--omega,--filter-range", "flood contours whose global range is at most this value");
        sub->add_option("--min-area", opt.min_area, "merge regions smaller than this many pixels")
            ->check(CLI::PositiveNumber);
    };

    io(app.add_subcommand("flatzones", "label the flat zones"));
    {
        auto* s = app.add_subcommand("alphacc", "label the alpha-connected components");
        io(s);
        alpha(s, true);
    }
    {
        auto* s = app.add_subcommand("constrained", "label the (alpha, omega)-constrained components");
        io(s);
        alpha(s, true);
        omega(s, "--omega", "global range threshold");
        s->get_option("--omega")->required();
    }
    {
        auto* s = app.add_subcommand("omegacc", "label the (omega)-constrained components");
        io(s);
        omega(s, "--omega", "global range threshold");
        s->get_option("--omega")->required();
    }
    {
        auto* s = app.add_subcommand("alphan", "label the degree-constrained alpha components");
        io(s);
        alpha(s, true);
        s->add_option("--n", opt.n, "minimum alpha-degree")->required()->check(CLI::PositiveNumber);
    }
    {
        auto* s = app.add_subcommand("degree", "write the alpha-degree map");
        io(s);
        alpha(s, true);
    }
    io(app.add_subcommand("tree", "write the alpha-tree as JSON"));
    {
        auto* s = app.add_subcommand("saliency", "write the saliency map on the doubled grid");
        io(s);
        filters(s);
        s->add_flag("--log", opt.log_scale, "logarithmic tone mapping to the full 16-bit range");
    }
    {
        auto* s = app.add_subcommand("cut", "label the regions of the saliency map at level lambda");
        io(s);
        filters(s);
        s->add_option("--lambda", opt.lambda, "saliency level")->required();
    }
    {
        auto* s = app.add_subcommand("separation", "write a separation-value map");
        io(s);
        s->add_option("--kind", opt.kind, "pixels, flatzones, max-pixels, max-flatzones, rmin or rmax")
            ->check(CLI::IsMember({"pixels", "flatzones", "max-pixels", "max-flatzones", "rmin", "rmax"}));
    }
    io(app.add_subcommand("transition", "write the transition-pixel mask"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::fputs(app.help().c_str(), stderr);
        return exit_usage;
    }

    const auto command = app.get_subcommands().front()->get_name();
    try {
        return run(command, opt);
    } catch (const io_error& e) {
        std::fprintf(stderr, "hierseg: %s\n", e.what());
        return exit_io;
    } catch (const invalid_input& e) {
        std::fprintf(stderr, "hierseg: %s\n", e.what());
        return exit_usage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "hierseg: %s\n", e.what());
        return 1;
    }
}
