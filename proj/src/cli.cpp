#include "enigme/cli.hpp"

#include "enigme/errors.hpp"
#include "enigme/generate.hpp"
#include "enigme/variations.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>

namespace enigme::cli {

namespace {

constexpr std::string_view kUsage =
    "usage: enigme <numeric|sequence|physics> <1d|2d|3d> [--seed N] [--count N]\n"
    "              [--format text|jsonl] [--with-solution] [--out PATH] [--estimate]\n";

constexpr std::string_view kPuzzleSeparator = "=====";

struct Request {
    std::string category;
    std::string dimension;
    std::optional<std::uint64_t> seed;
    std::uint64_t count = 1;
    std::string format = "text";
    bool with_solution = false;
    std::string out;
    bool estimate = false;
};

std::optional<std::uint64_t> parse_seed(std::string_view text) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        return std::nullopt;
    }
    return value;
}

int usage_error(std::ostream& err, std::string_view message) {
    err << "enigme: " << message << '\n' << kUsage;
    return kExitUsage;
}

void print_estimates(std::ostream& out, const std::vector<Category>& categories,
                     const std::vector<Dimension>& dimensions) {
    out << fmt::format("{:<10}{:<11}{:>10}  {}\n", "category", "dimension", "approx", "variations");
    for (Category c : categories) {
        for (Dimension d : dimensions) {
            const auto e = estimate_variations(c, d);
            out << fmt::format("{:<10}{:<11}{:>10}  {}\n", to_string(c), d.label(),
                               scientific(e.cardinality), e.cardinality.str());
        }
    }
}

void print_text(std::ostream& out, const Puzzle& p, bool with_solution) {
    out << p.prompt;
    if (with_solution) {
        out << "SOLUTION:\n" << p.solution;
        if (!p.solution.ends_with('\n')) {
            out << '\n';
        }
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Request req;
    CLI::App app{"Generate text reasoning puzzles.", "enigme"};
    app.add_option("category", req.category, "numeric, sequence or physics");
    app.add_option("dimension", req.dimension, "1d, 2d or 3d");
    app.add_option("--seed", req.seed, "base seed; puzzle i uses seed + i");
    app.add_option("--count", req.count, "number of puzzles")->check(CLI::PositiveNumber);
    app.add_option("--format", req.format, "text or jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}));
    app.add_flag("--with-solution", req.with_solution, "include the solution");
    app.add_option("--out", req.out, "write puzzles to PATH instead of stdout");
    app.add_flag("--estimate", req.estimate, "print variation counts and exit");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return usage_error(err, e.what());
    }

    std::optional<Category> category;
    if (!req.category.empty()) {
        category = parse_category(req.category);
        if (!category) {
            return usage_error(err, fmt::format("unknown category \"{}\"", req.category));
        }
    }
    std::optional<Dimension> dimension;
    if (!req.dimension.empty()) {
        dimension = Dimension::parse(req.dimension);
        if (!dimension) {
            return usage_error(err, fmt::format("unknown dimension \"{}\"", req.dimension));
        }
    }

    if (req.estimate) {
        std::vector<Category> cats(all_categories.begin(), all_categories.end());
        std::vector<Dimension> dims(all_dimensions.begin(), all_dimensions.end());
        if (category) {
            cats = {*category};
        }
        if (dimension) {
            dims = {*dimension};
        }
        print_estimates(out, cats, dims);
        return kExitOk;
    }

    if (!category || !dimension) {
        return usage_error(err, "category and dimension are required");
    }

    std::uint64_t base_seed = 0;
    if (req.seed) {
        base_seed = *req.seed;
    } else if (const char* env = std::getenv("ENIGME_SEED")) {
        const auto parsed = parse_seed(env);
        if (!parsed) {
            return usage_error(err, fmt::format("ENIGME_SEED is not a seed: \"{}\"", env));
        }
        base_seed = *parsed;
    } else {
        std::random_device entropy;
        base_seed = (static_cast<std::uint64_t>(entropy()) << 32) | entropy();
        err << "seed: " << base_seed << '\n';
    }

    std::ofstream file;
    if (!req.out.empty()) {
        file.open(req.out, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "enigme: cannot write to " << req.out << '\n';
            return kExitOutput;
        }
    }
    std::ostream& sink = req.out.empty() ? out : file;

    for (std::uint64_t i = 0; i < req.count; ++i) {
        Puzzle p;
        try {
            p = generate(*category, *dimension, base_seed + i);
        } catch (const std::exception& e) {
            err << "enigme: generation failed for seed " << base_seed + i << ": " << e.what()
                << '\n';
            return kExitGeneration;
        }
        if (req.format == "jsonl") {
            sink << to_json_line(p, req.with_solution) << '\n';
        } else {
            if (i > 0) {
                sink << kPuzzleSeparator << '\n';
            }
            print_text(sink, p, req.with_solution);
        }
    }
    sink.flush();
    if (!sink) {
        err << "enigme: write failed\n";
        return kExitOutput;
    }
    return kExitOk;
}

} // namespace enigme::cli
