// kufam: generate, check, decompose, bound, and probe (k,u)-intersecting
// set families from the command line.
//
// Exit codes: 0 success, 1 semantic negative (not intersecting / failed
// verification), 2 usage or parse error, 3 size cap exceeded, 4 invariant
// violation (always a bug).

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kufam/combinatorics.hpp"
#include "kufam/decomposer.hpp"
#include "kufam/errors.hpp"
#include "kufam/exact_oracle.hpp"
#include "kufam/generators.hpp"
#include "kufam/property_check.hpp"
#include "kufam/rng.hpp"
#include "kufam/set_family.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw kufam::ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string join_indices(const std::vector<std::uint32_t>& indices) {
    std::string out;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(indices[i]);
    }
    return out;
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const kufam::NotIntersectingError& e) {
        std::cout << "WITNESS: " << join_indices(e.witness_indices()) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const kufam::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const kufam::InvariantViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const kufam::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kufam::UniformityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kufam::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kufam::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kufam::OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kufam::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}

// ---- gen --------------------------------------------------------------------

struct GenArgs {
    kufam::GenSpec spec;
};

int run_gen(const GenArgs& args) {
    std::cout << kufam::serialize_family(kufam::generate(args.spec));
    return 0;
}

// ---- check ------------------------------------------------------------------

struct CheckArgs {
    std::string file = "-";
    std::uint32_t k = 0;
    std::uint32_t u = 0;
    bool verbose = false;
};

int run_check(const CheckArgs& args) {
    const kufam::SetFamily family = kufam::parse_family(read_input(args.file));
    if (std::optional<kufam::Witness> w = kufam::find_witness(family, args.k, args.u)) {
        std::cout << "WITNESS: " << join_indices(w->indices) << "\n";
        if (args.verbose)
            for (std::uint32_t idx : w->indices)
                std::cout << "#   member " << idx << " = "
                          << kufam::format_member(family.member(idx)) << "\n";
        return 1;
    }
    std::cout << "INTERSECTING\n";
    return 0;
}

// ---- decompose ---------------------------------------------------------------

struct DecomposeArgs {
    std::string file = "-";
    std::uint32_t k = 0;
    std::uint32_t u = 0;
    std::uint32_t ell = 0;
    bool compact = false;
    bool verify = false;
    bool json = false;
    bool verbose = false;
};

void print_decomposition_text(const kufam::SetFamily& family, const kufam::Decomposition& d,
                              std::uint64_t bound, bool verified, bool verbose,
                              std::optional<std::size_t> compacted_from) {
    std::cout << "parts=" << d.part_count() << " bound=" << bound << " verified="
              << (verified ? "true" : "false") << "\n";
    if (compacted_from)
        std::cout << "# compact: " << *compacted_from << " -> " << d.part_count() << "\n";
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        std::cout << "part " << i << ":";
        for (std::uint32_t idx : d.parts[i]) std::cout << ' ' << idx;
        std::cout << "\n";
        if (verbose)
            for (std::uint32_t idx : d.parts[i])
                std::cout << "#   member " << idx << " = "
                          << kufam::format_member(family.member(idx)) << "\n";
    }
    for (std::size_t i = 0; i < d.part_traces.size(); ++i) {
        std::cout << "# part " << i << " traces:";
        for (const kufam::MemberSet& t : d.part_traces[i])
            std::cout << ' ' << kufam::format_member(t);
        std::cout << "\n";
    }
}

ordered_json decomposition_json(const kufam::Decomposition& d, std::uint64_t bound,
                                bool verified, std::optional<std::size_t> compacted_from) {
    ordered_json doc;
    doc["parts"] = d.part_count();
    doc["bound"] = bound;
    doc["verified"] = verified;
    doc["part_members"] = d.parts;
    ordered_json traces = ordered_json::array();
    for (const auto& part : d.part_traces) {
        ordered_json per_part = ordered_json::array();
        for (const kufam::MemberSet& t : part) per_part.push_back(t.elements());
        traces.push_back(std::move(per_part));
    }
    doc["part_traces"] = std::move(traces);
    if (compacted_from) doc["compacted_from"] = *compacted_from;
    return doc;
}

int run_decompose(const DecomposeArgs& args) {
    const kufam::SetFamily family = kufam::parse_family(read_input(args.file));
    const kufam::BoundParams params{family.uniformity(), args.k, args.u, args.ell};
    params.validate();

    kufam::Decomposition d = kufam::decompose(family, params);
    std::optional<std::size_t> compacted_from;
    if (args.compact) {
        const std::size_t before = d.part_count();
        d = kufam::compact(family, d, args.ell, args.u);
        compacted_from = before;
    }

    const kufam::VerifyReport report = kufam::verify_decomposition(family, d, params);
    const std::uint64_t bound = kufam::theorem_bound(params);

    if (args.json)
        std::cout << decomposition_json(d, bound, report.ok(), compacted_from).dump(2) << "\n";
    else
        print_decomposition_text(family, d, bound, report.ok(), args.verbose, compacted_from);

    if (args.verify && !report.ok()) {
        std::cerr << "verification failed:"
                  << (report.covers ? "" : " covers") << (report.parts_ok ? "" : " parts_ok")
                  << (report.within_bound ? "" : " within_bound") << "\n";
        return 1;
    }
    return 0;
}

// ---- oracle ------------------------------------------------------------------

struct OracleArgs {
    std::string file = "-";
    std::uint32_t ell = 0;
    std::uint32_t u = 0;
    std::size_t cap = 24;
    bool verbose = false;
};

int run_oracle(const OracleArgs& args) {
    const kufam::SetFamily family = kufam::parse_family(read_input(args.file));
    const kufam::OracleResult result =
        kufam::min_cover_exact(family, args.ell, args.u, {args.cap});
    std::cout << "minimum=" << result.minimum << "\n";
    for (std::size_t i = 0; i < result.optimal_parts.parts.size(); ++i) {
        std::cout << "part " << i << ":";
        for (std::uint32_t idx : result.optimal_parts.parts[i]) {
            std::cout << ' ' << idx;
        }
        std::cout << "\n";
        if (args.verbose)
            for (std::uint32_t idx : result.optimal_parts.parts[i])
                std::cout << "#   member " << idx << " = "
                          << kufam::format_member(family.member(idx)) << "\n";
    }
    return 0;
}

// ---- bound -------------------------------------------------------------------

struct BoundArgs {
    kufam::BoundParams params;
};

int run_bound(const BoundArgs& args) {
    std::cout << kufam::theorem_bound(args.params) << "\n";
    return 0;
}

// ---- search ------------------------------------------------------------------

struct SearchArgs {
    std::uint32_t n = 0;
    kufam::BoundParams params;
    kufam::SearchOptions options;
};

int run_search(const SearchArgs& args) {
    const kufam::SearchReport report =
        kufam::extremal_search(args.n, args.params, args.options);
    std::cout << "best_value=" << report.best_value << "\n"
              << "families_examined=" << report.families_examined << "\n"
              << "budget_exhausted=" << (report.budget_exhausted ? "true" : "false") << "\n"
              << "seed=" << report.seed << "\n"
              << "witness:\n"
              << kufam::serialize_family(report.witness_family);
    return 0;
}

// ---- experiment ----------------------------------------------------------------

struct ExperimentArgs {
    std::vector<std::uint32_t> s{2};
    std::vector<std::uint32_t> k{3};
    std::vector<std::uint32_t> u{1};
    std::vector<std::uint32_t> ell{2};
    std::vector<std::uint32_t> n{8};
    std::uint32_t trials = 1;
    std::uint64_t seed = 0;
    std::size_t oracle_cap = 14;
    bool no_timing = false;
    std::string out;
};

struct TrialFamily {
    kufam::SetFamily family;
    bool ok = false;
};

// Even trials draw a scattered-stars instance when one fits; odd trials (and
// fallbacks) draw rejection-filtered random families.
TrialFamily experiment_family(const kufam::BoundParams& p, std::uint32_t n, std::uint32_t trial,
                              kufam::SplitMix64& rng) {
    if (trial % 2 == 0 && p.k >= 3) {
        const std::uint32_t block = n / (p.k - 1);
        if (block >= p.s) {
            const std::uint64_t tails = kufam::binomial(block - p.u, p.s - p.u);
            std::uint64_t max_per = std::min<std::uint64_t>(tails, 4);
            max_per = std::min<std::uint64_t>(max_per, 40 / (p.k - 1));
            if (max_per >= 1) {
                const auto per_star = static_cast<std::uint32_t>(1 + rng.below(max_per));
                return {kufam::gen_scattered_stars(n, p.s, p.u, p.k, per_star, rng.next()),
                        true};
            }
        }
    }
    const std::uint64_t universe = kufam::binomial(n, p.s);
    if (universe == 0) return {};
    const std::uint64_t max_count = std::min<std::uint64_t>(universe, 16);
    for (int attempt = 0; attempt < 200; ++attempt) {
        const auto count = static_cast<std::uint32_t>(1 + rng.below(max_count));
        kufam::SetFamily family = kufam::gen_random(n, p.s, count, rng.next());
        if (kufam::is_intersecting(family, p.k, p.u)) return {std::move(family), true};
    }
    return {};
}

int run_experiment(const ExperimentArgs& args) {
    std::ostringstream csv;
    csv << "# kufam-csv v1\n";
    csv << "s,k,u,ell,n,family_size,kernel_size,constructive_parts,oracle_parts,bound,verified,seed";
    if (!args.no_timing) csv << ",wall_ms";
    csv << "\n";

    bool any_violation = false;
    kufam::SplitMix64 seeder(args.seed);

    for (std::uint32_t s : args.s)
        for (std::uint32_t k : args.k)
            for (std::uint32_t u : args.u)
                for (std::uint32_t ell : args.ell)
                    for (std::uint32_t n : args.n) {
                        const kufam::BoundParams p{s, k, u, ell};
                        bool valid = n >= s;
                        try {
                            p.validate();
                        } catch (const kufam::DomainError&) {
                            valid = false;
                        }
                        for (std::uint32_t trial = 0; trial < args.trials; ++trial) {
                            const std::uint64_t row_seed = seeder.next();
                            if (!valid) continue;  // seeds stay aligned across grids
                            kufam::SplitMix64 rng(row_seed);

                            const TrialFamily tf = experiment_family(p, n, trial, rng);
                            if (!tf.ok) {
                                std::cerr << "skip: no (" << k << "," << u
                                          << ")-intersecting instance for s=" << s
                                          << " n=" << n << " trial=" << trial << "\n";
                                continue;
                            }
                            const kufam::SetFamily& family = tf.family;

                            const auto start = std::chrono::steady_clock::now();
                            const kufam::Kernel kernel = kufam::scattered_kernel(family, u);
                            const kufam::Decomposition d = kufam::decompose(family, p);
                            const kufam::VerifyReport report =
                                kufam::verify_decomposition(family, d, p);

                            std::optional<std::uint32_t> oracle_parts;
                            if (family.size() <= args.oracle_cap)
                                oracle_parts =
                                    kufam::min_cover_exact(family, ell, u, {args.oracle_cap})
                                        .minimum;
                            const auto stop = std::chrono::steady_clock::now();

                            const std::uint64_t bound = kufam::theorem_bound(p);
                            bool verified = report.ok() && kernel.size() <= k - 1;
                            if (oracle_parts && *oracle_parts > d.part_count())
                                verified = false;
                            if (!verified) any_violation = true;

                            csv << s << ',' << k << ',' << u << ',' << ell << ',' << n << ','
                                << family.size() << ',' << kernel.size() << ','
                                << d.part_count() << ',';
                            if (oracle_parts) csv << *oracle_parts;
                            csv << ',' << bound << ',' << (verified ? "true" : "false") << ','
                                << row_seed;
                            if (!args.no_timing)
                                csv << ','
                                    << std::chrono::duration_cast<std::chrono::milliseconds>(
                                           stop - start)
                                           .count();
                            csv << "\n";
                        }
                    }

    if (args.out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(args.out, std::ios::binary);
        if (!out) throw kufam::ParseError("cannot write '" + args.out + "'");
        out << csv.str();
    }
    return any_violation ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(k,u)-intersecting family decomposition toolkit"};
    app.set_version_flag("--version", "kufam 0.1.0");
    app.require_subcommand(1);

    const std::map<std::string, kufam::GenSpec::Kind> kind_names{
        {"random", kufam::GenSpec::Kind::random},
        {"star", kufam::GenSpec::Kind::star},
        {"scattered_stars", kufam::GenSpec::Kind::scattered_stars},
        {"sunflower", kufam::GenSpec::Kind::sunflower},
        {"complete", kufam::GenSpec::Kind::complete},
    };

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Generate a family to stdout");
    gen->add_option("--kind", gen_args.spec.kind, "Family construction")
        ->required()
        ->transform(CLI::CheckedTransformer(kind_names, CLI::ignore_case));
    gen->add_option("--n", gen_args.spec.n, "Ground-set size");
    gen->add_option("--s", gen_args.spec.s, "Uniformity");
    gen->add_option("--count", gen_args.spec.count, "Number of members");
    gen->add_option("--u", gen_args.spec.u, "Intersection threshold / star core size");
    gen->add_option("--k", gen_args.spec.k, "Outer arity (scattered_stars)");
    gen->add_option("--per-star", gen_args.spec.per_star, "Members per star");
    gen->add_option("--core-size", gen_args.spec.core_size, "Sunflower core size");
    gen->add_option("--petal-size", gen_args.spec.petal_size, "Sunflower petal size");
    gen->add_option("--petals", gen_args.spec.petals, "Sunflower petal count");
    gen->add_option("--seed", gen_args.spec.seed, "64-bit seed");

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "Decide (k,u)-intersecting status");
    check->add_option("file", check_args.file, "Family file ('-' = stdin)");
    check->add_option("--k", check_args.k, "Outer arity")->required();
    check->add_option("--u", check_args.u, "Intersection threshold")->required();
    check->add_flag("--verbose", check_args.verbose, "Annotate witness members in comments");

    DecomposeArgs dec_args;
    CLI::App* dec = app.add_subcommand("decompose", "Decompose into (ell,u)-intersecting parts");
    dec->add_option("file", dec_args.file, "Family file ('-' = stdin)");
    dec->add_option("--k", dec_args.k, "Outer arity")->required();
    dec->add_option("--u", dec_args.u, "Intersection threshold")->required();
    dec->add_option("--ell", dec_args.ell, "Target arity")->required();
    dec->add_flag("--compact", dec_args.compact, "Greedily merge parts afterwards");
    dec->add_flag("--verify", dec_args.verify, "Fail (exit 1) unless verification passes");
    dec->add_flag("--json", dec_args.json, "Emit a JSON document instead of text");
    dec->add_flag("--verbose", dec_args.verbose, "Annotate member sets in comments");

    OracleArgs oracle_args;
    CLI::App* oracle = app.add_subcommand("oracle", "Exact minimum (ell,u)-intersecting cover");
    oracle->add_option("file", oracle_args.file, "Family file ('-' = stdin)");
    oracle->add_option("--ell", oracle_args.ell, "Target arity")->required();
    oracle->add_option("--u", oracle_args.u, "Intersection threshold")->required();
    oracle->add_option("--cap", oracle_args.cap, "Largest family size accepted");
    oracle->add_flag("--verbose", oracle_args.verbose, "Annotate member sets in comments");

    BoundArgs bound_args;
    CLI::App* bound = app.add_subcommand("bound", "Print ceil((k-1)/(ell-1) * C(s,u))");
    bound->add_option("--s", bound_args.params.s, "Uniformity")->required();
    bound->add_option("--k", bound_args.params.k, "Outer arity")->required();
    bound->add_option("--u", bound_args.params.u, "Intersection threshold")->required();
    bound->add_option("--ell", bound_args.params.ell, "Target arity")->required();

    SearchArgs search_args;
    CLI::App* search = app.add_subcommand("search", "Probe for high-minimum families");
    search->add_option("--n", search_args.n, "Ground-set size")->required();
    search->add_option("--s", search_args.params.s, "Uniformity")->required();
    search->add_option("--k", search_args.params.k, "Outer arity")->required();
    search->add_option("--u", search_args.params.u, "Intersection threshold")->required();
    search->add_option("--ell", search_args.params.ell, "Target arity")->required();
    search->add_option("--budget", search_args.options.budget,
                       "Oracle evaluations (0 = unlimited / default)");
    search->add_option("--seed", search_args.options.seed, "Seed (randomized mode)");
    search->add_option("--oracle-cap", search_args.options.oracle_cap, "Oracle size cap");
    search->add_flag("--exhaustive", search_args.options.exhaustive,
                     "Enumerate all families up to symmetry");

    ExperimentArgs exp_args;
    CLI::App* exp = app.add_subcommand("experiment", "Parameter sweep emitting CSV");
    exp->add_option("--s", exp_args.s, "Uniformity grid")->delimiter(',');
    exp->add_option("--k", exp_args.k, "Outer arity grid")->delimiter(',');
    exp->add_option("--u", exp_args.u, "Threshold grid")->delimiter(',');
    exp->add_option("--ell", exp_args.ell, "Target arity grid")->delimiter(',');
    exp->add_option("--n", exp_args.n, "Ground-size grid")->delimiter(',');
    exp->add_option("--trials", exp_args.trials, "Trials per grid point");
    exp->add_option("--seed", exp_args.seed, "Master seed");
    exp->add_option("--oracle-cap", exp_args.oracle_cap,
                    "Run the exact oracle when |F| <= cap");
    exp->add_flag("--no-timing", exp_args.no_timing, "Drop the wall_ms column");
    exp->add_option("--out", exp_args.out, "Write CSV to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (gen->parsed()) return guarded([&] { return run_gen(gen_args); });
    if (check->parsed()) return guarded([&] { return run_check(check_args); });
    if (dec->parsed()) return guarded([&] { return run_decompose(dec_args); });
    if (oracle->parsed()) return guarded([&] { return run_oracle(oracle_args); });
    if (bound->parsed()) return guarded([&] { return run_bound(bound_args); });
    if (search->parsed()) return guarded([&] { return run_search(search_args); });
    if (exp->parsed()) return guarded([&] { return run_experiment(exp_args); });
    return 2;
}
