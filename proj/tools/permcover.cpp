// permcover: build, verify, enumerate, count, and cross-check minimal
// complete sets of permutations under inversion or ordered-pair coverage.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permcover/completeness.hpp"
#include "permcover/construction.hpp"
#include "permcover/counting.hpp"
#include "permcover/io.hpp"
#include "permcover/oracle.hpp"
#include "permcover/rng.hpp"
#include "permcover/selection.hpp"

namespace {

using namespace permcover;

CoverMode parse_mode(const std::string& word) {
    return mode_from_string(word);  // throws invalid_argument on junk
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open input file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Value lists on the command line: "1,3,5" always works; for values
// below 10 the commas may be omitted ("135").
std::vector<int> parse_value_list(const std::string& arg) {
    std::vector<int> out;
    if (arg.find(',') != std::string::npos) {
        std::istringstream in(arg);
        std::string piece;
        while (std::getline(in, piece, ',')) {
            if (piece.empty()) {
                throw std::invalid_argument("empty entry in value list");
            }
            out.push_back(std::stoi(piece));
        }
        return out;
    }
    for (char ch : arg) {
        if (ch < '1' || ch > '9') {
            throw std::invalid_argument(
                "value lists are comma-separated integers (commas may be "
                "omitted when every value is a single digit)");
        }
        out.push_back(ch - '0');
    }
    if (out.empty()) throw std::invalid_argument("empty value list");
    return out;
}

std::string join_values(const std::vector<int>& values) {
    std::ostringstream out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k > 0) out << ',';
        out << values[k];
    }
    return out.str();
}

// Mirrors the library's seeded draw so extra randomness (subset choice,
// orbit base) can share one generator while staying reproducible.
PermSet draw_q_star(int n, Rng& rng) {
    if (n == 2 || n == 3) {
        const std::vector<PermSet> sets = enumerate_Q_star(n);
        return sets[static_cast<std::size_t>(rng.below(sets.size()))];
    }
    int c = n / 2;
    if (n % 2 == 1 && rng.coin()) c = n / 2 + 1;
    return sample_transversal(n, c, rng);
}

Permutation random_permutation(int n, Rng& rng) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) image[static_cast<std::size_t>(k - 1)] = k;
    rng.shuffle(image);
    return Permutation(image);
}

std::vector<int> random_subset(int n, int k, Rng& rng) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) pool[static_cast<std::size_t>(v - 1)] = v;
    for (int s = 0; s < k; ++s) {
        const std::size_t r = static_cast<std::size_t>(s) +
                              static_cast<std::size_t>(rng.below(
                                  static_cast<std::uint64_t>(n - s)));
        std::swap(pool[static_cast<std::size_t>(s)], pool[r]);
    }
    std::vector<int> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

PermSet default_pair_sample(int n, Rng& rng,
                            std::vector<std::pair<std::string, std::string>>&
                                metadata) {
    if (n <= 4) {
        const std::vector<PermSet> sets = enumerate_P_star(n);
        metadata.emplace_back("generator", "catalog");
        return sets[static_cast<std::size_t>(rng.below(sets.size()))];
    }
    const std::vector<int> x = random_subset(n, n / 2, rng);
    const PermSet q = draw_q_star(n, rng);
    metadata.emplace_back("generator", "bijection");
    metadata.emplace_back("x", join_values(x));
    return phi_inverse(x, q);
}

int cmd_generate(int n, CoverMode mode, std::uint64_t seed, bool want_orbit,
                 const std::string& relabel_arg, const std::string& x_arg) {
    Rng rng(seed);
    PermSetDocument doc;
    doc.n = n;
    doc.mode = mode;
    std::vector<std::pair<std::string, std::string>> metadata;
    metadata.emplace_back("seed", std::to_string(seed));

    if (mode == CoverMode::inversion) {
        if (want_orbit || !relabel_arg.empty() || !x_arg.empty()) {
            throw std::invalid_argument(
                "generate: --orbit/--relabel/--x require --mode pair");
        }
        const PermSet q = draw_q_star(n, rng);
        metadata.emplace_back("generator", "transversal");
        if (const std::optional<int> c = maximum_transversal_c(q)) {
            metadata.emplace_back("c", std::to_string(*c));
        }
        doc.perms = q.members();
    } else if (want_orbit) {
        const Permutation base = random_permutation(n, rng);
        metadata.emplace_back("generator", "orbit");
        metadata.emplace_back("base", to_string(base));
        doc.perms = orbit(base).members();
    } else if (!x_arg.empty()) {
        const std::vector<int> x = parse_value_list(x_arg);
        const PermSet p = phi_inverse(x, draw_q_star(n, rng));
        metadata.emplace_back("generator", "bijection");
        metadata.emplace_back("x", join_values(x));
        doc.perms = p.members();
    } else if (!relabel_arg.empty()) {
        const std::vector<int> tau_image = parse_value_list(relabel_arg);
        const Permutation tau{tau_image};
        const PermSet base = default_pair_sample(n, rng, metadata);
        metadata.emplace_back("relabel", to_string(tau));
        doc.perms = relabel_set(tau, base).members();
    } else {
        doc.perms = default_pair_sample(n, rng, metadata).members();
    }
    doc.metadata = std::move(metadata);
    std::cout << to_text(doc);
    return 0;
}

int cmd_enumerate(int n, CoverMode mode, std::uint64_t limit,
                  bool limit_given) {
    const ExactCount total = (mode == CoverMode::inversion)
                                 ? count_Q_star(n)
                                 : count_P_star(n);
    if (!limit_given && total > ExactCount(1'000'000'000)) {
        std::ostringstream msg;
        msg << "enumerate: " << total
            << " sets exceed 1e9; pass --limit to stream a prefix";
        throw std::invalid_argument(msg.str());
    }
    std::uint64_t emitted = 0;
    auto emit = [&](const PermSet& s) {
        PermSetDocument doc = from_set(s);
        std::cout << "# " << emitted << "\n" << to_text(doc) << "\n";
    };
    if (mode == CoverMode::inversion) {
        QStarEnumerator it(n);
        while (std::optional<PermSet> s = it.next()) {
            if (limit_given && emitted >= limit) break;
            emit(*s);
            ++emitted;
        }
    } else {
        PStarEnumerator it(n);
        while (std::optional<PermSet> s = it.next()) {
            if (limit_given && emitted >= limit) break;
            emit(*s);
            ++emitted;
        }
    }
    return 0;
}

int cmd_verify(const std::string& path, bool minimal) {
    const PermSetDocument doc = parse_document_any(read_input(path));
    const PermSet s = to_set(doc);
    if (!is_complete(s)) {
        std::cout << "incomplete: uncovered";
        for (const OrderedPair& pr : uncovered(s)) {
            std::cout << " (" << pr.first << "," << pr.second << ")";
        }
        std::cout << "\n";
        return 1;
    }
    if (minimal && !is_minimal_complete(s)) {
        std::cout << "complete but not minimal: redundant";
        for (const Permutation& p : s.members()) {
            if (critical_elements(s, p).empty()) {
                std::cout << " " << to_string(p);
            }
        }
        std::cout << "\n";
        return 1;
    }
    std::cout << (minimal ? "minimally complete" : "complete") << "\n";
    return 0;
}

int cmd_graph(const std::string& path, const std::string& strategy) {
    const PermSet s = to_set(parse_document_any(read_input(path)));
    const bool directed = s.mode() == CoverMode::pair;
    auto render = [&](const CriticalSelectionGraph& g) {
        if (directed) {
            CriticalSelectionDigraph d{g.n, g.edges};
            std::cout << to_dot(d);
        } else {
            std::cout << to_dot(g);
        }
    };
    if (strategy == "lex_min") {
        render(build_selection_graph(s));
    } else {
        const std::vector<CriticalSelectionGraph> graphs =
            build_all_selection_graphs(s);
        for (std::size_t k = 0; k < graphs.size(); ++k) {
            std::cout << "// selection " << k + 1 << " of " << graphs.size()
                      << "\n";
            render(graphs[k]);
            if (k + 1 < graphs.size()) std::cout << "\n";
        }
    }
    return 0;
}

int cmd_phi(const std::string& path) {
    const PermSet p = to_set(parse_document_any(read_input(path)));
    const auto [x, q] = phi(p);
    PermSetDocument doc = from_set(q);
    doc.metadata.emplace_back("x", join_values(x));
    std::cout << to_text(doc);
    return 0;
}

int cmd_phi_inverse(const std::string& x_arg, const std::string& path) {
    const std::vector<int> x = parse_value_list(x_arg);
    const PermSet q = to_set(parse_document_any(read_input(path)));
    PermSetDocument doc = from_set(phi_inverse(x, q));
    doc.metadata.emplace_back("x", join_values(x));
    std::cout << to_text(doc);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "minimal complete permutation sets: construction, verification, "
        "enumeration, exact counting, and a brute-force cross-check"};
    app.require_subcommand(1);

    int n = 0;
    std::string mode_word = "inversion";
    std::string what, file, strategy = "lex_min", format = "dot";
    std::string relabel_arg, x_arg, q_file;
    std::uint64_t seed = 0, limit = 0, trials = 1'000'000;
    int family_c = -1;
    bool minimal = false, restricted = false, want_orbit = false;

    const auto mode_check = CLI::IsMember({"inversion", "pair"});

    CLI::App* gamma = app.add_subcommand(
        "gamma", "largest size of a minimal complete set");
    gamma->add_option("n", n, "ground set size")->required();
    gamma->add_option("--mode", mode_word, "inversion|pair")
        ->required()
        ->check(mode_check);

    CLI::App* count = app.add_subcommand("count", "exact counts");
    count->add_option("n", n, "ground set size")->required();
    count->add_option("--what", what, "qstar|pstar|family")
        ->required()
        ->check(CLI::IsMember({"qstar", "pstar", "family"}));
    count->add_option("--c", family_c, "family split point (with family)");

    CLI::App* generate = app.add_subcommand(
        "generate", "one seeded optimal set to stdout");
    generate->add_option("n", n, "ground set size")->required();
    generate->add_option("--mode", mode_word, "inversion|pair")
        ->required()
        ->check(mode_check);
    generate->add_option("--seed", seed, "64-bit seed")->required();
    generate->add_flag("--orbit", want_orbit,
                       "pair mode: circular-shift orbit of a random base");
    generate->add_option("--relabel", relabel_arg,
                         "pair mode: relabel the sample by this permutation");
    generate->add_option("--x", x_arg,
                         "pair mode: subset for the bijection (n >= 5)");

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "stream every optimal set");
    enumerate->add_option("n", n, "ground set size")->required();
    enumerate->add_option("--mode", mode_word, "inversion|pair")
        ->required()
        ->check(mode_check);
    CLI::Option* limit_opt =
        enumerate->add_option("--limit", limit, "stop after this many sets");

    CLI::App* verify = app.add_subcommand(
        "verify", "check a set file (exit 0 iff it passes)");
    verify->add_option("file", file, "set file, or - for stdin")->required();
    verify->add_flag("--minimal", minimal, "also require minimality");

    CLI::App* oracle = app.add_subcommand(
        "oracle", "independent exhaustive search (JSON report)");
    oracle->add_option("n", n, "ground set size")->required();
    oracle->add_option("--mode", mode_word, "inversion|pair")
        ->required()
        ->check(mode_check);
    oracle->add_flag("--restricted", restricted,
                     "n=5 inversion: verify + fuzz instead of exhaustion");
    oracle->add_option("--trials", trials,
                       "restricted mode: number of random subsets");

    CLI::App* graph = app.add_subcommand(
        "graph", "critical selection graph(s) of a set file");
    graph->add_option("file", file, "set file, or - for stdin")->required();
    graph->add_option("--strategy", strategy, "lex_min|all")
        ->check(CLI::IsMember({"lex_min", "all"}));
    graph->add_option("--format", format, "dot")
        ->check(CLI::IsMember({"dot"}));

    CLI::App* phi_cmd = app.add_subcommand(
        "phi", "split a maximum pair-mode set into (x, inversion set)");
    phi_cmd->add_option("file", file, "set file, or - for stdin")->required();

    CLI::App* phi_inv = app.add_subcommand(
        "phi-inverse", "rebuild the pair-mode set from --x and --q");
    phi_inv->add_option("--x", x_arg, "subset of size floor(n/2)")
        ->required();
    phi_inv->add_option("--q", q_file, "inversion set file, or - for stdin")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gamma->parsed()) {
            const CoverMode mode = parse_mode(mode_word);
            std::cout << (mode == CoverMode::inversion ? gamma_I(n)
                                                       : gamma_P(n))
                      << "\n";
            return 0;
        }
        if (count->parsed()) {
            if (what == "qstar") {
                std::cout << count_Q_star(n) << "\n";
            } else if (what == "pstar") {
                std::cout << count_P_star(n) << "\n";
            } else if (what == "family") {
                if (family_c < 0) {
                    throw std::invalid_argument(
                        "count --what family requires --c");
                }
                std::cout << family_size(n, family_c) << "\n";
            } else {
                throw std::invalid_argument(
                    "count --what must be qstar, pstar, or family");
            }
            return 0;
        }
        if (generate->parsed()) {
            return cmd_generate(n, parse_mode(mode_word), seed, want_orbit,
                                relabel_arg, x_arg);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(n, parse_mode(mode_word), limit,
                                 limit_opt->count() > 0);
        }
        if (verify->parsed()) return cmd_verify(file, minimal);
        if (oracle->parsed()) {
            const OracleReport report =
                oracle_enumerate(n, parse_mode(mode_word), restricted,
                                 trials);
            std::cout << to_json(report);
            return 0;
        }
        if (graph->parsed()) return cmd_graph(file, strategy);
        if (phi_cmd->parsed()) return cmd_phi(file);
        if (phi_inv->parsed()) return cmd_phi_inverse(x_arg, q_file);
    } catch (const parse_error& e) {
        std::string where = !file.empty() ? file : q_file;
        if (where.empty()) where = "input";
        std::cerr << where << ":" << e.line << ":" << e.col << ": "
                  << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
