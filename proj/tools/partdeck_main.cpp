// Command line front end for the partdeck library.
//
// Exit codes: 0 on success, 1 when a deck has no answer (inconsistent,
// ambiguous, or below the reconstruction bound), 2 on usage or input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "partdeck/partdeck.hpp"

namespace {

partdeck::DeletionDeck read_deck(const std::string& path, std::uint64_t k) {
    if (path == "-") {
        return partdeck::parse_deck(std::cin, k, &std::cerr);
    }
    std::ifstream in(path);
    if (!in) {
        throw partdeck::Error("cannot open deck file: " + path);
    }
    return partdeck::parse_deck(in, k, &std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partition k-deletion decks and reconstruction"};
    app.require_subcommand(1);

    std::string parts_text;
    std::string deck_path;
    std::uint64_t k = 1;
    bool trace = false;
    std::string validation = "strict";
    std::string mode = "equals";
    std::uint64_t n_min = 0;
    std::uint64_t n_max = 0;

    auto* show = app.add_subcommand("show", "Render a partition and its Ferrers diagram");
    show->add_option("partition", parts_text, "Parts, e.g. \"4 3 1\" (\"-\" is the empty partition)")
        ->required();

    auto* conj = app.add_subcommand("conjugate", "Transpose a partition");
    conj->add_option("partition", parts_text, "Parts, e.g. \"4 3 1\"")->required();

    auto* dels = app.add_subcommand("deletions", "List the complete k-deletion deck of a partition");
    dels->add_option("-k,--cells", k, "Number of cells to delete")->required();
    dels->add_option("partition", parts_text, "Parts, e.g. \"4 3 1\"")->required();

    auto* rec = app.add_subcommand("reconstruct", "Recover a partition from its complete deck");
    rec->add_option("-k,--cells", k, "Number of cells each member is missing")->required();
    rec->add_flag("--trace", trace, "Write the case trace to stderr");
    rec->add_option("--validation", validation,
                    "strict: answer's deck must equal the input; subset: members must fit")
        ->check(CLI::IsMember({"strict", "subset"}));
    rec->add_option("deck", deck_path, "Deck file, one partition per line (\"-\" is stdin)")
        ->required();

    auto* orc = app.add_subcommand("oracle", "Brute-force every partition compatible with a deck");
    orc->add_option("-k,--cells", k, "Number of cells each member is missing")->required();
    orc->add_option("--mode", mode,
                    "equals: whole deck must match; contains: members must fit")
        ->check(CLI::IsMember({"equals", "contains"}));
    orc->add_option("deck", deck_path, "Deck file, one partition per line (\"-\" is stdin)")
        ->required();

    auto* sweep = app.add_subcommand("sweep", "Reconstruct every partition of each weight in a range");
    sweep->add_option("-k,--cells", k, "Number of cells to delete")->required();
    sweep->add_option("--n-min", n_min, "Smallest weight to sweep")->required();
    sweep->add_option("--n-max", n_max, "Largest weight to sweep")->required();

    auto* cex = app.add_subcommand(
        "counterexample", "Print the pair just below the bound that shares one deck");
    cex->add_option("-k,--cells", k, "Number of cells to delete")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*show) {
            auto p = partdeck::parse_partition(parts_text);
            std::cout << partdeck::to_text(p) << '\n' << partdeck::render_ferrers(p) << '\n';
        } else if (*conj) {
            auto p = partdeck::parse_partition(parts_text);
            std::cout << partdeck::to_text(partdeck::conjugate(p)) << '\n';
        } else if (*dels) {
            auto p = partdeck::parse_partition(parts_text);
            std::cout << partdeck::to_text(partdeck::k_deletions(p, k));
        } else if (*rec) {
            auto deck = read_deck(deck_path, k);
            auto vmode = validation == "subset" ? partdeck::ValidationMode::Subset
                                                : partdeck::ValidationMode::Strict;
            auto result = partdeck::reconstruct(deck, vmode);
            if (trace) {
                std::cerr << partdeck::to_line(result.trace) << '\n';
            }
            std::cout << partdeck::to_text(result.lambda) << '\n';
        } else if (*orc) {
            auto deck = read_deck(deck_path, k);
            auto mmode = mode == "contains" ? partdeck::MatchMode::DeckContains
                                            : partdeck::MatchMode::DeckEquals;
            auto report = partdeck::consistent_partitions(deck, mmode);
            for (const auto& p : report.matches) {
                std::cout << partdeck::to_text(p) << '\n';
            }
        } else if (*sweep) {
            if (n_min > n_max) {
                throw partdeck::Error("sweep range is empty: --n-min exceeds --n-max");
            }
            if (k > n_min) {
                throw partdeck::Error("k exceeds --n-min; every swept weight needs at least k cells");
            }
            for (std::uint64_t n = n_min; n <= n_max; ++n) {
                std::cout << partdeck::to_text(partdeck::exhaustive_check(n, k));
            }
        } else if (*cex) {
            auto ex = partdeck::negative_example(k);
            auto deck_mu = partdeck::k_deletions(ex.mu, k);
            auto deck_lambda = partdeck::k_deletions(ex.lambda, k);
            bool equal = deck_mu == deck_lambda;
            std::cout << "mu: " << partdeck::to_text(ex.mu) << '\n'
                      << "lambda: " << partdeck::to_text(ex.lambda) << '\n'
                      << "meet: " << partdeck::to_text(ex.meet) << '\n'
                      << "deck size: " << deck_mu.members().size() << '\n'
                      << "decks equal: " << (equal ? "yes" : "no") << '\n';
            return equal ? 0 : 1;
        }
    } catch (const partdeck::BoundNotMet& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const partdeck::InconsistentDeck& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const partdeck::AmbiguousDeck& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const partdeck::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
