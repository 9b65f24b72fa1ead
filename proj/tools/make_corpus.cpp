// Regenerates the bundled data directory: the pinned instances, small
// cycles, and exhaustive tree lists (one JSON graph per line).
#include <filesystem>
#include <fstream>
#include <iostream>

#include "binedge/corpus.hpp"
#include "binedge/io.hpp"

using namespace binedge;

int main(int argc, char** argv) {
    std::filesystem::path out = argc > 1 ? argv[1] : "data";
    std::filesystem::create_directories(out / "trees");
    auto write = [&](const std::string& name, const Graph& g) {
        std::ofstream f(out / name);
        f << graph_to_json(g, true) << "\n";
    };
    write("fig1.json", fig1_graph());
    write("fig2.json", fig2_graph());
    write("fig3.json", fig3_graph());
    write("fig4.json", fig4_graph());
    write("ex25.json", ex25_graph());
    for (int n = 4; n <= 9; ++n) write("c" + std::to_string(n) + ".json", cycle_graph(n));
    for (int n = 1; n <= 9; ++n) {
        std::ofstream f(out / "trees" / ("n" + std::to_string(n) + ".jsonl"));
        for (const auto& t : all_trees(n)) f << graph_to_json(t, false) << "\n";
    }
    std::cout << "corpus written to " << out << "\n";
    return 0;
}
