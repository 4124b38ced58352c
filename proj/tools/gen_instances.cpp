// Writes the reconstructable benchmark instances as DIMACS .col files.
// david and DSJC125.1 come from fixed published data (a literary network
// and a specific random instance) and cannot be regenerated; copy the
// standard files into the output directory to complete the set.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "eqc/families.hpp"
#include "eqc/graph.hpp"

namespace {

void emit(const std::filesystem::path& dir, const std::string& name,
    const eqc::Graph& g)
{
    auto path = dir / (name + ".col");
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write " << path << '\n';
        std::exit(1);
    }
    eqc::write_dimacs(g, out);
    std::cout << path.string() << ": n=" << g.num_vertices()
              << " m=" << g.num_edges() << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    std::filesystem::path dir = argc > 1 ? argv[1] : "instances";
    std::filesystem::create_directories(dir);

    for (const auto& name : eqc::benchmark_instance_names())
        emit(dir, name, eqc::benchmark_instance(name));

    // small instances used in examples and tests
    emit(dir, "k1", eqc::Graph::from_edges(1, {}));
    emit(dir, "empty10", eqc::Graph::from_edges(10, {}));
    emit(dir, "c5",
        eqc::Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
    emit(dir, "star8", eqc::Graph::star(8));

    std::cout << "note: david.col and DSJC125.1.col are distributed data "
                 "files; place the standard DIMACS versions in "
              << dir.string() << " to complete the benchmark set\n";
    return 0;
}
