// Regenerates the JSON files under fixtures/ from the embedded instances.

#include <fstream>
#include <iostream>

#include "fairdiv/fixtures.hpp"
#include "fairdiv/json_io.hpp"

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "fixtures";
    for (const auto& [name, inst] : fairdiv::fixtures::all()) {
        const std::string path = dir + "/" + name + ".json";
        std::ofstream out(path);
        if (!out) {
            std::cerr << "cannot write " << path << "\n";
            return 1;
        }
        out << fairdiv::instance_to_json(inst).dump(2) << "\n";
        std::cout << path << "\n";
    }
    return 0;
}
