// Writes the committed dataset JSON files under data/.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ucat/datasets.hpp"

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "data";
    std::filesystem::create_directories(dir);
    for (auto& name : ucat::dataset_names()) {
        auto ds = ucat::build_dataset(name);
        std::ofstream out(dir + "/" + name + ".json");
        out << ucat::dump_canonical(ucat::dataset_to_json(ds));
        std::cout << name << " -> " << dir << "/" << name << ".json\n";
    }
    return 0;
}
