#ifndef EO_TESTS_FIXTURES_HPP
#define EO_TESTS_FIXTURES_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "eo/errors.hpp"
#include "eo/turtle.hpp"

namespace eo::tests {

inline std::string fixture_path(const std::string& name) {
    return std::string(EO_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw Error("cannot read test fixture: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

inline TurtleDocument load_contrastive_fixture() {
    return parse_turtle(read_file(fixture_path("contrastive_example.ttl")));
}

inline std::string write_temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("eo_test_" + name);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    file << content;
    file.close();
    return path.string();
}

}  // namespace eo::tests

#endif
