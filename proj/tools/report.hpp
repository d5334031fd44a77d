#pragma once

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace pdl::cli {

std::string sha256_hex(const std::string& data);

/// One per run. Everything except elapsed_ms is a function of the inputs.
struct RunReport {
    struct Input {
        std::string name;
        std::string sha256;
    };

    std::string command;
    std::vector<Input> inputs;
    std::string outcome;
    int exit_code = 0;
    std::vector<std::pair<std::string, std::string>> details;
    std::optional<std::size_t> nodes;
    std::optional<std::string> bound;
    double elapsed_ms = 0;

    void add_input(std::string name, const std::string& content);
    void detail(std::string key, std::string value);

    void print(std::ostream& os) const;
    nlohmann::json to_json() const;
};

} // namespace pdl::cli
