#include "report.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <sstream>

namespace pdl::cli {

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

void RunReport::add_input(std::string name, const std::string& content)
{
    inputs.push_back({std::move(name), sha256_hex(content)});
}

void RunReport::detail(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }

void RunReport::print(std::ostream& os) const
{
    os << "== report\n";
    os << "command: " << command << '\n';
    for (const auto& in : inputs)
        os << "input: " << in.name << " sha256=" << in.sha256 << '\n';
    for (const auto& [k, v] : details)
        os << k << ": " << v << '\n';
    if (nodes)
        os << "nodes: " << *nodes << '\n';
    if (bound)
        os << "bound: " << *bound << '\n';
    os << "outcome: " << outcome << '\n';
    os << "exit: " << exit_code << '\n';
    os << "time_ms: " << std::fixed << std::setprecision(1) << elapsed_ms << '\n';
}

nlohmann::json RunReport::to_json() const
{
    nlohmann::json j;
    j["command"] = command;
    j["inputs"] = nlohmann::json::array();
    for (const auto& in : inputs)
        j["inputs"].push_back({{"name", in.name}, {"sha256", in.sha256}});
    j["details"] = nlohmann::json::object();
    for (const auto& [k, v] : details)
        j["details"][k] = v;
    if (nodes)
        j["nodes"] = *nodes;
    if (bound)
        j["bound"] = *bound;
    j["outcome"] = outcome;
    j["exit_code"] = exit_code;
    j["time_ms"] = elapsed_ms;
    return j;
}

} // namespace pdl::cli
