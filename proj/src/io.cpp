#include "cycontext/io.hpp"

#include <json.hpp>

#include <stdexcept>
#include <utility>

namespace cycontext {

namespace {

using nlohmann::json;

Rational rational_field(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key)) {
        throw std::invalid_argument(path + "." + key + ": missing field");
    }
    const json& v = obj.at(key);
    if (!v.is_string()) {
        throw std::invalid_argument(path + "." + key + ": expected a rational string");
    }
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + "." + key + ": " + e.what());
    }
}

}  // namespace

CyclicSystem parse_system_file(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("top level: expected an object");
    if (!doc.contains("rank") || !doc.at("rank").is_number_integer()) {
        throw std::invalid_argument("rank: missing or not an integer");
    }
    const int rank = doc.at("rank").get<int>();
    if (!doc.contains("bunches") || !doc.at("bunches").is_array()) {
        throw std::invalid_argument("bunches: missing or not an array");
    }
    const json& arr = doc.at("bunches");
    std::vector<BunchDistribution> bunches;
    bunches.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string path = "bunches[" + std::to_string(i) + "]";
        if (!arr[i].is_object()) throw std::invalid_argument(path + ": expected an object");
        BunchDistribution b;
        b.p00 = rational_field(arr[i], path, "p00");
        b.p01 = rational_field(arr[i], path, "p01");
        b.p10 = rational_field(arr[i], path, "p10");
        b.p11 = rational_field(arr[i], path, "p11");
        if (!b.valid()) {
            throw std::invalid_argument(path + ": cells must lie in [0,1] and sum to 1");
        }
        bunches.push_back(std::move(b));
    }
    try {
        return CyclicSystem(rank, std::move(bunches));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("system: ") + e.what());
    }
}

std::string serialize_system_file(const CyclicSystem& system) {
    json doc;
    doc["rank"] = system.rank();
    json arr = json::array();
    for (const BunchDistribution& b : system.bunches()) {
        arr.push_back({{"p00", format_rational(b.p00)},
                       {"p01", format_rational(b.p01)},
                       {"p10", format_rational(b.p10)},
                       {"p11", format_rational(b.p11)}});
    }
    doc["bunches"] = std::move(arr);
    return doc.dump(2) + "\n";
}

}  // namespace cycontext
