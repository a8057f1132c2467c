#include "modcat/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace modcat {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<std::string> ratstrings(const json& j, const char* what) {
    if (!j.is_array()) throw InvalidData(std::string("category file: ") + what + " entry must be an array of rational strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw InvalidData(std::string("category file: ") + what + " coordinate must be a string");
        out.push_back(e.get<std::string>());
    }
    return out;
}

} // namespace

PremodularData category_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidData(std::string("category file: JSON parse error: ") + e.what());
    }
    try {
        PremodularData d;
        d.name = j.at("name").get<std::string>();
        d.conductor = j.at("conductor").get<long>();
        d.rank = j.at("rank").get<int>();
        if (d.rank < 1 || d.rank > max_supported_rank)
            throw InvalidData("category file: rank out of supported range [1, " +
                              std::to_string(max_supported_rank) + "]");
        if (d.conductor < 1) throw InvalidData("category file: conductor must be >= 1");
        d.labels = j.at("labels").get<std::vector<std::string>>();
        d.unit = j.at("unit").get<int>();
        d.dual = j.at("dual").get<std::vector<int>>();
        for (const auto& ds : j.at("dims"))
            d.dims.push_back(CycNum::from_coeff_strings(d.conductor, ratstrings(ds, "dims")));
        for (const auto& ts : j.at("twists"))
            d.twists.push_back(CycNum::from_coeff_strings(d.conductor, ratstrings(ts, "twists")));
        d.fusion.assign(static_cast<size_t>(d.rank) * d.rank * d.rank, 0);
        for (const auto& t : j.at("fusion")) {
            const int x = t.at("x").get<int>();
            const int y = t.at("y").get<int>();
            const int z = t.at("z").get<int>();
            const long n = t.at("n").get<long>();
            if (x < 0 || x >= d.rank || y < 0 || y >= d.rank || z < 0 || z >= d.rank)
                throw InvalidData("category file: fusion triple index out of range");
            if (n < 0 || n > std::numeric_limits<int>::max())
                throw InvalidData("category file: fusion coefficient out of range");
            d.n_mut(x, y, z) = static_cast<int>(n);
        }
        finalize(d);
        return d;
    } catch (const json::exception& e) {
        throw InvalidData(std::string("category file: ") + e.what());
    }
}

std::string category_to_json_text(const PremodularData& d) {
    ordered_json j;
    j["name"] = d.name;
    j["conductor"] = d.conductor;
    j["rank"] = d.rank;
    j["labels"] = d.labels;
    j["unit"] = d.unit;
    j["dual"] = d.dual;
    auto scalars = [](const std::vector<CycNum>& xs) {
        ordered_json arr = ordered_json::array();
        for (const auto& x : xs) arr.push_back(x.coeff_strings());
        return arr;
    };
    j["dims"] = scalars(d.dims);
    j["twists"] = scalars(d.twists);
    ordered_json fus = ordered_json::array();
    for (int x = 0; x < d.rank; ++x)
        for (int y = 0; y < d.rank; ++y)
            for (int z = 0; z < d.rank; ++z)
                if (d.n_of(x, y, z) != 0)
                    fus.push_back(ordered_json{{"x", x}, {"y", y}, {"z", z}, {"n", d.n_of(x, y, z)}});
    j["fusion"] = std::move(fus);
    return j.dump(2) + "\n";
}

PremodularData load_category_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidData("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return category_from_json_text(buf.str());
}

void save_category_file(const PremodularData& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << category_to_json_text(d);
}

} // namespace modcat
