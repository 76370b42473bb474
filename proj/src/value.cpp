#include "tribkit/value.hpp"

namespace tribkit {

std::string to_string(const Value& v) {
    if (const auto* b = std::get_if<BigInt>(&v)) return b->get_str();
    return std::get<Mat3>(v).to_string();
}

nlohmann::json to_json(const BigInt& v) { return v.get_str(); }

nlohmann::json to_json(const Mat3& m) {
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < 3; ++j) row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const Value& v) {
    return std::visit([](const auto& x) { return to_json(x); }, v);
}

}  // namespace tribkit
