#pragma once

#include "sumset/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace sumset::report {

using exactq::Rational;
using Json = nlohmann::ordered_json;

/// A float that is only approximately known; rendered to 12 significant digits.
struct Approx {
    double value = 0;
};

using Cell = std::variant<std::monostate, bool, std::int64_t, Rational, Approx, std::string, Json>;

std::string format_approx(double v);
Json cell_json(const Cell& c);
std::string cell_csv(const Cell& c);

enum class Status { Pass, Fail, Info };

struct Check {
    std::string name;
    Status status = Status::Info;
    Cell lhs, rhs;
};

struct Report {
    Json config = Json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<Check> checks;

    void add_row(std::vector<Cell> row);
    void check(std::string name, bool ok, Cell lhs = {}, Cell rhs = {});
    void info(std::string name, Cell lhs = {}, Cell rhs = {});
    bool failed() const;

    /// {"config", "results": [row objects], "checks": [...]}
    Json to_json() const;
    /// Header plus one line per row; checks are not part of the CSV.
    std::string to_csv() const;
};

}  // namespace sumset::report
