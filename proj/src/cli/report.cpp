#include "sumset/report.hpp"

#include "sumset/errors.hpp"

#include <cmath>
#include <cstdio>

namespace sumset::report {

std::string format_approx(double v) {
    if (v == 0) v = 0;  // no "-0"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Json cell_json(const Cell& c) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
            else if constexpr (std::is_same_v<T, Rational>) return x.str();
            else if constexpr (std::is_same_v<T, Approx>) return Json{{"approx", format_approx(x.value)}};
            else return Json(x);
        },
        c);
}

namespace {

std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string cell_csv(const Cell& c) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) return "";
            else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
            else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(x);
            else if constexpr (std::is_same_v<T, Rational>) return x.str();
            else if constexpr (std::is_same_v<T, Approx>) return "approx:" + format_approx(x.value);
            else if constexpr (std::is_same_v<T, std::string>) return quote(x);
            else return quote(x.dump());
        },
        c);
}

void Report::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) fail(ErrorKind::PreconditionFailed, "row width differs from the column count");
    rows.push_back(std::move(row));
}

void Report::check(std::string name, bool ok, Cell lhs, Cell rhs) {
    checks.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(lhs), std::move(rhs)});
}

void Report::info(std::string name, Cell lhs, Cell rhs) {
    checks.push_back({std::move(name), Status::Info, std::move(lhs), std::move(rhs)});
}

bool Report::failed() const {
    for (const auto& c : checks)
        if (c.status == Status::Fail) return true;
    return false;
}

Json Report::to_json() const {
    Json results = Json::array();
    for (const auto& row : rows) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = cell_json(row[i]);
        results.push_back(std::move(obj));
    }
    Json cs = Json::array();
    for (const auto& c : checks) {
        const char* st = c.status == Status::Pass ? "pass" : c.status == Status::Fail ? "fail" : "info";
        cs.push_back(Json{{"name", c.name}, {"status", st}, {"lhs", cell_json(c.lhs)}, {"rhs", cell_json(c.rhs)}});
    }
    return Json{{"config", config}, {"results", std::move(results)}, {"checks", std::move(cs)}};
}

std::string Report::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + quote(columns[i]);
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + cell_csv(row[i]);
        out += '\n';
    }
    return out;
}

}  // namespace sumset::report
