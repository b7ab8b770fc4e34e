#pragma once

#include "sumset/report.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sumset::cli {

struct Common {
    std::uint64_t seed = 0;
    std::string format = "json";
    bool assert_mode = false;
};

class Command {
public:
    virtual ~Command() = default;
    virtual const char* name() const = 0;
    virtual const char* help() const = 0;
    virtual void bind(CLI::App& app) = 0;
    virtual void run(report::Report& rep, const Common& common) = 0;
    /// Format to use when --format was not given.
    virtual std::string default_format() const { return "json"; }
};

std::vector<std::unique_ptr<Command>> make_commands();

}  // namespace sumset::cli
