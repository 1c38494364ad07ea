#pragma once

#include <efg/graph.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace efg
{
    inline constexpr const char * database_env = "EFG_DATABASE";
    inline constexpr const char * default_database = "graphs.efg";

    namespace exit_code
    {
        inline constexpr int ok = 0;
        inline constexpr int failure = 1;
        inline constexpr int missing_database = 2;
        inline constexpr int unknown_column = 3;
        inline constexpr int budget_exceeded = 4;
    }

    /// DOT drawing; vertices are named by canonical position.
    auto to_dot(GraphCode code) -> std::string;
    /// SVG with vertex k at angle 2*pi*k/n on a fixed circle.
    auto to_svg(GraphCode code) -> std::string;

    /// Runs one command line; args excludes the program name.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
