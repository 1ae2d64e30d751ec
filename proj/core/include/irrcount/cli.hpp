#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "irrcount/coherent.hpp"
#include "irrcount/counting.hpp"
#include "irrcount/painting.hpp"

namespace irrcount {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct HelpRequested {
    std::string text;
};

struct Invocation {
    enum class Sub { Count, Table, Paintings, Assignments, Coh, Verify, Selftest };
    Sub sub = Sub::Count;

    bool json = false;
    bool ascii = false;
    bool includeZeros = false;
    int threads = 1;
    CountOptions opts;

    std::optional<GroupSpec> group;
    NuSpec nu;
    std::optional<OrbitSpec> orbit;

    YoungDiagram shape;                     // paintings/assignments
    PaintingType paintingType = PaintingType::AR;
    std::optional<std::pair<int, int>> signatureFilter;
    YoungDiagram content;                   // assignments

    std::optional<CohSpec> cohSpec;
    CohMethod cohMethod = CohMethod::Strips;
};

// Throws UsageError on malformed arguments, HelpRequested for --help.
Invocation parseArgs(const std::vector<std::string>& args);

// Exit status: 0 success, 3 verification mismatch; computation failures
// propagate as exceptions.
int runInvocation(const Invocation& inv, std::ostream& out, std::ostream& err);

// Full driver: parse, run, map errors to exit codes 0/1/2/3 and to JSON
// error objects on stderr.
int cliMain(int argc, char** argv);

}  // namespace irrcount
