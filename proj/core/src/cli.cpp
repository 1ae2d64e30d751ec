#include "irrcount/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "irrcount/assignment.hpp"
#include "irrcount/json_io.hpp"
#include "irrcount/selftest.hpp"

namespace irrcount {

namespace {

PaintingType parsePaintingType(const std::string& s) {
    std::string u;
    for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (u == "AR") return PaintingType::AR;
    if (u == "AH") return PaintingType::AH;
    if (u == "A") return PaintingType::A;
    if (u == "ADEG" || u == "A_DEGENERATE" || u == "ADEGENERATE") return PaintingType::ADegenerate;
    throw UsageError("unknown painting type '" + s + "' (expected AR, AH, A, or ADEG)");
}

CohSpec parseCohSpec(const std::string& s) {
    std::string u;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (u.rfind("UHALF(", 0) == 0 && u.back() == ')') {
        CohSpec spec;
        spec.family = CohSpec::Family::UHalf;
        spec.a = std::stoi(u.substr(6, u.size() - 7));
        return spec;
    }
    GroupSpec g = parseGroup(s);
    CohSpec spec;
    switch (g.family) {
        case Family::Glr: spec.family = CohSpec::Family::Glr; spec.a = g.n; break;
        case Family::Glh: spec.family = CohSpec::Family::Glh; spec.a = g.n; break;
        case Family::Glc: spec.family = CohSpec::Family::Glc; spec.a = g.n; break;
        case Family::U: spec.family = CohSpec::Family::U; spec.a = g.p; spec.b = g.q; break;
        case Family::UGenuine:
            throw UsageError("coherent tables are indexed by linear families; use U(p,q)");
    }
    return spec;
}

// "0,1;x,x-1" -> NuSpec with two sides; a single side fills left only.
NuSpec parseNu(const std::string& text) {
    NuSpec nu;
    auto semi = text.find(';');
    if (semi == std::string::npos) {
        nu.left = parseCoordinateList(text);
    } else {
        nu.left = parseCoordinateList(text.substr(0, semi));
        nu.right = parseCoordinateList(text.substr(semi + 1));
    }
    return nu;
}

// "[2,1]" or "[2]|[1,1]".
OrbitSpec parseOrbit(const std::string& text) {
    OrbitSpec orbit;
    auto bar = text.find('|');
    if (bar == std::string::npos) {
        orbit.first = parseDiagram(text);
    } else {
        orbit.first = parseDiagram(text.substr(0, bar));
        orbit.second = parseDiagram(text.substr(bar + 1));
    }
    return orbit;
}

BigRat parseRationalArg(const std::string& text) {
    Coordinate c = parseCoordinate(text);
    if (!c.isRational()) throw UsageError("expected a rational number, got '" + text + "'");
    return c.offset;
}

void validateCountArgs(const Invocation& inv, bool needOrbit) {
    if (!inv.group) throw UsageError("--group is required");
    const GroupSpec& g = *inv.group;
    int rank = g.rank();
    if (static_cast<int>(inv.nu.left.size()) != rank)
        throw UsageError(g.toString() + " needs " + std::to_string(rank) +
                         " coordinates, got " + std::to_string(inv.nu.left.size()));
    if (g.family == Family::Glc) {
        if (static_cast<int>(inv.nu.right.size()) != rank)
            throw UsageError("GLC needs two coordinate lists of length " + std::to_string(rank) +
                             " separated by ';'");
    } else if (!inv.nu.right.empty()) {
        throw UsageError("a second coordinate list is only meaningful for GLC");
    }
    if (needOrbit) {
        if (!inv.orbit) throw UsageError("--orbit is required");
        if (g.family == Family::Glc) {
            if (!inv.orbit->second)
                throw UsageError("GLC needs an orbit pair like [2]|[1,1]");
            if (inv.orbit->second->size() != rank || inv.orbit->first.size() != rank)
                throw UsageError("orbit partitions must have size " + std::to_string(rank));
        } else {
            if (inv.orbit->second)
                throw UsageError(g.toString() + " takes a single orbit partition");
            if (inv.orbit->first.size() != rank)
                throw UsageError("orbit partition must have size " + std::to_string(rank));
        }
    }
}

}  // namespace

Invocation parseArgs(const std::vector<std::string>& args) {
    Invocation inv;
    CLI::App app{"exact counts of irreducible Casselman-Wallach representations by "
                 "infinitesimal character and complex associated variety",
                 "irrcount"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string groupText, nuText, orbitText, shapeText, contentText, typeText = "AR";
    std::string uswapText = "unswapped", muText = "1/2", methodText = "strips", sigText;

    auto addCommon = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_flag("--ascii", inv.ascii, "ASCII symbols in text output");
        cmd->add_option("--threads", inv.threads, "worker threads for tables and verification")
            ->check(CLI::Range(1, 256));
    };
    auto addGroupNu = [&](CLI::App* cmd) {
        cmd->add_option("--group", groupText, "group, e.g. GLR(3), GLH(8), GLC(2), U(2,1), UGEN(2,1)")
            ->required();
        cmd->add_option("--nu", nuText,
                        "infinitesimal character coordinates, e.g. \"1,1,2\" or \"0,1;x,x-1\"")
            ->required();
        cmd->add_option("--u-swap", uswapText, "unitary recursion orbit attachment")
            ->check(CLI::IsMember({"unswapped", "verbatim"}));
        cmd->add_option("--mu-offset", muText, "offset of the genuine twist, default 1/2");
    };

    CLI::App* cmdCount = app.add_subcommand("count", "count one orbit");
    addCommon(cmdCount);
    addGroupNu(cmdCount);
    cmdCount->add_option("--orbit", orbitText, "orbit partition, e.g. [2,1] or [2]|[1,1]")
        ->required();

    CLI::App* cmdTable = app.add_subcommand("table", "count every orbit");
    addCommon(cmdTable);
    addGroupNu(cmdTable);
    cmdTable->add_flag("--include-zeros", inv.includeZeros, "also print zero rows");

    CLI::App* cmdPaintings = app.add_subcommand("paintings", "enumerate paintings of a diagram");
    addCommon(cmdPaintings);
    cmdPaintings->add_option("--shape", shapeText, "Young diagram, e.g. [2,1]")->required();
    cmdPaintings->add_option("--type", typeText, "AR, AH, A, or ADEG");
    cmdPaintings->add_option("--signature", sigText, "filter type-A paintings by \"p,q\"");

    CLI::App* cmdAssignments =
        app.add_subcommand("assignments", "enumerate assignments of a content");
    addCommon(cmdAssignments);
    cmdAssignments->add_option("--shape", shapeText, "Young diagram, e.g. [4,4]")->required();
    cmdAssignments->add_option("--content", contentText, "content partition, e.g. [3,3,2]")
        ->required();

    CLI::App* cmdCoh = app.add_subcommand("coh", "dump a coherent continuation table");
    addCommon(cmdCoh);
    cmdCoh->add_option("--group", groupText, "GLR(n), GLH(n), GLC(n), U(p,q), or UHALF(p)")
        ->required();
    cmdCoh->add_option("--method", methodText, "strips or oracle")
        ->check(CLI::IsMember({"strips", "oracle"}));

    CLI::App* cmdVerify =
        app.add_subcommand("verify", "check the closed-form counts against the character oracle");
    addCommon(cmdVerify);
    addGroupNu(cmdVerify);

    CLI::App* cmdSelftest = app.add_subcommand("selftest", "run the acceptance battery");
    addCommon(cmdSelftest);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    inv.json = format == "json";
    if (app.got_subcommand(cmdCount)) inv.sub = Invocation::Sub::Count;
    if (app.got_subcommand(cmdTable)) inv.sub = Invocation::Sub::Table;
    if (app.got_subcommand(cmdPaintings)) inv.sub = Invocation::Sub::Paintings;
    if (app.got_subcommand(cmdAssignments)) inv.sub = Invocation::Sub::Assignments;
    if (app.got_subcommand(cmdCoh)) inv.sub = Invocation::Sub::Coh;
    if (app.got_subcommand(cmdVerify)) inv.sub = Invocation::Sub::Verify;
    if (app.got_subcommand(cmdSelftest)) inv.sub = Invocation::Sub::Selftest;

    try {
        inv.opts.uSwap = uswapText == "verbatim" ? USwap::Verbatim : USwap::Unswapped;
        inv.opts.muOffset = parseRationalArg(muText);
        switch (inv.sub) {
            case Invocation::Sub::Count:
            case Invocation::Sub::Table:
            case Invocation::Sub::Verify:
                inv.group = parseGroup(groupText);
                inv.nu = parseNu(nuText);
                if (!orbitText.empty()) inv.orbit = parseOrbit(orbitText);
                validateCountArgs(inv, inv.sub == Invocation::Sub::Count);
                break;
            case Invocation::Sub::Paintings:
                inv.shape = parseDiagram(shapeText);
                inv.paintingType = parsePaintingType(typeText);
                if (!sigText.empty()) {
                    auto comma = sigText.find(',');
                    if (comma == std::string::npos)
                        throw UsageError("--signature expects \"p,q\"");
                    inv.signatureFilter = {std::stoi(sigText.substr(0, comma)),
                                           std::stoi(sigText.substr(comma + 1))};
                    if (inv.paintingType != PaintingType::A)
                        throw UsageError("--signature applies to type A only");
                }
                break;
            case Invocation::Sub::Assignments:
                inv.shape = parseDiagram(shapeText);
                inv.content = parseDiagram(contentText);
                if (inv.content.size() != inv.shape.size())
                    throw UsageError("content must have the same total size as the shape");
                break;
            case Invocation::Sub::Coh:
                inv.cohSpec = parseCohSpec(groupText);
                inv.cohMethod = methodText == "oracle" ? CohMethod::Oracle : CohMethod::Strips;
                break;
            case Invocation::Sub::Selftest:
                break;
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return inv;
}

namespace {

void printFormalRepSum(const Invocation& inv, const FormalRepSum& sum, std::ostream& out) {
    if (inv.json) {
        out << toJson(sum).dump() << '\n';
        return;
    }
    for (const auto& [shape, m] : sum.terms())
        out << std::left << std::setw(18) << shape.toString() << m << '\n';
}

int runCount(const Invocation& inv, std::ostream& out) {
    CountResult result = count(*inv.group, inv.nu, *inv.orbit, inv.opts);
    if (inv.json) {
        out << countResultJson(*inv.group, inv.nu, *inv.orbit, result).dump() << '\n';
    } else {
        out << inv.group->toString() << "  orbit " << inv.orbit->toString() << "  count "
            << result.count << '\n';
        for (const auto& term : result.breakdown) {
            out << "  ";
            for (size_t i = 0; i < term.tuple.size(); ++i)
                out << (i ? " x " : "") << term.tuple[i].toString();
            out << "  ->";
            for (long long f : term.factors) out << ' ' << f;
            out << "  = " << term.product << '\n';
        }
    }
    return 0;
}

int runTable(const Invocation& inv, std::ostream& out) {
    auto table = countTable(*inv.group, inv.nu, inv.opts, inv.threads);
    long long total = 0;
    if (inv.json) {
        Json rows = Json::array();
        for (const auto& entry : table) {
            total += entry.result.count;
            if (entry.result.count == 0 && !inv.includeZeros) continue;
            Json row;
            row["orbit"] = toJson(entry.orbit);
            row["count"] = entry.result.count;
            rows.push_back(std::move(row));
        }
        Json j;
        j["group"] = inv.group->toString();
        j["nu"] = toJson(inv.nu);
        j["rows"] = std::move(rows);
        j["total"] = total;
        out << j.dump() << '\n';
    } else {
        for (const auto& entry : table) {
            total += entry.result.count;
            if (entry.result.count == 0 && !inv.includeZeros) continue;
            out << std::left << std::setw(24) << entry.orbit.toString() << entry.result.count
                << '\n';
        }
        out << "total " << total << '\n';
    }
    return 0;
}

int runPaintings(const Invocation& inv, std::ostream& out) {
    auto paintings = enumeratePaintings(inv.shape, inv.paintingType);
    if (inv.signatureFilter) {
        Signature want{inv.signatureFilter->first, inv.signatureFilter->second};
        std::erase_if(paintings, [&](const Painting& p) { return !(signature(p) == want); });
    }
    if (inv.json) {
        Json j = Json::array();
        for (const auto& p : paintings) j.push_back(toJson(p, inv.ascii));
        out << j.dump() << '\n';
    } else {
        for (const auto& p : paintings) {
            for (const auto& row : p.symbols()) {
                for (PaintSymbol s : row)
                    out << (inv.ascii ? std::string(1, paintSymbolChar(s)) : paintSymbolUtf8(s));
                out << '\n';
            }
            out << '\n';
        }
        out << "count " << paintings.size() << '\n';
    }
    return 0;
}

int runAssignments(const Invocation& inv, std::ostream& out) {
    auto assignments = enumerateAssignments(inv.shape, inv.content);
    if (inv.json) {
        Json j = Json::array();
        for (const auto& a : assignments) j.push_back(toJson(a));
        out << j.dump() << '\n';
    } else {
        for (const auto& a : assignments) {
            for (const auto& row : a.labels()) {
                for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
                out << '\n';
            }
            out << '\n';
        }
        out << "count " << assignments.size() << '\n';
    }
    return 0;
}

int runCoh(const Invocation& inv, std::ostream& out) {
    const CohSpec& spec = *inv.cohSpec;
    switch (spec.family) {
        case CohSpec::Family::Glr:
            printFormalRepSum(inv, cohGlr(spec.a, inv.cohMethod), out);
            break;
        case CohSpec::Family::Glh:
            printFormalRepSum(inv, cohGlh(spec.a, inv.cohMethod), out);
            break;
        case CohSpec::Family::U:
            printFormalRepSum(inv, cohU(spec.a, spec.b, inv.cohMethod), out);
            break;
        case CohSpec::Family::UHalf:
            printFormalRepSum(inv, cohUHalf(spec.a, inv.cohMethod), out);
            break;
        case CohSpec::Family::Glc: {
            // Diagonal table: phi(a) x phi(b) occurs iff a == b.
            if (inv.json) {
                Json mult = Json::object();
                for (const auto& d : enumeratePartitions(spec.a))
                    mult[d.toString() + "|" + d.toString()] = 1;
                Json j;
                j["degree"] = spec.a;
                j["mult"] = std::move(mult);
                out << j.dump() << '\n';
            } else {
                for (const auto& d : enumeratePartitions(spec.a))
                    out << std::left << std::setw(24) << (d.toString() + "|" + d.toString()) << 1
                        << '\n';
            }
            break;
        }
    }
    return 0;
}

int runVerify(const Invocation& inv, std::ostream& out, std::ostream& err) {
    VerifyReport report = verifyCounts(*inv.group, inv.nu, inv.opts, inv.threads);
    if (inv.json) {
        Json rows = Json::array();
        for (const auto& row : report.rows) {
            Json r;
            r["orbit"] = toJson(row.orbit);
            r["formula"] = row.formula;
            r["oracle"] = row.oracle;
            r["ok"] = row.ok;
            rows.push_back(std::move(r));
        }
        Json j;
        j["group"] = inv.group->toString();
        j["nu"] = toJson(inv.nu);
        j["ok"] = report.ok;
        j["rows"] = std::move(rows);
        out << j.dump() << '\n';
    } else {
        for (const auto& row : report.rows)
            out << std::left << std::setw(24) << row.orbit.toString() << std::setw(12)
                << row.formula << std::setw(12) << row.oracle << (row.ok ? "ok" : "MISMATCH")
                << '\n';
    }
    if (!report.ok) {
        Json e;
        e["code"] = "verify-mismatch";
        e["message"] = report.mismatchDump;
        err << e.dump() << '\n';
        return 3;
    }
    return 0;
}

int runSelftest(const Invocation& inv, std::ostream& out, std::ostream& err) {
    auto results = runAcceptance(inv.threads);
    bool ok = true;
    for (const auto& r : results) {
        ok &= r.passed;
        out << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.passed) out << "  [" << r.detail << "]";
        out << '\n';
    }
    if (!ok) {
        Json e;
        e["code"] = "verify-mismatch";
        e["message"] = "acceptance criteria failed";
        err << e.dump() << '\n';
        return 3;
    }
    return 0;
}

}  // namespace

int runInvocation(const Invocation& inv, std::ostream& out, std::ostream& err) {
    switch (inv.sub) {
        case Invocation::Sub::Count: return runCount(inv, out);
        case Invocation::Sub::Table: return runTable(inv, out);
        case Invocation::Sub::Paintings: return runPaintings(inv, out);
        case Invocation::Sub::Assignments: return runAssignments(inv, out);
        case Invocation::Sub::Coh: return runCoh(inv, out);
        case Invocation::Sub::Verify: return runVerify(inv, out, err);
        case Invocation::Sub::Selftest: return runSelftest(inv, out, err);
    }
    return 2;
}

int cliMain(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        Invocation inv = parseArgs(args);
        return runInvocation(inv, std::cout, std::cerr);
    } catch (const HelpRequested& h) {
        std::cout << h.text;
        return 0;
    } catch (const UsageError& e) {
        Json j;
        j["code"] = "usage";
        j["message"] = e.what();
        std::cerr << j.dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        Json j;
        j["code"] = "computation";
        j["message"] = e.what();
        std::cerr << j.dump() << '\n';
        return 2;
    }
}

}  // namespace irrcount
