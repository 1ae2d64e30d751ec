#include "irrcount/json_io.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace irrcount {

Json toJson(const YoungDiagram& d) {
    Json j = Json::array();
    for (int r : d.rows()) j.push_back(r);
    return j;
}

YoungDiagram diagramFromJson(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("diagram JSON must be an array");
    std::vector<int> rows;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument("diagram entries must be integers");
        rows.push_back(v.get<int>());
    }
    return YoungDiagram(std::move(rows));
}

namespace {

PaintSymbol symbolFromString(const std::string& s) {
    if (s == "•" || s == "*") return PaintSymbol::Bullet;
    if (s == "s") return PaintSymbol::S;
    if (s == "r") return PaintSymbol::R;
    if (s == "c") return PaintSymbol::C;
    if (s == "d") return PaintSymbol::D;
    throw std::invalid_argument("unknown painting symbol: " + s);
}

}  // namespace

Json toJson(const Painting& p, bool ascii) {
    Json rows = Json::array();
    for (const auto& row : p.symbols()) {
        Json jrow = Json::array();
        for (PaintSymbol s : row)
            jrow.push_back(ascii ? std::string(1, paintSymbolChar(s)) : paintSymbolUtf8(s));
        rows.push_back(std::move(jrow));
    }
    Json j;
    j["shape"] = toJson(p.shape());
    j["rows"] = std::move(rows);
    return j;
}

Painting paintingFromJson(const Json& j) {
    YoungDiagram shape = diagramFromJson(j.at("shape"));
    SymbolGrid grid;
    for (const auto& jrow : j.at("rows")) {
        std::vector<PaintSymbol> row;
        for (const auto& v : jrow) row.push_back(symbolFromString(v.get<std::string>()));
        grid.push_back(std::move(row));
    }
    return Painting(std::move(shape), std::move(grid));
}

Json toJson(const Assignment& a) {
    Json rows = Json::array();
    for (const auto& row : a.labels()) {
        Json jrow = Json::array();
        for (int v : row) jrow.push_back(v);
        rows.push_back(std::move(jrow));
    }
    Json j;
    j["shape"] = toJson(a.shape());
    j["rows"] = std::move(rows);
    return j;
}

Assignment assignmentFromJson(const Json& j) {
    YoungDiagram shape = diagramFromJson(j.at("shape"));
    LabelGrid grid;
    std::map<int, int> counts;
    for (const auto& jrow : j.at("rows")) {
        std::vector<int> row;
        for (const auto& v : jrow) {
            row.push_back(v.get<int>());
            ++counts[row.back()];
        }
        grid.push_back(std::move(row));
    }
    std::vector<int> content;
    for (auto& [label, c] : counts) content.push_back(c);
    std::sort(content.begin(), content.end(), std::greater<int>());
    return Assignment(std::move(shape), std::move(grid), YoungDiagram(std::move(content)));
}

Json toJson(const ClassFunction& f) {
    Json values = Json::object();
    const auto& parts = enumeratePartitions(f.degree());
    for (size_t i = 0; i < parts.size(); ++i)
        values[parts[i].toString()] = f.value(static_cast<int>(i)).str();
    Json j;
    j["degree"] = f.degree();
    j["values"] = std::move(values);
    return j;
}

Json toJson(const FormalRepSum& s) {
    Json mult = Json::object();
    for (const auto& [shape, m] : s.terms()) mult[shape.toString()] = m;
    Json j;
    j["degree"] = s.degree();
    j["mult"] = std::move(mult);
    return j;
}

Json toJson(const OrbitSpec& orbit) {
    if (orbit.second) {
        Json j = Json::array();
        j.push_back(toJson(orbit.first));
        j.push_back(toJson(*orbit.second));
        return j;
    }
    return toJson(orbit.first);
}

Json toJson(const NuSpec& nu) {
    auto side = [](const std::vector<Coordinate>& coords) {
        Json j = Json::array();
        for (const auto& c : coords) j.push_back(formatCoordinate(c));
        return j;
    };
    if (nu.right.empty()) return side(nu.left);
    Json j;
    j["left"] = side(nu.left);
    j["right"] = side(nu.right);
    return j;
}

Json toJson(const BreakdownTerm& term) {
    Json tuple = Json::array();
    for (const auto& d : term.tuple) tuple.push_back(toJson(d));
    Json factors = Json::array();
    for (long long f : term.factors) factors.push_back(f);
    Json j;
    j["tuple"] = std::move(tuple);
    j["factors"] = std::move(factors);
    j["product"] = term.product;
    return j;
}

Json countResultJson(const GroupSpec& group, const NuSpec& nu, const OrbitSpec& orbit,
                     const CountResult& result, bool withBreakdown) {
    Json j;
    j["group"] = group.toString();
    j["nu"] = toJson(nu);
    j["orbit"] = toJson(orbit);
    j["count"] = result.count;
    if (withBreakdown) {
        Json terms = Json::array();
        for (const auto& t : result.breakdown) terms.push_back(toJson(t));
        j["breakdown"] = std::move(terms);
    }
    return j;
}

}  // namespace irrcount
