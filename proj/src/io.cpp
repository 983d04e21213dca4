#include "ddf/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ddf {

using nlohmann::json;

std::string to_edge_list(const LabeledGraph& g) {
    std::ostringstream os;
    os << "n " << g.n() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

LabeledGraph parse_edge_list(std::istream& in) {
    std::string marker;
    int n = 0;
    if (!(in >> marker) || marker != "n" || !(in >> n))
        throw std::invalid_argument("edge list must start with \"n <vertex count>\"");
    std::vector<Edge> edges;
    int u, v;
    while (in >> u >> v) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

LabeledGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

json graph_json(const LabeledGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"n", g.n()}, {"edges", edges}};
}

LabeledGraph graph_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return make_graph(n, edges);
}

std::string family_jsonl(const Family& fam) {
    std::ostringstream os;
    json header{{"kind", "family"},
                {"n", fam.n},
                {"predicate", fam.predicate.to_string()},
                {"universe", fam.universe_tag},
                {"size", fam.members.size()}};
    os << header.dump() << "\n";
    for (const auto& m : fam.members) os << graph_json(m).dump() << "\n";
    return os.str();
}

Family family_from_jsonl(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty family stream");
    json header = json::parse(line);
    if (header.value("kind", "") != "family")
        throw std::invalid_argument("missing family header record");
    Family fam;
    fam.n = header.at("n").get<int>();
    fam.predicate = parse_predicate(header.at("predicate").get<std::string>());
    fam.universe_tag = header.at("universe").get<std::string>();
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        fam.members.push_back(graph_from_json(json::parse(line)));
    }
    if (fam.members.size() != header.at("size").get<std::size_t>())
        throw std::invalid_argument("family size disagrees with header");
    return fam;
}

json solve_report_json(const SolveReport& report, bool include_timings) {
    json witness;
    witness["n"] = report.witness.n;
    witness["predicate"] = report.witness.predicate.to_string();
    witness["universe"] = report.witness.universe_tag;
    witness["size"] = report.witness.members.size();
    json members = json::array();
    for (const auto& m : report.witness.members) members.push_back(graph_json(m));
    witness["members"] = members;
    json j{{"kind", "solve-report"},
           {"value", report.value.str()},
           {"status", report.status_name()},
           {"nodes_explored", report.nodes_explored},
           {"witness", witness}};
    if (include_timings) j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

json composition_report_json(const CompositionClassReport& report, bool include_timings) {
    json j{{"kind", "composition-class-report"},
           {"m", report.m},
           {"composition", report.counts},
           {"class_size", report.class_size.str()},
           {"value", report.value.str()},
           {"status", report.status == SolveReport::Status::Exact ? "exact" : "lower-bound"},
           {"sequences", report.sequences},
           {"witness", report.witness},
           {"rate_lo", rat_str(report.rate.lo)},
           {"rate_hi", rat_str(report.rate.hi)},
           {"nodes_explored", report.nodes_explored}};
    if (include_timings) j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        // trim
        while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.front())))
            cell.erase(cell.begin());
        while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.back())))
            cell.pop_back();
        cells.push_back(cell);
    }
    return cells;
}

}  // namespace

Channel parse_channel_csv(std::istream& in) {
    Channel ch;
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty channel file");
    auto header = split_csv_line(line);
    if (header.size() < 2) throw std::invalid_argument("channel header needs output symbols");
    ch.outputs.assign(header.begin() + 1, header.end());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw std::invalid_argument("channel row \"" + line + "\" has " +
                                        std::to_string(cells.size()) + " cells, expected " +
                                        std::to_string(header.size()));
        ch.inputs.push_back(cells[0]);
        for (std::size_t i = 1; i < cells.size(); ++i) ch.w.push_back(parse_exact_number(cells[i]));
    }
    ch.validate();
    return ch;
}

Channel parse_channel_csv(const std::string& text) {
    std::istringstream in(text);
    return parse_channel_csv(in);
}

}  // namespace ddf
