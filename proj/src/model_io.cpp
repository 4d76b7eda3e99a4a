#include "discover/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "discover/error.hpp"

namespace discover {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json pairs_json(const DcrGraph& graph, const Relation& rel) {
    std::vector<std::pair<std::string, std::string>> named;
    for (const auto& [s, t] : rel.pairs()) named.emplace_back(graph.label(s), graph.label(t));
    std::sort(named.begin(), named.end());
    ordered_json arr = ordered_json::array();
    for (auto& [s, t] : named) arr.push_back(ordered_json::array({std::move(s), std::move(t)}));
    return arr;
}

ordered_json labels_json(const DcrGraph& graph, const BitVector& bits) {
    ordered_json arr = ordered_json::array();
    for_each_bit(bits, [&](std::size_t e) { arr.push_back(graph.label(e)); });
    return arr;
}

const json& member(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("model JSON: missing field '") + key + "'");
    return *it;
}

EventId event_of(const DcrGraph& graph, const json& label, const char* field) {
    if (!label.is_string()) throw ParseError(std::string("model JSON: non-string label in '") + field + "'");
    auto id = graph.find(label.get<std::string>());
    if (!id)
        throw ParseError(std::string("model JSON: unknown event '") + label.get<std::string>() + "' in '" +
                         field + "'");
    return *id;
}

template <typename Add>
void read_pairs(const DcrGraph& graph, const json& doc, const char* field, Add&& add) {
    const auto& arr = member(doc, field);
    if (!arr.is_array()) throw ParseError(std::string("model JSON: '") + field + "' must be an array");
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2)
            throw ParseError(std::string("model JSON: '") + field + "' entries must be [source, target]");
        add(event_of(graph, pair[0], field), event_of(graph, pair[1], field));
    }
}

BitVector read_label_set(const DcrGraph& graph, const json& marking, const char* field) {
    const auto& arr = member(marking, field);
    if (!arr.is_array()) throw ParseError(std::string("model JSON: marking '") + field + "' must be an array");
    BitVector bits(graph.event_count());
    for (const auto& label : arr) bits.set(event_of(graph, label, field));
    return bits;
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

}  // namespace

ordered_json to_json(const DcrGraph& graph) {
    ordered_json doc;
    doc["events"] = graph.labels();
    doc["conditionsFor"] = pairs_json(graph, graph.conditions());
    doc["responsesTo"] = pairs_json(graph, graph.responses());
    doc["excludesTo"] = pairs_json(graph, graph.excludes());
    doc["includesTo"] = pairs_json(graph, graph.includes());
    const auto& m = graph.initial_marking();
    doc["initialMarking"] = {{"executed", labels_json(graph, m.executed)},
                             {"pending", labels_json(graph, m.pending)},
                             {"included", labels_json(graph, m.included)}};
    return doc;
}

DcrGraph from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("model JSON: top level must be an object");
    const auto& events = member(doc, "events");
    if (!events.is_array()) throw ParseError("model JSON: 'events' must be an array");
    std::vector<std::string> labels;
    for (const auto& e : events) {
        if (!e.is_string()) throw ParseError("model JSON: event labels must be strings");
        labels.push_back(e.get<std::string>());
    }

    DcrGraph graph(std::move(labels));
    read_pairs(graph, doc, "conditionsFor", [&](EventId s, EventId t) { graph.add_condition(s, t); });
    read_pairs(graph, doc, "responsesTo", [&](EventId s, EventId t) { graph.add_response(s, t); });
    read_pairs(graph, doc, "excludesTo", [&](EventId s, EventId t) { graph.add_exclude(s, t); });
    read_pairs(graph, doc, "includesTo", [&](EventId s, EventId t) { graph.add_include(s, t); });

    const auto& marking = member(doc, "initialMarking");
    if (!marking.is_object()) throw ParseError("model JSON: 'initialMarking' must be an object");
    graph.set_initial_marking({read_label_set(graph, marking, "executed"), read_label_set(graph, marking, "pending"),
                               read_label_set(graph, marking, "included")});
    return graph;
}

std::string to_json_string(const DcrGraph& graph) { return to_json(graph).dump(2) + "\n"; }

DcrGraph from_json_string(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("model JSON: ") + e.what());
    }
    return from_json(doc);
}

DcrGraph read_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open model '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_string(buf.str());
}

void write_model(const DcrGraph& graph, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write model '" + path.string() + "'");
    out << to_json_string(graph);
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::string to_dot(const DcrGraph& graph) {
    std::ostringstream out;
    const auto& m = graph.initial_marking();
    out << "digraph dcr {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=box, style=rounded];\n";
    for (EventId e = 0; e < graph.event_count(); ++e) {
        out << "  e" << e << " [label=" << dot_quote(graph.label(e));
        if (!m.included.test(e)) out << ", style=\"rounded,dashed\"";
        if (m.pending.test(e)) out << ", peripheries=2";
        if (m.executed.test(e)) out << ", color=green4";
        out << "];\n";
    }
    auto edges = [&](const Relation& rel, const char* attrs) {
        for (const auto& [s, t] : rel.pairs()) out << "  e" << s << " -> e" << t << " [" << attrs << "];\n";
    };
    edges(graph.conditions(), "color=orange, arrowhead=dotnormal, label=\"cond\"");
    edges(graph.responses(), "color=blue, arrowtail=dot, dir=both, label=\"resp\"");
    edges(graph.includes(), "color=green4, label=\"+\"");
    edges(graph.excludes(), "color=red, style=dashed, label=\"%\"");
    out << "}\n";
    return out.str();
}

}  // namespace discover
