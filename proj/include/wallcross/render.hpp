#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wallcross/error.hpp"
#include "wallcross/farey.hpp"
#include "wallcross/partition.hpp"
#include "wallcross/rational.hpp"
#include "wallcross/trajectory.hpp"
#include "wallcross/verify.hpp"

// Output side: trajectories and verdicts rendered as markdown tables (the
// human view: consecutive identical partitions grouped, integer endpoints),
// as dense CSV, or as JSON.  The CSV and JSON forms parse back losslessly,
// so emitted bytes are stable under a parse/render round trip.

namespace wallcross {

enum class OutputFormat { markdown, csv, json };

inline OutputFormat parse_format(const std::string& text) {
    if (text == "markdown") return OutputFormat::markdown;
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw input_error("unknown format: " + text);
}

// Markdown shows whole endpoints as integers ("[0, 1/7]"); machine formats
// keep the uniform a/b spelling.
inline std::string markdown_fraction(const Fraction& f) {
    if (f.den == 1) return std::to_string(f.num);
    return format_fraction(f);
}

inline std::string markdown_interval(const FareyInterval& cell) {
    return "[" + markdown_fraction(cell.lo) + ", " + markdown_fraction(cell.hi) + "]";
}

namespace detail {

inline std::string show_d(const std::optional<int>& d) {
    return d ? std::to_string(*d) : std::string("-");
}

// Always quoted: partition texts contain commas.
inline std::string csv_quote(const std::string& text) {
    return "\"" + text + "\"";
}

}  // namespace detail

//----------------------------------------------------------------------------
// trajectories

inline std::string render_trajectory_markdown(const Trajectory& t) {
    std::ostringstream out;
    out << "| Interval | Partition | D |\n";
    out << "| --- | --- | --- |\n";
    std::size_t i = 0;
    while (i < t.entries.size()) {
        std::size_t j = i;
        while (j + 1 < t.entries.size() &&
               t.entries[j + 1].partition == t.entries[i].partition)
            ++j;
        FareyInterval span{t.entries[i].interval.lo, t.entries[j].interval.hi};
        std::string ds;
        for (std::size_t k = i; k <= j; ++k) {
            if (k > i) ds += ", ";
            ds += detail::show_d(t.entries[k].d);
        }
        out << "| " << markdown_interval(span) << " | " << format_partition(t.entries[i].partition)
            << " | " << ds << " |\n";
        i = j + 1;
    }
    return out.str();
}

inline std::string render_trajectory_csv(const Trajectory& t) {
    std::ostringstream out;
    out << "lo,hi,partition,d\n";
    for (const TrajectoryEntry& e : t.entries)
        out << format_fraction(e.interval.lo) << "," << format_fraction(e.interval.hi) << ","
            << detail::csv_quote(format_partition(e.partition)) << "," << detail::show_d(e.d)
            << "\n";
    return out.str();
}

inline nlohmann::ordered_json trajectory_json(const Trajectory& t) {
    nlohmann::ordered_json j;
    j["n"] = t.n;
    j["start"] = t.start.parts();
    j["entries"] = nlohmann::ordered_json::array();
    for (const TrajectoryEntry& e : t.entries) {
        nlohmann::ordered_json cell;
        cell["lo"] = format_fraction(e.interval.lo);
        cell["hi"] = format_fraction(e.interval.hi);
        cell["partition"] = e.partition.parts();
        if (e.d)
            cell["d"] = *e.d;
        else
            cell["d"] = nullptr;
        j["entries"].push_back(std::move(cell));
    }
    return j;
}

inline Trajectory trajectory_from_json(const nlohmann::ordered_json& j) {
    try {
        Trajectory t;
        t.n = j.at("n").get<int>();
        t.start = Partition(j.at("start").get<std::vector<int>>());
        for (const auto& cell : j.at("entries")) {
            TrajectoryEntry e;
            e.interval.lo = parse_fraction(cell.at("lo").get<std::string>());
            e.interval.hi = parse_fraction(cell.at("hi").get<std::string>());
            e.partition = Partition(cell.at("partition").get<std::vector<int>>());
            if (!cell.at("d").is_null()) e.d = cell.at("d").get<int>();
            t.entries.push_back(std::move(e));
        }
        return t;
    } catch (const nlohmann::json::exception& ex) {
        throw input_error(std::string("malformed trajectory json: ") + ex.what());
    }
}

inline Trajectory trajectory_from_json_text(const std::string& text) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed trajectory json");
    return trajectory_from_json(j);
}

// CSV carries no explicit n/start, but the first row is always the identity
// interval, so both are recovered from it.
inline Trajectory trajectory_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "lo,hi,partition,d")
        throw input_error("malformed trajectory csv: missing header");
    Trajectory t;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto c1 = line.find(',');
        auto q1 = line.find('"');
        auto q2 = line.rfind('"');
        if (c1 == std::string::npos || q1 == std::string::npos || q2 <= q1 ||
            q2 + 2 > line.size() || line[q2 + 1] != ',')
            throw input_error("malformed trajectory csv row: " + line);
        std::string lo = line.substr(0, c1);
        std::string hi = line.substr(c1 + 1, q1 - c1 - 2);
        std::string partition = line.substr(q1 + 1, q2 - q1 - 1);
        std::string d = line.substr(q2 + 2);
        TrajectoryEntry e;
        e.interval.lo = parse_fraction(lo);
        e.interval.hi = parse_fraction(hi);
        e.partition = parse_partition(partition);
        if (d != "-") {
            try {
                e.d = std::stoi(d);
            } catch (const std::exception&) {
                throw input_error("malformed trajectory csv d value: " + d);
            }
        }
        t.entries.push_back(std::move(e));
    }
    if (t.entries.empty()) throw input_error("malformed trajectory csv: no rows");
    t.start = t.entries.front().partition;
    t.n = t.start.size();
    return t;
}

inline std::string render_trajectory(const Trajectory& t, OutputFormat format) {
    switch (format) {
        case OutputFormat::markdown: return render_trajectory_markdown(t);
        case OutputFormat::csv: return render_trajectory_csv(t);
        case OutputFormat::json: return trajectory_json(t).dump(2) + "\n";
    }
    throw internal_error("unhandled output format");
}

//----------------------------------------------------------------------------
// verdicts

inline nlohmann::ordered_json verdict_json(const Verdict& v) {
    nlohmann::ordered_json j;
    j["claim"] = v.claim;
    j["n"] = v.n_checked;
    j["holds"] = v.holds;
    j["counterexamples"] = nlohmann::ordered_json::array();
    for (const Counterexample& c : v.counterexamples) {
        nlohmann::ordered_json item;
        item["partition"] = c.partition.parts();
        item["where"] = c.where;
        item["detail"] = c.detail;
        j["counterexamples"].push_back(std::move(item));
    }
    j["elapsed_ms"] = v.elapsed_ms;
    return j;
}

inline std::string render_verdict_markdown(const Verdict& v) {
    std::ostringstream out;
    std::string ns;
    for (std::size_t i = 0; i < v.n_checked.size(); ++i) {
        if (i > 0) ns += ",";
        ns += std::to_string(v.n_checked[i]);
    }
    out << "## " << v.claim << "\n\n";
    out << "- n checked: " << ns << "\n";
    out << "- holds: " << (v.holds ? "yes" : "no") << "\n";
    out << "- elapsed: " << v.elapsed_ms << " ms\n";
    if (!v.counterexamples.empty()) {
        out << "\n| Partition | Where | Detail |\n| --- | --- | --- |\n";
        for (const Counterexample& c : v.counterexamples)
            out << "| " << format_partition(c.partition) << " | " << c.where << " | " << c.detail
                << " |\n";
    }
    if (!v.notes.empty()) {
        out << "\n";
        for (const std::string& note : v.notes) out << "- note: " << note << "\n";
    }
    return out.str();
}

inline std::string render_verdicts(const std::vector<Verdict>& vs, OutputFormat format) {
    switch (format) {
        case OutputFormat::markdown: {
            std::string out;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                if (i > 0) out += "\n";
                out += render_verdict_markdown(vs[i]);
            }
            return out;
        }
        case OutputFormat::csv: {
            std::ostringstream out;
            out << "claim,n,holds,counterexamples,elapsed_ms\n";
            for (const Verdict& v : vs) {
                std::string ns;
                for (std::size_t i = 0; i < v.n_checked.size(); ++i) {
                    if (i > 0) ns += " ";
                    ns += std::to_string(v.n_checked[i]);
                }
                out << v.claim << "," << detail::csv_quote(ns) << ","
                    << (v.holds ? "true" : "false") << "," << v.counterexamples.size() << ","
                    << v.elapsed_ms << "\n";
            }
            return out.str();
        }
        case OutputFormat::json: {
            if (vs.size() == 1) return verdict_json(vs.front()).dump(2) + "\n";
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const Verdict& v : vs) arr.push_back(verdict_json(v));
            return arr.dump(2) + "\n";
        }
    }
    throw internal_error("unhandled output format");
}

}  // namespace wallcross
