#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "eoquery/answer_codec.hpp"
#include "eoquery/core.hpp"
#include "eoquery/temporal.hpp"

namespace eoquery {

// ---------------------------------------------------------------------------
// anchor clause ("Today is June 4, 2024.")

namespace detail {

struct AnchorProbe {
    enum class Status { none, valid, malformed };
    Status status = Status::none;
    CalendarDate date{};
};

// Look at the last "Today is ..." clause in the text.
inline AnchorProbe probe_anchor(std::string_view query) {
    static constexpr std::string_view marker = "Today is ";
    const std::size_t pos = query.rfind(marker);
    if (pos == std::string_view::npos)
        return {};
    std::size_t begin = pos + marker.size();
    std::size_t end = query.find('.', begin);
    // an ISO date's dashes contain no '.', and a long date's only '.' is the
    // final full stop, so the first '.' terminates the clause
    if (end == std::string_view::npos)
        end = query.size();
    std::string_view body = query.substr(begin, end - begin);
    while (!body.empty() && body.front() == ' ')
        body.remove_prefix(1);
    while (!body.empty() && body.back() == ' ')
        body.remove_suffix(1);
    AnchorProbe probe;
    if (const auto d = parse_long(body)) {
        probe.status = AnchorProbe::Status::valid;
        probe.date = *d;
    } else if (const auto iso = parse_iso(body)) {
        probe.status = AnchorProbe::Status::valid;
        probe.date = *iso;
    } else {
        probe.status = AnchorProbe::Status::malformed;
    }
    return probe;
}

}  // namespace detail

// The anchor date stated by the query's "Today is ..." clause. No clause at
// all -> nullopt; a clause whose date cannot be read -> std::invalid_argument
// (silently ignoring it would misdate every relative expression).
inline std::optional<CalendarDate> extract_anchor(std::string_view query) {
    const auto probe = detail::probe_anchor(query);
    switch (probe.status) {
        case detail::AnchorProbe::Status::none: return std::nullopt;
        case detail::AnchorProbe::Status::valid: return probe.date;
        case detail::AnchorProbe::Status::malformed: break;
    }
    throw std::invalid_argument("unreadable 'Today is ...' clause in query");
}

// Append "Today is <Month D, YYYY>." unless the query already carries a
// readable anchor clause (idempotent in that case).
inline std::string augment_with_anchor(std::string_view query, const CalendarDate& anchor) {
    if (detail::probe_anchor(query).status == detail::AnchorProbe::Status::valid)
        return std::string{query};
    std::string out{query};
    while (!out.empty() && out.back() == ' ')
        out.pop_back();
    if (!out.empty())
        out += ' ';
    out += "Today is " + format_long(anchor) + ".";
    return out;
}

// ---------------------------------------------------------------------------
// dataset records (JSONL, one record per line)

namespace detail {

[[noreturn]] inline void record_fail(const std::string& where, std::size_t line,
                                     const std::string& what) {
    throw dataset_error(where + ":" + std::to_string(line) + ": " + what);
}

inline GoldenAnswer read_golden(const nlohmann::json& obj, const std::string& where,
                                std::size_t line) {
    GoldenAnswer golden;
    for (const auto& [key, value] : obj.items()) {
        if (key == "area") {
            if (!value.is_string())
                record_fail(where, line, "answer.area must be a string");
            golden.area = value.get<std::string>();
        } else if (key == "event_type") {
            if (!value.is_string())
                record_fail(where, line, "answer.event_type must be a string");
            const auto event = event_type_from_string(value.get<std::string>());
            if (!event)
                record_fail(where, line,
                            "answer.event_type must be one of flood, burn_scars, crops; got '" +
                                value.get<std::string>() + "'");
            golden.event_type = *event;
        } else if (key == "error") {
            if (!value.is_string())
                record_fail(where, line, "answer.error must be a string");
            if (!value.get<std::string>().empty())
                golden.error = value.get<std::string>();
        } else if (key == "date") {
            auto read_one = [&](const nlohmann::json& v) {
                if (!v.is_string())
                    record_fail(where, line, "answer.date entries must be strings");
                const auto d = parse_iso(v.get<std::string>());
                if (!d)
                    record_fail(where, line,
                                "answer.date must be YYYY-MM-DD; got '" + v.get<std::string>() +
                                    "'");
                return *d;
            };
            std::vector<CalendarDate> dates;
            if (value.is_string()) {
                dates.push_back(read_one(value));
            } else if (value.is_array() && !value.empty()) {
                for (const auto& v : value)
                    dates.push_back(read_one(v));
            } else {
                record_fail(where, line, "answer.date must be a string or a non-empty array");
            }
            try {
                golden.date = DateValue::checked(std::move(dates));
            } catch (const std::invalid_argument& e) {
                record_fail(where, line, std::string{"answer.date: "} + e.what());
            }
        } else {
            record_fail(where, line, "unknown key in answer: '" + key + "'");
        }
    }
    const bool complete = golden.area && golden.date && golden.event_type;
    if (!complete && !golden.expects_error())
        record_fail(where, line, "answer must be complete (area, date, event_type) or carry error");
    return golden;
}

}  // namespace detail

// Golden answers serialize exactly like model answers so a golden echo is
// byte-comparable.
inline nlohmann::json golden_to_json(const GoldenAnswer& golden) {
    nlohmann::json obj = nlohmann::json::object();
    if (golden.area)
        obj["area"] = *golden.area;
    if (golden.date)
        obj["date"] = date_to_json(*golden.date);
    if (golden.event_type)
        obj["event_type"] = std::string{to_string(*golden.event_type)};
    if (golden.error)
        obj["error"] = *golden.error;
    return obj;
}

inline nlohmann::json record_to_json(const QueryRecord& record) {
    nlohmann::json obj = nlohmann::json::object();
    obj["id"] = record.id;
    obj["query"] = record.query;
    obj["answer"] = golden_to_json(record.golden);
    return obj;
}

inline std::string serialize_record(const QueryRecord& record) {
    return record_to_json(record).dump();
}

// Parse a JSONL dataset. `where` names the stream in error messages. Every
// violation is a dataset_error pinpointing the line:
//   - ids must be integers, unique across the file;
//   - the golden answer must be complete or carry an expected error;
//   - golden dates must be real calendar dates, ordered, and not after the
//     record's anchor;
//   - a record whose query holds a relative temporal expression must state
//     its anchor, otherwise the expression is unresolvable.
inline std::vector<QueryRecord> parse_dataset(std::istream& in, const std::string& where) {
    using detail::record_fail;
    std::vector<QueryRecord> records;
    std::set<long long> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        const nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
        if (doc.is_discarded() || !doc.is_object())
            record_fail(where, line_no, "not a JSON object");

        QueryRecord record;
        bool have_id = false, have_query = false, have_answer = false;
        for (const auto& [key, value] : doc.items()) {
            if (key == "id") {
                if (!value.is_number_integer())
                    record_fail(where, line_no, "id must be an integer");
                record.id = value.get<long long>();
                have_id = true;
            } else if (key == "query") {
                if (!value.is_string())
                    record_fail(where, line_no, "query must be a string");
                record.query = value.get<std::string>();
                have_query = true;
            } else if (key == "answer") {
                if (!value.is_object())
                    record_fail(where, line_no, "answer must be an object");
                record.golden = detail::read_golden(value, where, line_no);
                have_answer = true;
            } else {
                record_fail(where, line_no, "unknown key: '" + key + "'");
            }
        }
        if (!have_id)
            record_fail(where, line_no, "missing id");
        if (!have_query || record.query.empty())
            record_fail(where, line_no, "missing or empty query");
        if (!have_answer)
            record_fail(where, line_no, "missing answer");
        if (!seen_ids.insert(record.id).second)
            record_fail(where, line_no, "duplicate id " + std::to_string(record.id));

        try {
            record.anchor = extract_anchor(record.query);
        } catch (const std::invalid_argument& e) {
            record_fail(where, line_no, e.what());
        }
        if (record.anchor && record.golden.date) {
            for (const auto& d : record.golden.date->dates)
                if (d > *record.anchor)
                    record_fail(where, line_no,
                                "golden date " + to_iso(d) + " is after the anchor " +
                                    to_iso(*record.anchor));
        }
        if (!record.anchor) {
            const auto expr = parse_temporal(record.query);
            if (expr && expr->category != TemporalCategory::explicit_date)
                record_fail(where, line_no,
                            "relative expression '" + expr->matched_text +
                                "' needs a 'Today is ...' anchor");
        }
        records.push_back(std::move(record));
    }
    return records;
}

inline std::vector<QueryRecord> load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw dataset_error("cannot open dataset: " + path);
    return parse_dataset(in, path);
}

}  // namespace eoquery
