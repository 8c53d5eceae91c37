#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "eoquery/core.hpp"

namespace eoquery {

// Half-open byte range [begin, end) of a JSON object inside raw model text.
struct JsonSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

namespace detail {

// Starting at `from` (which must point at '{'), find the matching '}' while
// honouring strings and escapes. Returns one past the closing brace, or
// nullopt if the text ends first.
inline std::optional<std::size_t> balanced_end(std::string_view text, std::size_t from) {
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = from; i < text.size(); ++i) {
        const char c = text[i];
        if (in_string) {
            if (escaped)
                escaped = false;
            else if (c == '\\')
                escaped = true;
            else if (c == '"')
                in_string = false;
            continue;
        }
        if (c == '"')
            in_string = true;
        else if (c == '{')
            ++depth;
        else if (c == '}') {
            --depth;
            if (depth == 0)
                return i + 1;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// First parseable JSON object embedded in free-form model output. Scans left
// to right; a balanced {...} that fails to parse (e.g. a decoy inside prose)
// is skipped and the scan resumes one character later, so a later valid
// object is still found.
inline std::optional<JsonSpan> extract_json_span(std::string_view raw) {
    std::size_t i = 0;
    while ((i = raw.find('{', i)) != std::string_view::npos) {
        if (const auto end = detail::balanced_end(raw, i)) {
            const std::string_view body = raw.substr(i, *end - i);
            const nlohmann::json parsed = nlohmann::json::parse(body, nullptr, false);
            if (!parsed.is_discarded() && parsed.is_object())
                return JsonSpan{i, *end};
        }
        ++i;
    }
    return std::nullopt;
}

inline std::optional<std::string> extract_json_substring(std::string_view raw) {
    if (const auto span = extract_json_span(raw))
        return std::string{raw.substr(span->begin, span->end - span->begin)};
    return std::nullopt;
}

namespace detail {

// Lenient date-field reader. Malformed shapes/elements yield nullopt plus a
// reason; element order is preserved as produced.
inline std::optional<DateValue> read_date_field(const nlohmann::json& value,
                                                std::string& issue) {
    auto read_one = [&](const nlohmann::json& v) -> std::optional<CalendarDate> {
        if (!v.is_string()) {
            issue = "date entries must be strings";
            return std::nullopt;
        }
        const auto d = parse_iso(v.get<std::string>());
        if (!d)
            issue = "not a YYYY-MM-DD date: " + v.get<std::string>();
        return d;
    };
    if (value.is_string()) {
        if (const auto d = read_one(value))
            return DateValue::single(*d);
        return std::nullopt;
    }
    if (value.is_array()) {
        if (value.empty()) {
            issue = "date array is empty";
            return std::nullopt;
        }
        std::vector<CalendarDate> dates;
        for (const auto& v : value) {
            const auto d = read_one(v);
            if (!d)
                return std::nullopt;
            dates.push_back(*d);
        }
        return DateValue::from_dates(std::move(dates));
    }
    issue = "date must be a string or an array of strings";
    return std::nullopt;
}

}  // namespace detail

// Field-by-field reading of a model answer object. Never throws for any JSON
// object: unusable values land in field_issues, unexpected keys in
// unknown_keys, and scoring decides what that means.
inline ExtractedAnswer parse_answer(const nlohmann::json& obj) {
    ExtractedAnswer ans;
    for (const auto& [key, value] : obj.items()) {
        if (key == "area" || key == "event_type" || key == "error") {
            if (!value.is_string()) {
                ans.field_issues[key] = key + " must be a string";
                continue;
            }
            auto text = value.get<std::string>();
            if (key == "area")
                ans.area = std::move(text);
            else if (key == "event_type")
                ans.event_type = std::move(text);
            else
                ans.error = std::move(text);
        } else if (key == "date") {
            std::string issue;
            if (auto date = detail::read_date_field(value, issue))
                ans.date = std::move(*date);
            else
                ans.field_issues[key] = issue;
        } else {
            ans.unknown_keys.insert(key);
        }
    }
    // An empty error string is the usual "no error" idiom, not a refusal.
    if (ans.error && ans.error->empty())
        ans.error.reset();
    return ans;
}

inline ExtractedAnswer parse_answer(std::string_view json_text) {
    const nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw std::invalid_argument("parse_answer requires a JSON object");
    return parse_answer(doc);
}

inline nlohmann::json date_to_json(const DateValue& date) {
    if (date.kind == DateValue::Kind::single)
        return to_iso(date.first());
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : date.dates)
        arr.push_back(to_iso(d));
    return arr;
}

// Canonical serialization of the recognized fields (unknown keys and issue
// notes are deliberately dropped).
inline nlohmann::json answer_to_json(const ExtractedAnswer& ans) {
    nlohmann::json obj = nlohmann::json::object();
    if (ans.area)
        obj["area"] = *ans.area;
    if (ans.date)
        obj["date"] = date_to_json(*ans.date);
    if (ans.event_type)
        obj["event_type"] = *ans.event_type;
    if (ans.error)
        obj["error"] = *ans.error;
    return obj;
}

inline std::string serialize_answer(const ExtractedAnswer& ans) {
    return answer_to_json(ans).dump();
}

}  // namespace eoquery
