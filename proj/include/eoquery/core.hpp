#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eoquery/calendar.hpp"

namespace eoquery {

// ---------------------------------------------------------------------------
// errors

// Problems in a dataset / fixture file (message carries file name and line).
struct dataset_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad configuration (unknown keys, missing files, inconsistent options).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The model endpoint could not be reached (after retries).
struct transport_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The endpoint answered, but with an error status or a malformed body.
struct backend_error : std::runtime_error {
    backend_error(int status_code, const std::string& message)
        : std::runtime_error(message), status(status_code) {}
    int status = 0;
};

// ---------------------------------------------------------------------------
// event types

enum class EventType { flood, burn_scars, crops };

inline constexpr std::string_view to_string(EventType e) {
    switch (e) {
        case EventType::flood: return "flood";
        case EventType::burn_scars: return "burn_scars";
        case EventType::crops: return "crops";
    }
    return "";
}

// Exact canonical spelling only; fuzzy/normalized matching lives in textsim.
inline std::optional<EventType> event_type_from_string(std::string_view s) {
    if (s == "flood") return EventType::flood;
    if (s == "burn_scars") return EventType::burn_scars;
    if (s == "crops") return EventType::crops;
    return std::nullopt;
}

inline const std::vector<EventType>& all_event_types() {
    static const std::vector<EventType> all{EventType::flood, EventType::burn_scars,
                                            EventType::crops};
    return all;
}

// ---------------------------------------------------------------------------
// date values

// A date answer: one day, a [first, last] range, or an explicit enumeration.
// The shape is decided purely by element count (1 / 2 / 3+) so that a model
// output and a golden answer with the same JSON serialize identically.
struct DateValue {
    enum class Kind { single, range, list };

    Kind kind = Kind::single;
    std::vector<CalendarDate> dates;  // size 1, 2, or >= 3 to match kind

    static DateValue single(const CalendarDate& d) { return DateValue{Kind::single, {d}}; }

    // Shape by length; order is kept exactly as given (model outputs may be
    // descending — that is evidence, not something to repair).
    static DateValue from_dates(std::vector<CalendarDate> ds) {
        if (ds.empty())
            throw std::invalid_argument("date value needs at least one date");
        DateValue v;
        v.dates = std::move(ds);
        v.kind = v.dates.size() == 1 ? Kind::single
                 : v.dates.size() == 2 ? Kind::range
                                       : Kind::list;
        return v;
    }

    // Strict variant for golden data: ranges must be ordered, lists strictly
    // ascending. Throws std::invalid_argument otherwise.
    static DateValue checked(std::vector<CalendarDate> ds) {
        DateValue v = from_dates(std::move(ds));
        if (v.kind == Kind::range && v.dates[0] > v.dates[1])
            throw std::invalid_argument("date range must be ordered first <= last");
        if (v.kind == Kind::list)
            for (std::size_t i = 1; i < v.dates.size(); ++i)
                if (!(v.dates[i - 1] < v.dates[i]))
                    throw std::invalid_argument("date list must be strictly ascending");
        return v;
    }

    const CalendarDate& first() const { return dates.front(); }

    bool operator==(const DateValue&) const = default;
};

// ---------------------------------------------------------------------------
// answers and records

// What a model actually produced, field by field. Fields the model omitted
// are nullopt; fields present but malformed (e.g. a date that is not
// YYYY-MM-DD) are recorded in field_issues under the field name, so "was the
// key there" and "was the value usable" stay separate questions.
struct ExtractedAnswer {
    std::optional<std::string> area;
    std::optional<DateValue> date;
    std::optional<std::string> event_type;  // raw text as produced
    std::optional<std::string> error;
    std::set<std::string> unknown_keys;
    std::map<std::string, std::string> field_issues;

    bool has_field(std::string_view key) const {
        const std::string k{key};
        if (field_issues.count(k))
            return true;
        if (k == "area") return area.has_value();
        if (k == "date") return date.has_value();
        if (k == "event_type") return event_type.has_value();
        if (k == "error") return error.has_value();
        return false;
    }

    bool operator==(const ExtractedAnswer&) const = default;
};

// Reference answer a record is scored against. A record that should make the
// model refuse carries `error` (the expected refusal reason) and may omit the
// other fields.
struct GoldenAnswer {
    std::optional<std::string> area;
    std::optional<DateValue> date;
    std::optional<EventType> event_type;
    std::optional<std::string> error;

    bool expects_error() const { return error.has_value(); }

    bool operator==(const GoldenAnswer&) const = default;
};

struct QueryRecord {
    long long id = 0;
    std::string query;
    std::optional<CalendarDate> anchor;  // the "Today is ..." date, if present
    GoldenAnswer golden;

    bool operator==(const QueryRecord&) const = default;
};

}  // namespace eoquery
