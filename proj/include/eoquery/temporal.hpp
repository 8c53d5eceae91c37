#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eoquery/calendar.hpp"

namespace eoquery {

// ---------------------------------------------------------------------------
// temporal expressions

enum class TemporalCategory {
    explicit_date,       // "2024-07-14", "July 14, 2024"
    named_weekday_past,  // "last Thursday", "this past Tuesday"
    named_weekday_this,  // "this Friday"
    this_week,           // "this week"
    past_week,           // "the past week", "last week"
    last_weekend,        // "last weekend"
    this_past_weekend,   // "this past weekend", "this weekend"
    last_month,          // "last month"
    last_n_days,         // "the last 30 days", "past two weeks"
    last_n_hours,        // "the last 48 hours"
    past_n_months,       // "the past three months", "the past month"
    this_season_named,   // "this Spring", "this past Summer", "last Winter"
    last_season,         // "last season"
    this_year,           // "this year"
    past_year,           // "the past year", "last year"
    yesterday,           // "yesterday"
    since_year,          // "since 2020"
};

inline constexpr std::string_view category_name(TemporalCategory c) {
    switch (c) {
        case TemporalCategory::explicit_date: return "explicit_date";
        case TemporalCategory::named_weekday_past: return "named_weekday_past";
        case TemporalCategory::named_weekday_this: return "named_weekday_this";
        case TemporalCategory::this_week: return "this_week";
        case TemporalCategory::past_week: return "past_week";
        case TemporalCategory::last_weekend: return "last_weekend";
        case TemporalCategory::this_past_weekend: return "this_past_weekend";
        case TemporalCategory::last_month: return "last_month";
        case TemporalCategory::last_n_days: return "last_n_days";
        case TemporalCategory::last_n_hours: return "last_n_hours";
        case TemporalCategory::past_n_months: return "past_n_months";
        case TemporalCategory::this_season_named: return "this_season_named";
        case TemporalCategory::last_season: return "last_season";
        case TemporalCategory::this_year: return "this_year";
        case TemporalCategory::past_year: return "past_year";
        case TemporalCategory::yesterday: return "yesterday";
        case TemporalCategory::since_year: return "since_year";
    }
    return "";
}

// Meteorological seasons: each starts on the first of March, June, September
// or December (northern hemisphere convention, applied uniformly).
enum class Season { winter, spring, summer, autumn };

inline constexpr std::string_view season_name(Season s) {
    switch (s) {
        case Season::winter: return "winter";
        case Season::spring: return "spring";
        case Season::summer: return "summer";
        case Season::autumn: return "autumn";
    }
    return "";
}

inline constexpr int season_start_month(Season s) {
    switch (s) {
        case Season::spring: return 3;
        case Season::summer: return 6;
        case Season::autumn: return 9;
        case Season::winter: return 12;
    }
    return 0;
}

inline constexpr Season season_of_month(int month) {
    if (month >= 3 && month <= 5) return Season::spring;
    if (month >= 6 && month <= 8) return Season::summer;
    if (month >= 9 && month <= 11) return Season::autumn;
    return Season::winter;
}

struct TemporalExpression {
    TemporalCategory category = TemporalCategory::explicit_date;
    CalendarDate date{};       // explicit_date
    int weekday = -1;          // named_weekday_*: 0 = Sunday .. 6 = Saturday
    long count = 0;            // last_n_days / last_n_hours / past_n_months
    int year = 0;              // since_year
    Season season = Season::winter;  // this_season_named
    std::string matched_text;  // matched tokens, lowercased, space-joined

    bool operator==(const TemporalExpression&) const = default;
};

// The date window a temporal expression denotes, resolved against the
// anchor ("today"). `start` is the canonical first day. `alternates` are
// defensible other first days under a different-but-reasonable reading
// (inclusive vs exclusive day counting); they never include `start` and,
// like everything here, never lie in the future.
struct ResolvedWindow {
    CalendarDate start{};
    std::optional<CalendarDate> end;
    std::vector<CalendarDate> alternates;

    bool operator==(const ResolvedWindow&) const = default;
};

// ---------------------------------------------------------------------------
// parsing

namespace detail {

// Tokenizer for temporal scanning: lowercase runs of [a-z0-9-]. Hyphens stay
// inside tokens so ISO dates survive as single tokens.
inline std::vector<std::string> temporal_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (const char c : text) {
        char keep = 0;
        if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-')
            keep = c;
        else if (c >= 'A' && c <= 'Z')
            keep = static_cast<char>(c + 32);
        if (keep) {
            cur += keep;
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty())
        tokens.push_back(std::move(cur));
    return tokens;
}

inline std::optional<int> weekday_from_token(std::string_view t) {
    static constexpr std::string_view names[7] = {"sunday",   "monday", "tuesday", "wednesday",
                                                  "thursday", "friday", "saturday"};
    for (int i = 0; i < 7; ++i)
        if (t == names[i])
            return i;
    return std::nullopt;
}

inline std::optional<Season> season_from_token(std::string_view t) {
    if (t == "spring") return Season::spring;
    if (t == "summer") return Season::summer;
    if (t == "autumn" || t == "fall") return Season::autumn;
    if (t == "winter") return Season::winter;
    return std::nullopt;
}

// Small counts as words or digits ("three", "48").
inline std::optional<long> count_from_token(std::string_view t) {
    static constexpr std::string_view words[12] = {"one", "two",   "three", "four",
                                                   "five", "six",  "seven", "eight",
                                                   "nine", "ten",  "eleven", "twelve"};
    for (long i = 0; i < 12; ++i)
        if (t == words[i])
            return i + 1;
    if (t.empty() || t.size() > 6)
        return std::nullopt;
    long value = 0;
    for (const char c : t) {
        if (c < '0' || c > '9')
            return std::nullopt;
        value = value * 10 + (c - '0');
    }
    return value >= 1 ? std::optional<long>{value} : std::nullopt;
}

inline std::optional<int> four_digit_year(std::string_view t) {
    if (t.size() != 4)
        return std::nullopt;
    int y = 0;
    for (const char c : t) {
        if (c < '0' || c > '9')
            return std::nullopt;
        y = y * 10 + (c - '0');
    }
    return y;
}

// Day token for long-form dates: "4", "04", "4th", "21st", ...
inline std::optional<int> day_of_month_token(std::string_view t) {
    std::size_t digits = 0;
    int d = 0;
    while (digits < t.size() && t[digits] >= '0' && t[digits] <= '9') {
        d = d * 10 + (t[digits] - '0');
        ++digits;
    }
    if (digits == 0 || digits > 2)
        return std::nullopt;
    const std::string_view rest = t.substr(digits);
    if (!rest.empty() && rest != "st" && rest != "nd" && rest != "rd" && rest != "th")
        return std::nullopt;
    return d;
}

// Drop every "today is <date>" clause so the anchor suffix is never mistaken
// for the query's own temporal expression.
inline void drop_anchor_clauses(std::vector<std::string>& tokens) {
    for (std::size_t i = 0; i + 1 < tokens.size();) {
        if (tokens[i] == "today" && tokens[i + 1] == "is") {
            std::size_t len = 0;
            if (i + 2 < tokens.size() && parse_iso(tokens[i + 2]))
                len = 3;
            else if (i + 4 < tokens.size() && month_from_name(tokens[i + 2]) &&
                     day_of_month_token(tokens[i + 3]) && four_digit_year(tokens[i + 4]))
                len = 5;
            if (len) {
                tokens.erase(tokens.begin() + static_cast<long>(i),
                             tokens.begin() + static_cast<long>(i + len));
                continue;
            }
        }
        ++i;
    }
}

inline std::string join_tokens(const std::vector<std::string>& tokens, std::size_t begin,
                               std::size_t count) {
    std::string out;
    for (std::size_t i = begin; i < begin + count; ++i) {
        if (!out.empty())
            out += ' ';
        out += tokens[i];
    }
    return out;
}

}  // namespace detail

// Scan free text for the leftmost recognizable temporal expression. Returns
// nullopt when nothing matches. The "Today is ..." anchor clause is ignored
// by the scan.
inline std::optional<TemporalExpression> parse_temporal(std::string_view text) {
    using namespace detail;
    std::vector<std::string> t = temporal_tokens(text);
    drop_anchor_clauses(t);

    auto make = [&](TemporalCategory cat, std::size_t begin, std::size_t count) {
        TemporalExpression e;
        e.category = cat;
        e.matched_text = join_tokens(t, begin, count);
        return e;
    };

    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& w = t[i];
        auto at = [&](std::size_t k) -> const std::string& {
            static const std::string empty;
            return i + k < n ? t[i + k] : empty;
        };

        // explicit dates
        if (const auto iso = parse_iso(w)) {
            auto e = make(TemporalCategory::explicit_date, i, 1);
            e.date = *iso;
            return e;
        }
        if (const auto month = month_from_name(w)) {
            const auto day = day_of_month_token(at(1));
            const auto year = four_digit_year(at(2));
            if (day && year) {
                const CalendarDate d{*year, *month, *day};
                if (is_valid_date(d)) {
                    auto e = make(TemporalCategory::explicit_date, i, 3);
                    e.date = d;
                    return e;
                }
            }
        }

        if (w == "yesterday")
            return make(TemporalCategory::yesterday, i, 1);

        if (w == "since") {
            if (const auto year = four_digit_year(at(1))) {
                auto e = make(TemporalCategory::since_year, i, 2);
                e.year = *year;
                return e;
            }
        }

        if (w == "this") {
            const bool past = at(1) == "past";
            const std::size_t k = past ? 2 : 1;  // index of the head word
            const std::string& head = at(k);
            if (const auto wd = weekday_from_token(head)) {
                auto e = make(past ? TemporalCategory::named_weekday_past
                                   : TemporalCategory::named_weekday_this,
                              i, k + 1);
                e.weekday = *wd;
                return e;
            }
            if (const auto season = season_from_token(head)) {
                auto e = make(TemporalCategory::this_season_named, i, k + 1);
                e.season = *season;
                return e;
            }
            if (head == "weekend")
                return make(TemporalCategory::this_past_weekend, i, k + 1);
            if (head == "week")
                return make(past ? TemporalCategory::past_week : TemporalCategory::this_week, i,
                            k + 1);
            if (head == "year" && !past)
                return make(TemporalCategory::this_year, i, 2);
            if (head == "year" && past)
                return make(TemporalCategory::past_year, i, 3);
            if (head == "month" && past) {
                auto e = make(TemporalCategory::past_n_months, i, 3);
                e.count = 1;
                return e;
            }
            // "this past <n> <unit>" is unusual; fall through to the "past"
            // token itself on the next iteration.
            continue;
        }

        if (w == "last" || w == "past") {
            const std::string& head = at(1);
            if (const auto wd = weekday_from_token(head)) {
                auto e = make(TemporalCategory::named_weekday_past, i, 2);
                e.weekday = *wd;
                return e;
            }
            if (const auto season = season_from_token(head)) {
                auto e = make(TemporalCategory::this_season_named, i, 2);
                e.season = *season;
                return e;
            }
            if (head == "season")
                return make(TemporalCategory::last_season, i, 2);
            if (head == "weekend")
                return make(w == "last" ? TemporalCategory::last_weekend
                                        : TemporalCategory::this_past_weekend,
                            i, 2);
            if (head == "week")
                return make(TemporalCategory::past_week, i, 2);
            if (head == "month")
                if (w == "last") {
                    return make(TemporalCategory::last_month, i, 2);
                } else {
                    auto e = make(TemporalCategory::past_n_months, i, 2);
                    e.count = 1;
                    return e;
                }
            if (head == "year")
                return make(TemporalCategory::past_year, i, 2);
            if (const auto count = count_from_token(head)) {
                const std::string& unit = at(2);
                if (unit == "day" || unit == "days") {
                    auto e = make(TemporalCategory::last_n_days, i, 3);
                    e.count = *count;
                    return e;
                }
                if (unit == "hour" || unit == "hours") {
                    auto e = make(TemporalCategory::last_n_hours, i, 3);
                    e.count = *count;
                    return e;
                }
                if (unit == "week" || unit == "weeks") {
                    auto e = make(TemporalCategory::last_n_days, i, 3);
                    e.count = *count * 7;
                    return e;
                }
                if (unit == "month" || unit == "months") {
                    auto e = make(TemporalCategory::past_n_months, i, 3);
                    e.count = *count;
                    return e;
                }
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// resolution

namespace detail {

// Most recent date with the given weekday, at or before the anchor.
inline CalendarDate weekday_on_or_before(const CalendarDate& anchor, int wd) {
    return add_days(anchor, -((weekday(anchor) - wd + 7) % 7));
}

// Most recent date with the given weekday, strictly before the anchor.
inline CalendarDate weekday_before(const CalendarDate& anchor, int wd) {
    const CalendarDate d = weekday_on_or_before(anchor, wd);
    return d == anchor ? add_days(d, -7) : d;
}

inline CalendarDate last_day_of_month(int year, int month) {
    return CalendarDate{year, month, days_in_month(year, month)};
}

// First day of the latest occurrence of the season at or before the anchor.
inline CalendarDate season_start_on_or_before(const CalendarDate& anchor, Season s) {
    CalendarDate start{anchor.year, season_start_month(s), 1};
    if (start > anchor)
        start.year -= 1;
    return start;
}

}  // namespace detail

// Deterministic resolution of a temporal expression against the anchor date.
// Guarantees (explicit_date excepted, since the caller supplied that date):
// start <= anchor; end, when present, satisfies start <= end <= anchor;
// alternates are sorted, unique, never equal to start and never in the
// future. Calendar range violations (years outside 1900..2200) throw
// std::out_of_range.
inline ResolvedWindow resolve(const TemporalExpression& expr, const CalendarDate& anchor) {
    using namespace detail;
    if (!is_valid_date(anchor))
        throw std::invalid_argument("resolve: invalid anchor date");
    check_supported(anchor);

    ResolvedWindow win;
    auto add_alternate = [&](const CalendarDate& d) {
        if (d != win.start && d <= anchor)
            win.alternates.push_back(d);
    };

    switch (expr.category) {
        case TemporalCategory::explicit_date:
            win.start = expr.date;
            break;
        case TemporalCategory::named_weekday_past:
            win.start = weekday_before(anchor, expr.weekday);
            break;
        case TemporalCategory::named_weekday_this:
            // "this Friday" said on Friday is that day; said on any other day
            // the upcoming one would be in the future, so fall back to the
            // most recent one.
            win.start = weekday_on_or_before(anchor, expr.weekday);
            break;
        case TemporalCategory::this_week:
            // Week taken to start on Sunday; Monday is the defensible other
            // reading.
            win.start = weekday_on_or_before(anchor, 0);
            add_alternate(weekday_on_or_before(anchor, 1));
            break;
        case TemporalCategory::past_week:
            win.start = add_days(anchor, -7);
            break;
        case TemporalCategory::last_weekend: {
            win.start = weekday_before(anchor, 6);
            const CalendarDate sunday = add_days(win.start, 1);
            win.end = std::min(sunday, anchor);
            break;
        }
        case TemporalCategory::this_past_weekend: {
            win.start = weekday_on_or_before(anchor, 6);
            const CalendarDate sunday = add_days(win.start, 1);
            win.end = std::min(sunday, anchor);
            break;
        }
        case TemporalCategory::last_month: {
            const CalendarDate first = add_months(CalendarDate{anchor.year, anchor.month, 1}, -1);
            win.start = first;
            win.end = last_day_of_month(first.year, first.month);
            break;
        }
        case TemporalCategory::last_n_days:
            // "the last N days" excludes today, so the window holds N full
            // days ending yesterday; counting today instead shifts the start
            // one day later.
            win.start = add_days(anchor, -(expr.count + 1));
            add_alternate(add_days(anchor, -expr.count));
            break;
        case TemporalCategory::last_n_hours: {
            // Ceiling to whole days; the exclusive reading starts one day
            // later.
            const long days = (expr.count + 23) / 24;
            win.start = add_days(anchor, -days);
            add_alternate(add_days(anchor, -(days - 1)));
            break;
        }
        case TemporalCategory::past_n_months:
            win.start = add_months(anchor, -static_cast<int>(expr.count));
            break;
        case TemporalCategory::this_season_named: {
            win.start = season_start_on_or_before(anchor, expr.season);
            const CalendarDate third_month = add_months(win.start, 2);
            const CalendarDate last = last_day_of_month(third_month.year, third_month.month);
            win.end = std::min(last, anchor);
            break;
        }
        case TemporalCategory::last_season: {
            const Season current = season_of_month(anchor.month);
            const CalendarDate current_start = season_start_on_or_before(anchor, current);
            win.start = add_months(current_start, -3);
            break;
        }
        case TemporalCategory::this_year:
            win.start = CalendarDate{anchor.year, 1, 1};
            break;
        case TemporalCategory::past_year:
            win.start = add_years(anchor, -1);
            break;
        case TemporalCategory::yesterday:
            win.start = add_days(anchor, -1);
            break;
        case TemporalCategory::since_year:
            win.start = CalendarDate{expr.year, 1, 1};
            detail::check_supported(win.start);
            if (win.start > anchor)
                throw std::out_of_range("since_year: year is after the anchor");
            win.end = anchor;
            break;
    }

    std::sort(win.alternates.begin(), win.alternates.end());
    win.alternates.erase(std::unique(win.alternates.begin(), win.alternates.end()),
                         win.alternates.end());
    return win;
}

}  // namespace eoquery
