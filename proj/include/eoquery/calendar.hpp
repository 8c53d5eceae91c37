#pragma once

#include <array>
#include <compare>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eoquery {

// Proleptic Gregorian calendar date. Comparison is chronological because the
// fields are ordered year, month, day.
struct CalendarDate {
    int year = 0;
    int month = 0;  // 1..12
    int day = 0;    // 1..31

    auto operator<=>(const CalendarDate&) const = default;
};

// Date arithmetic is supported for years 1900..2200; results outside that
// window throw std::out_of_range.
inline constexpr int k_min_year = 1900;
inline constexpr int k_max_year = 2200;

inline constexpr bool is_leap_year(int year) {
    return year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
}

inline constexpr int days_in_month(int year, int month) {
    constexpr std::array<int, 12> lengths{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12)
        return 0;
    if (month == 2 && is_leap_year(year))
        return 29;
    return lengths[static_cast<std::size_t>(month - 1)];
}

inline constexpr bool is_valid_date(const CalendarDate& d) {
    return d.month >= 1 && d.month <= 12 && d.day >= 1 && d.day <= days_in_month(d.year, d.month);
}

// Days since 1970-01-01 (Howard Hinnant's civil-days algorithm).
inline constexpr long day_number(const CalendarDate& d) {
    int y = d.year - (d.month <= 2 ? 1 : 0);
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned mp = static_cast<unsigned>(d.month + (d.month > 2 ? -3 : 9));
    const unsigned doy = (153 * mp + 2) / 5 + static_cast<unsigned>(d.day) - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return static_cast<long>(era) * 146097 + static_cast<long>(doe) - 719468;
}

inline constexpr CalendarDate date_from_day_number(long z) {
    z += 719468;
    const long era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const long y = static_cast<long>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned day = doy - (153 * mp + 2) / 5 + 1;
    const unsigned month = mp < 10 ? mp + 3 : mp - 9;
    return CalendarDate{static_cast<int>(y + (month <= 2 ? 1 : 0)), static_cast<int>(month),
                        static_cast<int>(day)};
}

// Day of week, 0 = Sunday .. 6 = Saturday.
inline constexpr int weekday(const CalendarDate& d) {
    const long dn = day_number(d);  // 1970-01-01 was a Thursday
    return static_cast<int>(((dn % 7) + 7 + 4) % 7);
}

inline std::string to_iso(const CalendarDate& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

namespace detail {

inline void check_supported(const CalendarDate& d) {
    if (d.year < k_min_year || d.year > k_max_year)
        throw std::out_of_range("date outside supported range 1900..2200: " + to_iso(d));
}

}  // namespace detail

inline CalendarDate add_days(const CalendarDate& d, long n) {
    CalendarDate out = date_from_day_number(day_number(d) + n);
    detail::check_supported(out);
    return out;
}

// Calendar-aware month shift; the day is clamped to the target month length
// (e.g. 2024-03-31 minus one month is 2024-02-29).
inline CalendarDate add_months(const CalendarDate& d, int n) {
    const long total = static_cast<long>(d.year) * 12 + (d.month - 1) + n;
    const long y = (total >= 0 ? total : total - 11) / 12;
    const int m = static_cast<int>(total - y * 12) + 1;
    CalendarDate out{static_cast<int>(y), m, d.day};
    const int cap = days_in_month(out.year, out.month);
    if (out.day > cap)
        out.day = cap;
    detail::check_supported(out);
    return out;
}

inline CalendarDate add_years(const CalendarDate& d, int n) {
    return add_months(d, n * 12);
}

// Strict YYYY-MM-DD with a calendar-validity check; anything else is nullopt.
inline std::optional<CalendarDate> parse_iso(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-')
        return std::nullopt;
    auto digits = [&](std::size_t begin, std::size_t count, int& out) {
        out = 0;
        for (std::size_t i = begin; i < begin + count; ++i) {
            const char c = text[i];
            if (c < '0' || c > '9')
                return false;
            out = out * 10 + (c - '0');
        }
        return true;
    };
    CalendarDate d;
    if (!digits(0, 4, d.year) || !digits(5, 2, d.month) || !digits(8, 2, d.day))
        return std::nullopt;
    if (!is_valid_date(d))
        return std::nullopt;
    return d;
}

inline const std::array<std::string_view, 12>& month_names() {
    static const std::array<std::string_view, 12> names{
        "January", "February", "March",     "April",   "May",      "June",
        "July",    "August",   "September", "October", "November", "December"};
    return names;
}

// Case-insensitive full English month name -> 1..12.
inline std::optional<int> month_from_name(std::string_view name) {
    auto lower_eq = [](std::string_view a, std::string_view b) {
        if (a.size() != b.size())
            return false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const char x = a[i] >= 'A' && a[i] <= 'Z' ? static_cast<char>(a[i] + 32) : a[i];
            const char y = b[i] >= 'A' && b[i] <= 'Z' ? static_cast<char>(b[i] + 32) : b[i];
            if (x != y)
                return false;
        }
        return true;
    };
    const auto& names = month_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (lower_eq(name, names[i]))
            return static_cast<int>(i) + 1;
    return std::nullopt;
}

// "June 4, 2024" (no leading zero on the day).
inline std::string format_long(const CalendarDate& d) {
    std::string out{month_names()[static_cast<std::size_t>(d.month - 1)]};
    out += ' ';
    out += std::to_string(d.day);
    out += ", ";
    char buf[8];
    std::snprintf(buf, sizeof buf, "%04d", d.year);
    out += buf;
    return out;
}

// Inverse of format_long; tolerates extra spaces and a zero-padded day.
inline std::optional<CalendarDate> parse_long(std::string_view text) {
    auto skip_spaces = [&](std::size_t i) {
        while (i < text.size() && text[i] == ' ')
            ++i;
        return i;
    };
    std::size_t i = skip_spaces(0);
    std::size_t word_end = i;
    while (word_end < text.size() && ((text[word_end] >= 'a' && text[word_end] <= 'z') ||
                                      (text[word_end] >= 'A' && text[word_end] <= 'Z')))
        ++word_end;
    const auto month = month_from_name(text.substr(i, word_end - i));
    if (!month)
        return std::nullopt;
    i = skip_spaces(word_end);
    int day = 0;
    std::size_t day_digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9' && day_digits < 3) {
        day = day * 10 + (text[i] - '0');
        ++i;
        ++day_digits;
    }
    if (day_digits == 0 || day_digits > 2)
        return std::nullopt;
    if (i >= text.size() || text[i] != ',')
        return std::nullopt;
    i = skip_spaces(i + 1);
    int year = 0;
    std::size_t year_digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        year = year * 10 + (text[i] - '0');
        ++i;
        ++year_digits;
    }
    if (year_digits != 4 || skip_spaces(i) != text.size())
        return std::nullopt;
    CalendarDate d{year, *month, day};
    if (!is_valid_date(d))
        return std::nullopt;
    return d;
}

}  // namespace eoquery
