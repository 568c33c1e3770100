#pragma once

#include <compare>
#include <optional>
#include <string>

namespace solaris {

/// Calendar date with ISO-8601 (YYYY-MM-DD) parsing and formatting.
/// Ordering is plain calendar order; no time zones, no times of day.
struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    auto operator<=>(const Date&) const = default;

    /// Parses "YYYY-MM-DD". Returns nullopt for anything malformed or
    /// out of calendar range (leap years handled).
    static std::optional<Date> parse(std::string_view text);

    std::string to_string() const;
};

}  // namespace solaris
