#include "ivsf/dates.hpp"

#include <cstdio>

#include "ivsf/errors.hpp"

namespace ivsf {

namespace {

// Days-from-civil / civil-from-days, valid over the proleptic Gregorian calendar.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y += m <= 2;
}

}  // namespace

Date make_date(int year, int month, int day) {
    return static_cast<Date>(days_from_civil(year, static_cast<unsigned>(month),
                                             static_cast<unsigned>(day)));
}

void civil_from_serial(Date serial, int& year, int& month, int& day) {
    std::int64_t y;
    unsigned m, d;
    civil_from_days(serial, y, m, d);
    year = static_cast<int>(y);
    month = static_cast<int>(m);
    day = static_cast<int>(d);
}

Date parse_date(const std::string& iso) {
    int y = 0, m = 0, d = 0;
    char tail = 0;
    const int got = std::sscanf(iso.c_str(), "%d-%d-%d%c", &y, &m, &d, &tail);
    if (got != 3 || m < 1 || m > 12 || d < 1 || d > 31) {
        throw SchemaMismatchError("bad date: '" + iso + "'");
    }
    return make_date(y, m, d);
}

std::string format_date(Date serial) {
    int y, m, d;
    civil_from_serial(serial, y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
    return buf;
}

int weekday(Date serial) {
    // 1970-01-01 was a Thursday (index 3 with Monday = 0).
    std::int64_t w = (static_cast<std::int64_t>(serial) + 3) % 7;
    if (w < 0) w += 7;
    return static_cast<int>(w);
}

bool is_weekend(Date serial) { return weekday(serial) >= 5; }

Date next_business_day(Date serial) {
    Date d = serial + 1;
    while (is_weekend(d)) ++d;
    return d;
}

}  // namespace ivsf
