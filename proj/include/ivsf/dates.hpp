#pragma once

#include <cstdint>
#include <string>

namespace ivsf {

// Calendar day stored as a serial number (days since 1970-01-01).
using Date = std::int32_t;

Date make_date(int year, int month, int day);
void civil_from_serial(Date serial, int& year, int& month, int& day);

// Parses "YYYY-MM-DD". Throws SchemaMismatchError on malformed input.
Date parse_date(const std::string& iso);
std::string format_date(Date serial);

// 0 = Monday ... 6 = Sunday.
int weekday(Date serial);
bool is_weekend(Date serial);

// Next business day strictly after `serial` (weekends skipped).
Date next_business_day(Date serial);

}  // namespace ivsf
