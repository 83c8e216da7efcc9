#include "convcast/error.hpp"

namespace convcast {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::zero_variance: return "ZeroVariance";
    case Errc::lag_too_large: return "LagTooLarge";
    case Errc::degenerate_split: return "DegenerateSplit";
    case Errc::empty_window: return "EmptyWindow";
    case Errc::invalid_series: return "InvalidSeries";
    case Errc::invalid_record: return "InvalidRecord";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::empty_input: return "EmptyInput";
    case Errc::all_actuals_zero: return "AllActualsZero";
    case Errc::empty_series: return "EmptySeries";
    case Errc::alpha_out_of_range: return "AlphaOutOfRange";
    case Errc::uninitialized: return "Uninitialized";
    case Errc::series_too_short: return "SeriesTooShort";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::empty_data: return "EmptyData";
    case Errc::invalid_data: return "InvalidData";
    case Errc::window_length_mismatch: return "WindowLengthMismatch";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::insufficient_data: return "InsufficientData";
    case Errc::malformed_header: return "MalformedHeader";
    case Errc::bad_row: return "BadRow";
    case Errc::non_monotonic_dates: return "NonMonotonicDates";
    case Errc::consistency_violation: return "ConsistencyViolation";
    case Errc::empty_reports: return "EmptyReports";
    case Errc::mismatched_actuals: return "MismatchedActuals";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

ParseError::ParseError(Errc code, std::size_t line, const std::string& message)
    : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace convcast
