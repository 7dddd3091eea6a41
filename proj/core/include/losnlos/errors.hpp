#pragma once

#include <stdexcept>
#include <string>

namespace losnlos {

/// Process exit codes used by the command-line tool.
enum class ExitCode : int
{
    success = 0,
    usage = 1,
    config = 2,
    calibration = 3,
    insufficient_data = 4,
};

class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
    virtual ExitCode exit_code() const noexcept { return ExitCode::config; }
};

/// Invalid or unknown configuration, or a violated precondition on inputs.
class ConfigError : public Error
{
  public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error
{
  public:
    using Error::Error;
};

/// Too few samples or points to compute a statistic or a fit.
class InsufficientDataError : public Error
{
  public:
    using Error::Error;
    ExitCode exit_code() const noexcept override
    {
        return ExitCode::insufficient_data;
    }
};

/// The interference-limited criterion cannot be met inside the power bracket.
class CalibrationError : public Error
{
  public:
    CalibrationError(std::string const& msg, double achieved_gap_db)
        : Error(msg), achieved_gap_db_(achieved_gap_db)
    {
    }
    ExitCode exit_code() const noexcept override
    {
        return ExitCode::calibration;
    }
    double achieved_gap_db() const noexcept { return achieved_gap_db_; }

  private:
    double achieved_gap_db_;
};

}  // namespace losnlos
